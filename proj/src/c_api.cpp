#include "omegafrag/omegafrag.h"

#include <cstdlib>
#include <cstring>
#include <new>
#include <optional>
#include <string>

#include "omegafrag/buchi.hpp"
#include "omegafrag/decide.hpp"
#include "omegafrag/json_io.hpp"
#include "omegafrag/monomials.hpp"

using namespace omegafrag;

struct of_language {
  Budget budget;
  std::optional<Buchi> automaton;
  RecognizedLanguage recognizer;
  std::optional<RecognizedLanguage> syntactic;

  const RecognizedLanguage& synt() {
    if (!syntactic) syntactic = syntactic_quotient(recognizer, budget).language;
    return *syntactic;
  }
};

namespace {

thread_local std::string last_error;

of_status status_of(ErrorCode code) {
  switch (code) {
    case ErrorCode::SyntaxError: return OF_SYNTAX;
    case ErrorCode::NullableOmega: return OF_NULLABLE_OMEGA;
    case ErrorCode::BudgetExceeded: return OF_BUDGET;
    case ErrorCode::InvalidInput: return OF_INVALID_INPUT;
    case ErrorCode::PreconditionViolated: return OF_PRECONDITION;
    case ErrorCode::TailKindMismatch: return OF_TAIL_KIND;
    case ErrorCode::NotMember: return OF_NOT_MEMBER;
    case ErrorCode::DepthExceeded: return OF_DEPTH;
  }
  return OF_INTERNAL;
}

template <class F>
of_status guarded(F&& body) {
  try {
    body();
    last_error.clear();
    return OF_OK;
  } catch (const Error& e) {
    last_error = e.what();
    return status_of(e.code());
  } catch (const std::bad_alloc&) {
    last_error = "out of memory";
  } catch (const std::exception& e) {
    last_error = e.what();
  } catch (...) {
    last_error = "unknown failure";
  }
  return OF_INTERNAL;
}

char* dup(const std::string& s) {
  char* out = static_cast<char*>(std::malloc(s.size() + 1));
  if (!out) throw std::bad_alloc();
  std::memcpy(out, s.c_str(), s.size() + 1);
  return out;
}

Budget budget_of(const of_options* options) {
  Budget b = Budget::from_environment();
  if (options) {
    if (options->max_elements > 0) b.max_elements = options->max_elements;
    b.force = options->force != 0;
  }
  return b;
}

#define OF_REQUIRE(...)                                      \
  do {                                                       \
    const void* args_[] = {__VA_ARGS__};                     \
    for (const void* a_ : args_)                             \
      if (!a_) {                                             \
        last_error = "null argument";                        \
        return OF_NULL_ARGUMENT;                             \
      }                                                      \
  } while (0)

of_status from_automaton(Buchi a, const of_options* options, of_language** out) {
  return guarded([&] {
    const Budget budget = budget_of(options);
    RecognizedLanguage lang = recognize(a, budget);
    *out = new of_language{budget, std::move(a), std::move(lang), std::nullopt};
  });
}

V2Oracle oracle_from_spec(const char* spec) {
  const std::string s = spec ? spec : "unknown";
  if (s == "unknown") return unknown_oracle();
  if (s == "assume-yes") return assume_yes_oracle();
  if (s.rfind("evidence:", 0) == 0) {
    const std::string k = s.substr(9);
    if (k.empty() || k.find_first_not_of("0123456789") != std::string::npos || k.size() > 2)
      throw Error(ErrorCode::InvalidInput, "evidence oracle needs a small integer k, e.g. evidence:2");
    return evidence_oracle(std::stoi(k));
  }
  throw Error(ErrorCode::InvalidInput, "unknown oracle \"" + s + "\" (expected unknown, assume-yes or evidence:K)");
}

}  // namespace

extern "C" {

of_status of_language_from_regex(const char* regex, const of_options* options, of_language** out) {
  OF_REQUIRE(regex, out);
  std::optional<Buchi> a;
  if (of_status st = guarded([&] { a = to_automaton(parse_regex(regex)); }); st != OF_OK) return st;
  return from_automaton(std::move(*a), options, out);
}

of_status of_language_from_automaton_json(const char* json, const of_options* options, of_language** out) {
  OF_REQUIRE(json, out);
  std::optional<Buchi> a;
  if (of_status st = guarded([&] { a = json_io::automaton_from_json(json); }); st != OF_OK) return st;
  return from_automaton(std::move(*a), options, out);
}

of_status of_language_from_monoid_json(const char* json, const of_options* options, of_language** out) {
  OF_REQUIRE(json, out);
  return guarded([&] {
    *out = new of_language{budget_of(options), std::nullopt, json_io::language_from_json(json), std::nullopt};
  });
}

void of_language_free(of_language* lang) { delete lang; }

of_status of_language_monoid_json(of_language* lang, int syntactic, char** out) {
  OF_REQUIRE(lang, out);
  return guarded([&] {
    *out = dup(json_io::language_to_json(syntactic ? lang->synt() : lang->recognizer, true));
  });
}

of_status of_language_automaton_json(const of_language* lang, char** out) {
  OF_REQUIRE(lang, out);
  return guarded([&] {
    if (!lang->automaton) throw Error(ErrorCode::InvalidInput, "language was not given by an automaton");
    *out = dup(json_io::automaton_to_json(*lang->automaton));
  });
}

of_status of_decide(of_language* lang, const char* question, const char* oracle, size_t max_prefix, size_t max_loop,
                    of_answer* answer, char** verdict_json) {
  OF_REQUIRE(lang, question, answer, verdict_json);
  return guarded([&] {
    const std::string q = question;
    const V2Oracle v2 = oracle_from_spec(oracle);  // rejects a malformed spec for every question
    Verdict v;
    if (q == "alph-bool") {
      v = decide_alphabetic_boolean(lang->synt(), lang->budget);
    } else if (q == "cantor-bool") {
      v = decide_cantor_boolean(lang->recognizer, lang->budget);
    } else if (q == "bsigma2") {
      v = decide_bsigma2(lang->recognizer, v2, lang->budget);
    } else {
      throw Error(ErrorCode::InvalidInput, "unknown question \"" + q + "\"");
    }
    if (v.answer == Answer::Yes && !v.representation.empty()) {
      const VerifyReport r = verify_representation(lang->synt(), v.representation, max_prefix, max_loop, lang->budget);
      if (r.ok)
        v.verified_bound = std::make_pair(max_prefix, max_loop);
      else
        v.notes.push_back("representation disagrees with the language on " + to_string(*r.counterexample));
    }
    *answer = v.answer == Answer::Yes ? OF_YES : v.answer == Answer::No ? OF_NO : OF_UNKNOWN;
    *verdict_json = dup(json_io::verdict_to_json(v));
  });
}

of_status of_verify(of_language* lang, size_t max_prefix, size_t max_loop, long drop_block, int* ok,
                    char** report_json) {
  OF_REQUIRE(lang, ok, report_json);
  return guarded([&] {
    const RecognizedLanguage& s = lang->synt();
    std::vector<Block> blocks = construct_representation(s, lang->budget);
    if (drop_block >= 0) {
      if (static_cast<std::size_t>(drop_block) >= blocks.size())
        throw Error(ErrorCode::InvalidInput, "no block " + std::to_string(drop_block) + " to drop");
      blocks.erase(blocks.begin() + drop_block);
    }
    const VerifyReport r = verify_representation(s, blocks, max_prefix, max_loop, lang->budget);
    *ok = r.ok ? 1 : 0;
    *report_json = dup(json_io::verify_to_json(r, blocks, s.monoid(), max_prefix, max_loop));
  });
}

of_status of_monomial_formula(const char* monomial, char** out) {
  OF_REQUIRE(monomial, out);
  return guarded([&] { *out = dup(to_sigma2_formula(parse_monomial(monomial)).to_string()); });
}

of_status of_membership(const of_language* lang, const char* upword, int* member) {
  OF_REQUIRE(lang, upword, member);
  return guarded([&] {
    const UPWord a = canonicalize(parse_upword(upword));
    const Alphabet& gamma = lang->recognizer.alphabet();
    if (!gamma.contains(a.prefix) || !gamma.contains(a.loop))
      throw Error(ErrorCode::InvalidInput, "word uses letters outside the alphabet " + gamma.letters());
    *member = up_membership(lang->recognizer, a) ? 1 : 0;
  });
}

const char* of_last_error(void) { return last_error.c_str(); }

void of_string_free(char* s) { std::free(s); }

}  // extern "C"
