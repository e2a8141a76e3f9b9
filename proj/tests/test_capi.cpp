#include <doctest.h>

#include <json.hpp>
#include <string>

#include "omegafrag/omegafrag.h"

using nlohmann::json;

namespace {

struct Lang {
  of_language* p = nullptr;
  ~Lang() { of_language_free(p); }
};

std::string take(char* s) {
  std::string out = s ? s : "";
  of_string_free(s);
  return out;
}

}  // namespace

TEST_CASE("decide through the C interface") {
  Lang l;
  REQUIRE(of_language_from_regex("([ab]*aa[ab]*)^w", nullptr, &l.p) == OF_OK);
  of_answer answer = OF_UNKNOWN;
  char* out = nullptr;
  REQUIRE(of_decide(l.p, "alph-bool", nullptr, 6, 6, &answer, &out) == OF_OK);
  CHECK(answer == OF_NO);
  const json v = json::parse(take(out));
  CHECK(v["witness"]["C"] == "ab");

  REQUIRE(of_decide(l.p, "bsigma2", "assume-yes", 6, 6, &answer, &out) == OF_OK);
  CHECK(answer == OF_NO);
  CHECK(json::parse(take(out))["condition"] == "topological");

  Lang k;
  REQUIRE(of_language_from_regex("[ab]*a[b]^w", nullptr, &k.p) == OF_OK);
  REQUIRE(of_decide(k.p, "alph-bool", nullptr, 6, 6, &answer, &out) == OF_OK);
  CHECK(answer == OF_YES);
  CHECK(json::parse(take(out))["checks"]["verified_bound"] == json({6, 6}));
  REQUIRE(of_decide(k.p, "cantor-bool", nullptr, 6, 6, &answer, &out) == OF_OK);
  CHECK(answer == OF_NO);
  take(out);
  REQUIRE(of_decide(k.p, "bsigma2", nullptr, 6, 6, &answer, &out) == OF_OK);
  CHECK(answer == OF_UNKNOWN);
  take(out);
  REQUIRE(of_decide(k.p, "bsigma2", "evidence:1", 6, 6, &answer, &out) == OF_OK);
  CHECK(answer == OF_UNKNOWN);
  take(out);
}

TEST_CASE("verify and its mutation") {
  Lang l;
  REQUIRE(of_language_from_regex("[ab]^inf", nullptr, &l.p) == OF_OK);
  int ok = 0;
  char* out = nullptr;
  REQUIRE(of_verify(l.p, 4, 4, -1, &ok, &out) == OF_OK);
  CHECK(ok == 1);
  CHECK(json::parse(take(out))["ok"] == true);
  REQUIRE(of_verify(l.p, 4, 4, 0, &ok, &out) == OF_OK);
  CHECK(ok == 0);
  CHECK(json::parse(take(out)).contains("counterexample"));
  CHECK(of_verify(l.p, 4, 4, 17, &ok, &out) == OF_INVALID_INPUT);

  Lang ex;
  REQUIRE(of_language_from_regex("([ab]*aa[ab]*)^w", nullptr, &ex.p) == OF_OK);
  CHECK(of_verify(ex.p, 4, 4, -1, &ok, &out) == OF_PRECONDITION);
}

TEST_CASE("monoid and automaton JSON through the C interface") {
  Lang l;
  REQUIRE(of_language_from_regex("([ab]*aa[ab]*)^w", nullptr, &l.p) == OF_OK);
  char* out = nullptr;
  REQUIRE(of_language_monoid_json(l.p, 1, &out) == OF_OK);
  const std::string monoid = take(out);
  CHECK(json::parse(monoid)["elements"].size() == 6);

  Lang back;
  REQUIRE(of_language_from_monoid_json(monoid.c_str(), nullptr, &back.p) == OF_OK);
  of_answer answer = OF_UNKNOWN;
  REQUIRE(of_decide(back.p, "alph-bool", nullptr, 4, 4, &answer, &out) == OF_OK);
  CHECK(answer == OF_NO);
  take(out);

  REQUIRE(of_language_automaton_json(l.p, &out) == OF_OK);
  const std::string aut = take(out);
  Lang from_aut;
  REQUIRE(of_language_from_automaton_json(aut.c_str(), nullptr, &from_aut.p) == OF_OK);
  int member = -1;
  REQUIRE(of_membership(from_aut.p, "aa(aab)^w", &member) == OF_OK);
  CHECK(member == 1);
  REQUIRE(of_membership(from_aut.p, "aa(ab)^w", &member) == OF_OK);
  CHECK(member == 0);

  // a language given as a monoid has no automaton
  CHECK(of_language_automaton_json(back.p, &out) == OF_INVALID_INPUT);
}

TEST_CASE("formula") {
  char* out = nullptr;
  REQUIRE(of_monomial_formula("[ab]* a [b]^inf", &out) == OF_OK);
  CHECK(take(out) == "∃x₁ ∀y: λ(x₁) = a ∧ (y > x₁ ⇒ λ(y) ∈ {b}) ∧ (y < x₁ ⇒ λ(y) ∈ {a,b})");
  CHECK(of_monomial_formula("[ab]* a [b]*", &out) == OF_TAIL_KIND);
  CHECK(of_monomial_formula("[ab] a", &out) == OF_SYNTAX);
}

TEST_CASE("error codes") {
  of_language* l = nullptr;
  CHECK(of_language_from_regex("(ab", nullptr, &l) == OF_SYNTAX);
  CHECK(l == nullptr);
  CHECK(std::string(of_last_error()).find("position") != std::string::npos);
  CHECK(of_language_from_regex("(a*)^w", nullptr, &l) == OF_NULLABLE_OMEGA);
  CHECK(of_language_from_regex(nullptr, nullptr, &l) == OF_NULL_ARGUMENT);
  CHECK(of_language_from_monoid_json("[]", nullptr, &l) == OF_INVALID_INPUT);

  of_options tiny{3, 0};
  CHECK(of_language_from_regex("([ab]*aa[ab]*)^w", &tiny, &l) == OF_BUDGET);

  Lang k;
  REQUIRE(of_language_from_regex("a^w", nullptr, &k.p) == OF_OK);
  of_answer answer;
  char* out = nullptr;
  CHECK(of_decide(k.p, "nonsense", nullptr, 6, 6, &answer, &out) == OF_INVALID_INPUT);
  CHECK(of_decide(k.p, "bsigma2", "evidence:x", 6, 6, &answer, &out) == OF_INVALID_INPUT);
  CHECK(of_decide(k.p, "alph-bool", nullptr, 9, 6, &answer, &out) == OF_BUDGET);
  int member;
  CHECK(of_membership(k.p, "a(b", &member) == OF_SYNTAX);
  of_string_free(nullptr);
  of_language_free(nullptr);
}
