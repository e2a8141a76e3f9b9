#include <doctest.h>

#include "corpus.hpp"
#include "omegafrag/decide.hpp"
#include "omegafrag/oracle.hpp"
#include "witness.hpp"

using namespace omegafrag;

namespace {

RecognizedLanguage synt(const std::string& regex) { return syntactic_quotient(testing::language(regex)).language; }

Element el(const RecognizedLanguage& l, const char* name) {
  auto e = l.monoid().find(name);
  REQUIRE(e);
  return *e;
}

}  // namespace

TEST_CASE("([ab]*aa[ab]*)^w: alph-bool NO with the expected witness") {
  const RecognizedLanguage l = synt("([ab]*aa[ab]*)^w");
  const Verdict v = decide_alphabetic_boolean(l);
  REQUIRE(v.answer == Answer::No);
  REQUIRE(v.witness);
  const Witness& w = *v.witness;
  CHECK(w.accepted == LinkedPair{el(l, "aa"), el(l, "aa")});
  CHECK(w.rejected == LinkedPair{el(l, "aa"), el(l, "ab")});
  CHECK(w.alphabet == LetterSet::of("ab"));
  CHECK(w.e_hat == "aab");
  CHECK(w.f_hat == "ab");
  CHECK(w.alpha == UPWord::lasso("aa", "aab"));
  CHECK(w.beta == UPWord::lasso("aa", "ab"));
  CHECK(testing::witness_problems(l, v) == "");
  CHECK(v.representation.empty());
  try {
    construct_representation(l);
    FAIL("expected a precondition error");
  } catch (const Error& e) {
    CHECK(e.code() == ErrorCode::PreconditionViolated);
  }
}

TEST_CASE("Γ^∞ is YES with one block per alphabet") {
  const RecognizedLanguage l = synt("[ab]^inf");
  const Verdict v = decide_alphabetic_boolean(l);
  REQUIRE(v.answer == Answer::Yes);
  const Element one = l.monoid().identity();
  const std::vector<Block> expected{
      {one, LetterSet()}, {one, LetterSet::of("a")}, {one, LetterSet::of("b")}, {one, LetterSet::of("ab")}};
  CHECK(v.representation == expected);
  CHECK(verify_representation(l, v.representation).ok);
}

TEST_CASE("[ab]*a[b]^w is YES with a single block") {
  const RecognizedLanguage l = synt("[ab]*a[b]^w");
  const Verdict v = decide_alphabetic_boolean(l);
  REQUIRE(v.answer == Answer::Yes);
  REQUIRE(v.representation.size() == 1);
  CHECK(l.monoid().name(v.representation[0].s) == "a");
  CHECK(v.representation[0].c == LetterSet::of("b"));
  const VerifyReport r = verify_representation(l, v.representation);
  CHECK(r.ok);
  CHECK(r.checked > 0);
}

TEST_CASE("finite languages only use blocks with the empty alphabet") {
  for (const char* regex : {"(aa)*", "[ab]*aa[ab]*", "ab*|ba*", "(aab)*"}) {
    CAPTURE(regex);
    const RecognizedLanguage l = synt(regex);
    const Verdict v = decide_alphabetic_boolean(l);
    REQUIRE(v.answer == Answer::Yes);
    for (const Block& b : v.representation) CHECK(b.c.empty());
    CHECK(verify_representation(l, v.representation).ok);
  }
}

TEST_CASE("basic set membership") {
  const RecognizedLanguage l = synt("[ab]*a[b]^w");
  const Element a = el(l, "a");
  const BasicSet block{BasicSet::Kind::Block, a, LetterSet::of("b")};
  CHECK(up_membership_basic(l, block, UPWord::lasso("ba", "b")));
  CHECK_FALSE(up_membership_basic(l, block, UPWord::lasso("", "ab")));
  CHECK_FALSE(up_membership_basic(l, block, UPWord::lasso("a", "")));
  const BasicSet tail{BasicSet::Kind::Tail, 0, LetterSet::of("b")};
  CHECK(up_membership_basic(l, tail, UPWord::lasso("aab", "b")));
  CHECK_FALSE(up_membership_basic(l, tail, UPWord::lasso("", "ab")));
  const BasicSet prefixed{BasicSet::Kind::Prefixed, a, LetterSet::of("b")};
  CHECK(up_membership_basic(l, prefixed, UPWord::lasso("ba", "b")));
  CHECK(up_membership_basic(l, prefixed, UPWord::finite_word("abb")));
  CHECK_FALSE(up_membership_basic(l, prefixed, UPWord::lasso("b", "b")));
}

TEST_CASE("dropping a block breaks verification") {
  const RecognizedLanguage l = synt("[ab]^inf");
  auto blocks = construct_representation(l);
  REQUIRE(blocks.size() == 4);
  for (std::size_t i = 0; i < blocks.size(); ++i) {
    auto dropped = blocks;
    dropped.erase(dropped.begin() + static_cast<long>(i));
    const VerifyReport r = verify_representation(l, dropped);
    CHECK_FALSE(r.ok);
    REQUIRE(r.counterexample);
    CHECK(r.in_language);
    CHECK(up_membership(l, *r.counterexample));
  }
}

TEST_CASE("cantor examples") {
  CHECK(decide_cantor_boolean(testing::language("[ab]*a[ab]^inf")).answer == Answer::Yes);
  CHECK(decide_cantor_boolean(testing::language("[ab]^inf")).answer == Answer::Yes);
  const RecognizedLanguage raw = testing::language("[ab]*a[b]^w");
  const Verdict v = decide_cantor_boolean(raw);
  REQUIRE(v.answer == Answer::No);
  REQUIRE(v.witness);
  CHECK_FALSE(v.witness->alphabet);
  CHECK(testing::witness_problems(syntactic_quotient(raw).language, v) == "");
}

TEST_CASE("bsigma2") {
  const RecognizedLanguage ex = testing::language("([ab]*aa[ab]*)^w");
  bool called = false;
  const V2Oracle spy = [&](const Hom&) {
    called = true;
    return OracleAnswer{Answer::Yes, ""};
  };
  const Verdict no = decide_bsigma2(ex, spy);
  CHECK(no.answer == Answer::No);
  CHECK(no.condition == "topological");
  CHECK(no.witness);
  CHECK_FALSE(called);

  const RecognizedLanguage k = testing::language("[ab]*a[b]^w");
  const Verdict yes = decide_bsigma2(k, assume_yes_oracle());
  CHECK(yes.answer == Answer::Yes);
  CHECK_FALSE(yes.representation.empty());
  const Verdict unknown = decide_bsigma2(k, unknown_oracle());
  CHECK(unknown.answer == Answer::Unknown);
  CHECK(unknown.condition == "V2");
  CHECK(unknown.representation.empty());

  const Verdict evidence = decide_bsigma2(testing::language("(aa)*"), evidence_oracle(1));
  CHECK(evidence.answer == Answer::No);
  CHECK(evidence.condition == "V2");
  CHECK_FALSE(evidence.notes.empty());
}

TEST_CASE("saturation evidence") {
  const SaturationReport trivial = saturation_evidence(testing::language("[ab]^inf"), 1, 6);
  CHECK_FALSE(trivial.violation);
  CHECK(trivial.words_checked == 127);

  const RecognizedLanguage even = testing::language("(aa)*");
  const SaturationReport r = saturation_evidence(even, 1, 6);
  REQUIRE(r.violation);
  const auto [u, v] = *r.violation;
  const Alphabet gamma = even.alphabet();
  CHECK(equiv_k(u, v, gamma, 1));
  const RecognizedLanguage q = syntactic_quotient(even).language;
  CHECK(q.hom().eval(u) != q.hom().eval(v));
  // a single monomial of degree one: no violation is expected
  CHECK_FALSE(saturation_evidence(testing::language("[ab]*a[b]^w"), 2, 5).violation);
}

TEST_CASE("corpus: verdict invariants") {
  for (const auto& text : testing::corpus()) {
    CAPTURE(text);
    const Buchi a = to_automaton(parse_regex(text));
    const RecognizedLanguage raw = recognize(a);
    const RecognizedLanguage l = syntactic_quotient(raw).language;
    const Verdict v = decide_alphabetic_boolean(l);
    if (v.answer == Answer::Yes) {
      const VerifyReport r = verify_representation(l, v.representation, 6, 6);
      CHECK(r.ok);
    } else {
      REQUIRE(v.answer == Answer::No);
      CHECK(testing::witness_problems(l, v, &a) == "");
    }
    // the verdict does not depend on the recognizer
    const Verdict vr = decide_alphabetic_boolean(raw);
    CHECK(vr.answer == v.answer);
    if (vr.answer == Answer::No) CHECK(testing::witness_problems(raw, vr, &a) == "");

    const Verdict c = decide_cantor_boolean(raw);
    if (c.answer == Answer::No) CHECK(testing::witness_problems(l, c, &a) == "");
    if (c.answer == Answer::Yes) CHECK(v.answer == Answer::Yes);
  }
}
