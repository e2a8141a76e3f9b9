#include <doctest.h>

#include "corpus.hpp"
#include "omegafrag/buchi.hpp"
#include "omegafrag/oracle.hpp"

using namespace omegafrag;

TEST_CASE("parse_regex") {
  const RegexPtr r = parse_regex("[ab]*a[b]^w");
  CHECK(r->kind == Regex::Kind::Concat);
  REQUIRE(r->children.size() == 3);
  CHECK(r->children[0]->kind == Regex::Kind::Star);
  CHECK(r->children[2]->kind == Regex::Kind::Omega);
  CHECK(to_string(r) == "[ab]*ab^w");  // one-letter classes print bare

  const RegexPtr ex = parse_regex("([ab]*aa[ab]*)^w");
  CHECK(ex->kind == Regex::Kind::Omega);
  CHECK(regex_letters(ex) == LetterSet::of("ab"));
  CHECK(parse_regex("a | b c")->kind == Regex::Kind::Union);
  CHECK(nullable(parse_regex("a*|b")));
  CHECK_FALSE(nullable(parse_regex("a*b")));
  CHECK(nullable(parse_regex("[ab]^inf")));
  CHECK(regex_size(parse_regex("ab")) == 3);

  for (const auto& text : testing::corpus()) CHECK(to_string(parse_regex(to_string(parse_regex(text)))) == to_string(parse_regex(text)));
}

TEST_CASE("parse errors") {
  CHECK_THROWS_AS(parse_regex(""), SyntaxError);
  CHECK_THROWS_AS(parse_regex("(ab"), SyntaxError);
  CHECK_THROWS_AS(parse_regex("[]"), SyntaxError);
  CHECK_THROWS_AS(parse_regex("a^x"), SyntaxError);
  CHECK_THROWS_AS(parse_regex("a|"), SyntaxError);
  CHECK_THROWS_AS(parse_regex("aB"), SyntaxError);
  try {
    parse_regex("ab)");
    FAIL("expected a syntax error");
  } catch (const SyntaxError& e) {
    CHECK(e.position() == 2);
  }
  try {
    parse_regex("(1)^w");
    FAIL("expected NullableOmega");
  } catch (const Error& e) {
    CHECK(e.code() == ErrorCode::NullableOmega);
  }
  CHECK_THROWS_AS(parse_regex("(a*)^inf"), Error);
}

TEST_CASE("automaton construction") {
  const Buchi a = to_automaton(parse_regex("a"));
  CHECK(a.num_states == 2);
  CHECK(a.mode() == Buchi::Mode::Finite);
  CHECK(to_automaton(parse_regex("a^w")).mode() == Buchi::Mode::Infinite);
  CHECK(to_automaton(parse_regex("[ab]^inf")).mode() == Buchi::Mode::Mixed);
  CHECK_NOTHROW(a.validate());

  // explicit alphabet widens the letter set
  const Buchi wide = to_automaton(parse_regex("a^w"), Alphabet::of("ab"));
  CHECK(wide.alphabet == Alphabet::of("ab"));

  // size stays linear in the expression
  for (const auto& text : testing::corpus()) {
    const RegexPtr r = parse_regex(text);
    CAPTURE(text);
    CHECK(to_automaton(r).num_states <= 4 * regex_size(r) + 2);
  }
}

TEST_CASE("lasso_accepts on ([ab]*aa[ab]*)^w") {
  const Buchi a = to_automaton(parse_regex("([ab]*aa[ab]*)^w"));
  CHECK(lasso_accepts(a, UPWord::lasso("", "aa")));
  CHECK_FALSE(lasso_accepts(a, UPWord::lasso("aa", "ab")));
  CHECK_FALSE(lasso_accepts(a, UPWord::finite_word("aa")));
  const Buchi full = to_automaton(parse_regex("[ab]^inf"));
  for (const UPWord& w : oracle::enumerate_lassos(Alphabet::of("ab"), 3, 3)) CHECK(lasso_accepts(full, w));
}

TEST_CASE("recognize examples") {
  const auto all = recognize(to_automaton(parse_regex("[ab]^inf")));
  CHECK(up_membership(all, UPWord::finite_word("")));
  const auto k = recognize(to_automaton(parse_regex("[ab]*a[b]^w")));
  CHECK(up_membership(k, UPWord::lasso("a", "b")));
  CHECK_FALSE(up_membership(k, UPWord::lasso("", "ab")));
  CHECK_FALSE(up_membership(k, UPWord::finite_word("ab")));

  // a single accepting state looping on every letter gives the trivial monoid plus the unit
  Buchi one;
  one.alphabet = Alphabet::of("ab");
  one.num_states = 1;
  one.transitions = {{0, 'a', 0}, {0, 'b', 0}};
  one.initial = {0};
  one.buchi_accepting = {1};
  one.finite_accepting = {1};
  const auto lang = recognize(one);
  CHECK(lang.monoid().size() == 2);
  CHECK(lang.accepted_pairs() == linked_pairs(lang.monoid()));
}

TEST_CASE("transition matrices") {
  const Buchi a = to_automaton(parse_regex("(ab)^w"));
  const auto tm = transition_monoid(a);
  CHECK(tm.generated.values[0].unit);
  for (std::size_t i = 1; i < tm.generated.values.size(); ++i) CHECK_FALSE(tm.generated.values[i].unit);
  // deterministic automata give at most one nonzero entry per row
  Buchi d;
  d.alphabet = Alphabet::of("ab");
  d.num_states = 2;
  d.transitions = {{0, 'a', 1}, {1, 'a', 1}, {1, 'b', 0}, {0, 'b', 0}};
  d.initial = {0};
  d.buchi_accepting = {0, 1};
  d.finite_accepting = {0, 0};
  CHECK(d.deterministic());
  for (const TransMatrix& m : transition_monoid(d).generated.values) {
    if (m.unit) continue;
    for (State p = 0; p < m.n; ++p) {
      int nonzero = 0;
      for (State q = 0; q < m.n; ++q) nonzero += m.at(p, q) != 0;
      CHECK(nonzero <= 1);
    }
  }
}

TEST_CASE("budget cap on the transition monoid") {
  Budget tiny;
  tiny.max_elements = 3;
  CHECK_THROWS_AS(recognize(to_automaton(parse_regex("([ab]*aa[ab]*)^w")), tiny), Error);
}

TEST_CASE("automaton validation") {
  Buchi b;
  b.alphabet = Alphabet::of("a");
  b.num_states = 1;
  b.buchi_accepting = {0};
  b.finite_accepting = {0};
  CHECK_THROWS_AS(b.validate(), Error);  // no initial state
  b.initial = {0};
  b.transitions = {{0, 'b', 0}};
  CHECK_THROWS_AS(b.validate(), Error);
  b.transitions = {{0, 'a', 3}};
  CHECK_THROWS_AS(b.validate(), Error);
}

TEST_CASE("corpus: recognition, lasso acceptance and the naive matcher agree") {
  for (const auto& text : testing::corpus()) {
    CAPTURE(text);
    const RegexPtr r = parse_regex(text);
    const Buchi a = to_automaton(r);
    const auto lang = recognize(a);
    const std::size_t bound = a.alphabet.size() <= 2 ? 6 : 4;
    for (const UPWord& w : oracle::enumerate_lassos(a.alphabet, bound, bound)) {
      CAPTURE(to_string(w));
      const bool by_run = lasso_accepts(a, w);
      REQUIRE(by_run == up_membership(lang, w));
      if (w.prefix.size() <= 4 && w.loop.size() <= 4) REQUIRE(by_run == oracle::naive_regex_membership(r, w));
    }
  }
}

TEST_CASE("trim keeps the language") {
  for (const auto& text : testing::corpus()) {
    const Buchi a = to_automaton(parse_regex(text));
    const Buchi t = trim(a);
    CHECK(t.num_states <= a.num_states);
    for (const UPWord& w : oracle::enumerate_lassos(a.alphabet, 3, 3)) CHECK(lasso_accepts(a, w) == lasso_accepts(t, w));
  }
}
