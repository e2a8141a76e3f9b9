#include <doctest.h>

#include <set>

#include "corpus.hpp"
#include "omegafrag/monomials.hpp"
#include "omegafrag/oracle.hpp"

using namespace omegafrag;

TEST_CASE("lasso enumeration") {
  const Alphabet ab = Alphabet::of("ab");
  const auto lassos = oracle::enumerate_lassos(ab, 2, 2);
  std::set<UPWord> seen(lassos.begin(), lassos.end());
  CHECK(seen.size() == lassos.size());
  for (const auto& a : lassos) {
    CHECK(canonicalize(a) == a);
    CHECK(a.prefix.size() <= 2);
    CHECK(a.loop.size() <= 2);
  }
  // every lasso within the bounds is represented by one of them
  for (const Word& u : oracle::enumerate_words(ab, 2))
    for (const Word& v : oracle::enumerate_words(ab, 2)) {
      const UPWord c = canonicalize({u, v});
      if (c.prefix.size() <= 2 && c.loop.size() <= 2) CHECK(seen.count(c) == 1);
    }
  // order: total length, then loop length
  for (std::size_t i = 1; i < lassos.size(); ++i) {
    const auto& x = lassos[i - 1];
    const auto& y = lassos[i];
    CHECK(x.prefix.size() + x.loop.size() <= y.prefix.size() + y.loop.size());
  }
  CHECK(lassos.front() == UPWord{"", ""});

  CHECK_THROWS_AS(oracle::LassoEnumerator(ab, 9, 1), Error);
  Budget forced;
  forced.force = true;
  CHECK_NOTHROW(oracle::LassoEnumerator(ab, 9, 1, forced));
}

TEST_CASE("word enumeration") {
  const auto words = oracle::enumerate_words(Alphabet::of("ab"), 3);
  CHECK(words.size() == 15);
  CHECK(words[0].empty());
  CHECK(words[1] == "a");
  CHECK(words[3] == "aa");
  CHECK(words.back() == "bbb");
}

TEST_CASE("naive regex membership") {
  auto in = [](const char* r, const char* w) { return oracle::naive_regex_membership(parse_regex(r), parse_upword(w)); };
  CHECK(in("(ab)^w", "(ab)^w"));
  CHECK(in("(ab)^w", "a(ba)^w"));
  CHECK_FALSE(in("(ab)^w", "b(ab)^w"));
  CHECK(in("[ab]*a[b]^w", "a(b)^w"));
  CHECK_FALSE(in("[ab]*a[b]^w", "(ab)^w"));
  CHECK(in("a*", "aaa"));
  CHECK_FALSE(in("a*", "(a)^w"));
  CHECK(in("a^inf", "(a)^w"));
  CHECK(in("a^inf", "1"));
  CHECK(in("(a|bb)^w", "(b)^w"));
  CHECK(in("(a|bb)^w", "a(b)^w"));
  CHECK_FALSE(in("(a|bb)^w", "(ab)^w"));
  CHECK(in("([ab]*aa[ab]*)^w", "(aab)^w"));
  CHECK_FALSE(in("([ab]*aa[ab]*)^w", "aa(ab)^w"));
  CHECK(in("a(b^w)", "a(b)^w"));
  CHECK(in("a^w b", "(a)^w"));  // concatenation after an infinite word keeps it
  CHECK_FALSE(in("a^w b", "ab"));
  CHECK(in("1|a", "1"));
  CHECK(in("(ab|ba)^inf", "ab(ba)^w"));
  CHECK(in("(ab|ba)^inf", "abba"));
  CHECK_FALSE(in("(ab|ba)^inf", "aab"));

  Word big(5000, 'a');
  CHECK_THROWS_AS(oracle::naive_regex_membership(parse_regex("a^w"), UPWord{"", big + "b"}), Error);
}

TEST_CASE("naive monomial membership") {
  const Monomial m = parse_monomial("[ab]* a [b]^inf");
  CHECK(oracle::naive_monomial_member(m, "ab"));
  CHECK_FALSE(oracle::naive_monomial_member(m, "bb"));
  CHECK(oracle::naive_monomial_member(m, UPWord::lasso("ba", "b")));
  CHECK_FALSE(oracle::naive_monomial_member(m, UPWord::lasso("", "ab")));
  CHECK(oracle::naive_monomial_member(parse_monomial("[b]^inf"), UPWord::lasso("", "b")));
  CHECK_FALSE(oracle::naive_monomial_member(parse_monomial("[]* a []*"), "aa"));
  CHECK_THROWS_AS(oracle::naive_monomial_member(parse_monomial("[ab]*"), UPWord::lasso("", "a")), Error);
}

TEST_CASE("naive syntactic classes of ([ab]*aa[ab]*)^w") {
  const auto gen = restrict_to_image(testing::language("([ab]*aa[ab]*)^w"));
  const auto cls = oracle::naive_syntactic_classes(gen);
  CHECK(std::set<std::size_t>(cls.begin(), cls.end()).size() == 6);
  const auto trivial = restrict_to_image(testing::language("[ab]^inf"));
  const auto one = oracle::naive_syntactic_classes(trivial);
  CHECK(std::set<std::size_t>(one.begin(), one.end()).size() == 1);
}
