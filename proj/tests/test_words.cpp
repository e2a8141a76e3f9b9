#include <doctest.h>

#include <random>

#include "omegafrag/error.hpp"
#include "omegafrag/words.hpp"

using namespace omegafrag;

namespace doctest {
template <>
struct StringMaker<UPWord> {
  static String convert(const UPWord& a) { return ("<" + a.prefix + "|" + a.loop + ">").c_str(); }
};
}  // namespace doctest

namespace {

// Same infinite word: compare enough letters that both sides are in their periodic part
// for a common period.
bool same_word(const UPWord& x, const UPWord& y) {
  if (x.finite() || y.finite()) return x.finite() && y.finite() && x.prefix == y.prefix;
  const std::size_t n = std::max(x.prefix.size(), y.prefix.size()) + x.loop.size() * y.loop.size() + x.loop.size();
  for (std::size_t i = 0; i < n; ++i)
    if (x.at(i) != y.at(i)) return false;
  return true;
}

Word random_word(std::mt19937& rng, const std::string& letters, std::size_t max_len, std::size_t min_len = 0) {
  std::uniform_int_distribution<std::size_t> len(min_len, max_len);
  std::uniform_int_distribution<std::size_t> pick(0, letters.size() - 1);
  Word w;
  for (std::size_t n = len(rng); n > 0; --n) w.push_back(letters[pick(rng)]);
  return w;
}

}  // namespace

TEST_CASE("alph and letter sets") {
  CHECK(alph("").empty());
  CHECK(alph("aab") == LetterSet::of("ab"));
  CHECK(alph("bab") == LetterSet::of("ba"));
  CHECK(LetterSet::of("ba").letters() == "ab");
  CHECK(LetterSet::of("ab").to_class() == "[ab]");
  CHECK(LetterSet{}.to_class() == "[]");
  CHECK(LetterSet::of("a").subset_of(LetterSet::of("ab")));
  CHECK_FALSE(LetterSet::of("c").subset_of(LetterSet::of("ab")));
  CHECK(LetterSet::of("abc").size() == 3);

  const Alphabet g = Alphabet::of("ba");
  CHECK(g.letters() == "ab");
  CHECK(g.contains("abba"));
  CHECK_FALSE(g.contains("abc"));
  const auto subs = g.subsets();
  REQUIRE(subs.size() == 4);
  CHECK(subs[0].empty());
  CHECK(subs[3] == LetterSet::of("ab"));
}

TEST_CASE("im") {
  CHECK(im(UPWord::lasso("", "ab")) == LetterSet::of("ab"));
  CHECK(im(UPWord::lasso("a", "b")) == LetterSet::of("b"));
  CHECK(im(UPWord::finite_word("aab")).empty());
}

TEST_CASE("is_subword") {
  CHECK(is_subword("", "abc"));
  CHECK_FALSE(is_subword("ab", "ba"));
  CHECK(is_subword("abab", "aabbab"));
  CHECK_FALSE(is_subword("aaa", "abab"));
}

TEST_CASE("canonicalize examples") {
  // a(baba)^ω = (ab)^ω, so the shortest prefix is empty.
  const UPWord c = canonicalize({"a", "baba"});
  CHECK(c == UPWord{"", "ab"});
  CHECK(same_word(c, {"a", "baba"}));
  CHECK(canonicalize({"", "aa"}) == UPWord{"", "a"});
  CHECK(canonicalize({"ab", ""}) == UPWord{"ab", ""});
  CHECK(canonicalize({"b", "ab"}) == UPWord{"b", "ab"});  // (ba)^ω, loop rotated to ab
  CHECK(canonicalize({"aab", "ab"}) == UPWord{"a", "ab"});
  CHECK(canonicalize({"bb", "ab"}) == UPWord{"bb", "ab"});
}

TEST_CASE("canonicalize properties on random lassos") {
  std::mt19937 rng(7);
  for (int i = 0; i < 2000; ++i) {
    const UPWord a{random_word(rng, "ab", 5), random_word(rng, "ab", 5, 1)};
    const UPWord c = canonicalize(a);
    CHECK(canonicalize(c) == c);
    CHECK(same_word(a, c));
    CHECK(canonicalize({a.prefix + a.loop, a.loop}) == c);
    CHECK(canonicalize({a.prefix, a.loop + a.loop + a.loop}) == c);
    CHECK(im(c) == im(a));
    CHECK(im(c).subset_of(alph(a.prefix) | alph(a.loop)));
    // equal words have equal canonical forms
    const UPWord b{random_word(rng, "ab", 5), random_word(rng, "ab", 5, 1)};
    CHECK((canonicalize(b) == c) == same_word(a, b));
  }
}

TEST_CASE("upword text form") {
  CHECK(to_string(UPWord{"", ""}) == "1");
  CHECK(to_string(UPWord{"aab", ""}) == "aab");
  CHECK(to_string(UPWord{"ab", "ab"}) == "ab(ab)^w");
  CHECK(to_string(UPWord{"", "ab"}) == "(ab)^w");
  CHECK(parse_upword("1") == UPWord{"", ""});
  CHECK(parse_upword("aab") == UPWord{"aab", ""});
  CHECK(parse_upword("ab(ab)^w") == UPWord{"", "ab"});  // parsed words are canonical
  CHECK(parse_upword("(ab)^w") == UPWord{"", "ab"});
  CHECK(parse_upword("1(b)^w") == UPWord{"", "b"});
  CHECK_THROWS_AS(parse_upword("a(b"), SyntaxError);
  CHECK_THROWS_AS(parse_upword("a()^w"), Error);
  CHECK_THROWS_AS(parse_upword("aB"), Error);
  for (const char* s : {"1", "ab", "b(ab)^w", "(a)^w"}) CHECK(to_string(parse_upword(s)) == s);
}

TEST_CASE("unroll and at") {
  const UPWord a{"ab", "c"};
  CHECK(a.unroll(0) == "ab");
  CHECK(a.unroll(3) == "abccc");
  CHECK(a.at(0) == 'a');
  CHECK(a.at(10) == 'c');
}
