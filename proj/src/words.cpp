#include "omegafrag/words.hpp"

#include <algorithm>
#include <bit>

#include "omegafrag/error.hpp"

namespace omegafrag {

LetterSet LetterSet::of(std::string_view letters) {
  LetterSet s;
  for (char c : letters) {
    if (!is_letter(c)) throw Error(ErrorCode::InvalidInput, std::string("not a letter: '") + c + "'");
    s |= single(c);
  }
  return s;
}

int LetterSet::size() const noexcept { return std::popcount(bits_); }

std::string LetterSet::letters() const {
  std::string out;
  for (int i = 0; i < kMaxLetters; ++i)
    if ((bits_ >> i) & 1u) out.push_back(static_cast<char>('a' + i));
  return out;
}

std::string LetterSet::to_class() const { return "[" + letters() + "]"; }

bool Alphabet::contains(std::string_view w) const noexcept {
  return std::all_of(w.begin(), w.end(), [this](char c) { return contains(c); });
}

std::vector<LetterSet> Alphabet::subsets() const {
  // Enumerate submasks of set_ in increasing numeric order.
  std::vector<LetterSet> out;
  std::uint32_t full = set_.bits();
  std::uint32_t sub = 0;
  while (true) {
    out.emplace_back(sub);
    if (sub == full) break;
    sub = ((sub | ~full) + 1) & full;
  }
  return out;
}

LetterSet alph(std::string_view w) {
  LetterSet s;
  for (char c : w) s |= LetterSet::single(c);
  return s;
}

bool is_subword(std::string_view u, std::string_view v) {
  std::size_t i = 0;
  for (char c : v) {
    if (i == u.size()) break;
    if (u[i] == c) ++i;
  }
  return i == u.size();
}

Letter UPWord::at(std::size_t i) const {
  if (i < prefix.size()) return prefix[i];
  return loop[(i - prefix.size()) % loop.size()];
}

Word UPWord::unroll(std::size_t k) const {
  Word w = prefix;
  w.reserve(prefix.size() + k * loop.size());
  for (std::size_t i = 0; i < k; ++i) w += loop;
  return w;
}

UPWord UPWord::lasso(Word prefix, Word loop) { return canonicalize(UPWord{std::move(prefix), std::move(loop)}); }

LetterSet im(const UPWord& a) { return alph(a.loop); }

namespace {

std::string primitive_root(const std::string& v) {
  const std::size_t n = v.size();
  for (std::size_t p = 1; p < n; ++p) {
    if (n % p != 0) continue;
    bool periodic = true;
    for (std::size_t i = p; i < n && periodic; ++i) periodic = v[i] == v[i - p];
    if (periodic) return v.substr(0, p);
  }
  return v;
}

// Offset of the lexicographically least rotation (first one on ties).
std::size_t least_rotation(const std::string& v) {
  std::size_t best = 0;
  for (std::size_t r = 1; r < v.size(); ++r) {
    std::string a = v.substr(r) + v.substr(0, r);
    std::string b = v.substr(best) + v.substr(0, best);
    if (a < b) best = r;
  }
  return best;
}

}  // namespace

UPWord canonicalize(const UPWord& a) {
  if (a.loop.empty()) return a;
  std::string prefix = a.prefix;
  std::string loop = primitive_root(a.loop);
  // Absorb the tail of the prefix into the loop.
  while (!prefix.empty() && prefix.back() == loop.back()) {
    std::rotate(loop.begin(), loop.end() - 1, loop.end());
    prefix.pop_back();
  }
  const std::size_t r = least_rotation(loop);
  prefix += loop.substr(0, r);
  std::rotate(loop.begin(), loop.begin() + static_cast<std::ptrdiff_t>(r), loop.end());
  return UPWord{std::move(prefix), std::move(loop)};
}

std::string show_word(std::string_view w) { return w.empty() ? std::string("1") : std::string(w); }

std::string to_string(const UPWord& a) {
  if (a.loop.empty()) return show_word(a.prefix);
  return a.prefix + "(" + a.loop + ")^w";
}

UPWord parse_upword(std::string_view text) {
  if (text == "1") return {};
  const auto open = text.find('(');
  if (open == std::string_view::npos) {
    for (std::size_t i = 0; i < text.size(); ++i)
      if (!is_letter(text[i])) throw SyntaxError(i, "unexpected character in word");
    return UPWord::finite_word(std::string(text));
  }
  std::string_view prefix = text.substr(0, open);
  if (prefix == "1") prefix = {};
  for (std::size_t i = 0; i < prefix.size(); ++i)
    if (!is_letter(prefix[i])) throw SyntaxError(i, "unexpected character in prefix");
  const auto close = text.find(')', open);
  if (close == std::string_view::npos) throw SyntaxError(text.size(), "missing ')'");
  if (text.substr(close) != ")^w") throw SyntaxError(close, "expected ')^w'");
  std::string_view loop = text.substr(open + 1, close - open - 1);
  if (loop.empty()) throw SyntaxError(open + 1, "empty loop");
  for (std::size_t i = 0; i < loop.size(); ++i)
    if (!is_letter(loop[i])) throw SyntaxError(open + 1 + i, "unexpected character in loop");
  return canonicalize(UPWord{std::string(prefix), std::string(loop)});
}

}  // namespace omegafrag
