#pragma once

#include <compare>
#include <cstdint>
#include <string>
#include <string_view>
#include <vector>

namespace omegafrag {

/// Letters are lowercase ASCII; a set of letters is a bitmask with bit (c - 'a').
using Letter = char;
using Word = std::string;

inline constexpr int kMaxLetters = 26;

inline bool is_letter(char c) noexcept { return c >= 'a' && c <= 'z'; }

class LetterSet {
 public:
  constexpr LetterSet() = default;
  constexpr explicit LetterSet(std::uint32_t bits) : bits_(bits) {}

  static LetterSet of(std::string_view letters);
  static constexpr LetterSet single(Letter c) { return LetterSet(1u << (c - 'a')); }

  constexpr std::uint32_t bits() const noexcept { return bits_; }
  constexpr bool empty() const noexcept { return bits_ == 0; }
  constexpr bool contains(Letter c) const noexcept { return (bits_ >> (c - 'a')) & 1u; }
  constexpr bool subset_of(LetterSet other) const noexcept { return (bits_ & ~other.bits_) == 0; }
  int size() const noexcept;

  constexpr LetterSet operator|(LetterSet o) const noexcept { return LetterSet(bits_ | o.bits_); }
  constexpr LetterSet operator&(LetterSet o) const noexcept { return LetterSet(bits_ & o.bits_); }
  constexpr LetterSet& operator|=(LetterSet o) noexcept {
    bits_ |= o.bits_;
    return *this;
  }
  constexpr auto operator<=>(const LetterSet&) const = default;

  /// Letters in alphabetical order.
  std::string letters() const;
  /// Bracket class, e.g. "[ab]"; the empty set prints as "[]".
  std::string to_class() const;

 private:
  std::uint32_t bits_ = 0;
};

/// Finite ordered alphabet. Language-level operations expect it nonempty.
class Alphabet {
 public:
  Alphabet() = default;
  explicit Alphabet(LetterSet letters) : set_(letters), letters_(letters.letters()) {}
  static Alphabet of(std::string_view letters) { return Alphabet(LetterSet::of(letters)); }

  LetterSet set() const noexcept { return set_; }
  const std::string& letters() const noexcept { return letters_; }
  int size() const noexcept { return static_cast<int>(letters_.size()); }
  bool contains(Letter c) const noexcept { return is_letter(c) && set_.contains(c); }
  bool contains(std::string_view w) const noexcept;

  /// Every subset of the alphabet, in increasing bitmask order.
  std::vector<LetterSet> subsets() const;

  bool operator==(const Alphabet& o) const noexcept { return set_ == o.set_; }

 private:
  LetterSet set_;
  std::string letters_;
};

LetterSet alph(std::string_view w);

/// True iff u is a scattered subword of v.
bool is_subword(std::string_view u, std::string_view v);

/// Ultimately periodic word prefix · loop^ω; an empty loop denotes the finite word prefix.
struct UPWord {
  Word prefix;
  Word loop;

  bool finite() const noexcept { return loop.empty(); }
  auto operator<=>(const UPWord&) const = default;

  static UPWord finite_word(Word w) { return UPWord{std::move(w), {}}; }
  static UPWord lasso(Word prefix, Word loop);  // canonicalized

  /// Letter at position i (0-based). For finite words, i must be < prefix.size().
  Letter at(std::size_t i) const;
  /// prefix · loop^k
  Word unroll(std::size_t k) const;
};

/// Letters occurring infinitely often.
LetterSet im(const UPWord& a);

/// Primitive, rotation-minimal loop with the shortest prefix for that loop.
UPWord canonicalize(const UPWord& a);

/// Text form: "1" (empty), "aab", "ab(ab)^w", "(ab)^w".
std::string to_string(const UPWord& a);
UPWord parse_upword(std::string_view text);

/// "1" for the empty word.
std::string show_word(std::string_view w);

}  // namespace omegafrag
