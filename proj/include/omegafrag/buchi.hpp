#pragma once

#include <cstdint>
#include <memory>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "omegafrag/algebra.hpp"
#include "omegafrag/words.hpp"

namespace omegafrag {

// --- ω-regular expressions ---------------------------------------------------
//
//   expr   := concat ('|' concat)*
//   concat := power+
//   power  := atom ('*' | '^w' | '^inf')*
//   atom   := letter | '1' | '[' letter+ ']' | '(' expr ')'

struct Regex;
using RegexPtr = std::shared_ptr<const Regex>;

struct Regex {
  enum class Kind { Epsilon, Letters, Concat, Union, Star, Omega, Inf };

  Kind kind = Kind::Epsilon;
  LetterSet letters;  // Letters: a single letter or a bracket class
  std::vector<RegexPtr> children;
};

/// Throws SyntaxError, or Error(NullableOmega) when ^w / ^inf is applied to a nullable operand.
RegexPtr parse_regex(std::string_view text);
std::string to_string(const RegexPtr& r);
/// Whether the empty word belongs to the expression.
bool nullable(const RegexPtr& r);
LetterSet regex_letters(const RegexPtr& r);
std::size_t regex_size(const RegexPtr& r);

// --- automata ----------------------------------------------------------------

using State = std::uint32_t;

struct Transition {
  State from;
  Letter letter;
  State to;
  auto operator<=>(const Transition&) const = default;
};

/// Extended Büchi automaton: finite words are accepted in finite_accepting states,
/// infinite words by visiting buchi_accepting states infinitely often.
struct Buchi {
  enum class Mode { Finite, Infinite, Mixed };

  Alphabet alphabet;
  std::size_t num_states = 0;
  std::vector<Transition> transitions;
  std::vector<State> initial;
  std::vector<char> buchi_accepting;
  std::vector<char> finite_accepting;

  Mode mode() const;
  bool deterministic() const;
  /// Throws InvalidInput on out-of-range states, foreign letters, or an empty initial set.
  void validate() const;
};

/// Automaton for the expression over the given alphabet (default: the letters it uses).
Buchi to_automaton(const RegexPtr& r, std::optional<Alphabet> alphabet = std::nullopt);

/// Drops states that are unreachable or cannot lead to acceptance.
Buchi trim(const Buchi& a);

/// Direct run-based acceptance of a lasso, independent of any monoid.
bool lasso_accepts(const Buchi& a, const UPWord& w);

/// 0/1/2 state-by-state matrix: 0 no run, 1 some run, 2 some run through a Büchi state.
/// The adjoined identity (the image of the empty word) is flagged separately.
struct TransMatrix {
  std::size_t n = 0;
  bool unit = false;
  std::vector<std::uint8_t> cells;

  std::uint8_t at(State p, State q) const { return unit ? (p == q ? 1 : 0) : cells[p * n + q]; }
  std::string key() const;
  static TransMatrix identity(std::size_t n) { return TransMatrix{n, true, {}}; }
};

TransMatrix letter_matrix(const Buchi& a, Letter c);
TransMatrix operator*(const TransMatrix& x, const TransMatrix& y);

struct TransitionMonoid {
  Generated<TransMatrix> generated;
  Hom hom;
};

TransitionMonoid transition_monoid(const Buchi& a, const Budget& budget = {});

/// Recognizing homomorphism onto the transition monoid with its accepted linked pairs.
RecognizedLanguage recognize(const Buchi& a, const Budget& budget = {});

}  // namespace omegafrag
