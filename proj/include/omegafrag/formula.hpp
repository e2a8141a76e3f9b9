#pragma once

#include <memory>
#include <string>
#include <string_view>
#include <vector>

#include "omegafrag/words.hpp"

namespace omegafrag {

// First-order sentences over words with x < y and letter predicates.

struct Formula;
using FormulaPtr = std::shared_ptr<const Formula>;

struct Formula {
  enum class Kind { True, Less, LetterIs, LetterIn, Not, And, Or, Implies, Exists, Forall };

  Kind kind = Kind::True;
  std::string var;    // bound variable, or left operand of Less / subject of letter atoms
  std::string other;  // right operand of Less
  Letter letter = 'a';
  LetterSet letters;
  bool flipped = false;  // print Less(x, y) as "y > x"
  std::vector<FormulaPtr> children;
};

namespace fo {
FormulaPtr truth();
FormulaPtr less(std::string x, std::string y, bool print_flipped = false);
FormulaPtr letter_is(std::string x, Letter a);
FormulaPtr letter_in(std::string x, LetterSet set);
FormulaPtr negate(FormulaPtr f);
FormulaPtr conj(std::vector<FormulaPtr> fs);
FormulaPtr disj(std::vector<FormulaPtr> fs);
FormulaPtr implies(FormulaPtr lhs, FormulaPtr rhs);
FormulaPtr exists(std::string x, FormulaPtr body);
FormulaPtr forall(std::string x, FormulaPtr body);
}  // namespace fo

std::string to_string(const FormulaPtr& f);

/// A prenex sentence whose prefix is one ∃-block followed by one ∀-block.
class Sigma2Formula {
 public:
  explicit Sigma2Formula(FormulaPtr root);

  const FormulaPtr& root() const noexcept { return root_; }
  int quantifier_depth() const noexcept { return depth_; }
  int existential_count() const noexcept { return exists_; }
  int universal_count() const noexcept { return forall_; }
  std::string to_string() const;

 private:
  FormulaPtr root_;
  int depth_ = 0;
  int exists_ = 0;
  int forall_ = 0;
};

/// Satisfaction over the positions 1..|w| of a finite word.
bool eval_fo_finite(const FormulaPtr& sentence, std::string_view w);
inline bool eval_fo_finite(const Sigma2Formula& f, std::string_view w) { return eval_fo_finite(f.root(), w); }

}  // namespace omegafrag
