#pragma once

// Brute-force reference implementations. Nothing in here calls into the membership,
// automaton or quotient code it is used to cross-check.

#include <cstddef>
#include <optional>
#include <string_view>
#include <vector>

#include "omegafrag/algebra.hpp"
#include "omegafrag/buchi.hpp"
#include "omegafrag/error.hpp"
#include "omegafrag/monomials.hpp"
#include "omegafrag/words.hpp"

namespace omegafrag::oracle {

/// Every canonical lasso u·v^ω with |u| ≤ max_prefix and |v| ≤ max_loop exactly once,
/// ordered by |u|+|v|, then |v|, then lexicographically. Finite words have an empty loop.
class LassoEnumerator {
 public:
  LassoEnumerator(Alphabet gamma, std::size_t max_prefix, std::size_t max_loop, const Budget& budget = {});

  std::optional<UPWord> next();

 private:
  void fill_level();

  Alphabet gamma_;
  std::size_t max_prefix_;
  std::size_t max_loop_;
  std::size_t total_ = 0;
  std::vector<UPWord> level_;
  std::size_t cursor_ = 0;
};

std::vector<UPWord> enumerate_lassos(const Alphabet& gamma, std::size_t max_prefix, std::size_t max_loop,
                                     const Budget& budget = {});

/// All words over gamma of length ≤ max_len, in shortlex order.
std::vector<Word> enumerate_words(const Alphabet& gamma, std::size_t max_len);

/// Membership by structural recursion over the expression on an unrolled lasso.
/// Throws DepthExceeded when the unrolling would be unreasonably long.
bool naive_regex_membership(const RegexPtr& r, const UPWord& a);

/// Exhaustive factorization search.
bool naive_monomial_member(const Monomial& m, std::string_view w);
bool naive_monomial_member(const Monomial& m, const UPWord& a);

/// Membership bits of w over enumerate_k_monomials(gamma, k, Finite).
std::vector<bool> naive_equiv_class(std::string_view w, const Alphabet& gamma, int k, const Budget& budget = {});

/// L(n) ⊆ L(m) for finite-tail monomials, by product with the subset automaton of m.
bool finite_monomial_included(const Monomial& n, const Monomial& m, const Alphabet& gamma);

/// Class index per element, straight from the defining contexts x·s·y·z^ω and x·(s·y)^ω
/// with x, y, z ranging over the monoid. The monoid must be generated by the letter images.
std::vector<std::size_t> naive_syntactic_classes(const RecognizedLanguage& lang);

}  // namespace omegafrag::oracle
