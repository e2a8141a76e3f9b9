#pragma once

#include <compare>
#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "omegafrag/error.hpp"
#include "omegafrag/formula.hpp"
#include "omegafrag/words.hpp"

namespace omegafrag {

enum class Tail : std::uint8_t { Finite, Infinite };

/// A₀* a₁ A₁* … aₙ Aₙ^tail. blocks has degree()+1 entries, markers has degree() entries.
struct Monomial {
  std::vector<LetterSet> blocks;
  std::string markers;
  Tail tail = Tail::Infinite;

  int degree() const noexcept { return static_cast<int>(markers.size()); }
  auto operator<=>(const Monomial&) const = default;
};

/// Text form "[ab]* a [b]* b [ab]^inf" (or a trailing "*" for a finite tail).
std::string to_string(const Monomial& m);
Monomial parse_monomial(std::string_view text);

bool contains_finite(const Monomial& m, std::string_view w);

/// Throws TailKindMismatch for an infinite word against a finite-tail monomial.
bool contains_up(const Monomial& m, const UPWord& a);

/// Σ_{n≤k} |Γ|^n · 2^{|Γ|(n+1)}
std::uint64_t count_k_monomials(const Alphabet& gamma, int k);

/// All monomials of degree ≤ k in a fixed order: by degree, then markers, then block masks.
/// Guarded by k ≤ 3 and |Γ| ≤ 3 unless budget.force is set.
std::vector<Monomial> enumerate_k_monomials(const Alphabet& gamma, int k, Tail tail,
                                            const Budget& budget = {});

/// Marker positions of the leftmost witnessing factorization of w in m, if w ∈ m.
/// Each marker sits at the earliest position from which the rest can still be matched.
std::optional<std::vector<std::size_t>> leftmost_factorization(const Monomial& m, std::string_view w);

/// A monomial N with w ∈ N ⊆ ⋂ ms. All inputs must have a finite tail.
/// Throws NotMember if w is outside one of them.
Monomial refine(std::string_view w, std::span<const Monomial> ms);

/// Membership bits of w over enumerate_k_monomials(gamma, k, Finite).
std::vector<bool> k_profile(std::string_view w, const Alphabet& gamma, int k, const Budget& budget = {});

bool equiv_k(std::string_view u, std::string_view v, const Alphabet& gamma, int k, const Budget& budget = {});
bool equiv_k_inf(const UPWord& a, const UPWord& b, const Alphabet& gamma, int k, const Budget& budget = {});

/// ∃x₁…∃xₙ ∀y defining an infinite-tail monomial; depth degree()+1.
/// Throws TailKindMismatch for a finite tail.
Sigma2Formula to_sigma2_formula(const Monomial& m);

}  // namespace omegafrag
