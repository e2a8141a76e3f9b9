#pragma once

#include <cstddef>
#include <functional>
#include <memory>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "omegafrag/algebra.hpp"
#include "omegafrag/error.hpp"
#include "omegafrag/words.hpp"

namespace omegafrag {

enum class Answer { Yes, No, Unknown };
const char* to_string(Answer a) noexcept;

/// Two linked pairs that the tested condition cannot tell apart but the language does.
/// accepted/alpha lie in L, rejected/beta do not. alpha = u_hat·e_hat^ω, beta = v_hat·f_hat^ω.
struct Witness {
  LinkedPair accepted;
  LinkedPair rejected;
  std::optional<LetterSet> alphabet;  // unset for the Cantor condition
  Word u_hat, e_hat, v_hat, f_hat;
  UPWord alpha, beta;
};

/// L(s, C)
struct Block {
  Element s;
  LetterSet c;
  auto operator<=>(const Block&) const = default;
};

struct Verdict {
  std::string question;
  std::shared_ptr<const FiniteMonoid> monoid;  // the monoid that element indices refer to
  Answer answer = Answer::Unknown;
  std::optional<Witness> witness;
  std::vector<Block> representation;
  std::string condition;  // bsigma2: which condition decided the answer
  std::vector<std::string> notes;
  std::optional<std::pair<std::size_t, std::size_t>> verified_bound;
};

// --- Boolean combinations of alphabetic opens ----------------------------------------

/// NO with the shortest witness (total length of the four words, ties in enumeration
/// order of (s,e),(t,f),C) or YES with the block representation.
/// Works over the image of the homomorphism; the verdict does not depend on the recognizer.
Verdict decide_alphabetic_boolean(const RecognizedLanguage& lang, const Budget& budget = {});

/// Throws PreconditionViolated when the condition fails.
std::vector<Block> construct_representation(const RecognizedLanguage& lang, const Budget& budget = {});

/// Basic sets used by the representation.
struct BasicSet {
  enum class Kind { Prefixed, Tail, Block };  // [m]C^∞, Γ*D^∞, L(m,C)
  Kind kind;
  Element m = 0;
  LetterSet c;
};

bool up_membership_basic(const RecognizedLanguage& lang, const BasicSet& set, const UPWord& a);

struct VerifyReport {
  bool ok = true;
  std::size_t checked = 0;
  std::optional<UPWord> counterexample;
  bool in_language = false;  // membership of the counterexample in L
};

/// Bounded lasso comparison of L against the union of the blocks. lang must be the
/// language the blocks were built from (same monoid).
VerifyReport verify_representation(const RecognizedLanguage& lang, const std::vector<Block>& blocks,
                                   std::size_t max_prefix = 6, std::size_t max_loop = 6,
                                   const Budget& budget = {});

// --- Cantor analogue --------------------------------------------------------------------

/// Computed on the syntactic quotient of lang.
Verdict decide_cantor_boolean(const RecognizedLanguage& lang, const Budget& budget = {});

// --- BΣ₂ ----------------------------------------------------------------------------------

struct OracleAnswer {
  Answer answer = Answer::Unknown;
  std::string note;
};

/// Receives the syntactic homomorphism. Must be deterministic.
using V2Oracle = std::function<OracleAnswer(const Hom&)>;

V2Oracle unknown_oracle();
V2Oracle assume_yes_oracle();
/// NO on a saturation violation at this k (evidence only), UNKNOWN otherwise.
V2Oracle evidence_oracle(int k, std::size_t length_bound = 6);

Verdict decide_bsigma2(const RecognizedLanguage& lang, const V2Oracle& oracle, const Budget& budget = {});

struct SaturationReport {
  int k = 0;
  std::size_t length_bound = 0;
  std::size_t words_checked = 0;
  std::optional<std::pair<Word, Word>> violation;  // u ≡_k v but h(u) ≠ h(v)
};

SaturationReport saturation_evidence(const Hom& h, int k, std::size_t length_bound, const Budget& budget = {});
/// On the syntactic homomorphism of lang.
SaturationReport saturation_evidence(const RecognizedLanguage& lang, int k, std::size_t length_bound,
                                     const Budget& budget = {});

}  // namespace omegafrag
