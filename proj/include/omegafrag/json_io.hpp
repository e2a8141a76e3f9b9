#pragma once

// JSON forms of monoids, languages, automata and verdicts. Parse failures raise
// Error(InvalidInput) with the offending key in the message.

#include <string>
#include <string_view>

#include "omegafrag/algebra.hpp"
#include "omegafrag/buchi.hpp"
#include "omegafrag/decide.hpp"

namespace omegafrag::json_io {

/// {"elements", "identity", "table", "generators", "order"?, "accepted"}.
/// With analysis, also "idempotents" and "linked_pairs" (ignored when read back).
std::string language_to_json(const RecognizedLanguage& lang, bool analysis = false);
RecognizedLanguage language_from_json(std::string_view text);

/// {"states": n, "alphabet": "ab", "transitions": [[from, letter, to]], "initial": [..],
///  "buchi_accepting": [..], "finite_accepting": [..]}. States are 0..n-1.
std::string automaton_to_json(const Buchi& a);
Buchi automaton_from_json(std::string_view text);

std::string verdict_to_json(const Verdict& v);
std::string verify_to_json(const VerifyReport& r, const std::vector<Block>& blocks, const FiniteMonoid& m,
                           std::size_t max_prefix, std::size_t max_loop);

}  // namespace omegafrag::json_io
