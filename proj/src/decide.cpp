#include "omegafrag/decide.hpp"

#include <algorithm>
#include <map>
#include <tuple>

#include "omegafrag/monomials.hpp"
#include "omegafrag/oracle.hpp"

namespace omegafrag {

const char* to_string(Answer a) noexcept {
  switch (a) {
    case Answer::Yes: return "yes";
    case Answer::No: return "no";
    case Answer::Unknown: return "unknown";
  }
  return "unknown";
}

namespace {

// Element of `from` with the same name in `to`. Restriction keeps names, so this is exact.
Element translate(const FiniteMonoid& from, const FiniteMonoid& to, Element x) {
  auto found = to.find(from.name(x));
  if (!found) throw Error(ErrorCode::InvalidInput, "element " + from.name(x) + " lost in restriction");
  return *found;
}

struct Candidate {
  std::size_t length;
  std::tuple<Element, Element, Element, Element, std::uint32_t> order;
  Witness witness;
};

bool better(const Candidate& a, const std::optional<Candidate>& best) {
  return !best || std::tie(a.length, a.order) < std::tie(best->length, best->order);
}

Witness make_witness(LinkedPair p, LinkedPair q, std::optional<LetterSet> c, Word u, Word e, Word v, Word f) {
  Witness w{p, q, c, std::move(u), std::move(e), std::move(v), std::move(f), {}, {}};
  w.alpha = canonicalize(UPWord{w.u_hat, w.e_hat});
  w.beta = canonicalize(UPWord{w.v_hat, w.f_hat});
  return w;
}

// Shortest violation of the alphabetic condition over a generated recognizer, if any.
std::optional<Candidate> alphabetic_violation(const RecognizedLanguage& lang, const AlphImage& img,
                                              const std::vector<std::optional<Word>>& pre) {
  const Hom& h = lang.hom();
  const FiniteMonoid& m = lang.monoid();
  const auto pairs = linked_pairs(m);
  std::optional<Candidate> best;
  for (LetterSet c : h.alphabet().subsets()) {
    const auto sub = submonoid_image(h, c);
    std::map<std::vector<char>, std::vector<LinkedPair>> by_coset;
    for (LinkedPair p : pairs)
      if (img.contains(p.e, c)) by_coset[coset(h, p.s, sub)].push_back(p);
    for (const auto& [_, group] : by_coset)
      for (LinkedPair p : group) {
        if (!lang.accepts(p)) continue;
        for (LinkedPair q : group) {
          if (lang.accepts(q)) continue;
          Word e = *img.shortest_word(p.e, c), f = *img.shortest_word(q.e, c);
          Candidate cand{pre[p.s]->size() + e.size() + pre[q.s]->size() + f.size(),
                         {p.s, p.e, q.s, q.e, c.bits()},
                         make_witness(p, q, c, *pre[p.s], std::move(e), *pre[q.s], std::move(f))};
          if (better(cand, best)) best = std::move(cand);
        }
      }
  }
  return best;
}

std::vector<Block> blocks_of(const RecognizedLanguage& lang, const AlphImage& img) {
  std::vector<Block> out;
  for (LinkedPair p : lang.accepted_pairs())
    for (LetterSet c : lang.alphabet().subsets())
      if (img.contains(p.e, c)) out.push_back({p.s, c});
  std::sort(out.begin(), out.end());
  out.erase(std::unique(out.begin(), out.end()), out.end());
  return out;
}

Witness translate(const Witness& w, const FiniteMonoid& from, const FiniteMonoid& to) {
  Witness out = w;
  out.accepted = {translate(from, to, w.accepted.s), translate(from, to, w.accepted.e)};
  out.rejected = {translate(from, to, w.rejected.s), translate(from, to, w.rejected.e)};
  return out;
}

}  // namespace

Verdict decide_alphabetic_boolean(const RecognizedLanguage& lang, const Budget& budget) {
  const RecognizedLanguage gen = restrict_to_image(lang, budget);
  const AlphImage img = alph_image(gen.hom(), budget);
  const auto pre = shortest_preimages(gen.hom());

  Verdict v;
  v.question = "alph-bool";
  v.monoid = lang.hom().monoid_ptr();
  if (gen.monoid().size() != lang.monoid().size())
    v.notes.push_back("linked pairs restricted to the " + std::to_string(gen.monoid().size()) +
                      "-element image of h (" + std::to_string(lang.monoid().size() - gen.monoid().size()) +
                      " unreachable elements ignored)");
  if (auto bad = alphabetic_violation(gen, img, pre)) {
    v.answer = Answer::No;
    v.witness = translate(bad->witness, gen.monoid(), lang.monoid());
    return v;
  }
  v.answer = Answer::Yes;
  for (Block b : blocks_of(gen, img)) v.representation.push_back({translate(gen.monoid(), lang.monoid(), b.s), b.c});
  std::sort(v.representation.begin(), v.representation.end());
  return v;
}

std::vector<Block> construct_representation(const RecognizedLanguage& lang, const Budget& budget) {
  Verdict v = decide_alphabetic_boolean(lang, budget);
  if (v.answer != Answer::Yes)
    throw Error(ErrorCode::PreconditionViolated, "the language is not a Boolean combination of alphabetic opens");
  return v.representation;
}

// --- basic sets ---------------------------------------------------------------------------

namespace {

// h(p) for the prefixes p of a after which every letter lies in c.
std::vector<char> prefix_values(const Hom& h, const UPWord& a, LetterSet c) {
  const FiniteMonoid& m = h.monoid();
  std::vector<char> out(m.size(), 0);
  if (!a.finite() && !alph(a.loop).subset_of(c)) return out;
  std::size_t start = 0;
  for (std::size_t i = 0; i < a.prefix.size(); ++i)
    if (!c.contains(a.prefix[i])) start = i + 1;
  const std::size_t end = a.finite() ? a.prefix.size() : a.prefix.size() + (m.size() + 1) * a.loop.size();
  Element x = h.eval(std::string_view(a.prefix).substr(0, std::min(start, a.prefix.size())));
  out[x] = 1;
  for (std::size_t i = start; i < end; ++i) {
    x = m.mul(x, h.image(a.at(i)));
    out[x] = 1;
  }
  return out;
}

bool in_block(const FiniteMonoid& m, const std::vector<char>& prefixes, const std::vector<std::vector<char>>& cosets,
              Element s) {
  if (!prefixes[s]) return false;
  for (Element t = 0; t < m.size(); ++t)
    if (prefixes[t] && !cosets[t][s]) return false;
  return true;
}

std::vector<std::vector<char>> all_cosets(const Hom& h, LetterSet c) {
  const auto sub = submonoid_image(h, c);
  std::vector<std::vector<char>> out;
  for (Element t = 0; t < h.monoid().size(); ++t) out.push_back(coset(h, t, sub));
  return out;
}

}  // namespace

bool up_membership_basic(const RecognizedLanguage& lang, const BasicSet& set, const UPWord& a) {
  switch (set.kind) {
    case BasicSet::Kind::Tail: return im(a).subset_of(set.c);
    case BasicSet::Kind::Prefixed: return prefix_values(lang.hom(), a, set.c)[set.m] != 0;
    case BasicSet::Kind::Block:
      if (im(a) != set.c) return false;
      return in_block(lang.monoid(), prefix_values(lang.hom(), a, set.c), all_cosets(lang.hom(), set.c), set.m);
  }
  return false;
}

VerifyReport verify_representation(const RecognizedLanguage& lang, const std::vector<Block>& blocks,
                                   std::size_t max_prefix, std::size_t max_loop, const Budget& budget) {
  const Hom& h = lang.hom();
  std::map<std::uint32_t, std::vector<Element>> by_alphabet;
  for (Block b : blocks) by_alphabet[b.c.bits()].push_back(b.s);
  std::map<std::uint32_t, std::vector<std::vector<char>>> cosets;
  for (const auto& [bits, _] : by_alphabet) cosets[bits] = all_cosets(h, LetterSet(bits));

  VerifyReport report;
  oracle::LassoEnumerator lassos(lang.alphabet(), max_prefix, max_loop, budget);
  while (auto a = lassos.next()) {
    const bool expected = up_membership(lang, *a);
    bool got = false;
    const LetterSet c = im(*a);
    if (auto it = by_alphabet.find(c.bits()); it != by_alphabet.end()) {
      const auto prefixes = prefix_values(h, *a, c);
      for (Element s : it->second)
        if (in_block(lang.monoid(), prefixes, cosets[c.bits()], s)) {
          got = true;
          break;
        }
    }
    ++report.checked;
    if (got != expected) {
      report.ok = false;
      report.counterexample = *a;
      report.in_language = expected;
      return report;
    }
  }
  return report;
}

// --- Cantor ---------------------------------------------------------------------------------

Verdict decide_cantor_boolean(const RecognizedLanguage& lang, const Budget& budget) {
  const SyntacticResult syn = syntactic_quotient(lang, budget);
  const RecognizedLanguage& q = syn.language;
  const FiniteMonoid& m = q.monoid();
  const auto pre = shortest_preimages(q.hom());
  const auto pairs = linked_pairs(m);

  std::optional<Candidate> best;
  for (LinkedPair p : pairs) {
    if (!q.accepts(p)) continue;
    for (LinkedPair r : pairs) {
      if (q.accepts(r) || !m.green_R_equivalent(p.s, r.s)) continue;
      Candidate cand{pre[p.s]->size() + pre[p.e]->size() + pre[r.s]->size() + pre[r.e]->size(),
                     {p.s, p.e, r.s, r.e, 0},
                     make_witness(p, r, std::nullopt, *pre[p.s], *pre[p.e], *pre[r.s], *pre[r.e])};
      if (better(cand, best)) best = std::move(cand);
    }
  }
  Verdict v;
  v.question = "cantor-bool";
  v.monoid = q.hom().monoid_ptr();
  v.answer = best ? Answer::No : Answer::Yes;
  if (best) v.witness = best->witness;
  return v;
}

// --- BΣ₂ ------------------------------------------------------------------------------------

V2Oracle unknown_oracle() {
  return [](const Hom&) { return OracleAnswer{Answer::Unknown, "no V2 decision procedure configured"}; };
}

V2Oracle assume_yes_oracle() {
  return [](const Hom&) { return OracleAnswer{Answer::Yes, "V2 membership assumed"}; };
}

V2Oracle evidence_oracle(int k, std::size_t length_bound) {
  return [k, length_bound](const Hom& h) {
    const SaturationReport r = saturation_evidence(h, k, length_bound);
    if (r.violation)
      return OracleAnswer{Answer::No, "evidence only: " + show_word(r.violation->first) + " and " +
                                          show_word(r.violation->second) + " are " + std::to_string(k) +
                                          "-equivalent but have different images"};
    return OracleAnswer{Answer::Unknown, "no saturation violation for k=" + std::to_string(k) + " up to length " +
                                             std::to_string(length_bound)};
  };
}

Verdict decide_bsigma2(const RecognizedLanguage& lang, const V2Oracle& oracle, const Budget& budget) {
  const SyntacticResult syn = syntactic_quotient(lang, budget);
  Verdict v = decide_alphabetic_boolean(syn.language, budget);
  v.question = "bsigma2";
  if (v.answer == Answer::No) {
    v.condition = "topological";
    return v;
  }
  const OracleAnswer a = oracle(syn.language.hom());
  v.notes.push_back("V2 oracle: " + a.note);
  v.answer = a.answer;
  if (a.answer != Answer::Yes) {
    v.condition = "V2";
    v.representation.clear();
  }
  return v;
}

SaturationReport saturation_evidence(const Hom& h, int k, std::size_t length_bound, const Budget& budget) {
  const auto monomials = enumerate_k_monomials(h.alphabet(), k, Tail::Finite, budget);
  std::size_t words = 1;
  for (std::size_t i = 0; i < length_bound && words < 2'000'000; ++i) words *= h.alphabet().size();
  if (!budget.force && words >= 2'000'000)
    throw Error(ErrorCode::BudgetExceeded, "saturation sweep over too many words");

  SaturationReport report;
  report.k = k;
  report.length_bound = length_bound;
  std::map<std::vector<bool>, std::pair<Word, Element>> seen;
  for (const Word& w : oracle::enumerate_words(h.alphabet(), length_bound)) {
    std::vector<bool> profile;
    profile.reserve(monomials.size());
    for (const Monomial& mono : monomials) profile.push_back(contains_finite(mono, w));
    const Element x = h.eval(w);
    ++report.words_checked;
    auto [it, fresh] = seen.try_emplace(std::move(profile), w, x);
    if (!fresh && it->second.second != x) {
      report.violation = std::make_pair(it->second.first, w);
      return report;
    }
  }
  return report;
}

SaturationReport saturation_evidence(const RecognizedLanguage& lang, int k, std::size_t length_bound,
                                     const Budget& budget) {
  return saturation_evidence(syntactic_quotient(lang, budget).language.hom(), k, length_bound, budget);
}

}  // namespace omegafrag
