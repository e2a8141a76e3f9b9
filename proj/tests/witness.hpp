#pragma once

// Independent re-validation of NO witnesses: every claim is recomputed from the
// homomorphism and, when available, from an automaton run.

#include <optional>
#include <string>

#include "omegafrag/buchi.hpp"
#include "omegafrag/decide.hpp"

namespace testing {

// lang must be over the monoid the verdict refers to.
inline std::string witness_problems(const omegafrag::RecognizedLanguage& lang, const omegafrag::Verdict& v,
                                    const omegafrag::Buchi* automaton = nullptr) {
  using namespace omegafrag;
  if (!v.witness) return "no witness";
  const Witness& w = *v.witness;
  const Hom& h = lang.hom();
  const FiniteMonoid& m = lang.monoid();
  std::string out;
  auto fail = [&](const std::string& what) { out += what + "; "; };

  if (!(canonicalize({w.u_hat, w.e_hat}) == w.alpha)) fail("alpha is not u_hat e_hat^w");
  if (!(canonicalize({w.v_hat, w.f_hat}) == w.beta)) fail("beta is not v_hat f_hat^w");
  if (h.eval(w.u_hat) != w.accepted.s) fail("h(u_hat) != s");
  if (h.eval(w.e_hat) != w.accepted.e) fail("h(e_hat) != e");
  if (h.eval(w.v_hat) != w.rejected.s) fail("h(v_hat) != t");
  if (h.eval(w.f_hat) != w.rejected.e) fail("h(f_hat) != f");
  for (LinkedPair p : {w.accepted, w.rejected})
    if (!m.is_idempotent(p.e) || m.mul(p.s, p.e) != p.s) fail("not a linked pair");
  if (!lang.accepts(w.accepted)) fail("accepted pair is rejected");
  if (lang.accepts(w.rejected)) fail("rejected pair is accepted");
  if (!up_membership(lang, w.alpha)) fail("alpha not in L");
  if (up_membership(lang, w.beta)) fail("beta in L");
  if (automaton) {
    if (!lasso_accepts(*automaton, w.alpha)) fail("automaton rejects alpha");
    if (lasso_accepts(*automaton, w.beta)) fail("automaton accepts beta");
  }

  if (w.alphabet) {
    const LetterSet c = *w.alphabet;
    if (alph(w.e_hat) != c) fail("alph(e_hat) != C");
    if (alph(w.f_hat) != c) fail("alph(f_hat) != C");
    // cosets by closing {s} and {t} under right multiplication by the letters of C
    auto closure = [&](Element s) {
      std::vector<char> in(m.size(), 0);
      std::vector<Element> todo{s};
      in[s] = 1;
      while (!todo.empty()) {
        const Element x = todo.back();
        todo.pop_back();
        for (char a : c.letters()) {
          const Element y = m.mul(x, h.image(a));
          if (!in[y]) in[y] = 1, todo.push_back(y);
        }
      }
      return in;
    };
    if (closure(w.accepted.s) != closure(w.rejected.s)) fail("cosets differ");
  } else if (!m.green_R_equivalent(w.accepted.s, w.rejected.s)) {
    fail("s and t are not R-equivalent");
  }
  return out;
}

}  // namespace testing
