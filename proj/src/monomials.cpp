#include "omegafrag/monomials.hpp"

#include <algorithm>

namespace omegafrag {

std::string to_string(const Monomial& m) {
  std::string out;
  for (int i = 0; i <= m.degree(); ++i) {
    if (i > 0) {
      out += " ";
      out.push_back(m.markers[static_cast<std::size_t>(i - 1)]);
      out += " ";
    }
    out += m.blocks[static_cast<std::size_t>(i)].to_class();
    const bool last = i == m.degree();
    out += (last && m.tail == Tail::Infinite) ? "^inf" : "*";
  }
  return out;
}

Monomial parse_monomial(std::string_view text) {
  Monomial m;
  std::size_t pos = 0;
  auto skip = [&] {
    while (pos < text.size() && text[pos] == ' ') ++pos;
  };
  while (true) {
    skip();
    if (pos >= text.size() || text[pos] != '[') throw SyntaxError(pos, "expected '['");
    const auto close = text.find(']', pos);
    if (close == std::string_view::npos) throw SyntaxError(pos, "unterminated alphabet class");
    LetterSet block;
    for (std::size_t i = pos + 1; i < close; ++i) {
      if (!is_letter(text[i])) throw SyntaxError(i, "expected a letter");
      block |= LetterSet::single(text[i]);
    }
    m.blocks.push_back(block);
    pos = close + 1;
    if (text.substr(pos, 4) == "^inf") {
      m.tail = Tail::Infinite;
      pos += 4;
      skip();
      if (pos != text.size()) throw SyntaxError(pos, "trailing input after ^inf");
      return m;
    }
    if (pos >= text.size() || text[pos] != '*') throw SyntaxError(pos, "expected '*' or '^inf'");
    ++pos;
    skip();
    if (pos == text.size()) {
      m.tail = Tail::Finite;
      return m;
    }
    if (!is_letter(text[pos])) throw SyntaxError(pos, "expected a marker letter");
    m.markers.push_back(text[pos++]);
  }
}

namespace {

using StateSet = std::vector<char>;

StateSet initial_states(const Monomial& m) {
  StateSet s(m.blocks.size(), 0);
  s[0] = 1;
  return s;
}

void step(const Monomial& m, const StateSet& cur, Letter c, StateSet& next) {
  std::fill(next.begin(), next.end(), 0);
  for (std::size_t j = 0; j < cur.size(); ++j) {
    if (!cur[j]) continue;
    if (m.blocks[j].contains(c)) next[j] = 1;
    if (j < m.markers.size() && m.markers[j] == c) next[j + 1] = 1;
  }
}

}  // namespace

bool contains_finite(const Monomial& m, std::string_view w) {
  StateSet cur = initial_states(m), next(cur.size());
  for (char c : w) {
    step(m, cur, c, next);
    std::swap(cur, next);
  }
  return cur.back() != 0;
}

bool contains_up(const Monomial& m, const UPWord& a) {
  if (a.finite()) return contains_finite(m, a.prefix);
  if (m.tail == Tail::Finite)
    throw Error(ErrorCode::TailKindMismatch, "infinite word tested against a finite-tail monomial");
  const LetterSet last = m.blocks.back();
  if (!im(a).subset_of(last)) return false;
  // Marked positions fit in prefix·loop^(degree+1); afterwards only the tail matters.
  const Word w = a.unroll(static_cast<std::size_t>(m.degree()) + 1);
  // suffix_ok[i]: every letter of the word from position i on lies in the last block.
  std::vector<char> suffix_ok(w.size() + 1, 1);
  for (std::size_t i = w.size(); i-- > 0;) suffix_ok[i] = suffix_ok[i + 1] && last.contains(w[i]);
  StateSet cur = initial_states(m), next(cur.size());
  for (std::size_t i = 0;; ++i) {
    if (cur.back() && suffix_ok[i]) return true;
    if (i == w.size()) return false;
    step(m, cur, w[i], next);
    std::swap(cur, next);
  }
}

std::uint64_t count_k_monomials(const Alphabet& gamma, int k) {
  const auto g = static_cast<std::uint64_t>(gamma.size());
  std::uint64_t total = 0, letters = 1;
  for (int n = 0; n <= k; ++n) {
    total += letters * (std::uint64_t{1} << (gamma.size() * (n + 1)));
    letters *= g;
  }
  return total;
}

std::vector<Monomial> enumerate_k_monomials(const Alphabet& gamma, int k, Tail tail, const Budget& budget) {
  if (k < 0) throw Error(ErrorCode::InvalidInput, "negative degree bound");
  if (!budget.force && (k > 3 || gamma.size() > 3))
    throw Error(ErrorCode::BudgetExceeded, "monomial enumeration is limited to k <= 3 and |alphabet| <= 3");
  if (gamma.size() * (k + 1) > 30) throw Error(ErrorCode::BudgetExceeded, "monomial enumeration too large");
  const std::vector<LetterSet> subsets = gamma.subsets();
  const std::string& letters = gamma.letters();
  std::vector<Monomial> out;
  out.reserve(static_cast<std::size_t>(count_k_monomials(gamma, k)));
  for (int n = 0; n <= k; ++n) {
    std::vector<std::size_t> mark_idx(static_cast<std::size_t>(n), 0);
    while (true) {
      std::string markers;
      for (auto i : mark_idx) markers.push_back(letters[i]);
      std::vector<std::size_t> block_idx(static_cast<std::size_t>(n) + 1, 0);
      while (true) {
        Monomial m;
        m.tail = tail;
        m.markers = markers;
        for (auto i : block_idx) m.blocks.push_back(subsets[i]);
        out.push_back(std::move(m));
        // odometer over block alphabets, last block fastest
        std::size_t d = block_idx.size();
        while (d > 0 && ++block_idx[d - 1] == subsets.size()) block_idx[--d] = 0;
        if (d == 0) break;
      }
      std::size_t d = mark_idx.size();
      while (d > 0 && ++mark_idx[d - 1] == letters.size()) mark_idx[--d] = 0;
      if (d == 0) break;
    }
  }
  return out;
}

std::optional<std::vector<std::size_t>> leftmost_factorization(const Monomial& m, std::string_view w) {
  const std::size_t n = m.markers.size(), len = w.size();
  // feasible[j][i]: w[i..] can be read starting inside block j
  std::vector<std::vector<char>> feasible(n + 1, std::vector<char>(len + 1, 0));
  feasible[n][len] = 1;
  for (std::size_t i = len; i-- > 0;) feasible[n][i] = feasible[n][i + 1] && m.blocks[n].contains(w[i]);
  for (std::size_t j = n; j-- > 0;) {
    for (std::size_t i = len; i-- > 0;) {
      feasible[j][i] = (m.blocks[j].contains(w[i]) && feasible[j][i + 1]) ||
                       (w[i] == m.markers[j] && feasible[j + 1][i + 1]);
    }
  }
  if (!feasible[0][0]) return std::nullopt;
  std::vector<std::size_t> marks;
  std::size_t i = 0;
  for (std::size_t j = 0; j < n; ++j) {
    std::size_t p = i;
    while (!(w[p] == m.markers[j] && feasible[j + 1][p + 1])) ++p;  // w[i..p) stays inside block j
    marks.push_back(p);
    i = p + 1;
  }
  return marks;
}

Monomial refine(std::string_view w, std::span<const Monomial> ms) {
  if (ms.empty()) throw Error(ErrorCode::InvalidInput, "refine needs at least one monomial");
  std::vector<std::vector<std::size_t>> factorizations;
  for (const Monomial& m : ms) {
    if (m.tail != Tail::Finite) throw Error(ErrorCode::InvalidInput, "refine expects finite-tail monomials");
    auto f = leftmost_factorization(m, w);
    if (!f) throw Error(ErrorCode::NotMember, show_word(w) + " is not in " + to_string(m));
    factorizations.push_back(std::move(*f));
  }
  std::vector<std::size_t> marked;
  for (const auto& f : factorizations) marked.insert(marked.end(), f.begin(), f.end());
  std::sort(marked.begin(), marked.end());
  marked.erase(std::unique(marked.begin(), marked.end()), marked.end());

  Monomial out;
  out.tail = Tail::Finite;
  for (std::size_t g = 0; g <= marked.size(); ++g) {
    const std::size_t start = g == 0 ? 0 : marked[g - 1] + 1;
    const std::size_t end = g == marked.size() ? w.size() : marked[g];
    if (g > 0 && g < marked.size() && start == end) {
      out.blocks.emplace_back();  // consecutive marks
    } else {
      LetterSet gap(~0u);
      for (std::size_t i = 0; i < ms.size(); ++i) {
        const auto& f = factorizations[i];
        const auto idx = static_cast<std::size_t>(std::lower_bound(f.begin(), f.end(), start) - f.begin());
        gap = gap & ms[i].blocks[idx];
      }
      out.blocks.push_back(gap);
    }
    if (g < marked.size()) out.markers.push_back(w[marked[g]]);
  }
  return out;
}

namespace {
void require_over(const Alphabet& gamma, std::string_view w) {
  if (!gamma.contains(w)) throw Error(ErrorCode::InvalidInput, "word " + show_word(w) + " is not over the alphabet");
}
}  // namespace

std::vector<bool> k_profile(std::string_view w, const Alphabet& gamma, int k, const Budget& budget) {
  require_over(gamma, w);
  std::vector<bool> bits;
  for (const Monomial& m : enumerate_k_monomials(gamma, k, Tail::Finite, budget)) bits.push_back(contains_finite(m, w));
  return bits;
}

bool equiv_k(std::string_view u, std::string_view v, const Alphabet& gamma, int k, const Budget& budget) {
  require_over(gamma, u);
  require_over(gamma, v);
  for (const Monomial& m : enumerate_k_monomials(gamma, k, Tail::Finite, budget))
    if (contains_finite(m, u) != contains_finite(m, v)) return false;
  return true;
}

bool equiv_k_inf(const UPWord& a, const UPWord& b, const Alphabet& gamma, int k, const Budget& budget) {
  require_over(gamma, a.prefix + a.loop);
  require_over(gamma, b.prefix + b.loop);
  for (const Monomial& m : enumerate_k_monomials(gamma, k, Tail::Infinite, budget))
    if (contains_up(m, a) != contains_up(m, b)) return false;
  return true;
}

Sigma2Formula to_sigma2_formula(const Monomial& m) {
  if (m.tail != Tail::Infinite) throw Error(ErrorCode::TailKindMismatch, "the formula is defined for infinite-tail monomials");
  const int n = m.degree();
  const std::string y = "y";
  auto x = [](int i) { return "x" + std::to_string(i); };
  if (n == 0) return Sigma2Formula(fo::forall(y, fo::letter_in(y, m.blocks[0])));

  std::vector<FormulaPtr> parts;
  for (int i = 1; i <= n; ++i) parts.push_back(fo::letter_is(x(i), m.markers[static_cast<std::size_t>(i - 1)]));
  // The markers must occur in order.
  for (int i = 1; i < n; ++i) parts.push_back(fo::less(x(i), x(i + 1)));
  for (int i = 1; i < n; ++i) {
    parts.push_back(fo::implies(fo::conj({fo::less(x(i), y), fo::less(y, x(i + 1))}),
                                fo::letter_in(y, m.blocks[static_cast<std::size_t>(i)])));
  }
  parts.push_back(fo::implies(fo::less(x(n), y, true), fo::letter_in(y, m.blocks[static_cast<std::size_t>(n)])));
  parts.push_back(fo::implies(fo::less(y, x(1)), fo::letter_in(y, m.blocks[0])));

  FormulaPtr body = fo::forall(y, fo::conj(std::move(parts)));
  for (int i = n; i >= 1; --i) body = fo::exists(x(i), body);
  return Sigma2Formula(std::move(body));
}

}  // namespace omegafrag
