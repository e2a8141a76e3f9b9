#include "omegafrag/oracle.hpp"

#include <algorithm>
#include <map>
#include <set>
#include <tuple>
#include <unordered_map>

namespace omegafrag::oracle {

// --- lasso enumeration ---------------------------------------------------------------

namespace {

void words_of_length(const std::string& letters, std::size_t len, std::vector<Word>& out) {
  if (letters.empty()) {
    if (len == 0) out.emplace_back();
    return;
  }
  std::vector<std::size_t> idx(len, 0);
  while (true) {
    Word w;
    for (auto i : idx) w.push_back(letters[i]);
    out.push_back(std::move(w));
    std::size_t d = len;
    while (d > 0 && ++idx[d - 1] == letters.size()) idx[--d] = 0;
    if (d == 0) break;
  }
}

}  // namespace

LassoEnumerator::LassoEnumerator(Alphabet gamma, std::size_t max_prefix, std::size_t max_loop, const Budget& budget)
    : gamma_(std::move(gamma)), max_prefix_(max_prefix), max_loop_(max_loop) {
  if (!budget.force && (max_prefix > 8 || max_loop > 8))
    throw Error(ErrorCode::BudgetExceeded, "lasso bounds are limited to 8");
  fill_level();
}

void LassoEnumerator::fill_level() {
  level_.clear();
  cursor_ = 0;
  while (level_.empty() && total_ <= max_prefix_ + max_loop_) {
    for (std::size_t lv = 0; lv <= std::min(total_, max_loop_); ++lv) {
      const std::size_t lu = total_ - lv;
      if (lu > max_prefix_) continue;
      std::vector<Word> us, vs;
      words_of_length(gamma_.letters(), lu, us);
      words_of_length(gamma_.letters(), lv, vs);
      for (const Word& v : vs)
        for (const Word& u : us) {
          UPWord a{u, v};
          if (canonicalize(a) == a) level_.push_back(std::move(a));
        }
    }
    std::sort(level_.begin(), level_.end(), [](const UPWord& x, const UPWord& y) {
      return std::make_tuple(x.loop.size(), std::cref(x.prefix), std::cref(x.loop)) < std::make_tuple(y.loop.size(), std::cref(y.prefix), std::cref(y.loop));
    });
    ++total_;
  }
}

std::optional<UPWord> LassoEnumerator::next() {
  if (cursor_ == level_.size()) fill_level();
  if (cursor_ == level_.size()) return std::nullopt;
  return level_[cursor_++];
}

std::vector<UPWord> enumerate_lassos(const Alphabet& gamma, std::size_t max_prefix, std::size_t max_loop,
                                     const Budget& budget) {
  LassoEnumerator it(gamma, max_prefix, max_loop, budget);
  std::vector<UPWord> out;
  while (auto a = it.next()) out.push_back(std::move(*a));
  return out;
}

std::vector<Word> enumerate_words(const Alphabet& gamma, std::size_t max_len) {
  std::vector<Word> out;
  for (std::size_t len = 0; len <= max_len; ++len) words_of_length(gamma.letters(), len, out);
  return out;
}

// --- naive regex membership ------------------------------------------------------------

namespace {

using Bits = std::vector<char>;

class RegexMatcher {
 public:
  RegexMatcher(const RegexPtr& r, const UPWord& a) : a_(a) {
    std::size_t letter_nodes = 0;
    count_letters(r, letter_nodes);
    // Any state set reachable along the loop shows up within this many periods.
    periods_ = letter_nodes + 2;
    const std::size_t copies = a.finite() ? 0 : periods_ + 3;
    if (a.prefix.size() + copies * a.loop.size() > 4096)
      throw Error(ErrorCode::DepthExceeded, "lasso unrolling too deep for the naive matcher");
    w_ = a.prefix;
    for (std::size_t i = 0; i < copies; ++i) w_ += a.loop;
  }

  bool member(const RegexPtr& r) {
    if (a_.finite()) return from(r.get(), 0)[w_.size()] != 0;
    return inf(r.get(), 0);
  }

 private:
  static void count_letters(const RegexPtr& r, std::size_t& n) {
    if (r->kind == Regex::Kind::Letters) ++n;
    for (const auto& c : r->children) count_letters(c, n);
  }

  std::size_t norm(std::size_t p) const {
    const std::size_t u = a_.prefix.size(), v = a_.loop.size();
    return p < u + v ? p : u + (p - u) % v;
  }
  std::size_t reach_limit(std::size_t i) const {
    return std::min(w_.size(), std::max(i, a_.prefix.size()) + (periods_ + 1) * a_.loop.size());
  }

  // from(r, i)[j]: w[i..j) is a finite word of r.
  const Bits& from(const Regex* r, std::size_t i) { return from_seq(r, 0, i); }

  // Suffix of the child list starting at k (only meaningful for Concat; k = 0 otherwise).
  const Bits& from_seq(const Regex* r, std::size_t k, std::size_t i) {
    auto key = std::make_tuple(r, k, i);
    if (auto it = fin_.find(key); it != fin_.end()) return it->second;
    Bits out(w_.size() + 1, 0);
    switch (r->kind) {
      case Regex::Kind::Epsilon: out[i] = 1; break;
      case Regex::Kind::Letters:
        if (i < w_.size() && r->letters.contains(w_[i])) out[i + 1] = 1;
        break;
      case Regex::Kind::Union:
        for (const auto& c : r->children) {
          const Bits& b = from(c.get(), i);
          for (std::size_t j = 0; j < out.size(); ++j) out[j] |= b[j];
        }
        break;
      case Regex::Kind::Concat: {
        const Bits first = from(r->children[k].get(), i);
        if (k + 1 == r->children.size()) {
          out = first;
        } else {
          for (std::size_t m = i; m < out.size(); ++m) {
            if (!first[m]) continue;
            const Bits& rest = from_seq(r, k + 1, m);
            for (std::size_t j = m; j < out.size(); ++j) out[j] |= rest[j];
          }
        }
        break;
      }
      case Regex::Kind::Star:
      case Regex::Kind::Inf: {
        // closure: positions reachable by chaining nonempty factors
        out[i] = 1;
        std::vector<std::size_t> todo{i};
        while (!todo.empty()) {
          const std::size_t m = todo.back();
          todo.pop_back();
          const Bits b = from(r->children[0].get(), m);
          for (std::size_t j = m + 1; j < out.size(); ++j)
            if (b[j] && !out[j]) {
              out[j] = 1;
              todo.push_back(j);
            }
        }
        break;
      }
      case Regex::Kind::Omega: break;
    }
    return fin_.emplace(key, std::move(out)).first->second;
  }

  // The suffix of the lasso from normalized position i is an infinite word of r.
  bool inf(const Regex* r, std::size_t i) { return inf_seq(r, 0, i); }

  bool inf_seq(const Regex* r, std::size_t k, std::size_t i) {
    auto key = std::make_tuple(r, k, i);
    if (auto it = inf_memo_.find(key); it != inf_memo_.end()) return it->second;
    inf_memo_[key] = false;  // guards against revisiting while in progress
    bool result = false;
    switch (r->kind) {
      case Regex::Kind::Epsilon:
      case Regex::Kind::Letters: break;
      case Regex::Kind::Union:
        for (const auto& c : r->children) result = result || inf(c.get(), i);
        break;
      case Regex::Kind::Concat: {
        const Regex* head = r->children[k].get();
        if (k + 1 == r->children.size()) {
          result = inf(head, i);
          break;
        }
        result = inf(head, i);
        const Bits first = from(head, i);
        for (std::size_t j = i; j <= reach_limit(i) && !result; ++j)
          if (first[j]) result = inf_seq(r, k + 1, norm(j));
        break;
      }
      case Regex::Kind::Star:
      case Regex::Kind::Omega:
      case Regex::Kind::Inf: {
        const Regex* body = r->children[0].get();
        // finitely many factors, then one infinite factor
        const Bits star = star_from(body, i);
        for (std::size_t j = i; j <= reach_limit(i) && !result; ++j)
          if (star[j]) result = inf(body, norm(j));
        if (!result && r->kind != Regex::Kind::Star) result = infinitely_many_factors(body, i);
        break;
      }
    }
    inf_memo_[key] = result;
    return result;
  }

  Bits star_from(const Regex* body, std::size_t i) {
    Bits out(w_.size() + 1, 0);
    out[i] = 1;
    std::vector<std::size_t> todo{i};
    while (!todo.empty()) {
      const std::size_t m = todo.back();
      todo.pop_back();
      const Bits b = from(body, m);
      for (std::size_t j = m + 1; j < out.size(); ++j)
        if (b[j] && !out[j]) {
          out[j] = 1;
          todo.push_back(j);
        }
    }
    return out;
  }

  // Graph on normalized positions: p → norm(j) when w[p..j) is a nonempty word of body.
  bool infinitely_many_factors(const Regex* body, std::size_t start) {
    const std::size_t nodes = a_.prefix.size() + a_.loop.size();
    std::vector<std::vector<std::size_t>> adj(nodes);
    for (std::size_t p = 0; p < nodes; ++p) {
      const Bits& b = from(body, p);
      for (std::size_t j = p + 1; j <= reach_limit(p); ++j)
        if (b[j]) adj[p].push_back(norm(j));
    }
    auto reach = [&](std::size_t s, bool strict) {
      std::vector<char> seen(nodes, 0);
      std::vector<std::size_t> todo;
      if (strict) {
        for (auto t : adj[s]) todo.push_back(t);
      } else {
        todo.push_back(s);
      }
      for (auto t : todo) seen[t] = 1;
      while (!todo.empty()) {
        auto x = todo.back();
        todo.pop_back();
        for (auto y : adj[x])
          if (!seen[y]) {
            seen[y] = 1;
            todo.push_back(y);
          }
      }
      return seen;
    };
    const auto reachable = reach(start, false);
    for (std::size_t p = 0; p < nodes; ++p)
      if (reachable[p] && reach(p, true)[p]) return true;
    return false;
  }

  const UPWord& a_;
  Word w_;
  std::size_t periods_ = 0;
  std::map<std::tuple<const Regex*, std::size_t, std::size_t>, Bits> fin_;
  std::map<std::tuple<const Regex*, std::size_t, std::size_t>, bool> inf_memo_;
};

}  // namespace

bool naive_regex_membership(const RegexPtr& r, const UPWord& a) {
  RegexMatcher m(r, a);
  return m.member(r);
}

// --- monomials ---------------------------------------------------------------------------------

namespace {

bool match_from(const Monomial& m, std::string_view w, std::size_t block, std::size_t pos) {
  if (block == m.markers.size()) {
    for (std::size_t i = pos; i < w.size(); ++i)
      if (!m.blocks[block].contains(w[i])) return false;
    return true;
  }
  for (std::size_t p = pos; p < w.size(); ++p) {
    if (w[p] == m.markers[block] && match_from(m, w, block + 1, p + 1)) return true;
    if (!m.blocks[block].contains(w[p])) return false;
  }
  return false;
}

}  // namespace

bool naive_monomial_member(const Monomial& m, std::string_view w) { return match_from(m, w, 0, 0); }

bool naive_monomial_member(const Monomial& m, const UPWord& a) {
  if (a.finite()) return naive_monomial_member(m, a.prefix);
  if (m.tail == Tail::Finite) throw Error(ErrorCode::TailKindMismatch, "finite-tail monomial against infinite word");
  const LetterSet tail = m.blocks.back();
  for (char c : a.loop)
    if (!tail.contains(c)) return false;
  // Try every cut point x·β: x must end on the last marker (or be empty for degree 0).
  Monomial head = m;
  head.blocks.back() = LetterSet{};
  head.tail = Tail::Finite;
  const std::size_t limit = a.prefix.size() + (m.markers.size() + 2) * a.loop.size();
  const Word w = a.unroll(m.markers.size() + 2);
  for (std::size_t cut = 0; cut <= limit; ++cut) {
    bool rest_ok = true;
    for (std::size_t i = cut; i < a.prefix.size(); ++i) rest_ok = rest_ok && tail.contains(a.prefix[i]);
    if (!rest_ok) continue;
    if (naive_monomial_member(head, std::string_view(w).substr(0, cut))) return true;
  }
  return false;
}

std::vector<bool> naive_equiv_class(std::string_view w, const Alphabet& gamma, int k, const Budget& budget) {
  std::vector<bool> bits;
  for (const Monomial& m : enumerate_k_monomials(gamma, k, Tail::Finite, budget))
    bits.push_back(naive_monomial_member(m, w));
  return bits;
}

bool finite_monomial_included(const Monomial& n, const Monomial& m, const Alphabet& gamma) {
  // NFA of a monomial: state j = inside block j; j → j on blocks[j], j → j+1 on markers[j].
  auto post = [](const Monomial& mono, std::uint64_t states, char c) {
    std::uint64_t out = 0;
    for (std::size_t j = 0; j < mono.blocks.size(); ++j) {
      if (!((states >> j) & 1u)) continue;
      if (mono.blocks[j].contains(c)) out |= std::uint64_t{1} << j;
      if (j < mono.markers.size() && mono.markers[j] == c) out |= std::uint64_t{1} << (j + 1);
    }
    return out;
  };
  if (n.blocks.size() > 63 || m.blocks.size() > 63)
    throw Error(ErrorCode::BudgetExceeded, "monomial degree too large for the inclusion check");
  const std::uint64_t n_final = std::uint64_t{1} << n.markers.size();
  const std::uint64_t m_final = std::uint64_t{1} << m.markers.size();
  std::set<std::pair<std::uint64_t, std::uint64_t>> seen{{1, 1}};
  std::vector<std::pair<std::uint64_t, std::uint64_t>> todo{{1, 1}};
  while (!todo.empty()) {
    auto [sn, sm] = todo.back();
    todo.pop_back();
    if ((sn & n_final) && !(sm & m_final)) return false;
    for (char c : gamma.letters()) {
      std::pair<std::uint64_t, std::uint64_t> next{post(n, sn, c), post(m, sm, c)};
      if (next.first == 0) continue;
      if (seen.insert(next).second) todo.push_back(next);
    }
  }
  return true;
}

// --- syntactic congruence by definition ----------------------------------------------------

std::vector<std::size_t> naive_syntactic_classes(const RecognizedLanguage& lang) {
  const FiniteMonoid& m = lang.monoid();
  const std::size_t n = m.size();
  auto idem = [&](Element x) {
    Element p = x;
    while (m.mul(p, p) != p) p = m.mul(p, x);
    return p;
  };
  auto acc_loop = [&](Element pre, Element z) {  // pre · z^ω
    const Element e = idem(z);
    return lang.accepts(m.mul(pre, e), e);
  };
  auto equivalent = [&](Element s, Element t) {
    for (Element x = 0; x < n; ++x)
      for (Element y = 0; y < n; ++y) {
        const Element xsy = m.mul(m.mul(x, s), y), xty = m.mul(m.mul(x, t), y);
        for (Element z = 0; z < n; ++z)
          if (acc_loop(xsy, z) != acc_loop(xty, z)) return false;
        if (acc_loop(x, m.mul(s, y)) != acc_loop(x, m.mul(t, y))) return false;
      }
    return true;
  };
  std::vector<std::size_t> cls(n, n);
  std::size_t next = 0;
  for (Element s = 0; s < n; ++s) {
    if (cls[s] != n) continue;
    cls[s] = next;
    for (Element t = s + 1; t < n; ++t)
      if (cls[t] == n && equivalent(s, t)) cls[t] = next;
    ++next;
  }
  return cls;
}

}  // namespace omegafrag::oracle
