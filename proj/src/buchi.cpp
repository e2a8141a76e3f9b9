#include "omegafrag/buchi.hpp"

#include <algorithm>
#include <numeric>

namespace omegafrag {

// --- parsing -----------------------------------------------------------------------

namespace {

RegexPtr node(Regex::Kind kind, std::vector<RegexPtr> children = {}, LetterSet letters = {}) {
  auto r = std::make_shared<Regex>();
  r->kind = kind;
  r->children = std::move(children);
  r->letters = letters;
  return r;
}

class Parser {
 public:
  explicit Parser(std::string_view text) : text_(text) {}

  RegexPtr parse() {
    RegexPtr r = expr();
    skip();
    if (pos_ != text_.size()) throw SyntaxError(pos_, std::string("unexpected '") + text_[pos_] + "'");
    return r;
  }

 private:
  void skip() {
    while (pos_ < text_.size() && text_[pos_] == ' ') ++pos_;
  }
  bool peek(char c) {
    skip();
    return pos_ < text_.size() && text_[pos_] == c;
  }
  bool starts_atom() {
    skip();
    if (pos_ >= text_.size()) return false;
    const char c = text_[pos_];
    return is_letter(c) || c == '1' || c == '[' || c == '(';
  }

  RegexPtr expr() {
    std::vector<RegexPtr> alts{concat()};
    while (peek('|')) {
      ++pos_;
      alts.push_back(concat());
    }
    return alts.size() == 1 ? alts.front() : node(Regex::Kind::Union, std::move(alts));
  }

  RegexPtr concat() {
    if (!starts_atom()) throw SyntaxError(pos_, "expected an expression");
    std::vector<RegexPtr> parts;
    while (starts_atom()) parts.push_back(power());
    return parts.size() == 1 ? parts.front() : node(Regex::Kind::Concat, std::move(parts));
  }

  RegexPtr power() {
    RegexPtr r = atom();
    while (true) {
      skip();
      const std::size_t at = pos_;
      if (peek('*')) {
        ++pos_;
        r = node(Regex::Kind::Star, {r});
      } else if (text_.substr(pos_, 4) == "^inf") {
        pos_ += 4;
        r = omega_like(Regex::Kind::Inf, r, at);
      } else if (text_.substr(pos_, 2) == "^w") {
        pos_ += 2;
        r = omega_like(Regex::Kind::Omega, r, at);
      } else if (peek('^')) {
        throw SyntaxError(pos_, "expected '^w' or '^inf'");
      } else {
        return r;
      }
    }
  }

  RegexPtr omega_like(Regex::Kind kind, RegexPtr r, std::size_t at) {
    if (nullable(r))
      throw Error(ErrorCode::NullableOmega,
                  "infinite power of an expression containing the empty word at position " + std::to_string(at));
    return node(kind, {std::move(r)});
  }

  RegexPtr atom() {
    skip();
    const char c = text_[pos_];
    if (c == '1') {
      ++pos_;
      return node(Regex::Kind::Epsilon);
    }
    if (is_letter(c)) {
      ++pos_;
      return node(Regex::Kind::Letters, {}, LetterSet::single(c));
    }
    if (c == '[') {
      const std::size_t open = pos_++;
      LetterSet set;
      while (pos_ < text_.size() && text_[pos_] != ']') {
        if (!is_letter(text_[pos_])) throw SyntaxError(pos_, "expected a letter in class");
        set |= LetterSet::single(text_[pos_++]);
      }
      if (pos_ >= text_.size()) throw SyntaxError(open, "unterminated class");
      if (set.empty()) throw SyntaxError(open, "empty class");
      ++pos_;
      return node(Regex::Kind::Letters, {}, set);
    }
    // '('
    ++pos_;
    RegexPtr r = expr();
    if (!peek(')')) throw SyntaxError(pos_, "expected ')'");
    ++pos_;
    return r;
  }

  std::string_view text_;
  std::size_t pos_ = 0;
};

}  // namespace

RegexPtr parse_regex(std::string_view text) { return Parser(text).parse(); }

bool nullable(const RegexPtr& r) {
  switch (r->kind) {
    case Regex::Kind::Epsilon:
    case Regex::Kind::Star:
    case Regex::Kind::Inf: return true;
    case Regex::Kind::Letters:
    case Regex::Kind::Omega: return false;
    case Regex::Kind::Concat:
      return std::all_of(r->children.begin(), r->children.end(), [](const RegexPtr& c) { return nullable(c); });
    case Regex::Kind::Union:
      return std::any_of(r->children.begin(), r->children.end(), [](const RegexPtr& c) { return nullable(c); });
  }
  return false;
}

std::string to_string(const RegexPtr& r) {
  auto wrap = [](const RegexPtr& c) {
    const bool atomic = c->kind == Regex::Kind::Epsilon || c->kind == Regex::Kind::Letters;
    return atomic ? to_string(c) : "(" + to_string(c) + ")";
  };
  switch (r->kind) {
    case Regex::Kind::Epsilon: return "1";
    case Regex::Kind::Letters: return r->letters.size() == 1 ? r->letters.letters() : r->letters.to_class();
    case Regex::Kind::Concat: {
      std::string out;
      for (const auto& c : r->children) out += c->kind == Regex::Kind::Union ? "(" + to_string(c) + ")" : to_string(c);
      return out;
    }
    case Regex::Kind::Union: {
      std::string out;
      for (std::size_t i = 0; i < r->children.size(); ++i) out += (i ? "|" : "") + to_string(r->children[i]);
      return out;
    }
    case Regex::Kind::Star: return wrap(r->children[0]) + "*";
    case Regex::Kind::Omega: return wrap(r->children[0]) + "^w";
    case Regex::Kind::Inf: return wrap(r->children[0]) + "^inf";
  }
  return {};
}

LetterSet regex_letters(const RegexPtr& r) {
  LetterSet s = r->letters;
  for (const auto& c : r->children) s |= regex_letters(c);
  return s;
}

std::size_t regex_size(const RegexPtr& r) {
  std::size_t n = 1;
  for (const auto& c : r->children) n += regex_size(c);
  return n;
}

// --- construction ------------------------------------------------------------------

namespace {

// An automaton fragment; fin marks finite acceptance, acc marks Büchi acceptance.
struct Part {
  std::size_t n = 0;
  std::vector<Transition> t;
  std::vector<State> init;
  std::vector<char> fin;
  std::vector<char> acc;

  State add_state() {
    fin.push_back(0);
    acc.push_back(0);
    return static_cast<State>(n++);
  }
  bool accepts_empty() const {
    return std::any_of(init.begin(), init.end(), [&](State s) { return fin[s] != 0; });
  }
  // Copies other's states, returns the offset of the copy.
  State absorb(const Part& other) {
    const auto off = static_cast<State>(n);
    for (std::size_t i = 0; i < other.n; ++i) {
      fin.push_back(other.fin[i]);
      acc.push_back(other.acc[i]);
    }
    n += other.n;
    for (const Transition& tr : other.t) t.push_back({tr.from + off, tr.letter, tr.to + off});
    return off;
  }
};

Part disjoint(const Part& x, const Part& y) {
  Part out = x;
  const State off = out.absorb(y);
  for (State i : y.init) out.init.push_back(i + off);
  return out;
}

// Adds a jump to every init state of the target alongside each transition entering a
// final state of the source; src_final is indexed in out's numbering.
void link_finals(Part& out, const std::vector<Transition>& src, const std::vector<char>& src_final,
                 const std::vector<State>& targets) {
  for (const Transition& tr : src)
    if (src_final[tr.to])
      for (State i : targets) out.t.push_back({tr.from, tr.letter, i});
}

// F(x)·F(y)
Part concat_finite(const Part& x, const Part& y) {
  Part out = x;
  std::fill(out.fin.begin(), out.fin.end(), 0);
  const State off = out.absorb(y);
  std::vector<State> yinit;
  for (State i : y.init) yinit.push_back(i + off);
  link_finals(out, x.t, x.fin, yinit);
  if (x.accepts_empty()) out.init.insert(out.init.end(), yinit.begin(), yinit.end());
  if (y.accepts_empty())
    for (std::size_t i = 0; i < x.n; ++i) out.fin[i] = x.fin[i];
  return out;
}

Part star_finite(const Part& x) {
  Part out = x;
  const std::vector<Transition> orig = x.t;
  link_finals(out, orig, x.fin, x.init);
  const State z = out.add_state();
  out.fin[z] = 1;
  out.init.push_back(z);
  return out;
}

// F(x)·I(y)
Part prefix_infinite(const Part& x, const Part& y) {
  Part out = x;
  std::fill(out.fin.begin(), out.fin.end(), 0);
  const State off = out.absorb(y);
  std::vector<State> yinit;
  for (State i : y.init) yinit.push_back(i + off);
  link_finals(out, x.t, x.fin, yinit);
  if (x.accepts_empty()) out.init.insert(out.init.end(), yinit.begin(), yinit.end());
  return out;
}

// F(x)^ω for a language without the empty word.
Part omega_finite(const Part& x) {
  Part out;
  const State z = out.add_state();
  out.acc[z] = 1;
  out.init = {z};
  const State off = out.absorb(x);
  std::fill(out.fin.begin(), out.fin.end(), 0);
  std::vector<char> is_init(x.n, 0);
  for (State i : x.init) is_init[i] = 1;
  std::vector<Transition> all;
  for (const Transition& tr : x.t) {
    all.push_back({tr.from + off, tr.letter, tr.to + off});
    if (is_init[tr.from]) all.push_back({z, tr.letter, tr.to + off});
  }
  std::vector<char> final_shifted(out.n, 0);
  for (std::size_t i = 0; i < x.n; ++i) final_shifted[i + off] = x.fin[i];
  out.t = all;
  for (const Transition& tr : all)
    if (final_shifted[tr.to]) out.t.push_back({tr.from, tr.letter, z});
  return out;
}

Part letters_part(LetterSet set) {
  Part p;
  const State a = p.add_state(), b = p.add_state();
  p.init = {a};
  p.fin[b] = 1;
  for (char c : set.letters()) p.t.push_back({a, c, b});
  return p;
}

struct Parts {
  Part finite;
  Part infinite;
};

Parts build(const RegexPtr& r) {
  switch (r->kind) {
    case Regex::Kind::Epsilon: {
      Parts p;
      const State s = p.finite.add_state();
      p.finite.init = {s};
      p.finite.fin[s] = 1;
      return p;
    }
    case Regex::Kind::Letters: return Parts{letters_part(r->letters), {}};
    case Regex::Kind::Union: {
      Parts acc = build(r->children[0]);
      for (std::size_t i = 1; i < r->children.size(); ++i) {
        Parts next = build(r->children[i]);
        acc.finite = disjoint(acc.finite, next.finite);
        acc.infinite = disjoint(acc.infinite, next.infinite);
      }
      return acc;
    }
    case Regex::Kind::Concat: {
      Parts acc = build(r->children[0]);
      for (std::size_t i = 1; i < r->children.size(); ++i) {
        Parts next = build(r->children[i]);
        // I(xy) = I(x) ∪ F(x)·I(y)
        acc.infinite = disjoint(acc.infinite, prefix_infinite(acc.finite, next.infinite));
        acc.finite = concat_finite(acc.finite, next.finite);
      }
      return acc;
    }
    case Regex::Kind::Star: {
      Parts x = build(r->children[0]);
      Part fs = star_finite(x.finite);
      return Parts{fs, prefix_infinite(fs, x.infinite)};
    }
    case Regex::Kind::Omega:
    case Regex::Kind::Inf: {
      // I(x^ω) = F(x)^ω ∪ F(x)*·I(x); x^inf adds the finite part F(x)*.
      Parts x = build(r->children[0]);
      Part fs = star_finite(x.finite);
      Part inf = disjoint(omega_finite(x.finite), prefix_infinite(fs, x.infinite));
      return Parts{r->kind == Regex::Kind::Inf ? fs : Part{}, inf};
    }
  }
  return {};
}

}  // namespace

Buchi to_automaton(const RegexPtr& r, std::optional<Alphabet> alphabet) {
  const LetterSet used = regex_letters(r);
  Alphabet gamma = alphabet ? *alphabet : Alphabet(used);
  if (!used.subset_of(gamma.set())) throw Error(ErrorCode::InvalidInput, "expression uses letters outside the alphabet");
  Parts parts = build(r);
  Part all = disjoint(parts.finite, parts.infinite);
  Buchi a;
  a.alphabet = gamma;
  a.num_states = all.n;
  a.transitions = std::move(all.t);
  a.initial = std::move(all.init);
  a.finite_accepting = std::move(all.fin);
  a.buchi_accepting = std::move(all.acc);
  return trim(a);
}

// --- automaton utilities --------------------------------------------------------------

Buchi::Mode Buchi::mode() const {
  const bool fin = std::any_of(finite_accepting.begin(), finite_accepting.end(), [](char c) { return c != 0; });
  const bool inf = std::any_of(buchi_accepting.begin(), buchi_accepting.end(), [](char c) { return c != 0; });
  if (fin && !inf) return Mode::Finite;
  if (inf && !fin) return Mode::Infinite;
  return Mode::Mixed;
}

bool Buchi::deterministic() const {
  if (initial.size() > 1) return false;
  std::vector<Transition> t = transitions;
  std::sort(t.begin(), t.end());
  for (std::size_t i = 1; i < t.size(); ++i)
    if (t[i].from == t[i - 1].from && t[i].letter == t[i - 1].letter) return false;
  return true;
}

void Buchi::validate() const {
  if (initial.empty()) throw Error(ErrorCode::InvalidInput, "automaton has no initial state");
  if (buchi_accepting.size() != num_states || finite_accepting.size() != num_states)
    throw Error(ErrorCode::InvalidInput, "acceptance vectors do not match the state count");
  for (State s : initial)
    if (s >= num_states) throw Error(ErrorCode::InvalidInput, "initial state out of range");
  for (const Transition& t : transitions) {
    if (t.from >= num_states || t.to >= num_states) throw Error(ErrorCode::InvalidInput, "transition state out of range");
    if (!alphabet.contains(t.letter))
      throw Error(ErrorCode::InvalidInput, std::string("transition letter '") + t.letter + "' not in alphabet");
  }
}

Buchi trim(const Buchi& a) {
  const std::size_t n = a.num_states;
  std::vector<std::vector<State>> fwd(n), bwd(n);
  for (const Transition& t : a.transitions) {
    fwd[t.from].push_back(t.to);
    bwd[t.to].push_back(t.from);
  }
  auto closure = [&](std::vector<State> seeds, const std::vector<std::vector<State>>& adj) {
    std::vector<char> seen(n, 0);
    for (State s : seeds) seen[s] = 1;
    while (!seeds.empty()) {
      State s = seeds.back();
      seeds.pop_back();
      for (State t : adj[s])
        if (!seen[t]) {
          seen[t] = 1;
          seeds.push_back(t);
        }
    }
    return seen;
  };
  const std::vector<char> reach = closure(a.initial, fwd);
  // Good targets: finite-accepting states, and Büchi states on a cycle.
  std::vector<State> good;
  for (State s = 0; s < n; ++s) {
    if (a.finite_accepting[s]) {
      good.push_back(s);
    } else if (a.buchi_accepting[s]) {
      const std::vector<char> from_s = closure(std::vector<State>(fwd[s].begin(), fwd[s].end()), fwd);
      if (from_s[s]) good.push_back(s);
    }
  }
  const std::vector<char> productive = closure(good, bwd);

  std::vector<State> remap(n, static_cast<State>(-1));
  Buchi out;
  out.alphabet = a.alphabet;
  for (State s = 0; s < n; ++s) {
    if (reach[s] && productive[s]) {
      remap[s] = static_cast<State>(out.num_states++);
      out.buchi_accepting.push_back(a.buchi_accepting[s]);
      out.finite_accepting.push_back(a.finite_accepting[s]);
    }
  }
  for (State s : a.initial)
    if (remap[s] != static_cast<State>(-1)) out.initial.push_back(remap[s]);
  std::sort(out.initial.begin(), out.initial.end());
  out.initial.erase(std::unique(out.initial.begin(), out.initial.end()), out.initial.end());
  for (const Transition& t : a.transitions)
    if (remap[t.from] != static_cast<State>(-1) && remap[t.to] != static_cast<State>(-1))
      out.transitions.push_back({remap[t.from], t.letter, remap[t.to]});
  std::sort(out.transitions.begin(), out.transitions.end());
  out.transitions.erase(std::unique(out.transitions.begin(), out.transitions.end()), out.transitions.end());
  if (out.initial.empty()) {
    // Empty language: keep one rejecting initial state.
    out.num_states = 1;
    out.initial = {0};
    out.buchi_accepting = {0};
    out.finite_accepting = {0};
    out.transitions.clear();
  }
  return out;
}

bool lasso_accepts(const Buchi& a, const UPWord& w) {
  const std::size_t n = a.num_states;
  std::vector<std::vector<std::pair<Letter, State>>> succ(n);
  for (const Transition& t : a.transitions) succ[t.from].emplace_back(t.letter, t.to);

  std::vector<char> cur(n, 0);
  for (State s : a.initial) cur[s] = 1;
  auto advance = [&](std::vector<char>& set, Letter c) {
    std::vector<char> next(n, 0);
    for (State s = 0; s < n; ++s)
      if (set[s])
        for (auto [l, t] : succ[s])
          if (l == c) next[t] = 1;
    set = std::move(next);
  };
  for (char c : w.prefix) advance(cur, c);
  if (w.finite()) {
    for (State s = 0; s < n; ++s)
      if (cur[s] && a.finite_accepting[s]) return true;
    return false;
  }

  // One v-step from p: reachable (state, visited a Büchi state) pairs, start and end included.
  std::vector<std::vector<char>> step(n, std::vector<char>(2 * n, 0));
  for (State p = 0; p < n; ++p) {
    std::vector<char> set(2 * n, 0);
    set[2 * p + (a.buchi_accepting[p] ? 1 : 0)] = 1;
    for (char c : w.loop) {
      std::vector<char> next(2 * n, 0);
      for (State s = 0; s < n; ++s)
        for (int f = 0; f < 2; ++f)
          if (set[2 * s + f])
            for (auto [l, t] : succ[s])
              if (l == c) next[2 * t + ((f || a.buchi_accepting[t]) ? 1 : 0)] = 1;
      set = std::move(next);
    }
    step[p] = std::move(set);
  }
  auto reach_from = [&](std::vector<State> seeds) {
    std::vector<char> seen(n, 0);
    for (State s : seeds) seen[s] = 1;
    while (!seeds.empty()) {
      State s = seeds.back();
      seeds.pop_back();
      for (State t = 0; t < n; ++t)
        if ((step[s][2 * t] || step[s][2 * t + 1]) && !seen[t]) {
          seen[t] = 1;
          seeds.push_back(t);
        }
    }
    return seen;
  };
  std::vector<State> start;
  for (State s = 0; s < n; ++s)
    if (cur[s]) start.push_back(s);
  const std::vector<char> reach = reach_from(start);
  // Accept iff some reachable q lies on a v-step cycle containing an accepting step x → y.
  for (State x = 0; x < n; ++x) {
    if (!reach[x]) continue;
    for (State y = 0; y < n; ++y) {
      if (!step[x][2 * y + 1]) continue;
      if (reach_from({y})[x]) return true;
    }
  }
  return false;
}

// --- transition monoid ---------------------------------------------------------------

std::string TransMatrix::key() const {
  std::string k(1, unit ? 'u' : 'm');
  k.append(cells.begin(), cells.end());
  return k;
}

TransMatrix letter_matrix(const Buchi& a, Letter c) {
  TransMatrix m{a.num_states, false, std::vector<std::uint8_t>(a.num_states * a.num_states, 0)};
  for (const Transition& t : a.transitions) {
    if (t.letter != c) continue;
    const std::uint8_t v = (a.buchi_accepting[t.from] || a.buchi_accepting[t.to]) ? 2 : 1;
    auto& cell = m.cells[t.from * m.n + t.to];
    cell = std::max(cell, v);
  }
  return m;
}

TransMatrix operator*(const TransMatrix& x, const TransMatrix& y) {
  if (x.unit) return y;
  if (y.unit) return x;
  const std::size_t n = x.n;
  TransMatrix out{n, false, std::vector<std::uint8_t>(n * n, 0)};
  for (std::size_t p = 0; p < n; ++p)
    for (std::size_t r = 0; r < n; ++r) {
      const std::uint8_t a = x.cells[p * n + r];
      if (!a) continue;
      for (std::size_t q = 0; q < n; ++q) {
        const std::uint8_t b = y.cells[r * n + q];
        if (!b) continue;
        auto& cell = out.cells[p * n + q];
        cell = std::max(cell, std::max(a, b));
      }
    }
  return out;
}

TransitionMonoid transition_monoid(const Buchi& a, const Budget& budget) {
  a.validate();
  std::vector<std::pair<Letter, TransMatrix>> gens;
  for (char c : a.alphabet.letters()) gens.emplace_back(c, letter_matrix(a, c));
  auto gen = generate<TransMatrix>(
      TransMatrix::identity(a.num_states), gens, [](const TransMatrix& m) { return m.key(); },
      [](const TransMatrix& x, const TransMatrix& y) { return x * y; }, budget.max_elements);
  auto monoid = std::make_shared<const FiniteMonoid>(gen.monoid);
  Hom hom(a.alphabet, monoid, gen.generator_images);
  return TransitionMonoid{std::move(gen), std::move(hom)};
}

RecognizedLanguage recognize(const Buchi& a, const Budget& budget) {
  TransitionMonoid tm = transition_monoid(a, budget);
  const FiniteMonoid& m = tm.hom.monoid();
  const auto& values = tm.generated.values;
  std::vector<LinkedPair> accepted;
  for (const LinkedPair& p : linked_pairs(m)) {
    const TransMatrix& s = values[p.s];
    const TransMatrix& e = values[p.e];
    bool ok = false;
    for (State i : a.initial) {
      for (State q = 0; q < a.num_states && !ok; ++q) {
        if (!s.at(i, q)) continue;
        ok = e.unit ? a.finite_accepting[q] != 0 : e.at(q, q) == 2;
      }
      if (ok) break;
    }
    if (ok) accepted.push_back(p);
  }
  return RecognizedLanguage(tm.hom, accepted);
}

}  // namespace omegafrag
