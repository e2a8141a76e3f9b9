#include "omegafrag/algebra.hpp"

#include <algorithm>
#include <map>

namespace omegafrag {

Order::Order(std::size_t n) : n_(n), rel_(n * n, 0) {
  for (std::size_t i = 0; i < n; ++i) rel_[i * n + i] = 1;
}

// --- FiniteMonoid ------------------------------------------------------------

FiniteMonoid::FiniteMonoid(std::vector<std::string> names, std::vector<Element> table, Element identity,
                           std::optional<Order> order)
    : names_(std::move(names)), table_(std::move(table)), identity_(identity) {
  const std::size_t n = names_.size();
  if (n == 0) throw Error(ErrorCode::InvalidInput, "monoid has no elements");
  if (table_.size() != n * n) throw Error(ErrorCode::InvalidInput, "multiplication table has the wrong shape");
  for (Element v : table_)
    if (v >= n) throw Error(ErrorCode::InvalidInput, "table entry out of range");
  if (identity_ >= n) throw Error(ErrorCode::InvalidInput, "identity out of range");
  check_identity();
  for (std::size_t a = 0; a < n; ++a)
    for (std::size_t b = 0; b < n; ++b)
      for (std::size_t c = 0; c < n; ++c)
        if (mul(mul(a, b), c) != mul(a, mul(b, c)))
          throw Error(ErrorCode::InvalidInput,
                      "not associative: (" + names_[a] + "·" + names_[b] + ")·" + names_[c]);
  if (order) set_order(std::move(*order));
}

FiniteMonoid FiniteMonoid::trusted(std::vector<std::string> names, std::vector<Element> table, Element identity) {
  FiniteMonoid m;
  m.names_ = std::move(names);
  m.table_ = std::move(table);
  m.identity_ = identity;
  return m;
}

void FiniteMonoid::check_identity() const {
  for (Element a = 0; a < size(); ++a)
    if (mul(identity_, a) != a || mul(a, identity_) != a)
      throw Error(ErrorCode::InvalidInput, names_[identity_] + " is not an identity");
}

void FiniteMonoid::set_order(Order order) {
  const std::size_t n = size();
  if (order.size() != n) throw Error(ErrorCode::InvalidInput, "order has the wrong size");
  for (Element a = 0; a < n; ++a) {
    if (!order.leq(a, a)) throw Error(ErrorCode::InvalidInput, "order is not reflexive");
    for (Element b = 0; b < n; ++b) {
      if (!order.leq(a, b)) continue;
      if (a != b && order.leq(b, a)) throw Error(ErrorCode::InvalidInput, "order is not antisymmetric");
      for (Element c = 0; c < n; ++c) {
        if (order.leq(b, c) && !order.leq(a, c)) throw Error(ErrorCode::InvalidInput, "order is not transitive");
        // s ≤ t implies sc ≤ tc and cs ≤ ct; together with transitivity this gives full compatibility
        if (!order.leq(mul(a, c), mul(b, c)) || !order.leq(mul(c, a), mul(c, b)))
          throw Error(ErrorCode::InvalidInput, "order is not compatible with the multiplication");
      }
    }
  }
  order_ = std::move(order);
}

std::optional<Element> FiniteMonoid::find(std::string_view name) const {
  for (Element i = 0; i < size(); ++i)
    if (names_[i] == name) return i;
  return std::nullopt;
}

std::vector<Element> FiniteMonoid::idempotents() const {
  std::vector<Element> out;
  for (Element e = 0; e < size(); ++e)
    if (is_idempotent(e)) out.push_back(e);
  return out;
}

Element FiniteMonoid::idempotent_power(Element x) const {
  Element p = x;
  for (std::size_t i = 0; i <= size(); ++i) {
    if (is_idempotent(p)) return p;
    p = mul(p, x);
  }
  throw Error(ErrorCode::InvalidInput, "no idempotent power found; table is not a finite monoid");
}

bool FiniteMonoid::green_R_equivalent(Element s, Element t) const {
  std::vector<char> sm(size(), 0), tm(size(), 0);
  for (Element x = 0; x < size(); ++x) {
    sm[mul(s, x)] = 1;
    tm[mul(t, x)] = 1;
  }
  return sm == tm;
}

// --- Hom -----------------------------------------------------------------------

Hom::Hom(Alphabet alphabet, std::shared_ptr<const FiniteMonoid> monoid, const std::vector<Element>& letter_images)
    : alphabet_(std::move(alphabet)), monoid_(std::move(monoid)) {
  if (!monoid_) throw Error(ErrorCode::InvalidInput, "homomorphism without a monoid");
  if (letter_images.size() != alphabet_.letters().size())
    throw Error(ErrorCode::InvalidInput, "one generator image per letter is required");
  images_.fill(monoid_->identity());
  for (std::size_t i = 0; i < letter_images.size(); ++i) {
    if (letter_images[i] >= monoid_->size()) throw Error(ErrorCode::InvalidInput, "generator image out of range");
    images_[static_cast<std::size_t>(alphabet_.letters()[i] - 'a')] = letter_images[i];
  }
}

Element Hom::image(Letter c) const {
  if (!alphabet_.contains(c)) throw Error(ErrorCode::InvalidInput, std::string("letter '") + c + "' not in alphabet");
  return images_[static_cast<std::size_t>(c - 'a')];
}

std::vector<Element> Hom::generator_images() const {
  std::vector<Element> out;
  for (char c : alphabet_.letters()) out.push_back(image(c));
  return out;
}

Element Hom::eval(std::string_view w) const {
  Element m = monoid_->identity();
  for (char c : w) m = monoid_->mul(m, image(c));
  return m;
}

// --- linked pairs and recognition -----------------------------------------------

std::vector<LinkedPair> linked_pairs(const FiniteMonoid& m) {
  std::vector<LinkedPair> out;
  const auto idem = m.idempotents();
  for (Element s = 0; s < m.size(); ++s)
    for (Element e : idem)
      if (m.mul(s, e) == s) out.push_back({s, e});
  return out;
}

RecognizedLanguage::RecognizedLanguage(Hom hom, const std::vector<LinkedPair>& accepted)
    : hom_(std::move(hom)), accepted_(hom_.monoid().size() * hom_.monoid().size(), 0) {
  const FiniteMonoid& m = hom_.monoid();
  for (const LinkedPair& p : accepted) {
    if (p.s >= m.size() || p.e >= m.size()) throw Error(ErrorCode::InvalidInput, "accepted pair out of range");
    if (!m.is_idempotent(p.e) || m.mul(p.s, p.e) != p.s)
      throw Error(ErrorCode::InvalidInput, "(" + m.name(p.s) + "," + m.name(p.e) + ") is not a linked pair");
    accepted_[p.s * m.size() + p.e] = 1;
  }
}

std::vector<LinkedPair> RecognizedLanguage::accepted_pairs() const {
  std::vector<LinkedPair> out;
  for (const LinkedPair& p : linked_pairs(monoid()))
    if (accepts(p)) out.push_back(p);
  return out;
}

bool up_membership(const RecognizedLanguage& lang, const UPWord& a) {
  const FiniteMonoid& m = lang.monoid();
  const Element u = lang.hom().eval(a.prefix);
  if (a.finite()) return lang.accepts(u, m.identity());
  const Element e = m.idempotent_power(lang.hom().eval(a.loop));
  return lang.accepts(m.mul(u, e), e);
}

// --- alphabetic image ---------------------------------------------------------------

std::optional<Word> AlphImage::shortest_word(Element m, LetterSet c) const {
  auto it = index_.find(pack(m, c));
  if (it == index_.end()) return std::nullopt;
  Word w;
  for (std::int64_t i = static_cast<std::int64_t>(it->second); nodes_[static_cast<std::size_t>(i)].parent >= 0;
       i = nodes_[static_cast<std::size_t>(i)].parent)
    w.push_back(nodes_[static_cast<std::size_t>(i)].via);
  std::reverse(w.begin(), w.end());
  return w;
}

std::vector<std::pair<Element, LetterSet>> AlphImage::entries() const {
  std::vector<std::pair<Element, LetterSet>> out;
  for (const Node& n : nodes_) out.emplace_back(n.m, n.c);
  return out;
}

AlphImage alph_image(const Hom& h, const Budget& budget) {
  const std::size_t bound = h.monoid().size() << h.alphabet().size();
  if (!budget.force && bound > budget.max_elements * std::size_t{1024})
    throw Error(ErrorCode::BudgetExceeded, "alphabetic image too large");
  AlphImage img;
  const FiniteMonoid& m = h.monoid();
  img.nodes_.push_back({m.identity(), LetterSet{}, -1, 0});
  img.index_.emplace(AlphImage::pack(m.identity(), LetterSet{}), 0);
  for (std::size_t i = 0; i < img.nodes_.size(); ++i) {
    for (char a : h.alphabet().letters()) {
      const AlphImage::Node cur = img.nodes_[i];
      const Element next = m.mul(cur.m, h.image(a));
      const LetterSet c = cur.c | LetterSet::single(a);
      if (img.index_.try_emplace(AlphImage::pack(next, c), img.nodes_.size()).second)
        img.nodes_.push_back({next, c, static_cast<std::int64_t>(i), a});
    }
  }
  return img;
}

std::vector<char> submonoid_image(const Hom& h, LetterSet c) {
  const FiniteMonoid& m = h.monoid();
  std::vector<char> in(m.size(), 0);
  std::vector<Element> queue{m.identity()};
  in[m.identity()] = 1;
  for (std::size_t i = 0; i < queue.size(); ++i) {
    for (char a : h.alphabet().letters()) {
      if (!c.contains(a)) continue;
      const Element next = m.mul(queue[i], h.image(a));
      if (!in[next]) {
        in[next] = 1;
        queue.push_back(next);
      }
    }
  }
  return in;
}

std::vector<char> coset(const Hom& h, Element s, const std::vector<char>& submonoid) {
  const FiniteMonoid& m = h.monoid();
  std::vector<char> out(m.size(), 0);
  for (Element x = 0; x < m.size(); ++x)
    if (submonoid[x]) out[m.mul(s, x)] = 1;
  return out;
}

std::vector<std::optional<Word>> shortest_preimages(const Hom& h) {
  const FiniteMonoid& m = h.monoid();
  std::vector<std::optional<Word>> out(m.size());
  out[m.identity()] = Word{};
  std::vector<Element> queue{m.identity()};
  for (std::size_t i = 0; i < queue.size(); ++i) {
    for (char a : h.alphabet().letters()) {
      const Element next = m.mul(queue[i], h.image(a));
      if (!out[next]) {
        out[next] = *out[queue[i]] + a;
        queue.push_back(next);
      }
    }
  }
  return out;
}

// --- restriction and products -------------------------------------------------------

namespace {

std::string element_key(Element e) { return std::string(reinterpret_cast<const char*>(&e), sizeof e); }

std::vector<std::pair<Letter, Element>> letter_generators(const Hom& h) {
  std::vector<std::pair<Letter, Element>> gens;
  for (char a : h.alphabet().letters()) gens.emplace_back(a, h.image(a));
  return gens;
}

}  // namespace

RecognizedLanguage restrict_to_image(const RecognizedLanguage& lang, const Budget& budget) {
  const FiniteMonoid& src = lang.monoid();
  auto gen = generate<Element>(
      src.identity(), letter_generators(lang.hom()), element_key,
      [&](Element a, Element b) { return src.mul(a, b); }, budget.max_elements);
  std::vector<std::string> names;
  for (Element v : gen.values) names.push_back(src.name(v));
  const std::size_t n = gen.values.size();
  std::vector<Element> table(n * n);
  for (Element a = 0; a < n; ++a)
    for (Element b = 0; b < n; ++b) table[a * n + b] = gen.monoid.mul(a, b);
  auto monoid = std::make_shared<const FiniteMonoid>(FiniteMonoid::trusted(std::move(names), std::move(table), 0));
  Hom hom(lang.alphabet(), monoid, gen.generator_images);
  std::vector<LinkedPair> accepted;
  for (const LinkedPair& p : linked_pairs(*monoid))
    if (lang.accepts(gen.values[p.s], gen.values[p.e])) accepted.push_back(p);
  return RecognizedLanguage(std::move(hom), accepted);
}

ProductHom direct_product(const Hom& g, const Hom& h, const Budget& budget) {
  if (!(g.alphabet() == h.alphabet()))
    throw Error(ErrorCode::InvalidInput, "direct product needs a common alphabet");
  using Pair = std::pair<Element, Element>;
  std::vector<std::pair<Letter, Pair>> gens;
  for (char a : g.alphabet().letters()) gens.emplace_back(a, Pair{g.image(a), h.image(a)});
  auto gen = generate<Pair>(
      Pair{g.monoid().identity(), h.monoid().identity()}, gens,
      [](const Pair& p) { return element_key(p.first) + element_key(p.second); },
      [&](const Pair& x, const Pair& y) {
        return Pair{g.monoid().mul(x.first, y.first), h.monoid().mul(x.second, y.second)};
      },
      budget.max_elements);
  std::vector<std::string> names;
  for (const Pair& p : gen.values) names.push_back("(" + g.monoid().name(p.first) + "," + h.monoid().name(p.second) + ")");
  const std::size_t n = gen.values.size();
  std::vector<Element> table(n * n);
  for (Element a = 0; a < n; ++a)
    for (Element b = 0; b < n; ++b) table[a * n + b] = gen.monoid.mul(a, b);
  auto monoid = std::make_shared<const FiniteMonoid>(FiniteMonoid::trusted(std::move(names), std::move(table), 0));
  return ProductHom{Hom(g.alphabet(), monoid, gen.generator_images), std::move(gen.values)};
}

RecognizedLanguage combine(const RecognizedLanguage& l, const RecognizedLanguage& k, BoolOp op, const Budget& budget) {
  ProductHom prod = direct_product(l.hom(), k.hom(), budget);
  std::vector<LinkedPair> accepted;
  // A linked pair of the product projects to linked pairs of both factors.
  for (const LinkedPair& p : linked_pairs(prod.hom.monoid())) {
    const auto [s1, s2] = prod.components[p.s];
    const auto [e1, e2] = prod.components[p.e];
    const bool a = l.accepts(s1, e1), b = k.accepts(s2, e2);
    bool in = false;
    switch (op) {
      case BoolOp::Union: in = a || b; break;
      case BoolOp::Intersection: in = a && b; break;
      case BoolOp::Difference: in = a && !b; break;
      case BoolOp::SymmetricDifference: in = a != b; break;
    }
    if (in) accepted.push_back(p);
  }
  return RecognizedLanguage(prod.hom, accepted);
}

RecognizedLanguage complement(const RecognizedLanguage& lang, const Budget& budget) {
  // Over the image every linked pair is realized by some word, so flipping is exact.
  RecognizedLanguage base = restrict_to_image(lang, budget);
  std::vector<LinkedPair> accepted;
  for (const LinkedPair& p : linked_pairs(base.monoid()))
    if (!base.accepts(p)) accepted.push_back(p);
  return RecognizedLanguage(base.hom(), accepted);
}

// --- syntactic quotient ---------------------------------------------------------------------

namespace {

// Per element s: bits over idempotents e of [se ∈ accepted with e], then bits over x of
// [(x·idem(s), idem(s)) accepted].
std::vector<std::vector<char>> context_signatures(const RecognizedLanguage& lang) {
  const FiniteMonoid& m = lang.monoid();
  const auto idem = m.idempotents();
  std::vector<std::vector<char>> sig(m.size());
  for (Element s = 0; s < m.size(); ++s) {
    auto& v = sig[s];
    v.reserve(idem.size() + m.size());
    for (Element e : idem) v.push_back(lang.accepts(m.mul(s, e), e) ? 1 : 0);
    const Element es = m.idempotent_power(s);
    for (Element x = 0; x < m.size(); ++x) v.push_back(lang.accepts(m.mul(x, es), es) ? 1 : 0);
  }
  return sig;
}

bool subset(const std::vector<char>& a, const std::vector<char>& b) {
  for (std::size_t i = 0; i < a.size(); ++i)
    if (a[i] && !b[i]) return false;
  return true;
}

// Coarsest congruence inside the kernel of the initial labelling.
std::vector<std::size_t> refine_to_congruence(const FiniteMonoid& m, const std::vector<Element>& gens,
                                              std::vector<std::size_t> cls) {
  std::size_t classes = *std::max_element(cls.begin(), cls.end()) + 1;
  while (true) {
    std::map<std::vector<std::size_t>, std::size_t> ids;
    std::vector<std::size_t> next(m.size());
    for (Element s = 0; s < m.size(); ++s) {
      std::vector<std::size_t> key{cls[s]};
      for (Element g : gens) {
        key.push_back(cls[m.mul(s, g)]);
        key.push_back(cls[m.mul(g, s)]);
      }
      next[s] = ids.try_emplace(std::move(key), ids.size()).first->second;
    }
    if (ids.size() == classes) return next;
    classes = ids.size();
    cls = std::move(next);
  }
}

}  // namespace

SyntacticResult syntactic_quotient(const RecognizedLanguage& input, const Budget& budget) {
  const FiniteMonoid& src = input.monoid();
  // Work over the generated image so that quantifying over elements equals quantifying over words.
  auto gen = generate<Element>(
      src.identity(), letter_generators(input.hom()), element_key,
      [&](Element a, Element b) { return src.mul(a, b); }, budget.max_elements);
  const FiniteMonoid& m = gen.monoid;
  std::vector<LinkedPair> acc;
  for (const LinkedPair& p : linked_pairs(m))
    if (input.accepts(gen.values[p.s], gen.values[p.e])) acc.push_back(p);
  auto mptr = std::make_shared<const FiniteMonoid>(m);
  const RecognizedLanguage lang(Hom(input.alphabet(), mptr, gen.generator_images), acc);

  const auto sig = context_signatures(lang);
  std::map<std::vector<char>, std::size_t> sig_ids;
  std::vector<std::size_t> cls(m.size());
  for (Element s = 0; s < m.size(); ++s) cls[s] = sig_ids.try_emplace(sig[s], sig_ids.size()).first->second;
  cls = refine_to_congruence(m, gen.generator_images, std::move(cls));

  std::vector<Element> rep_of_class(m.size(), 0);
  for (Element s = m.size(); s-- > 0;) rep_of_class[cls[s]] = s;

  std::vector<std::pair<Letter, std::size_t>> qgens;
  for (std::size_t i = 0; i < gen.generator_images.size(); ++i)
    qgens.emplace_back(input.alphabet().letters()[i], cls[gen.generator_images[i]]);
  auto quotient = generate<std::size_t>(
      cls[m.identity()], qgens,
      [](std::size_t c) { return std::string(reinterpret_cast<const char*>(&c), sizeof c); },
      [&](std::size_t a, std::size_t b) { return cls[m.mul(rep_of_class[a], rep_of_class[b])]; },
      budget.max_elements);
  const FiniteMonoid& q = quotient.monoid;

  std::vector<Element> class_to_q(m.size(), 0);
  for (Element i = 0; i < q.size(); ++i) class_to_q[quotient.values[i]] = i;
  auto rep = [&](Element qe) { return rep_of_class[quotient.values[qe]]; };

  std::vector<LinkedPair> qacc;
  for (const LinkedPair& p : linked_pairs(q)) {
    const Element e = m.idempotent_power(rep(p.e));
    if (lang.accepts(m.mul(rep(p.s), e), e)) qacc.push_back(p);
  }

  // Syntactic order: greatest relation inside signature inclusion that is stable under
  // multiplication by generators on both sides.
  auto qmono = std::make_shared<FiniteMonoid>(q);
  RecognizedLanguage qlang(Hom(input.alphabet(), qmono, quotient.generator_images), qacc);
  const auto qsig = context_signatures(qlang);
  const std::size_t n = q.size();
  std::vector<char> rel(n * n, 0);
  for (Element a = 0; a < n; ++a)
    for (Element b = 0; b < n; ++b) rel[a * n + b] = subset(qsig[a], qsig[b]) ? 1 : 0;
  for (bool changed = true; changed;) {
    changed = false;
    for (Element a = 0; a < n; ++a) {
      for (Element b = 0; b < n; ++b) {
        if (!rel[a * n + b]) continue;
        for (Element g : quotient.generator_images) {
          if (!rel[q.mul(a, g) * n + q.mul(b, g)] || !rel[q.mul(g, a) * n + q.mul(g, b)]) {
            rel[a * n + b] = 0;
            changed = true;
            break;
          }
        }
      }
    }
  }
  Order order(n);
  for (Element a = 0; a < n; ++a)
    for (Element b = 0; b < n; ++b) order.set(a, b, rel[a * n + b] != 0);
  qmono->set_order(std::move(order));
  RecognizedLanguage result(Hom(input.alphabet(), qmono, quotient.generator_images), qacc);

  std::vector<Element> projection(src.size(), static_cast<Element>(src.size()));
  for (Element i = 0; i < m.size(); ++i) projection[gen.values[i]] = class_to_q[cls[i]];
  return SyntacticResult{std::move(result), std::move(projection)};
}

}  // namespace omegafrag
