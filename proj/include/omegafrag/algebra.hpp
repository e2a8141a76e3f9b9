#pragma once

#include <array>
#include <cstdint>
#include <deque>
#include <memory>
#include <optional>
#include <string>
#include <string_view>
#include <unordered_map>
#include <utility>
#include <vector>

#include "omegafrag/error.hpp"
#include "omegafrag/words.hpp"

namespace omegafrag {

using Element = std::uint32_t;

/// Reflexive-transitive relation on monoid elements, stored densely.
class Order {
 public:
  explicit Order(std::size_t n);  // the identity order
  bool leq(Element a, Element b) const { return rel_[a * n_ + b] != 0; }
  void set(Element a, Element b, bool v = true) { rel_[a * n_ + b] = v ? 1 : 0; }
  std::size_t size() const noexcept { return n_; }
  bool operator==(const Order&) const = default;

 private:
  std::size_t n_;
  std::vector<char> rel_;
};

/// Explicit multiplication table. Elements are 0..size()-1.
class FiniteMonoid {
 public:
  /// Validates identity laws and associativity (and order compatibility when given).
  FiniteMonoid(std::vector<std::string> names, std::vector<Element> table, Element identity,
               std::optional<Order> order = std::nullopt);

  /// Skips the cubic associativity scan; callers have checked it already.
  static FiniteMonoid trusted(std::vector<std::string> names, std::vector<Element> table, Element identity);

  std::size_t size() const noexcept { return names_.size(); }
  Element identity() const noexcept { return identity_; }
  Element mul(Element a, Element b) const { return table_[a * size() + b]; }
  const std::string& name(Element e) const { return names_[e]; }
  const std::vector<std::string>& names() const noexcept { return names_; }
  std::optional<Element> find(std::string_view name) const;

  bool is_idempotent(Element e) const { return mul(e, e) == e; }
  std::vector<Element> idempotents() const;
  /// The unique idempotent among x, x², x³, …
  Element idempotent_power(Element x) const;
  /// sM = tM
  bool green_R_equivalent(Element s, Element t) const;

  const std::optional<Order>& order() const noexcept { return order_; }
  void set_order(Order order);

  bool operator==(const FiniteMonoid& o) const {
    return names_ == o.names_ && table_ == o.table_ && identity_ == o.identity_;
  }

 private:
  FiniteMonoid() = default;
  void check_identity() const;

  std::vector<std::string> names_;
  std::vector<Element> table_;
  Element identity_ = 0;
  std::optional<Order> order_;
};

/// Homomorphism Γ* → M given by the images of the letters.
class Hom {
 public:
  Hom(Alphabet alphabet, std::shared_ptr<const FiniteMonoid> monoid, const std::vector<Element>& letter_images);

  const Alphabet& alphabet() const noexcept { return alphabet_; }
  const FiniteMonoid& monoid() const noexcept { return *monoid_; }
  const std::shared_ptr<const FiniteMonoid>& monoid_ptr() const noexcept { return monoid_; }
  Element image(Letter c) const;
  /// Images in alphabet order.
  std::vector<Element> generator_images() const;
  Element eval(std::string_view w) const;

 private:
  Alphabet alphabet_;
  std::shared_ptr<const FiniteMonoid> monoid_;
  std::array<Element, kMaxLetters> images_{};
};

struct LinkedPair {
  Element s;
  Element e;
  auto operator<=>(const LinkedPair&) const = default;
};

/// All linked pairs (s, e): e² = e and se = s, ordered by (s, e).
std::vector<LinkedPair> linked_pairs(const FiniteMonoid& m);

/// L = ⋃ [s][e]^ω over the accepted linked pairs of hom.
class RecognizedLanguage {
 public:
  RecognizedLanguage(Hom hom, const std::vector<LinkedPair>& accepted);

  const Hom& hom() const noexcept { return hom_; }
  const FiniteMonoid& monoid() const noexcept { return hom_.monoid(); }
  const Alphabet& alphabet() const noexcept { return hom_.alphabet(); }
  bool accepts(Element s, Element e) const { return accepted_[s * monoid().size() + e] != 0; }
  bool accepts(LinkedPair p) const { return accepts(p.s, p.e); }
  std::vector<LinkedPair> accepted_pairs() const;

 private:
  Hom hom_;
  std::vector<char> accepted_;
};

bool up_membership(const RecognizedLanguage& lang, const UPWord& a);

// --- closure computations -------------------------------------------------

/// Submonoid generated by some values of an ambient associative structure.
/// Elements are numbered in breadth-first order from the identity, generators in the
/// given order, so representatives[i] is the shortlex-least word reaching element i.
template <class T>
struct Generated {
  std::vector<T> values;
  std::vector<Word> representatives;
  std::vector<Element> generator_images;
  FiniteMonoid monoid;
};

/// key(value) must be injective on values; mul must be associative.
template <class T, class KeyFn, class MulFn>
Generated<T> generate(const T& identity, const std::vector<std::pair<Letter, T>>& generators, KeyFn key, MulFn mul,
                      std::size_t cap);

/// (h(w), alph(w)) for all words w, with shortlex-least witnesses.
class AlphImage {
 public:
  bool contains(Element m, LetterSet c) const { return index_.count(pack(m, c)) != 0; }
  std::optional<Word> shortest_word(Element m, LetterSet c) const;
  /// Entries in discovery order (shortlex order of their least witnesses).
  std::vector<std::pair<Element, LetterSet>> entries() const;
  std::size_t size() const noexcept { return nodes_.size(); }

 private:
  friend AlphImage alph_image(const Hom& h, const Budget& budget);
  static std::uint64_t pack(Element m, LetterSet c) { return (std::uint64_t{m} << 32) | c.bits(); }

  struct Node {
    Element m;
    LetterSet c;
    std::int64_t parent;
    Letter via;
  };
  std::vector<Node> nodes_;
  std::unordered_map<std::uint64_t, std::size_t> index_;
};

AlphImage alph_image(const Hom& h, const Budget& budget = {});

/// h(C*) as a membership vector over the elements.
std::vector<char> submonoid_image(const Hom& h, LetterSet c);
/// s · h(C*)
std::vector<char> coset(const Hom& h, Element s, const std::vector<char>& submonoid);

/// Shortlex-least preimage of each element (nullopt if outside the image of h).
std::vector<std::optional<Word>> shortest_preimages(const Hom& h);

/// The same language over the submonoid generated by the letter images.
/// Element names are kept.
RecognizedLanguage restrict_to_image(const RecognizedLanguage& lang, const Budget& budget = {});

struct ProductHom {
  Hom hom;
  std::vector<std::pair<Element, Element>> components;  // per product element
};

/// w ↦ (g(w), h(w)), restricted to the generated submonoid.
ProductHom direct_product(const Hom& g, const Hom& h, const Budget& budget = {});

enum class BoolOp { Union, Intersection, Difference, SymmetricDifference };

/// Boolean combination of two languages over the product of their homomorphisms.
RecognizedLanguage combine(const RecognizedLanguage& l, const RecognizedLanguage& k, BoolOp op,
                           const Budget& budget = {});
RecognizedLanguage complement(const RecognizedLanguage& lang, const Budget& budget = {});

struct SyntacticResult {
  RecognizedLanguage language;      // over Synt(L), ordered by the syntactic order
  std::vector<Element> projection;  // element of the input monoid → class; unreachable elements map to size()
};

/// Syntactic homomorphism, order and accepted pairs of a recognized language.
SyntacticResult syntactic_quotient(const RecognizedLanguage& lang, const Budget& budget = {});

// --- template implementation -----------------------------------------------

template <class T, class KeyFn, class MulFn>
Generated<T> generate(const T& identity, const std::vector<std::pair<Letter, T>>& generators, KeyFn key, MulFn mul,
                      std::size_t cap) {
  std::vector<T> values{identity};
  std::vector<Word> reps{Word{}};
  std::vector<std::pair<Element, std::size_t>> parent{{0, 0}};
  std::unordered_map<std::string, Element> index{{key(identity), 0}};
  const std::size_t g = generators.size();
  std::vector<Element> right;  // right Cayley graph, row per element

  for (std::size_t i = 0; i < values.size(); ++i) {
    for (std::size_t j = 0; j < g; ++j) {
      T next = mul(values[i], generators[j].second);
      auto [it, fresh] = index.try_emplace(key(next), static_cast<Element>(values.size()));
      if (fresh) {
        if (values.size() >= cap)
          throw Error(ErrorCode::BudgetExceeded,
                      "monoid exceeds the element cap of " + std::to_string(cap) + " (set OMEGA_FRAG_BUDGET)");
        values.push_back(std::move(next));
        reps.push_back(reps[i] + generators[j].first);
        parent.emplace_back(static_cast<Element>(i), j);
      }
      right.push_back(it->second);
    }
  }

  const std::size_t n = values.size();
  std::vector<Element> table(n * n);
  for (std::size_t a = 0; a < n; ++a) {
    table[a * n] = static_cast<Element>(a);
    for (std::size_t b = 1; b < n; ++b) {
      const auto [p, letter] = parent[b];
      table[a * n + b] = right[table[a * n + p] * g + letter];
    }
  }
  std::vector<Element> gen_images;
  for (std::size_t j = 0; j < g; ++j) gen_images.push_back(right[0 * g + j]);
  // Light's test: the table is associative iff (x·g)·y = x·(g·y) for every generator g.
  for (Element gi : gen_images)
    for (std::size_t x = 0; x < n; ++x)
      for (std::size_t y = 0; y < n; ++y)
        if (table[table[x * n + gi] * n + y] != table[x * n + table[gi * n + y]])
          throw Error(ErrorCode::InvalidInput, "generated product is not associative");

  std::vector<std::string> names;
  for (const Word& w : reps) names.push_back(show_word(w));
  return Generated<T>{std::move(values), std::move(reps), std::move(gen_images),
                      FiniteMonoid::trusted(std::move(names), std::move(table), 0)};
}

}  // namespace omegafrag
