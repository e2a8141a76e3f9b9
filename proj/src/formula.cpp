#include "omegafrag/formula.hpp"

#include <algorithm>
#include <utility>

#include "omegafrag/error.hpp"

namespace omegafrag {

namespace fo {

namespace {
FormulaPtr make(Formula f) { return std::make_shared<const Formula>(std::move(f)); }
}  // namespace

FormulaPtr truth() { return make(Formula{}); }

FormulaPtr less(std::string x, std::string y, bool print_flipped) {
  Formula f;
  f.kind = Formula::Kind::Less;
  f.var = std::move(x);
  f.other = std::move(y);
  f.flipped = print_flipped;
  return make(std::move(f));
}

FormulaPtr letter_is(std::string x, Letter a) {
  Formula f;
  f.kind = Formula::Kind::LetterIs;
  f.var = std::move(x);
  f.letter = a;
  return make(std::move(f));
}

FormulaPtr letter_in(std::string x, LetterSet set) {
  Formula f;
  f.kind = Formula::Kind::LetterIn;
  f.var = std::move(x);
  f.letters = set;
  return make(std::move(f));
}

FormulaPtr negate(FormulaPtr g) {
  Formula f;
  f.kind = Formula::Kind::Not;
  f.children = {std::move(g)};
  return make(std::move(f));
}

FormulaPtr conj(std::vector<FormulaPtr> fs) {
  if (fs.empty()) return truth();
  if (fs.size() == 1) return fs.front();
  Formula f;
  f.kind = Formula::Kind::And;
  f.children = std::move(fs);
  return make(std::move(f));
}

FormulaPtr disj(std::vector<FormulaPtr> fs) {
  if (fs.size() == 1) return fs.front();
  Formula f;
  f.kind = Formula::Kind::Or;
  f.children = std::move(fs);
  return make(std::move(f));
}

FormulaPtr implies(FormulaPtr lhs, FormulaPtr rhs) {
  Formula f;
  f.kind = Formula::Kind::Implies;
  f.children = {std::move(lhs), std::move(rhs)};
  return make(std::move(f));
}

FormulaPtr exists(std::string x, FormulaPtr body) {
  Formula f;
  f.kind = Formula::Kind::Exists;
  f.var = std::move(x);
  f.children = {std::move(body)};
  return make(std::move(f));
}

FormulaPtr forall(std::string x, FormulaPtr body) {
  Formula f;
  f.kind = Formula::Kind::Forall;
  f.var = std::move(x);
  f.children = {std::move(body)};
  return make(std::move(f));
}

}  // namespace fo

namespace {

using Kind = Formula::Kind;

std::string show_var(const std::string& v) {
  static const char* const kSub[] = {"₀", "₁", "₂", "₃", "₄", "₅", "₆", "₇", "₈", "₉"};
  std::string out;
  for (char c : v) {
    if (c >= '0' && c <= '9')
      out += kSub[c - '0'];
    else
      out.push_back(c);
  }
  return out;
}

std::string show_set(LetterSet s) {
  if (s.empty()) return "∅";
  std::string out = "{";
  const std::string ls = s.letters();
  for (std::size_t i = 0; i < ls.size(); ++i) {
    if (i) out += ",";
    out.push_back(ls[i]);
  }
  return out + "}";
}

bool is_quantifier(const FormulaPtr& f) { return f->kind == Kind::Exists || f->kind == Kind::Forall; }

std::string print(const FormulaPtr& f);

std::string print_operand(const FormulaPtr& f) {
  switch (f->kind) {
    case Kind::Or:
    case Kind::Implies:
    case Kind::And:
    case Kind::Exists:
    case Kind::Forall: return "(" + print(f) + ")";
    default: return print(f);
  }
}

std::string print_join(const FormulaPtr& f, const char* op) {
  std::string out;
  for (std::size_t i = 0; i < f->children.size(); ++i) {
    if (i) out += op;
    const auto& c = f->children[i];
    // Conjunctions of plain comparisons read fine without parentheses.
    const bool bare = f->kind == Kind::And && c->kind == Kind::And;
    out += bare ? print(c) : print_operand(c);
  }
  return out;
}

std::string print(const FormulaPtr& f) {
  switch (f->kind) {
    case Kind::True: return "⊤";
    case Kind::Less:
      return f->flipped ? show_var(f->other) + " > " + show_var(f->var)
                        : show_var(f->var) + " < " + show_var(f->other);
    case Kind::LetterIs: return "λ(" + show_var(f->var) + ") = " + std::string(1, f->letter);
    case Kind::LetterIn: return "λ(" + show_var(f->var) + ") ∈ " + show_set(f->letters);
    case Kind::Not: return "¬" + print_operand(f->children[0]);
    case Kind::And: return print_join(f, " ∧ ");
    case Kind::Or: return print_join(f, " ∨ ");
    case Kind::Implies: return print(f->children[0]) + " ⇒ " + print_operand(f->children[1]);
    case Kind::Exists:
    case Kind::Forall: {
      std::string prefix;
      FormulaPtr cur = f;
      while (is_quantifier(cur)) {
        if (!prefix.empty()) prefix += " ";
        prefix += (cur->kind == Kind::Exists ? "∃" : "∀") + show_var(cur->var);
        cur = cur->children[0];
      }
      return prefix + ": " + print(cur);
    }
  }
  return {};
}

struct Assignment {
  std::vector<std::pair<std::string, std::size_t>> slots;

  std::size_t get(const std::string& v) const {
    for (auto it = slots.rbegin(); it != slots.rend(); ++it)
      if (it->first == v) return it->second;
    throw Error(ErrorCode::InvalidInput, "free variable " + v);
  }
};

bool eval(const FormulaPtr& f, std::string_view w, Assignment& env) {
  switch (f->kind) {
    case Kind::True: return true;
    case Kind::Less: return env.get(f->var) < env.get(f->other);
    case Kind::LetterIs: return w[env.get(f->var) - 1] == f->letter;
    case Kind::LetterIn: return f->letters.contains(w[env.get(f->var) - 1]);
    case Kind::Not: return !eval(f->children[0], w, env);
    case Kind::And:
      return std::all_of(f->children.begin(), f->children.end(),
                         [&](const FormulaPtr& c) { return eval(c, w, env); });
    case Kind::Or:
      return std::any_of(f->children.begin(), f->children.end(),
                         [&](const FormulaPtr& c) { return eval(c, w, env); });
    case Kind::Implies: return !eval(f->children[0], w, env) || eval(f->children[1], w, env);
    case Kind::Exists:
    case Kind::Forall: {
      const bool want = f->kind == Kind::Exists;
      bool result = !want;
      env.slots.emplace_back(f->var, 0);
      for (std::size_t pos = 1; pos <= w.size(); ++pos) {
        env.slots.back().second = pos;
        if (eval(f->children[0], w, env) == want) {
          result = want;
          break;
        }
      }
      env.slots.pop_back();
      return result;
    }
  }
  return false;
}

}  // namespace

std::string to_string(const FormulaPtr& f) { return print(f); }

Sigma2Formula::Sigma2Formula(FormulaPtr root) : root_(std::move(root)) {
  const Formula* cur = root_.get();
  while (cur->kind == Kind::Exists) {
    ++exists_;
    cur = cur->children[0].get();
  }
  while (cur->kind == Kind::Forall) {
    ++forall_;
    cur = cur->children[0].get();
  }
  // The matrix must be quantifier-free.
  std::vector<const Formula*> stack{cur};
  while (!stack.empty()) {
    const Formula* g = stack.back();
    stack.pop_back();
    if (g->kind == Kind::Exists || g->kind == Kind::Forall)
      throw Error(ErrorCode::InvalidInput, "formula is not in Σ₂ prenex form");
    for (const auto& c : g->children) stack.push_back(c.get());
  }
  depth_ = exists_ + forall_;
}

std::string Sigma2Formula::to_string() const { return print(root_); }

bool eval_fo_finite(const FormulaPtr& sentence, std::string_view w) {
  Assignment env;
  return eval(sentence, w, env);
}

}  // namespace omegafrag
