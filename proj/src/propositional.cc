#include "okn/propositional.h"

namespace okn {

using K = Formula::Kind;

int BooleanAbstraction::Add(const Formula& f) {
  const int root = Compile(f);
  roots_.push_back(root);
  return static_cast<int>(roots_.size()) - 1;
}

int BooleanAbstraction::LetterOf(const Formula& leaf) const {
  auto it = letter_index_.find(leaf);
  return it == letter_index_.end() ? -1 : it->second;
}

int BooleanAbstraction::Letter(const Formula& leaf) {
  auto [it, fresh] = letter_index_.try_emplace(leaf, static_cast<int>(letters_.size()));
  if (fresh) letters_.push_back(leaf);
  gates_.push_back({Gate::kLetter, it->second, 0});
  return static_cast<int>(gates_.size()) - 1;
}

int BooleanAbstraction::Compile(const Formula& f) {
  switch (f.kind()) {
    case K::kTrue:
    case K::kFalse:
      gates_.push_back({Gate::kConst, f.is(K::kTrue) ? 1 : 0, 0});
      return static_cast<int>(gates_.size()) - 1;
    case K::kNot: {
      const int a = Compile(f.arg());
      gates_.push_back({Gate::kNot, a, 0});
      return static_cast<int>(gates_.size()) - 1;
    }
    case K::kAnd:
    case K::kOr: {
      const int a = Compile(f.lhs());
      const int b = Compile(f.rhs());
      gates_.push_back({f.is(K::kAnd) ? Gate::kAnd : Gate::kOr, a, b});
      return static_cast<int>(gates_.size()) - 1;
    }
    case K::kAtom:
    case K::kKnow:
    case K::kAtMost:
    case K::kVal: return Letter(f);
    case K::kEq:
      if (f.terms()[0].is_name() && f.terms()[1].is_name()) {
        gates_.push_back({Gate::kConst, f.terms()[0] == f.terms()[1] ? 1 : 0, 0});
        return static_cast<int>(gates_.size()) - 1;
      }
      throw std::invalid_argument("propositional abstraction needs ground equality: " + ToString(f));
    default:
      throw std::invalid_argument("propositional abstraction needs a desugared, ground formula: " +
                                  ToString(f));
  }
}

bool BooleanAbstraction::Eval(int g, Assignment v) const {
  const Gate& x = gates_[g];
  switch (x.op) {
    case Gate::kConst: return x.a != 0;
    case Gate::kLetter: return (v >> x.a) & 1;
    case Gate::kNot: return !Eval(x.a, v);
    case Gate::kAnd: return Eval(x.a, v) && Eval(x.b, v);
    case Gate::kOr: return Eval(x.a, v) || Eval(x.b, v);
  }
  return false;
}

int BooleanAbstraction::EvalPartial(int g, Assignment v, Assignment known) const {
  const Gate& x = gates_[g];
  switch (x.op) {
    case Gate::kConst: return x.a != 0 ? 1 : 0;
    case Gate::kLetter:
      if (!((known >> x.a) & 1)) return -1;
      return static_cast<int>((v >> x.a) & 1);
    case Gate::kNot: {
      const int r = EvalPartial(x.a, v, known);
      return r < 0 ? -1 : 1 - r;
    }
    case Gate::kAnd: {
      const int l = EvalPartial(x.a, v, known);
      if (l == 0) return 0;
      const int r = EvalPartial(x.b, v, known);
      if (r == 0) return 0;
      return (l == 1 && r == 1) ? 1 : -1;
    }
    case Gate::kOr: {
      const int l = EvalPartial(x.a, v, known);
      if (l == 1) return 1;
      const int r = EvalPartial(x.b, v, known);
      if (r == 1) return 1;
      return (l == 0 && r == 0) ? 0 : -1;
    }
  }
  return -1;
}

bool BooleanAbstraction::Evaluate(int circuit, Assignment assignment) const {
  return Eval(roots_.at(circuit), assignment);
}

int BooleanAbstraction::EvaluatePartial(int circuit, Assignment assignment, Assignment known) const {
  return EvalPartial(roots_.at(circuit), assignment, known);
}

void BooleanAbstraction::CheckSize() const {
  if (letter_count() > kMaxLetters) {
    throw PropositionalLimitError("truth table over " + std::to_string(letter_count()) +
                                  " letters exceeds the limit of " + std::to_string(kMaxLetters));
  }
}

bool BooleanAbstraction::IsTautology(int circuit) const {
  CheckSize();
  const std::uint64_t rows = 1ull << letter_count();
  for (std::uint64_t v = 0; v < rows; ++v) {
    if (!Evaluate(circuit, static_cast<Assignment>(v))) return false;
  }
  return true;
}

bool BooleanAbstraction::IsSatisfiable(int circuit) const {
  CheckSize();
  const std::uint64_t rows = 1ull << letter_count();
  for (std::uint64_t v = 0; v < rows; ++v) {
    if (Evaluate(circuit, static_cast<Assignment>(v))) return true;
  }
  return false;
}

bool BooleanAbstraction::Entails(std::span<const int> premises, int conclusion) const {
  CheckSize();
  const std::uint64_t rows = 1ull << letter_count();
  for (std::uint64_t v = 0; v < rows; ++v) {
    const auto x = static_cast<Assignment>(v);
    bool all = true;
    for (int p : premises) {
      if (!Evaluate(p, x)) {
        all = false;
        break;
      }
    }
    if (all && !Evaluate(conclusion, x)) return false;
  }
  return true;
}

bool IsPropositionalTautology(const Formula& f) {
  BooleanAbstraction abs;
  return abs.IsTautology(abs.Add(Desugar(f)));
}

bool PropositionallyEntails(const std::vector<Formula>& premises, const Formula& conclusion) {
  BooleanAbstraction abs;
  std::vector<int> ps;
  for (const Formula& p : premises) ps.push_back(abs.Add(Desugar(p)));
  const int c = abs.Add(Desugar(conclusion));
  return abs.Entails(ps, c);
}

}  // namespace okn
