#include "okn/clausal.h"

#include <algorithm>
#include <stdexcept>

#include "okn/propositional.h"

namespace okn {

using K = Formula::Kind;

bool IsLiteral(const Formula& f) {
  const Formula& g = f.is(K::kNot) ? f.arg() : f;
  return g.is(K::kAtom) || g.is(K::kKnow) || g.is(K::kAtMost) || g.is(K::kVal);
}

Formula Complement(const Formula& literal) {
  return literal.is(K::kNot) ? literal.arg() : Formula::Not(literal);
}

namespace {

using Terms = std::vector<Literals>;

// Appends `extra` to `base`; false if a complementary pair appears.
bool Merge(Literals& base, const Literals& extra) {
  for (const Formula& l : extra) {
    if (std::find(base.begin(), base.end(), l) != base.end()) continue;
    if (std::find(base.begin(), base.end(), Complement(l)) != base.end()) return false;
    base.push_back(l);
  }
  return true;
}

void AddTerm(Terms& out, Literals t) {
  if (std::find(out.begin(), out.end(), t) != out.end()) return;
  if (out.size() >= kMaxClauses) throw PropositionalLimitError("clausal expansion too large");
  out.push_back(std::move(t));
}

Terms Dnf(const Formula& f, bool positive) {
  switch (f.kind()) {
    case K::kTrue:
    case K::kFalse:
      if (f.is(K::kTrue) == positive) return {{}};
      return {};
    case K::kNot: return Dnf(f.arg(), !positive);
    case K::kAnd:
    case K::kOr: {
      const bool conj = f.is(K::kAnd) == positive;
      Terms l = Dnf(f.lhs(), positive);
      Terms r = Dnf(f.rhs(), positive);
      Terms out;
      if (!conj) {
        for (auto& t : l) AddTerm(out, std::move(t));
        for (auto& t : r) AddTerm(out, std::move(t));
        return out;
      }
      for (const auto& a : l) {
        for (const auto& b : r) {
          Literals t = a;
          if (Merge(t, b)) AddTerm(out, std::move(t));
        }
      }
      return out;
    }
    case K::kAtom:
    case K::kKnow:
    case K::kAtMost:
    case K::kVal: return {{positive ? f : Formula::Not(f)}};
    default:
      throw std::invalid_argument("clausal form needs a desugared, quantifier-free formula: " + ToString(f));
  }
}

}  // namespace

std::vector<Literals> ToDnf(const Formula& f) { return Dnf(f, true); }

std::vector<Literals> ToCnf(const Formula& f) {
  Terms terms = Dnf(f, false);
  for (auto& t : terms) {
    for (auto& l : t) l = Complement(l);
  }
  return terms;
}

}  // namespace okn
