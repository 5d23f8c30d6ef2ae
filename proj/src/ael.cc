#include "okn/ael.h"

#include <algorithm>
#include <set>
#include <stdexcept>

#include "okn/analysis.h"
#include "okn/propositional.h"
#include "okn/structures.h"

namespace okn {

using K = Formula::Kind;

namespace {

void Collect(const Formula& f, Agent i, std::vector<Formula>& out) {
  switch (f.kind()) {
    case K::kNot: Collect(f.arg(), i, out); return;
    case K::kAnd:
    case K::kOr:
      Collect(f.lhs(), i, out);
      Collect(f.rhs(), i, out);
      return;
    case K::kKnow:
      if (f.agent() != i) return;
      Collect(f.arg(), i, out);
      if (std::find(out.begin(), out.end(), f) == out.end()) out.push_back(f);
      return;
    case K::kAtMost:
      if (f.agent() != i) return;
      throw std::invalid_argument(std::string("stable expansions do not support N[") + AgentChar(i) + "] or O[" +
                                  AgentChar(i) + "]: " + ToString(f));
    default: return;
  }
}

// Maximal non-Boolean subformulas.
void Leaves(const Formula& f, std::vector<Formula>& out) {
  if (f.is(K::kNot)) {
    Leaves(f.arg(), out);
  } else if (f.is(K::kAnd) || f.is(K::kOr)) {
    Leaves(f.lhs(), out);
    Leaves(f.rhs(), out);
  } else {
    out.push_back(f);
  }
}

std::vector<Formula> Prepare(const std::vector<Formula>& a_set) {
  std::vector<Formula> out;
  out.reserve(a_set.size());
  for (const Formula& f : a_set) out.push_back(Desugar(GroundDefault(f)));
  return out;
}

}  // namespace

std::vector<Formula> ExpansionKernel::Base() const {
  std::vector<Formula> out = base;
  for (std::size_t k = 0; k < closure.size(); ++k) {
    out.push_back(in[k] ? closure[k] : Formula::Not(closure[k]));
  }
  return out;
}

std::vector<Formula> ModalClosure(const std::vector<Formula>& a_set, Agent i) {
  std::vector<Formula> out;
  for (const Formula& f : Prepare(a_set)) Collect(f, i, out);
  return out;
}

std::vector<ExpansionKernel> StableExpansions(const std::vector<Formula>& a_set, Agent i, int cap) {
  const std::vector<Formula> base = Prepare(a_set);
  std::vector<Formula> closure;
  for (const Formula& f : base) Collect(f, i, closure);
  if (static_cast<int>(closure.size()) > cap) {
    throw ResourceLimitError("modal closure has " + std::to_string(closure.size()) + " members, cap is " +
                                 std::to_string(cap),
                             "closure");
  }
  BooleanAbstraction ba;
  std::vector<int> premises, args;
  for (const Formula& f : base) premises.push_back(ba.Add(f));
  for (const Formula& l : closure) {
    ba.Add(l);
    args.push_back(ba.Add(l.arg()));
  }
  // Closure letters are fixed by the assignment; consequence only ranges
  // over the remaining letters.
  std::uint32_t fixed_bits = 0;
  std::vector<int> slot;
  for (const Formula& l : closure) {
    slot.push_back(ba.LetterOf(l));
    fixed_bits |= 1u << slot.back();
  }
  std::vector<int> free;
  for (int n = 0; n < ba.letter_count(); ++n) {
    if (!(fixed_bits >> n & 1)) free.push_back(n);
  }
  std::vector<ExpansionKernel> out;
  for (std::uint32_t mask = 0; mask < (1u << closure.size()); ++mask) {
    std::uint32_t fixed = 0;
    for (std::size_t k = 0; k < closure.size(); ++k) {
      if (mask >> k & 1) fixed |= 1u << slot[k];
    }
    std::uint32_t derived = mask == 0 && closure.empty() ? 0 : (1u << closure.size()) - 1;
    for (std::uint32_t f = 0; f < (1u << free.size()) && derived; ++f) {
      std::uint32_t assignment = fixed;
      for (std::size_t n = 0; n < free.size(); ++n) {
        if (f >> n & 1) assignment |= 1u << free[n];
      }
      bool model = true;
      for (int c : premises) {
        if (!ba.Evaluate(c, assignment)) {
          model = false;
          break;
        }
      }
      if (!model) continue;
      for (std::size_t k = 0; k < closure.size(); ++k) {
        if ((derived >> k & 1) && !ba.Evaluate(args[k], assignment)) derived &= ~(1u << k);
      }
    }
    if (derived != mask) continue;
    ExpansionKernel kernel{i, base, closure, {}};
    for (std::size_t k = 0; k < closure.size(); ++k) kernel.in.push_back(mask >> k & 1);
    out.push_back(std::move(kernel));
  }
  return out;
}

bool IsStable(const ExpansionKernel& k) {
  const std::vector<Formula> b = k.Base();
  for (std::size_t n = 0; n < k.closure.size(); ++n) {
    if (PropositionallyEntails(b, k.closure[n].arg()) != k.in[n]) return false;
  }
  return true;
}

bool ExpansionMember(const ExpansionKernel& k, const Formula& f) {
  const Formula d = Desugar(GroundDefault(f));
  std::vector<Formula> known = k.closure;
  for (const Formula& b : k.base) Leaves(b, known);
  std::vector<Formula> leaves;
  Leaves(d, leaves);
  for (const Formula& l : leaves) {
    if ((l.is(K::kKnow) || l.is(K::kAtMost)) && std::find(known.begin(), known.end(), l) == known.end()) {
      throw std::invalid_argument("modal subformula " + ToString(l) + " is outside the theory and its closure");
    }
  }
  return PropositionallyEntails(k.Base(), d);
}

}  // namespace okn
