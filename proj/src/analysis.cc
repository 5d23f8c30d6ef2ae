#include "okn/analysis.h"

#include <algorithm>
#include <set>

namespace okn {

using K = Formula::Kind;

int AgentDepth(const Formula& f, Agent i) {
  switch (f.kind()) {
    case K::kAtom:
    case K::kEq:
    case K::kTrue:
    case K::kFalse: return 1;
    case K::kNot:
    case K::kForall:
    case K::kExists:
    case K::kVal:
    case K::kSat: return AgentDepth(f.arg(), i);
    case K::kAnd:
    case K::kOr:
    case K::kImplies:
    case K::kIff: return std::max(AgentDepth(f.lhs(), i), AgentDepth(f.rhs(), i));
    case K::kKnow:
    case K::kAtMost:
    case K::kOnlyKnow:
      if (f.agent() == i) return AgentDepth(f.arg(), i);
      return AgentDepth(f.arg(), f.agent()) + 1;
  }
  return 1;
}

int Depth(const Formula& f) { return std::max(AgentDepth(f, Agent::kA), AgentDepth(f, Agent::kB)); }

namespace {

struct Surface {
  bool atom_outside = false;
  bool agent_modal[2] = {false, false};
  bool any_modal = false;
  bool mentions_n = false;
};

void ScanSurface(const Formula& f, bool under_modal, Surface* s) {
  switch (f.kind()) {
    case K::kAtom:
      if (!under_modal) s->atom_outside = true;
      return;
    case K::kEq:
    case K::kTrue:
    case K::kFalse: return;
    case K::kKnow:
    case K::kAtMost:
    case K::kOnlyKnow:
      s->any_modal = true;
      if (!f.is(K::kKnow)) s->mentions_n = true;
      if (!under_modal) s->agent_modal[static_cast<int>(f.agent())] = true;
      ScanSurface(f.arg(), true, s);
      return;
    case K::kVal:
    case K::kSat: {
      // Opaque for the surface; still scanned for modal and N mentions.
      s->any_modal = true;
      Surface inner;
      ScanSurface(f.arg(), true, &inner);
      s->mentions_n = s->mentions_n || inner.mentions_n;
      return;
    }
    default:
      ScanSurface(f.arg(), under_modal, s);
      if (f.IsBinary()) ScanSurface(f.rhs(), under_modal, s);
  }
}

}  // namespace

Classification Classify(const Formula& f, Agent i) {
  Surface s;
  ScanSurface(f, false, &s);
  Classification c;
  const int me = static_cast<int>(i);
  const int them = static_cast<int>(Other(i));
  c.objective = !s.any_modal;
  c.i_objective = !s.agent_modal[me];
  c.i_subjective = !s.atom_outside && !s.agent_modal[them];
  c.basic = !s.mentions_n;
  return c;
}

bool IsBasic(const Formula& f) { return Classify(f, Agent::kA).basic; }
bool IsIObjective(const Formula& f, Agent i) { return Classify(f, i).i_objective; }
bool IsISubjective(const Formula& f, Agent i) { return Classify(f, i).i_subjective; }

namespace {

// scope_mask bit k set: inside the scope of some box of agent k.
bool Restricted(const Formula& f, unsigned scope_mask) {
  switch (f.kind()) {
    case K::kAtom:
    case K::kEq:
    case K::kTrue:
    case K::kFalse: return true;
    case K::kKnow:
    case K::kAtMost:
    case K::kOnlyKnow: {
      const unsigned me = 1u << static_cast<int>(f.agent());
      const bool has_n = !f.is(K::kKnow);
      if (has_n && (scope_mask & ~me) != 0) return false;
      return Restricted(f.arg(), scope_mask | me);
    }
    default:
      if (!Restricted(f.arg(), scope_mask)) return false;
      return !f.IsBinary() || Restricted(f.rhs(), scope_mask);
  }
}

}  // namespace

bool InRestrictedLanguage(const Formula& f) { return Restricted(f, 0); }

int Stratum(const Formula& f) {
  if (InRestrictedLanguage(f)) return 1;
  switch (f.kind()) {
    case K::kKnow:
    case K::kAtMost:
    case K::kOnlyKnow: return Stratum(f.arg()) + 1;
    case K::kAtom:
    case K::kEq:
    case K::kTrue:
    case K::kFalse: return 1;
    default: {
      int t = Stratum(f.arg());
      if (f.IsBinary()) t = std::max(t, Stratum(f.rhs()));
      return t;
    }
  }
}

NameDomain::NameDomain(std::vector<int> names) : names_(std::move(names)) {
  std::set<int> seen;
  for (int n : names_) {
    if (!seen.insert(n).second) throw GroundingError("duplicate standard name #" + std::to_string(n));
  }
}

NameDomain NameDomain::FirstN(int n) {
  std::vector<int> names;
  for (int k = 1; k <= n; ++k) names.push_back(k);
  return NameDomain(std::move(names));
}

bool NameDomain::Contains(int n) const {
  return std::find(names_.begin(), names_.end(), n) != names_.end();
}

namespace {

Formula GroundRec(const Formula& f, const NameDomain& d) {
  switch (f.kind()) {
    case K::kAtom:
    case K::kTrue:
    case K::kFalse: return f;
    case K::kEq:
      return f.terms()[0] == f.terms()[1] ? Formula::True() : Formula::False();
    case K::kForall:
    case K::kExists: {
      if (d.empty()) throw GroundingError("quantifier over an empty name domain");
      std::vector<Formula> parts;
      for (int n : d.names()) parts.push_back(GroundRec(Substitute(f.arg(), f.variable(), Term::Name(n)), d));
      return f.is(K::kForall) ? Conjunction(parts) : Disjunction(parts);
    }
    case K::kNot: return Formula::Not(GroundRec(f.arg(), d));
    case K::kAnd: return Formula::And(GroundRec(f.lhs(), d), GroundRec(f.rhs(), d));
    case K::kOr: return Formula::Or(GroundRec(f.lhs(), d), GroundRec(f.rhs(), d));
    case K::kImplies: return Formula::Implies(GroundRec(f.lhs(), d), GroundRec(f.rhs(), d));
    case K::kIff: return Formula::Iff(GroundRec(f.lhs(), d), GroundRec(f.rhs(), d));
    case K::kKnow:
    case K::kAtMost:
    case K::kOnlyKnow: return Formula::Modal(f.kind(), f.agent(), GroundRec(f.arg(), d));
    case K::kVal: return Formula::Val(GroundRec(f.arg(), d));
    case K::kSat: return Formula::Sat(GroundRec(f.arg(), d));
  }
  return f;
}

}  // namespace

Formula Ground(const Formula& f, const NameDomain& domain) {
  auto free = FreeVariables(f);
  if (!free.empty()) throw GroundingError("formula has free variable '" + *free.begin() + "'");
  for (int n : NamesIn(f)) {
    if (!domain.Contains(n)) throw GroundingError("name #" + std::to_string(n) + " is outside the domain");
  }
  return GroundRec(f, domain);
}

Formula GroundDefault(const Formula& f) {
  std::set<int> names = NamesIn(f);
  if (names.empty()) return Ground(f, NameDomain::FirstN(1));
  return Ground(f, NameDomain(std::vector<int>(names.begin(), names.end())));
}

}  // namespace okn
