#include "okn/proof.h"

#include <algorithm>
#include <cctype>
#include <map>
#include <stdexcept>

#include "okn/analysis.h"
#include "okn/k45.h"
#include "okn/propositional.h"

namespace okn {

using K = Formula::Kind;

ProofSystem ProofSystem::Parse(const std::string& tag) {
  ProofSystem s;
  if (tag == "AX'" || tag == "AXprime") {
    s.family = Family::kAXPrime;
    s.t = 0;
    return s;
  }
  if (tag.rfind("AX", 0) != 0) throw std::invalid_argument("unknown proof system '" + tag + "'");
  std::string rest = tag.substr(2);
  if (!rest.empty() && rest[0] == '+') {
    s.family = Family::kAXPlus;
    rest = rest.substr(1);
  }
  if (!rest.empty() && rest[0] == '^') rest = rest.substr(1);
  if (rest.empty()) {
    s.t = 1;
    return s;
  }
  if (!std::all_of(rest.begin(), rest.end(), [](char c) { return std::isdigit(static_cast<unsigned char>(c)); }) ||
      rest.size() > 3) {
    throw std::invalid_argument("unknown proof system '" + tag + "'");
  }
  s.t = std::stoi(rest);
  if (s.t < 1) throw std::invalid_argument("proof system stratum must be at least 1");
  return s;
}

std::string ProofSystem::ToString() const {
  switch (family) {
    case Family::kAX: return "AX" + std::to_string(t);
    case Family::kAXPlus: return "AX+" + std::to_string(t);
    case Family::kAXPrime: return "AX'";
  }
  return "?";
}

bool ProofSystem::Allows(const std::string& axiom, int index, std::string* why) const {
  if (axiom == "A1" || axiom == "A2" || axiom == "A3" || axiom == "A4") return true;
  if (axiom == "A5") {
    if (family == Family::kAXPrime) {
      *why = "A5^t is not an axiom of AX'";
      return false;
    }
    if (index < 1 || index > t) {
      *why = "A5^" + std::to_string(index) + " is not available in " + ToString();
      return false;
    }
    return true;
  }
  if (axiom == "A5'" || axiom == "V1" || axiom == "V2" || axiom == "V3" || axiom == "V4") {
    if (family != Family::kAXPrime) {
      *why = axiom + " is only an axiom of AX'";
      return false;
    }
    return true;
  }
  *why = "unknown axiom " + axiom;
  return false;
}

std::string Justification::ToString() const {
  std::string s;
  auto refs_text = [&] {
    std::string r;
    for (int x : refs) r += " " + std::to_string(x);
    return r;
  };
  switch (rule) {
    case Rule::kAxiom: return "axiom " + axiom + (axiom == "A5" ? " " + std::to_string(index) : "");
    case Rule::kMp: return "mp" + refs_text();
    case Rule::kNec:
      return std::string("nec ") + (box == K::kKnow ? "L" : "N") + " " + AgentChar(agent) + refs_text();
    case Rule::kNecVal: return "nec_val" + refs_text();
    case Rule::kPl: return "pl" + refs_text();
  }
  return s;
}

namespace {

Formula Imp(const Formula& a, const Formula& b) { return Formula::Or(Formula::Not(a), b); }

void FlattenAnd(const Formula& f, std::vector<Formula>& out) {
  if (f.is(K::kAnd)) {
    FlattenAnd(f.lhs(), out);
    FlattenAnd(f.rhs(), out);
  } else {
    out.push_back(f);
  }
}

bool MentionsVal(const Formula& f) {
  switch (f.kind()) {
    case K::kVal:
    case K::kSat: return true;
    case K::kAtom:
    case K::kEq:
    case K::kTrue:
    case K::kFalse: return false;
    default: return MentionsVal(f.arg()) || (f.IsBinary() && MentionsVal(f.rhs()));
  }
}

AxiomCheck Yes() { return {true, ""}; }
AxiomCheck No(std::string why) { return {false, std::move(why)}; }

// box(a -> b) -> (box a -> box b)
AxiomCheck Distribution(const Formula& d, K box, const char* name) {
  const AxiomCheck shape = No(std::string("not of the form ") + name);
  if (!d.is(K::kOr) || !d.lhs().is(K::kNot)) return shape;
  const Formula& x = d.lhs().arg();
  if (!x.is(box) || !x.arg().is(K::kOr) || !x.arg().lhs().is(K::kNot)) return shape;
  const Agent i = x.agent();
  const Formula& alpha = x.arg().lhs().arg();
  const Formula& beta = x.arg().rhs();
  const Formula expected = Imp(x, Imp(Formula::Modal(box, i, alpha), Formula::Modal(box, i, beta)));
  return d == expected ? Yes() : shape;
}

AxiomCheck Introspection(const Formula& d) {
  const AxiomCheck shape = No("not of the form s -> L_i s & N_i s");
  if (!d.is(K::kOr) || !d.lhs().is(K::kNot) || !d.rhs().is(K::kAnd) || !d.rhs().lhs().is(K::kKnow)) return shape;
  const Formula& sigma = d.lhs().arg();
  const Agent i = d.rhs().lhs().agent();
  if (!(d == Imp(sigma, Formula::And(Formula::Know(i, sigma), Formula::AtMost(i, sigma))))) return shape;
  if (!IsISubjective(sigma, i)) return No(ToString(sigma) + std::string(" is not ") + AgentChar(i) + "-subjective");
  return Yes();
}

AxiomCheck Stratified(const Formula& d, int t, const ProofOptions& opts) {
  const AxiomCheck shape = No("not of the form N_i a -> !L_i a");
  if (!d.is(K::kOr) || !d.lhs().is(K::kNot) || !d.lhs().arg().is(K::kAtMost)) return shape;
  const Agent i = d.lhs().arg().agent();
  const Formula& alpha = d.lhs().arg().arg();
  if (!(d == Imp(Formula::AtMost(i, alpha), Formula::Not(Formula::Know(i, alpha))))) return shape;
  const Formula neg = Formula::Not(alpha);
  const std::string shown = ToString(neg);
  if (!IsIObjective(neg, i)) return No(shown + " is not " + AgentChar(i) + "-objective");
  const bool basic = IsBasic(neg) && !MentionsVal(neg);
  if (t <= 1) {
    if (!basic) return No(shown + " is not basic");
    try {
      if (!K45Satisfiable(neg)) return No(shown + " is not K45-consistent");
    } catch (const std::exception& e) {
      return No(e.what());
    }
    return Yes();
  }
  const int stratum = Stratum(neg);
  if (stratum > t - 1) {
    return No(shown + " lies in stratum " + std::to_string(stratum) + ", above " + std::to_string(t - 1));
  }
  const Verdict v = Satisfiable(neg, opts.bounds);
  if (v.kind == VerdictKind::kSat) return Yes();
  if (v.kind == VerdictKind::kUnsat) return No(shown + " is unsatisfiable");
  if (basic) {
    if (K45Satisfiable(neg)) return Yes();
    return No(shown + " is not K45-consistent");
  }
  return No("side condition exceeded bound " + v.level + ": " + v.detail);
}

Formula SatD(const Formula& x) { return Formula::Not(Formula::Val(Formula::Not(x))); }

AxiomCheck SatGuarded(const Formula& d) {
  const AxiomCheck shape = No("not of the form Sat(!a) -> (N_i a -> !L_i a)");
  if (!d.is(K::kOr) || !d.rhs().is(K::kOr) || !d.rhs().lhs().is(K::kNot) ||
      !d.rhs().lhs().arg().is(K::kAtMost)) {
    return shape;
  }
  const Agent i = d.rhs().lhs().arg().agent();
  const Formula& alpha = d.rhs().lhs().arg().arg();
  const Formula expected =
      Imp(SatD(Formula::Not(alpha)), Imp(Formula::AtMost(i, alpha), Formula::Not(Formula::Know(i, alpha))));
  if (!(d == expected)) return shape;
  if (!IsIObjective(alpha, i)) return No(ToString(alpha) + " is not " + AgentChar(i) + "-objective");
  return Yes();
}

AxiomCheck ValDistribution(const Formula& d) {
  const AxiomCheck shape = No("not of the form Val a & Val(a -> b) -> Val b");
  if (!d.is(K::kOr) || !d.lhs().is(K::kNot) || !d.lhs().arg().is(K::kAnd) || !d.rhs().is(K::kVal) ||
      !d.lhs().arg().lhs().is(K::kVal)) {
    return shape;
  }
  const Formula& alpha = d.lhs().arg().lhs().arg();
  const Formula& beta = d.rhs().arg();
  const Formula expected =
      Imp(Formula::And(Formula::Val(alpha), Formula::Val(Imp(alpha, beta))), Formula::Val(beta));
  return d == expected ? Yes() : shape;
}

bool SatArg(const Formula& d, Formula* out) {
  if (!d.is(K::kNot) || !d.arg().is(K::kVal) || !d.arg().arg().is(K::kNot)) return false;
  *out = d.arg().arg().arg();
  return true;
}

AxiomCheck LiteralSat(const Formula& d) {
  Formula c = Formula::True();
  if (!SatArg(d, &c)) return No("not of the form Sat(literal & ...)");
  std::vector<Formula> lits;
  FlattenAnd(c, lits);
  for (const Formula& l : lits) {
    const Formula& a = l.is(K::kNot) ? l.arg() : l;
    if (!a.is(K::kAtom)) return No(ToString(l) + " is not a literal");
    const Formula comp = l.is(K::kNot) ? l.arg() : Formula::Not(l);
    if (std::find(lits.begin(), lits.end(), comp) != lits.end()) return No("literals are inconsistent");
  }
  return Yes();
}

AxiomCheck ModalSat(const Formula& d) {
  const AxiomCheck shape = No("not of the V3 form");
  Formula c = Formula::True();
  if (!d.is(K::kOr) || !SatArg(d.rhs(), &c)) return shape;
  std::vector<Formula> parts;
  FlattenAnd(c, parts);
  if (parts.empty() || !parts[0].is(K::kKnow)) return shape;
  const Agent i = parts[0].agent();
  const Formula alpha = parts[0].arg();
  std::size_t k = 1;
  std::vector<Formula> betas, deltas;
  while (k < parts.size() && parts[k].is(K::kNot) && parts[k].arg().is(K::kKnow) &&
         parts[k].arg().agent() == i && parts[k].arg().arg().is(K::kNot)) {
    betas.push_back(parts[k].arg().arg().arg());
    ++k;
  }
  if (k >= parts.size() || !parts[k].is(K::kAtMost) || parts[k].agent() != i) return shape;
  const Formula gamma = parts[k].arg();
  ++k;
  while (k < parts.size() && parts[k].is(K::kNot) && parts[k].arg().is(K::kAtMost) &&
         parts[k].arg().agent() == i && parts[k].arg().arg().is(K::kNot)) {
    deltas.push_back(parts[k].arg().arg().arg());
    ++k;
  }
  if (k != parts.size()) return shape;
  std::vector<Formula> premises;
  for (const Formula& b : betas) premises.push_back(SatD(Formula::And(alpha, b)));
  for (const Formula& x : deltas) premises.push_back(SatD(Formula::And(gamma, x)));
  premises.push_back(Formula::Val(Formula::Or(alpha, gamma)));
  std::vector<Formula> conclusion = {Formula::Know(i, alpha)};
  for (const Formula& b : betas) conclusion.push_back(Formula::Not(Formula::Know(i, Formula::Not(b))));
  conclusion.push_back(Formula::AtMost(i, gamma));
  for (const Formula& x : deltas) conclusion.push_back(Formula::Not(Formula::AtMost(i, Formula::Not(x))));
  if (!(d == Imp(Conjunction(premises), SatD(Conjunction(conclusion))))) return shape;
  std::vector<Formula> args = {alpha, gamma};
  args.insert(args.end(), betas.begin(), betas.end());
  args.insert(args.end(), deltas.begin(), deltas.end());
  for (const Formula& a : args) {
    if (!IsIObjective(a, i)) return No(ToString(a) + " is not " + AgentChar(i) + "-objective");
  }
  return Yes();
}

AxiomCheck SatCombination(const Formula& d) {
  const AxiomCheck shape = No("not of the form Sat a & Sat b -> Sat(a & b)");
  Formula c = Formula::True();
  if (!d.is(K::kOr) || !SatArg(d.rhs(), &c) || !c.is(K::kAnd)) return shape;
  const Formula& alpha = c.lhs();
  const Formula& beta = c.rhs();
  if (!(d == Imp(Formula::And(SatD(alpha), SatD(beta)), SatD(c)))) return shape;
  for (Agent i : kAgents) {
    if (IsIObjective(alpha, i) && IsISubjective(beta, i)) return Yes();
  }
  return No("no agent makes the first conjunct objective and the second subjective");
}

void SplitAxiomName(const std::string& name, std::string* base, int* t) {
  const auto caret = name.find('^');
  if (caret == std::string::npos) {
    *base = name;
    return;
  }
  *base = name.substr(0, caret);
  *t = std::stoi(name.substr(caret + 1));
}

}  // namespace

AxiomCheck AxiomInstance(const Formula& f, const std::string& name, int t, const ProofOptions& opts) {
  std::string base;
  SplitAxiomName(name, &base, &t);
  const Formula d = Desugar(f);
  if (base == "A1") {
    try {
      return IsPropositionalTautology(d) ? Yes() : No("not a propositional tautology");
    } catch (const std::exception& e) {
      return No(e.what());
    }
  }
  if (base == "A2") return Distribution(d, K::kKnow, "L_i(a -> b) -> (L_i a -> L_i b)");
  if (base == "A3") return Distribution(d, K::kAtMost, "N_i(a -> b) -> (N_i a -> N_i b)");
  if (base == "A4") return Introspection(d);
  if (base == "A5") return Stratified(d, t, opts);
  if (base == "A5'") return SatGuarded(d);
  if (base == "V1") return ValDistribution(d);
  if (base == "V2") return LiteralSat(d);
  if (base == "V3") return ModalSat(d);
  if (base == "V4") return SatCombination(d);
  throw std::invalid_argument("unknown axiom '" + name + "'");
}

ProofResult CheckProof(const ProofScript& script, const ProofOptions& opts) {
  ProofResult result;
  std::map<int, Formula> earlier;  // desugared formulas of checked lines
  for (const ProofLine& line : script.lines) {
    LineVerdict v;
    v.number = line.number;
    v.rule = line.why.ToString();
    const Formula cur = Desugar(line.formula);
    auto fetch = [&](int ref, Formula* out) {
      auto it = earlier.find(ref);
      if (it == earlier.end()) {
        v.reason = "line " + std::to_string(ref) + " is not an earlier line";
        return false;
      }
      *out = it->second;
      return true;
    };
    if (earlier.count(line.number)) {
      v.reason = "duplicate line number";
    } else {
      const Justification& j = line.why;
      Formula a = Formula::True(), b = Formula::True();
      switch (j.rule) {
        case Justification::Rule::kAxiom: {
          std::string why;
          if (!script.system.Allows(j.axiom, j.index, &why)) {
            v.reason = why;
            break;
          }
          const AxiomCheck c = AxiomInstance(line.formula, j.axiom, j.index, opts);
          v.ok = c.ok;
          v.reason = c.reason;
          break;
        }
        case Justification::Rule::kMp:
          if (j.refs.size() != 2) {
            v.reason = "mp cites two lines";
            break;
          }
          if (!fetch(j.refs[0], &a) || !fetch(j.refs[1], &b)) break;
          v.ok = b == Imp(a, cur);
          if (!v.ok) v.reason = "line " + std::to_string(j.refs[1]) + " is not line " + std::to_string(j.refs[0]) + " -> this line";
          break;
        case Justification::Rule::kNec:
          if (j.refs.size() != 1) {
            v.reason = "nec cites one line";
            break;
          }
          if (!fetch(j.refs[0], &a)) break;
          v.ok = cur == Formula::Modal(j.box, j.agent, a);
          if (!v.ok) v.reason = "not the necessitation of line " + std::to_string(j.refs[0]);
          break;
        case Justification::Rule::kNecVal:
          if (!script.system.AllowsNecVal()) {
            v.reason = "nec_val is not a rule of " + script.system.ToString();
            break;
          }
          if (j.refs.size() != 1) {
            v.reason = "nec_val cites one line";
            break;
          }
          if (!fetch(j.refs[0], &a)) break;
          v.ok = cur == Formula::Val(a);
          if (!v.ok) v.reason = "not Val of line " + std::to_string(j.refs[0]);
          break;
        case Justification::Rule::kPl: {
          std::vector<Formula> cited;
          bool found = true;
          for (int r : j.refs) {
            if (!fetch(r, &a)) {
              found = false;
              break;
            }
            cited.push_back(a);
          }
          if (!found) break;
          try {
            v.ok = PropositionallyEntails(cited, cur);
            if (!v.ok) v.reason = "not a propositional consequence of the cited lines";
          } catch (const std::exception& e) {
            v.reason = e.what();
          }
          break;
        }
      }
    }
    earlier.emplace(line.number, cur);
    if (!v.ok && result.first_failure == 0) result.first_failure = line.number;
    result.lines.push_back(std::move(v));
  }
  result.accepted = result.first_failure == 0;
  return result;
}

ProofScript ExpandPl(const ProofScript& script) {
  ProofScript out;
  out.system = script.system;
  std::map<int, int> renumber;
  std::map<int, Formula> formulas;
  int next = 1;
  auto emit = [&](Formula f, Justification why) {
    out.lines.push_back({next, std::move(f), std::move(why)});
    return next++;
  };
  for (const ProofLine& line : script.lines) {
    formulas.emplace(line.number, line.formula);
    Justification why = line.why;
    for (int& r : why.refs) {
      auto it = renumber.find(r);
      r = it == renumber.end() ? -1 : it->second;
    }
    if (why.rule != Justification::Rule::kPl) {
      renumber[line.number] = emit(line.formula, why);
      continue;
    }
    Formula chain = line.formula;
    for (auto it = line.why.refs.rbegin(); it != line.why.refs.rend(); ++it) {
      auto f = formulas.find(*it);
      chain = Formula::Implies(f == formulas.end() ? Formula::False() : f->second, chain);
    }
    Justification a1;
    a1.axiom = "A1";
    int current = emit(chain, a1);
    for (std::size_t k = 0; k < why.refs.size(); ++k) {
      Formula rest = chain.rhs();
      Justification mp;
      mp.rule = Justification::Rule::kMp;
      mp.refs = {why.refs[k], current};
      current = emit(rest, mp);
      chain = rest;
    }
    renumber[line.number] = current;
  }
  return out;
}

}  // namespace okn
