#include "okn/formula.h"

#include <functional>
#include <sstream>
#include <stdexcept>
#include <utility>

namespace okn {

namespace {

std::size_t Mix(std::size_t seed, std::size_t v) {
  return seed ^ (v + 0x9e3779b97f4a7c15ULL + (seed << 6) + (seed >> 2));
}

std::size_t ComputeHash(const Formula::Kind kind, Agent agent, const std::string& text,
                        const std::vector<Term>& terms, const std::vector<Formula>& children) {
  std::size_t h = Mix(static_cast<std::size_t>(kind) * 131 + 7, static_cast<std::size_t>(agent));
  h = Mix(h, std::hash<std::string>{}(text));
  for (const Term& t : terms) {
    h = Mix(h, t.is_name() ? static_cast<std::size_t>(t.name()) * 2 + 1
                           : std::hash<std::string>{}(t.variable()) * 2);
  }
  for (const Formula& c : children) h = Mix(h, c.hash());
  return h;
}

enum Prec { kQuantPrec = 0, kIffPrec = 1, kImpPrec = 2, kOrPrec = 3, kAndPrec = 4, kUnaryPrec = 5, kAtomicPrec = 6 };

int PrecedenceOf(const Formula& f) {
  switch (f.kind()) {
    case Formula::Kind::kIff: return kIffPrec;
    case Formula::Kind::kImplies: return kImpPrec;
    case Formula::Kind::kOr: return kOrPrec;
    case Formula::Kind::kAnd: return kAndPrec;
    case Formula::Kind::kForall:
    case Formula::Kind::kExists: return kQuantPrec;
    case Formula::Kind::kNot:
    case Formula::Kind::kKnow:
    case Formula::Kind::kAtMost:
    case Formula::Kind::kOnlyKnow:
    case Formula::Kind::kVal:
    case Formula::Kind::kSat: return kUnaryPrec;
    default: return kAtomicPrec;
  }
}

void Print(const Formula& f, int context, std::string* out);

void PrintBinary(const Formula& f, const char* op, int prec, bool right_assoc, std::string* out) {
  Print(f.lhs(), right_assoc ? prec + 1 : prec, out);
  out->append(op);
  Print(f.rhs(), right_assoc ? prec : prec + 1, out);
}

void Print(const Formula& f, int context, std::string* out) {
  const int prec = PrecedenceOf(f);
  const bool parens = prec < context;
  if (parens) out->push_back('(');
  switch (f.kind()) {
    case Formula::Kind::kAtom:
    case Formula::Kind::kEq:
    case Formula::Kind::kTrue:
    case Formula::Kind::kFalse:
      if (f.is(Formula::Kind::kTrue)) {
        out->append("true");
      } else if (f.is(Formula::Kind::kFalse)) {
        out->append("false");
      } else if (f.is(Formula::Kind::kEq)) {
        out->append(f.terms()[0].ToString()).append(" = ").append(f.terms()[1].ToString());
      } else {
        out->append(AtomKey(f));
      }
      break;
    case Formula::Kind::kNot:
      out->push_back('!');
      Print(f.arg(), kUnaryPrec, out);
      break;
    case Formula::Kind::kAnd: PrintBinary(f, " & ", kAndPrec, false, out); break;
    case Formula::Kind::kOr: PrintBinary(f, " | ", kOrPrec, false, out); break;
    case Formula::Kind::kImplies: PrintBinary(f, " -> ", kImpPrec, true, out); break;
    case Formula::Kind::kIff: PrintBinary(f, " <-> ", kIffPrec, false, out); break;
    case Formula::Kind::kForall:
    case Formula::Kind::kExists:
      out->append(f.is(Formula::Kind::kForall) ? "forall " : "exists ");
      out->append(f.variable()).append(". ");
      Print(f.arg(), kQuantPrec, out);
      break;
    case Formula::Kind::kKnow:
    case Formula::Kind::kAtMost:
    case Formula::Kind::kOnlyKnow: {
      const char op = f.is(Formula::Kind::kKnow) ? 'L' : f.is(Formula::Kind::kAtMost) ? 'N' : 'O';
      out->push_back(op);
      out->push_back('[');
      out->push_back(AgentChar(f.agent()));
      out->push_back(']');
      Print(f.arg(), kUnaryPrec, out);
      break;
    }
    case Formula::Kind::kVal:
    case Formula::Kind::kSat: {
      out->append(f.is(Formula::Kind::kVal) ? "Val" : "Sat");
      std::string body;
      Print(f.arg(), kUnaryPrec, &body);
      if (body.front() != '(') out->push_back(' ');
      out->append(body);
      break;
    }
  }
  if (parens) out->push_back(')');
}

}  // namespace

std::optional<Agent> AgentFromChar(char c) {
  if (c == 'a') return Agent::kA;
  if (c == 'b') return Agent::kB;
  return std::nullopt;
}

std::string Term::ToString() const {
  return is_name() ? "#" + std::to_string(id_) : var_;
}

Formula Formula::Make(Node node) {
  node.hash = ComputeHash(node.kind, node.agent, node.text, node.terms, node.children);
  return Formula(std::make_shared<const Node>(std::move(node)));
}

Formula Formula::Atom(std::string predicate, std::vector<Term> args) {
  return Make(Node{Kind::kAtom, Agent::kA, std::move(predicate), std::move(args), {}});
}
Formula Formula::Eq(Term lhs, Term rhs) {
  return Make(Node{Kind::kEq, Agent::kA, {}, {std::move(lhs), std::move(rhs)}, {}});
}
Formula Formula::True() {
  static const Formula t = Make(Node{Kind::kTrue, Agent::kA, {}, {}, {}});
  return t;
}
Formula Formula::False() {
  static const Formula f = Make(Node{Kind::kFalse, Agent::kA, {}, {}, {}});
  return f;
}
Formula Formula::Not(Formula f) { return Make(Node{Kind::kNot, Agent::kA, {}, {}, {std::move(f)}}); }
Formula Formula::And(Formula a, Formula b) {
  return Make(Node{Kind::kAnd, Agent::kA, {}, {}, {std::move(a), std::move(b)}});
}
Formula Formula::Or(Formula a, Formula b) {
  return Make(Node{Kind::kOr, Agent::kA, {}, {}, {std::move(a), std::move(b)}});
}
Formula Formula::Implies(Formula a, Formula b) {
  return Make(Node{Kind::kImplies, Agent::kA, {}, {}, {std::move(a), std::move(b)}});
}
Formula Formula::Iff(Formula a, Formula b) {
  return Make(Node{Kind::kIff, Agent::kA, {}, {}, {std::move(a), std::move(b)}});
}
Formula Formula::Forall(std::string var, Formula body) {
  return Make(Node{Kind::kForall, Agent::kA, std::move(var), {}, {std::move(body)}});
}
Formula Formula::Exists(std::string var, Formula body) {
  return Make(Node{Kind::kExists, Agent::kA, std::move(var), {}, {std::move(body)}});
}
Formula Formula::Know(Agent i, Formula body) { return Modal(Kind::kKnow, i, std::move(body)); }
Formula Formula::AtMost(Agent i, Formula body) { return Modal(Kind::kAtMost, i, std::move(body)); }
Formula Formula::OnlyKnow(Agent i, Formula body) { return Modal(Kind::kOnlyKnow, i, std::move(body)); }
Formula Formula::Modal(Kind kind, Agent i, Formula body) {
  return Make(Node{kind, i, {}, {}, {std::move(body)}});
}
Formula Formula::Val(Formula body) { return Make(Node{Kind::kVal, Agent::kA, {}, {}, {std::move(body)}}); }
Formula Formula::Sat(Formula body) { return Make(Node{Kind::kSat, Agent::kA, {}, {}, {std::move(body)}}); }

bool operator==(const Formula& a, const Formula& b) {
  if (a.node_ == b.node_) return true;
  if (a.hash() != b.hash()) return false;
  return (a <=> b) == 0;
}

std::strong_ordering operator<=>(const Formula& a, const Formula& b) {
  if (a.node_ == b.node_) return std::strong_ordering::equal;
  const auto& x = *a.node_;
  const auto& y = *b.node_;
  if (auto c = x.kind <=> y.kind; c != 0) return c;
  if (auto c = x.agent <=> y.agent; c != 0) return c;
  if (auto c = x.text <=> y.text; c != 0) return c;
  if (auto c = x.terms <=> y.terms; c != 0) return c;
  if (auto c = x.children.size() <=> y.children.size(); c != 0) return c;
  for (std::size_t k = 0; k < x.children.size(); ++k) {
    if (auto c = x.children[k] <=> y.children[k]; c != 0) return c;
  }
  return std::strong_ordering::equal;
}

std::string ToString(const Formula& f) {
  std::string out;
  Print(f, kQuantPrec, &out);
  return out;
}

std::ostream& operator<<(std::ostream& os, const Formula& f) { return os << ToString(f); }

std::string AtomKey(const Formula& atom) {
  std::string key = atom.predicate();
  if (!atom.terms().empty()) {
    key.push_back('(');
    for (std::size_t k = 0; k < atom.terms().size(); ++k) {
      if (k > 0) key.push_back(',');
      key.append(atom.terms()[k].ToString());
    }
    key.push_back(')');
  }
  return key;
}

Formula Desugar(const Formula& f) {
  using K = Formula::Kind;
  switch (f.kind()) {
    case K::kAtom:
    case K::kEq:
    case K::kTrue:
    case K::kFalse: return f;
    case K::kNot: return Formula::Not(Desugar(f.arg()));
    case K::kAnd: return Formula::And(Desugar(f.lhs()), Desugar(f.rhs()));
    case K::kOr: return Formula::Or(Desugar(f.lhs()), Desugar(f.rhs()));
    case K::kImplies: return Formula::Or(Formula::Not(Desugar(f.lhs())), Desugar(f.rhs()));
    case K::kIff: {
      Formula a = Desugar(f.lhs());
      Formula b = Desugar(f.rhs());
      return Formula::And(Formula::Or(Formula::Not(a), b), Formula::Or(Formula::Not(b), a));
    }
    case K::kForall: return Formula::Forall(f.variable(), Desugar(f.arg()));
    case K::kExists:
      return Formula::Not(Formula::Forall(f.variable(), Formula::Not(Desugar(f.arg()))));
    case K::kKnow: return Formula::Know(f.agent(), Desugar(f.arg()));
    case K::kAtMost: return Formula::AtMost(f.agent(), Desugar(f.arg()));
    case K::kOnlyKnow: {
      Formula a = Desugar(f.arg());
      return Formula::And(Formula::Know(f.agent(), a), Formula::AtMost(f.agent(), Formula::Not(a)));
    }
    case K::kVal: return Formula::Val(Desugar(f.arg()));
    case K::kSat: return Formula::Not(Formula::Val(Formula::Not(Desugar(f.arg()))));
  }
  throw std::logic_error("Desugar: unknown formula kind");
}

namespace {

void CollectPropositions(const Formula& f, std::set<std::string>* out) {
  if (f.is(Formula::Kind::kAtom)) {
    out->insert(AtomKey(f));
    return;
  }
  if (f.is(Formula::Kind::kEq) || f.is(Formula::Kind::kTrue) || f.is(Formula::Kind::kFalse)) return;
  CollectPropositions(f.arg(), out);
  if (f.IsBinary()) CollectPropositions(f.rhs(), out);
}

void CollectFree(const Formula& f, std::set<std::string>& bound, std::set<std::string>* out) {
  using K = Formula::Kind;
  switch (f.kind()) {
    case K::kAtom:
    case K::kEq:
      for (const Term& t : f.terms()) {
        if (t.is_variable() && !bound.contains(t.variable())) out->insert(t.variable());
      }
      return;
    case K::kTrue:
    case K::kFalse: return;
    case K::kForall:
    case K::kExists: {
      const bool fresh = bound.insert(f.variable()).second;
      CollectFree(f.arg(), bound, out);
      if (fresh) bound.erase(f.variable());
      return;
    }
    default:
      CollectFree(f.arg(), bound, out);
      if (f.IsBinary()) CollectFree(f.rhs(), bound, out);
  }
}

void CollectNames(const Formula& f, std::set<int>* out) {
  for (const Term& t : f.terms()) {
    if (t.is_name()) out->insert(t.name());
  }
  if (f.is(Formula::Kind::kAtom) || f.is(Formula::Kind::kEq) || f.is(Formula::Kind::kTrue) ||
      f.is(Formula::Kind::kFalse)) {
    return;
  }
  CollectNames(f.arg(), out);
  if (f.IsBinary()) CollectNames(f.rhs(), out);
}

}  // namespace

std::set<std::string> Propositions(const Formula& f) {
  std::set<std::string> out;
  CollectPropositions(f, &out);
  return out;
}

std::set<std::string> FreeVariables(const Formula& f) {
  std::set<std::string> bound, out;
  CollectFree(f, bound, &out);
  return out;
}

bool IsClosed(const Formula& f) { return FreeVariables(f).empty(); }

std::set<int> NamesIn(const Formula& f) {
  std::set<int> out;
  CollectNames(f, &out);
  return out;
}

Formula Substitute(const Formula& f, const std::string& var, const Term& t) {
  using K = Formula::Kind;
  auto subst_terms = [&](const std::vector<Term>& ts) {
    std::vector<Term> out = ts;
    for (Term& x : out) {
      if (x.is_variable() && x.variable() == var) x = t;
    }
    return out;
  };
  switch (f.kind()) {
    case K::kAtom: return Formula::Atom(f.predicate(), subst_terms(f.terms()));
    case K::kEq: {
      auto ts = subst_terms(f.terms());
      return Formula::Eq(ts[0], ts[1]);
    }
    case K::kTrue:
    case K::kFalse: return f;
    case K::kForall:
    case K::kExists:
      if (f.variable() == var) return f;
      return f.is(K::kForall) ? Formula::Forall(f.variable(), Substitute(f.arg(), var, t))
                              : Formula::Exists(f.variable(), Substitute(f.arg(), var, t));
    case K::kNot: return Formula::Not(Substitute(f.arg(), var, t));
    case K::kAnd: return Formula::And(Substitute(f.lhs(), var, t), Substitute(f.rhs(), var, t));
    case K::kOr: return Formula::Or(Substitute(f.lhs(), var, t), Substitute(f.rhs(), var, t));
    case K::kImplies:
      return Formula::Implies(Substitute(f.lhs(), var, t), Substitute(f.rhs(), var, t));
    case K::kIff: return Formula::Iff(Substitute(f.lhs(), var, t), Substitute(f.rhs(), var, t));
    case K::kKnow:
    case K::kAtMost:
    case K::kOnlyKnow: return Formula::Modal(f.kind(), f.agent(), Substitute(f.arg(), var, t));
    case K::kVal: return Formula::Val(Substitute(f.arg(), var, t));
    case K::kSat: return Formula::Sat(Substitute(f.arg(), var, t));
  }
  throw std::logic_error("Substitute: unknown formula kind");
}

Formula Conjunction(const std::vector<Formula>& fs) {
  if (fs.empty()) return Formula::True();
  Formula out = fs.front();
  for (std::size_t k = 1; k < fs.size(); ++k) out = Formula::And(out, fs[k]);
  return out;
}

Formula Disjunction(const std::vector<Formula>& fs) {
  if (fs.empty()) return Formula::False();
  Formula out = fs.front();
  for (std::size_t k = 1; k < fs.size(); ++k) out = Formula::Or(out, fs[k]);
  return out;
}

}  // namespace okn
