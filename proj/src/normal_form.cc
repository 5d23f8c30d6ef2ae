#include "okn/normal_form.h"

#include <algorithm>
#include <map>
#include <set>
#include <string>
#include <vector>

#include "okn/analysis.h"
#include "okn/clausal.h"

namespace okn {

using K = Formula::Kind;

namespace {

bool IsModalOf(const Formula& letter, Agent i) {
  return (letter.is(K::kKnow) || letter.is(K::kAtMost)) && letter.agent() == i;
}

// Constant folding; box_i true is valid for both boxes.
Formula Fold(const Formula& f) {
  switch (f.kind()) {
    case K::kNot: {
      const Formula a = Fold(f.arg());
      if (a.is(K::kTrue)) return Formula::False();
      if (a.is(K::kFalse)) return Formula::True();
      if (a.is(K::kNot)) return a.arg();
      return Formula::Not(a);
    }
    case K::kAnd:
    case K::kOr: {
      const bool conj = f.is(K::kAnd);
      const Formula l = Fold(f.lhs()), r = Fold(f.rhs());
      const K absorbing = conj ? K::kFalse : K::kTrue;
      const K neutral = conj ? K::kTrue : K::kFalse;
      if (l.is(absorbing) || r.is(absorbing)) return conj ? Formula::False() : Formula::True();
      if (l.is(neutral) || l == r) return r;
      if (r.is(neutral)) return l;
      return conj ? Formula::And(l, r) : Formula::Or(l, r);
    }
    case K::kKnow:
    case K::kAtMost: {
      const Formula a = Fold(f.arg());
      if (a.is(K::kTrue)) return a;
      return Formula::Modal(f.kind(), f.agent(), a);
    }
    default: return f;
  }
}

Formula Rewrite(const Formula& f) {
  switch (f.kind()) {
    case K::kAtom:
    case K::kTrue:
    case K::kFalse: return f;
    case K::kNot: return Formula::Not(Rewrite(f.arg()));
    case K::kAnd: return Formula::And(Rewrite(f.lhs()), Rewrite(f.rhs()));
    case K::kOr: return Formula::Or(Rewrite(f.lhs()), Rewrite(f.rhs()));
    case K::kKnow:
    case K::kAtMost: {
      const Agent i = f.agent();
      const Formula body = Fold(Rewrite(f.arg()));
      if (body.is(K::kTrue) || body.is(K::kFalse)) return Formula::Modal(f.kind(), i, body);
      std::vector<Formula> parts;
      for (const Literals& clause : ToCnf(body)) {
        std::vector<Formula> subjective, objective;
        for (const Formula& l : clause) {
          const Formula& letter = l.is(K::kNot) ? l.arg() : l;
          (IsModalOf(letter, i) ? subjective : objective).push_back(l);
        }
        Formula boxed = Formula::Modal(f.kind(), i, Disjunction(objective));
        parts.push_back(subjective.empty() ? boxed : Formula::Or(Disjunction(subjective), boxed));
      }
      if (parts.empty()) return Formula::Modal(f.kind(), i, Formula::True());
      return Conjunction(parts);
    }
    case K::kVal:
    case K::kSat: throw NormalFormError("normal form is undefined for formulas mentioning Val or Sat");
    case K::kEq:
    case K::kForall:
    case K::kExists: throw NormalFormError("normal form needs a ground formula: " + ToString(f));
    default: throw NormalFormError("normal form needs a desugared formula: " + ToString(f));
  }
}

bool MentionsVal(const Formula& f) {
  if (f.is(K::kVal) || f.is(K::kSat)) return true;
  switch (f.kind()) {
    case K::kAtom:
    case K::kEq:
    case K::kTrue:
    case K::kFalse: return false;
    default: return MentionsVal(f.arg()) || (f.IsBinary() && MentionsVal(f.rhs()));
  }
}

int Block(const Formula& literal) {
  const bool positive = !literal.is(K::kNot);
  const Formula& letter = positive ? literal : literal.arg();
  if (letter.is(K::kAtom)) return 0;
  const int base = (letter.is(K::kKnow) ? 1 : 5) + (letter.agent() == Agent::kA ? 0 : 2);
  return base + (positive ? 0 : 1);
}

Literals Arrange(const Literals& term) {
  // Merge positive boxes of the same kind and agent.
  std::map<int, std::vector<Formula>> positives;
  Literals rest;
  for (const Formula& l : term) {
    const int b = Block(l);
    if (b == 1 || b == 3 || b == 5 || b == 7) {
      positives[b].push_back(l.arg());
    } else {
      rest.push_back(l);
    }
  }
  for (auto& [b, args] : positives) {
    const Agent i = (b == 1 || b == 5) ? Agent::kA : Agent::kB;
    const K kind = b <= 4 ? K::kKnow : K::kAtMost;
    std::sort(args.begin(), args.end(), [](const Formula& x, const Formula& y) { return ToString(x) < ToString(y); });
    args.erase(std::unique(args.begin(), args.end()), args.end());
    rest.push_back(Formula::Modal(kind, i, Conjunction(args)));
  }
  std::vector<std::pair<std::pair<int, std::string>, Formula>> keyed;
  for (const Formula& l : rest) keyed.push_back({{Block(l), ToString(l)}, l});
  std::sort(keyed.begin(), keyed.end(), [](const auto& x, const auto& y) { return x.first < y.first; });
  Literals out;
  for (auto& [key, l] : keyed) {
    if (out.empty() || !(out.back() == l)) out.push_back(l);
  }
  return out;
}

void FlattenOr(const Formula& f, std::vector<Formula>& out) {
  if (f.is(K::kOr)) {
    FlattenOr(f.lhs(), out);
    FlattenOr(f.rhs(), out);
  } else {
    out.push_back(f);
  }
}

void FlattenAnd(const Formula& f, std::vector<Formula>& out) {
  if (f.is(K::kAnd)) {
    FlattenAnd(f.lhs(), out);
    FlattenAnd(f.rhs(), out);
  } else {
    out.push_back(f);
  }
}

bool IsNormalLiteral(const Formula& l) {
  const Formula& letter = l.is(K::kNot) ? l.arg() : l;
  if (letter.is(K::kAtom)) return true;
  if (!letter.is(K::kKnow) && !letter.is(K::kAtMost)) return false;
  return !MentionsVal(letter.arg()) && IsIObjective(letter.arg(), letter.agent());
}

}  // namespace

Formula SeparateModalArguments(const Formula& f) { return Rewrite(f); }

Formula NormalForm(const Formula& f) {
  if (MentionsVal(f)) throw NormalFormError("normal form is undefined for formulas mentioning Val or Sat");
  const Formula separated = Fold(Rewrite(Fold(Desugar(f))));
  if (separated.is(K::kTrue) || separated.is(K::kFalse)) return separated;
  std::vector<Formula> disjuncts;
  std::vector<std::string> seen;
  for (const Literals& term : ToDnf(separated)) {
    const Formula d = Fold(Conjunction(Arrange(term)));
    if (d.is(K::kFalse)) continue;
    if (d.is(K::kTrue)) return d;
    std::string key = ToString(d);
    if (std::find(seen.begin(), seen.end(), key) != seen.end()) continue;
    seen.push_back(std::move(key));
    disjuncts.push_back(d);
  }
  return Disjunction(disjuncts);
}

bool IsInNormalForm(const Formula& f) {
  if (f.is(K::kTrue) || f.is(K::kFalse)) return true;
  std::vector<Formula> disjuncts;
  FlattenOr(f, disjuncts);
  for (const Formula& d : disjuncts) {
    if (d.is(K::kTrue) || d.is(K::kFalse)) continue;
    std::vector<Formula> literals;
    FlattenAnd(d, literals);
    std::set<std::pair<K, Agent>> positive;  // one positive box per block
    for (const Formula& l : literals) {
      if (!IsNormalLiteral(l)) return false;
      if ((l.is(K::kKnow) || l.is(K::kAtMost)) && !positive.emplace(l.kind(), l.agent()).second) return false;
    }
  }
  return true;
}

}  // namespace okn
