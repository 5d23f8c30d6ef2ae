#include "okn/k45.h"

#include <algorithm>
#include <array>
#include <map>
#include <memory>
#include <vector>

#include "okn/normal_form.h"
#include "okn/propositional.h"

namespace okn {

using K = Formula::Kind;

namespace {

void CheckBasic(const Formula& f) {
  switch (f.kind()) {
    case K::kAtom:
    case K::kTrue:
    case K::kFalse: return;
    case K::kEq:
      if (f.terms()[0].is_name() && f.terms()[1].is_name()) return;
      throw NotBasicError("formula is not ground: " + ToString(f));
    case K::kAtMost: throw NotBasicError("formula is not basic (mentions N): " + ToString(f));
    case K::kVal: throw NotBasicError("formula mentions Val: " + ToString(f));
    case K::kForall: throw NotBasicError("formula is not ground: " + ToString(f));
    case K::kNot:
    case K::kKnow: CheckBasic(f.arg()); return;
    case K::kAnd:
    case K::kOr:
      CheckBasic(f.lhs());
      CheckBasic(f.rhs());
      return;
    default: throw std::logic_error("CheckBasic expects a desugared formula");
  }
}

Formula PrepareBasic(const Formula& f) {
  Formula d = Desugar(f);
  CheckBasic(d);
  return d;
}

bool Eval(const KripkeModel& m, int w, const Formula& f) {
  switch (f.kind()) {
    case K::kAtom: {
      const int idx = m.vocabulary().IndexOf(AtomKey(f));
      return idx >= 0 && ((m.valuation(w) >> idx) & 1u);
    }
    case K::kTrue: return true;
    case K::kFalse: return false;
    case K::kEq: return f.terms()[0] == f.terms()[1];
    case K::kNot: return !Eval(m, w, f.arg());
    case K::kAnd: return Eval(m, w, f.lhs()) && Eval(m, w, f.rhs());
    case K::kOr: return Eval(m, w, f.lhs()) || Eval(m, w, f.rhs());
    case K::kKnow:
      for (int v : m.Successors(f.agent(), w)) {
        if (!Eval(m, v, f.arg())) return false;
      }
      return true;
    default: throw std::logic_error("unexpected connective in basic formula");
  }
}

// A plan for one world: its valuation and, for each agent it owns, the
// cluster of successor worlds. Cluster members share the successor set.
struct Plan {
  World valuation = 0;
  bool owns[2] = {false, false};
  std::vector<std::shared_ptr<const Plan>> cluster[2];
};

class Solver {
 public:
  explicit Solver(Vocabulary vocab) : vocab_(std::move(vocab)) {}

  // Formulas must be output of SeparateModalArguments. `fixed` is the agent
  // whose relation is determined by the caller, or -1.
  std::shared_ptr<const Plan> Solve(std::vector<Formula> set, int fixed) {
    std::sort(set.begin(), set.end());
    set.erase(std::unique(set.begin(), set.end()), set.end());
    auto key = std::make_pair(set, fixed);
    if (auto it = memo_.find(key); it != memo_.end()) return it->second;
    auto plan = Search(set, fixed);
    memo_.emplace(std::move(key), plan);
    return plan;
  }

 private:
  std::shared_ptr<const Plan> Search(const std::vector<Formula>& set, int fixed) {
    BooleanAbstraction abs;
    const int root = abs.Add(Conjunction(set));
    const int n = abs.letter_count();
    if (n > BooleanAbstraction::kMaxLetters) throw PropositionalLimitError("too many letters for the K45 search");
    const auto& letters = abs.letters();
    for (std::uint64_t v = 0; v < (1ull << n); ++v) {
      const auto x = static_cast<std::uint32_t>(v);
      if (!abs.Evaluate(root, x)) continue;
      auto plan = std::make_shared<Plan>();
      bool ok = true;
      for (Agent i : kAgents) {
        const int ii = static_cast<int>(i);
        std::vector<Formula> positive;
        std::vector<Formula> negative;
        for (int k = 0; k < n; ++k) {
          const Formula& l = letters[k];
          if (!l.is(K::kKnow) || l.agent() != i) continue;
          if (ii == fixed) throw std::logic_error("i-modal letter under a fixed relation");
          ((x >> k) & 1u ? positive : negative).push_back(l.arg());
        }
        if (ii == fixed) continue;
        plan->owns[ii] = true;
        for (const Formula& psi : negative) {
          std::vector<Formula> sub = positive;
          sub.push_back(Formula::Not(psi));
          auto child = Solve(std::move(sub), ii);
          if (!child) {
            ok = false;
            break;
          }
          plan->cluster[ii].push_back(child);
        }
        if (!ok) break;
      }
      if (!ok) continue;
      for (int k = 0; k < n; ++k) {
        if (letters[k].is(K::kAtom) && ((x >> k) & 1u)) {
          const int idx = vocab_.IndexOf(AtomKey(letters[k]));
          if (idx >= 0) plan->valuation |= 1u << idx;
        }
      }
      return plan;
    }
    return nullptr;
  }

  Vocabulary vocab_;
  std::map<std::pair<std::vector<Formula>, int>, std::shared_ptr<const Plan>> memo_;
};

struct Materialized {
  std::vector<World> valuations;
  std::vector<std::pair<int, std::pair<int, int>>> edges;  // agent, (from, to)
};

int Emit(const Plan& plan, Materialized& out) {
  const int self = static_cast<int>(out.valuations.size());
  out.valuations.push_back(plan.valuation);
  for (int i = 0; i < 2; ++i) {
    if (!plan.owns[i]) continue;
    std::vector<int> members;
    for (const auto& child : plan.cluster[i]) members.push_back(Emit(*child, out));
    for (int c : members) {
      out.edges.push_back({i, {self, c}});
      for (int d : members) out.edges.push_back({i, {c, d}});
    }
  }
  return self;
}

}  // namespace

Vocabulary WitnessVocabulary(const Formula& f) {
  auto atoms = Propositions(f);
  if (atoms.empty()) return Vocabulary({"pad1"});
  return Vocabulary(std::vector<std::string>(atoms.begin(), atoms.end()));
}

bool KripkeEval(const KripkeModel& m, int w, const Formula& f) {
  if (w < 0 || w >= m.size()) throw std::out_of_range("world index out of range");
  return Eval(m, w, PrepareBasic(f));
}

std::optional<KripkeWitness> K45Satisfiable(const Formula& f) {
  const Formula prepared = SeparateModalArguments(PrepareBasic(f));
  Vocabulary vocab = WitnessVocabulary(f);
  Solver solver(vocab);
  auto plan = solver.Solve({prepared}, -1);
  if (!plan) return std::nullopt;
  Materialized mat;
  Emit(*plan, mat);
  std::vector<std::string> labels;
  for (std::size_t k = 0; k < mat.valuations.size(); ++k) labels.push_back("w" + std::to_string(k));
  KripkeModel m(vocab, labels);
  for (std::size_t k = 0; k < mat.valuations.size(); ++k) m.set_valuation(static_cast<int>(k), mat.valuations[k]);
  for (const auto& [agent, edge] : mat.edges) m.AddEdge(static_cast<Agent>(agent), edge.first, edge.second);
  return KripkeWitness{KripkeModel::K45Closure(std::move(m)), 0};
}

namespace {

// Postorder program evaluated over bitmasks of worlds.
struct Op {
  enum Code : std::uint8_t { kConst, kAtom, kNot, kAnd, kOr, kBox } code;
  int a = 0;  // atom index, constant, child, or agent
  int b = 0;
  int c = 0;
};

int CompileMask(const Formula& f, const Vocabulary& v, std::vector<Op>& prog) {
  Op op{};
  switch (f.kind()) {
    case K::kTrue:
    case K::kFalse:
    case K::kEq:
      op.code = Op::kConst;
      op.a = f.is(K::kTrue) || (f.is(K::kEq) && f.terms()[0] == f.terms()[1]);
      break;
    case K::kAtom:
      op.code = Op::kAtom;
      op.a = v.IndexOf(AtomKey(f));
      break;
    case K::kNot:
      op.code = Op::kNot;
      op.b = CompileMask(f.arg(), v, prog);
      break;
    case K::kAnd:
    case K::kOr:
      op.code = f.is(K::kAnd) ? Op::kAnd : Op::kOr;
      op.b = CompileMask(f.lhs(), v, prog);
      op.c = CompileMask(f.rhs(), v, prog);
      break;
    case K::kKnow:
      op.code = Op::kBox;
      op.a = static_cast<int>(f.agent());
      op.b = CompileMask(f.arg(), v, prog);
      break;
    default: throw std::logic_error("unexpected connective in basic formula");
  }
  prog.push_back(op);
  return static_cast<int>(prog.size()) - 1;
}

// All transitive, euclidean relations on n worlds as successor masks.
std::vector<std::array<std::uint8_t, 4>> K45Relations(int n) {
  std::vector<std::array<std::uint8_t, 4>> out;
  const int bits = n * n;
  for (std::uint32_t r = 0; r < (1u << bits); ++r) {
    std::array<std::uint8_t, 4> succ{};
    for (int x = 0; x < n; ++x) succ[x] = static_cast<std::uint8_t>((r >> (x * n)) & ((1u << n) - 1));
    bool ok = true;
    for (int x = 0; x < n && ok; ++x) {
      for (int y = 0; y < n && ok; ++y) {
        if (!((succ[x] >> y) & 1u)) continue;
        if ((succ[y] | succ[x]) != succ[x]) ok = false;  // transitive
        if ((succ[x] | succ[y]) != succ[y]) ok = false;  // euclidean
      }
    }
    if (ok) out.push_back(succ);
  }
  return out;
}

void Multisets(int n, int values, std::vector<int>& cur, std::vector<std::vector<int>>& out) {
  if (static_cast<int>(cur.size()) == n) {
    out.push_back(cur);
    return;
  }
  const int start = cur.empty() ? 0 : cur.back();
  for (int v = start; v < values; ++v) {
    cur.push_back(v);
    Multisets(n, values, cur, out);
    cur.pop_back();
  }
}

}  // namespace

std::optional<KripkeWitness> BruteForceK45Sat(const Formula& f, int max_worlds) {
  const Formula d = PrepareBasic(f);
  if (max_worlds < 1 || max_worlds > 4) {
    throw ResourceLimitError("brute-force search supports 1 to 4 worlds", "worlds");
  }
  const Vocabulary vocab = WitnessVocabulary(f);
  if (vocab.size() > 2) throw ResourceLimitError("brute-force search supports at most 2 atoms", "atoms");
  std::vector<Op> prog;
  CompileMask(d, vocab, prog);
  std::vector<std::uint8_t> ext(prog.size());

  for (int n = 1; n <= max_worlds; ++n) {
    const auto relations = K45Relations(n);
    const std::uint8_t all = static_cast<std::uint8_t>((1u << n) - 1);
    std::vector<std::vector<int>> valuations;
    std::vector<int> cur;
    Multisets(n, 1 << vocab.size(), cur, valuations);
    for (const auto& val : valuations) {
      std::uint8_t atom_mask[2] = {0, 0};
      for (int w = 0; w < n; ++w) {
        for (int k = 0; k < vocab.size(); ++k) {
          if ((val[w] >> k) & 1) atom_mask[k & 1] |= static_cast<std::uint8_t>(1u << w);
        }
      }
      for (const auto& ra : relations) {
        for (const auto& rb : relations) {
          const std::array<std::uint8_t, 4>* rel[2] = {&ra, &rb};
          for (std::size_t k = 0; k < prog.size(); ++k) {
            const Op& op = prog[k];
            switch (op.code) {
              case Op::kConst: ext[k] = op.a ? all : 0; break;
              case Op::kAtom: ext[k] = op.a >= 0 ? atom_mask[op.a] : 0; break;
              case Op::kNot: ext[k] = static_cast<std::uint8_t>(~ext[op.b] & all); break;
              case Op::kAnd: ext[k] = ext[op.b] & ext[op.c]; break;
              case Op::kOr: ext[k] = ext[op.b] | ext[op.c]; break;
              case Op::kBox: {
                std::uint8_t m = 0;
                const auto& succ = *rel[op.a];
                for (int w = 0; w < n; ++w) {
                  if ((succ[w] & ext[op.b]) == succ[w]) m |= static_cast<std::uint8_t>(1u << w);
                }
                ext[k] = m;
                break;
              }
            }
          }
          const std::uint8_t result = ext.back();
          if (result == 0) continue;
          std::vector<std::string> labels;
          for (int w = 0; w < n; ++w) labels.push_back("w" + std::to_string(w));
          KripkeModel m(vocab, labels);
          for (int w = 0; w < n; ++w) {
            m.set_valuation(w, static_cast<World>(val[w]));
            for (int i = 0; i < 2; ++i) {
              for (int t = 0; t < n; ++t) {
                if (((*rel[i])[w] >> t) & 1u) m.AddEdge(static_cast<Agent>(i), w, t);
              }
            }
          }
          int designated = 0;
          while (!((result >> designated) & 1u)) ++designated;
          return KripkeWitness{std::move(m), designated};
        }
      }
    }
  }
  return std::nullopt;
}

}  // namespace okn
