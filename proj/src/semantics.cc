#include "okn/semantics.h"

#include <algorithm>
#include <stdexcept>

#include "okn/propositional.h"

namespace okn {

using K = Formula::Kind;

std::string ToString(VerdictKind k) {
  switch (k) {
    case VerdictKind::kSat: return "SAT";
    case VerdictKind::kUnsat: return "UNSAT";
    case VerdictKind::kValid: return "VALID";
    case VerdictKind::kInvalid: return "INVALID";
    case VerdictKind::kBoundExceeded: return "BOUND_EXCEEDED";
  }
  return "?";
}

Engine::Engine(Vocabulary vocabulary, Limits limits, Strategy strategy)
    : space_(std::move(vocabulary), limits), strategy_(strategy) {}

bool Engine::Eval(const PointedModel& m, const Formula& f) {
  switch (f.kind()) {
    case K::kAtom: {
      const int idx = vocabulary().IndexOf(AtomKey(f));
      return idx >= 0 && ((m.world >> idx) & 1u);
    }
    case K::kTrue: return true;
    case K::kFalse: return false;
    case K::kEq:
      if (!f.terms()[0].is_name() || !f.terms()[1].is_name()) {
        throw std::invalid_argument("eval needs a ground formula: " + ToString(f));
      }
      return f.terms()[0] == f.terms()[1];
    case K::kNot: return !Eval(m, f.arg());
    case K::kAnd: return Eval(m, f.lhs()) && Eval(m, f.rhs());
    case K::kOr: return Eval(m, f.lhs()) || Eval(m, f.rhs());
    case K::kKnow:
    case K::kAtMost: {
      const Agent i = f.agent();
      const StructurePtr& e = m.structure(i);
      if (!e) {
        throw DepthError(std::string("formula ") + ToString(f) + " needs a structure for agent " + AgentChar(i));
      }
      PointedModel next = m;
      if (f.is(K::kKnow)) {
        for (const Pair& p : e->pairs()) {
          next.structure(Other(i)) = p.inner;
          next.world = p.world;
          if (!Eval(next, f.arg())) return false;
        }
        return true;
      }
      const auto& universe = space_.PairUniverse(i, e->depth());
      for (const Pair& p : universe) {
        if (e->Contains(p)) continue;
        next.structure(Other(i)) = p.inner;
        next.world = p.world;
        if (!Eval(next, f.arg())) return false;
      }
      return true;
    }
    case K::kVal: return ValidCached(f.arg());
    default: throw std::invalid_argument("eval needs a ground, desugared formula: " + ToString(f));
  }
}

bool Engine::ValidCached(const Formula& g) {
  if (auto it = val_cache_.find(g); it != val_cache_.end()) return it->second;
  if (val_nesting_ >= 2) throw ResourceLimitError("Val sub-queries nested more than 2 deep", "Val");
  struct Guard {
    int& n;
    explicit Guard(int& c) : n(c) { ++n; }
    ~Guard() { --n; }
  } guard(val_nesting_);
  const bool valid = Valid(g).kind == VerdictKind::kValid;
  val_cache_.emplace(g, valid);
  return valid;
}

namespace {

using Subset = std::vector<char>;

void Conjuncts(const Formula& f, std::vector<Formula>& out) {
  if (f.is(K::kAnd)) {
    Conjuncts(f.lhs(), out);
    Conjuncts(f.rhs(), out);
    return;
  }
  if (f.is(K::kNot)) {
    const Formula& a = f.arg();
    if (a.is(K::kOr)) {
      Conjuncts(Formula::Not(a.lhs()), out);
      Conjuncts(Formula::Not(a.rhs()), out);
      return;
    }
    if (a.is(K::kNot)) {
      Conjuncts(a.arg(), out);
      return;
    }
  }
  out.push_back(f);
}

// Modal subformulas of agent i evaluated against the same i-structure as f:
// reached through Boolean connectives and i-modalities only.
void CollectLevel(const Formula& f, Agent i, std::vector<Formula>& members) {
  switch (f.kind()) {
    case K::kNot: CollectLevel(f.arg(), i, members); return;
    case K::kAnd:
    case K::kOr:
      CollectLevel(f.lhs(), i, members);
      CollectLevel(f.rhs(), i, members);
      return;
    case K::kKnow:
    case K::kAtMost:
      if (f.agent() != i) return;
      if (std::find(members.begin(), members.end(), f) == members.end()) members.push_back(f);
      CollectLevel(f.arg(), i, members);
      return;
    default: return;
  }
}

Formula ReplaceLevel(const Formula& f, Agent i, const std::vector<Formula>& members, std::uint64_t t) {
  switch (f.kind()) {
    case K::kNot: return Formula::Not(ReplaceLevel(f.arg(), i, members, t));
    case K::kAnd: return Formula::And(ReplaceLevel(f.lhs(), i, members, t), ReplaceLevel(f.rhs(), i, members, t));
    case K::kOr: return Formula::Or(ReplaceLevel(f.lhs(), i, members, t), ReplaceLevel(f.rhs(), i, members, t));
    case K::kKnow:
    case K::kAtMost: {
      if (f.agent() != i) return f;
      const auto idx = std::find(members.begin(), members.end(), f) - members.begin();
      return ((t >> idx) & 1) ? Formula::True() : Formula::False();
    }
    default: return f;
  }
}

// Builds e with lower <= e <= upper such that every `in` need has a member
// of e outside its set and every `out` need a non-member outside its set.
std::optional<std::vector<std::size_t>> Construct(std::size_t n, const std::vector<const Subset*>& l_true,
                                                  const std::vector<const Subset*>& n_true,
                                                  const std::vector<const Subset*>& l_false,
                                                  const std::vector<const Subset*>& n_false) {
  Subset upper(n, 1), lower(n, 0);
  for (const Subset* s : l_true) {
    for (std::size_t k = 0; k < n; ++k) upper[k] = upper[k] && (*s)[k];
  }
  for (const Subset* s : n_true) {
    for (std::size_t k = 0; k < n; ++k) lower[k] = lower[k] || !(*s)[k];
  }
  for (std::size_t k = 0; k < n; ++k) {
    if (lower[k] && !upper[k]) return std::nullopt;
  }
  struct Need {
    bool in;
    const Subset* s;
  };
  std::vector<Need> needs;
  for (const Subset* s : l_false) {
    bool done = false;
    for (std::size_t k = 0; k < n && !done; ++k) done = lower[k] && !(*s)[k];
    if (!done) needs.push_back({true, s});
  }
  for (const Subset* s : n_false) {
    bool done = false;
    for (std::size_t k = 0; k < n && !done; ++k) done = !upper[k] && !(*s)[k];
    if (!done) needs.push_back({false, s});
  }
  std::vector<std::size_t> free;
  for (std::size_t k = 0; k < n; ++k) {
    if (upper[k] && !lower[k]) free.push_back(k);
  }
  // Free pairs with equal membership across the needs are interchangeable;
  // a class with two members can serve both an in-need and an out-need.
  std::map<std::vector<char>, std::vector<std::size_t>> classes;
  for (std::size_t k : free) {
    std::vector<char> key;
    for (const Need& need : needs) key.push_back(!(*need.s)[k]);
    classes[key].push_back(k);
  }
  std::vector<signed char> mark(n, 0);  // 1 in e, -1 outside
  std::vector<std::size_t> singles;
  for (auto& [key, members] : classes) {
    if (members.size() >= 2) {
      mark[members[0]] = 1;
      mark[members[1]] = -1;
    } else {
      singles.push_back(members[0]);
    }
  }
  std::vector<const Need*> open;
  for (const Need& need : needs) {
    bool done = false;
    for (std::size_t k : free) {
      if (mark[k] == (need.in ? 1 : -1) && !(*need.s)[k]) {
        done = true;
        break;
      }
    }
    if (!done) open.push_back(&need);
  }
  std::function<bool(std::size_t)> dfs = [&](std::size_t idx) {
    if (idx == open.size()) return true;
    const Need& need = *open[idx];
    const signed char want = need.in ? 1 : -1;
    for (std::size_t k : singles) {
      if (mark[k] == want && !(*need.s)[k]) return dfs(idx + 1);
    }
    for (std::size_t k : singles) {
      if (mark[k] != 0 || (*need.s)[k]) continue;
      mark[k] = want;
      if (dfs(idx + 1)) return true;
      mark[k] = 0;
    }
    return false;
  };
  if (!dfs(0)) return std::nullopt;
  std::vector<std::size_t> members;
  for (std::size_t k = 0; k < n; ++k) {
    if (lower[k] || mark[k] == 1) members.push_back(k);
  }
  return members;
}

}  // namespace

struct Engine::Search {
  struct Class {
    StructurePtr e;
    std::uint64_t bits = 0;  // truth of the top-level modal letters of the agent
  };

  Engine& engine;
  const Formula& g;
  BooleanAbstraction abs;
  int root = 0;
  std::vector<std::pair<int, int>> atom_letters;  // letter, vocabulary index
  std::vector<int> leaves[2];                      // letter indices
  std::uint64_t val_bits = 0;
  int depth[2] = {0, 0};
  std::string method[2];

  Search(Engine& e, const Formula& f) : engine(e), g(f) { root = abs.Add(f); }

  PointedModel Component(Agent i, const Pair& p) const {
    PointedModel m;
    m.structure(Other(i)) = p.inner;
    m.world = p.world;
    return m;
  }

  Subset SetOf(Agent i, const Formula& phi) {
    const auto& universe = engine.space_.PairUniverse(i, depth[static_cast<int>(i)]);
    Subset s(universe.size());
    for (std::size_t k = 0; k < universe.size(); ++k) s[k] = engine.Eval(Component(i, universe[k]), phi);
    return s;
  }

  std::uint64_t LeafBits(Agent i, const StructurePtr& e) {
    PointedModel m;
    m.structure(i) = e;
    std::uint64_t bits = 0;
    const auto& ls = leaves[static_cast<int>(i)];
    for (std::size_t k = 0; k < ls.size(); ++k) {
      if (engine.Eval(m, abs.letters()[ls[k]])) bits |= std::uint64_t{1} << k;
    }
    return bits;
  }

  // Returns nullopt when the candidate count exceeds the cap.
  std::optional<std::vector<Class>> Enumerated(Agent i) {
    const int ii = static_cast<int>(i);
    const auto& universe = engine.space_.PairUniverse(i, depth[ii]);
    const std::size_t n = universe.size();
    Subset upper(n, 1), lower(n, 0);
    bool pinned = false;
    std::vector<Formula> conjuncts;
    Conjuncts(g, conjuncts);
    for (const Formula& c : conjuncts) {
      if ((!c.is(K::kKnow) && !c.is(K::kAtMost)) || c.agent() != i || !IsIObjective(c.arg(), i)) continue;
      const Subset s = SetOf(i, c.arg());
      for (std::size_t k = 0; k < n; ++k) {
        if (c.is(K::kKnow)) {
          upper[k] = upper[k] && s[k];
        } else {
          lower[k] = lower[k] || !s[k];
        }
      }
      pinned = true;
    }
    method[ii] = pinned ? "pinned" : "exhaustive";
    std::vector<std::size_t> free;
    for (std::size_t k = 0; k < n; ++k) {
      if (lower[k] && !upper[k]) return std::vector<Class>{};
      if (upper[k] && !lower[k]) free.push_back(k);
    }
    if (free.size() >= 63 || (1ull << free.size()) > engine.space_.limits().max_structures) return std::nullopt;
    std::vector<Class> out;
    std::set<std::uint64_t> seen;
    std::vector<std::size_t> base;
    for (std::size_t k = 0; k < n; ++k) {
      if (lower[k]) base.push_back(k);
    }
    // Stop early once every leaf assignment has a representative.
    const std::size_t all_classes = leaves[ii].size() < 40 ? std::size_t{1} << leaves[ii].size() : SIZE_MAX;
    for (std::uint64_t mask = 0; mask < (1ull << free.size()); ++mask) {
      if ((mask & 0x3ff) == 0) engine.space_.CheckDeadline();
      std::vector<std::size_t> members = base;
      for (std::size_t b = 0; b < free.size(); ++b) {
        if ((mask >> b) & 1u) members.push_back(free[b]);
      }
      StructurePtr e = engine.space_.FromUniverse(i, depth[ii], members);
      const std::uint64_t bits = LeafBits(i, e);
      if (seen.insert(bits).second) out.push_back({e, bits});
      if (seen.size() == all_classes) break;
    }
    return out;
  }

  // Guessed truth values of an agent's modal subformulas, innermost first.
  // Leaves of the query are among them; nested members carry letter -1.
  struct Guess {
    std::vector<Formula> members;
    std::vector<int> letter;
    std::uint64_t tt = 0;
  };

  void PrepareGuess(Agent i) {
    const int ii = static_cast<int>(i);
    method[ii] = "signature";
    Guess& gs = guess[ii];
    for (int l : leaves[ii]) gs.members.push_back(abs.letters()[l]);
    for (int l : leaves[ii]) CollectLevel(abs.letters()[l].arg(), i, gs.members);
    if (gs.members.size() > 64) {
      throw ResourceLimitError("too many modal subformulas for the signature search",
                               std::string("signature(") + AgentChar(i) + ")");
    }
    // A subformula prints shorter than anything containing it.
    std::stable_sort(gs.members.begin(), gs.members.end(), [](const Formula& x, const Formula& y) {
      return ToString(x).size() < ToString(y).size();
    });
    for (const Formula& m : gs.members) gs.letter.push_back(abs.LetterOf(m));
    lazy[ii] = true;
  }

  // Structure meeting the guesses on the first `count` members, if any.
  std::optional<std::vector<std::size_t>> Realize(Agent i, std::size_t count) {
    const int ii = static_cast<int>(i);
    const Guess& gs = guess[ii];
    const auto& universe = engine.space_.PairUniverse(i, depth[ii]);
    std::vector<const Subset*> l_true, n_true, l_false, n_false;
    for (std::size_t k = 0; k < count; ++k) {
      const Formula& m = gs.members[k];
      const Formula arg = ReplaceLevel(m.arg(), i, gs.members, gs.tt);
      auto it = sets[ii].find(arg);
      if (it == sets[ii].end()) it = sets[ii].emplace(arg, SetOf(i, arg)).first;
      const bool value = (gs.tt >> k) & 1;
      if (m.is(K::kKnow)) {
        (value ? l_true : l_false).push_back(&it->second);
      } else {
        (value ? n_true : n_false).push_back(&it->second);
      }
    }
    return Construct(universe.size(), l_true, n_true, l_false, n_false);
  }

  void Tick() {
    if ((++nodes & 0xff) == 0) engine.space_.CheckDeadline();
    if (nodes > engine.space_.limits().max_structures) {
      throw ResourceLimitError("signature search visited more candidates than the cap", "signature");
    }
  }

  // Assigns agent a's letters, then agent b's, pruning on the partial truth
  // value of the query and on realizability of the guesses so far.
  bool Dfs(int ii, std::size_t pos, std::uint64_t x, std::uint64_t known, PointedModel& m) {
    if (ii == 2) return abs.Evaluate(root, x);
    const Agent i = kAgents[ii];
    if (!lazy[ii]) {
      for (const Class& c : classes[ii]) {
        std::uint64_t y = x, ky = known;
        for (std::size_t k = 0; k < leaves[ii].size(); ++k) {
          const std::uint64_t bit = std::uint64_t{1} << leaves[ii][k];
          ky |= bit;
          if ((c.bits >> k) & 1) y |= bit;
        }
        if (abs.EvaluatePartial(root, y, ky) == 0) continue;
        m.structure(i) = c.e;
        if (Dfs(ii + 1, 0, y, ky, m)) return true;
      }
      return false;
    }
    Guess& gs = guess[ii];
    if (pos == gs.members.size()) {
      const auto e = Realize(i, pos);
      if (!e) return false;
      m.structure(i) = engine.space_.FromUniverse(i, depth[ii], *e);
      return Dfs(ii + 1, 0, x, known, m);
    }
    const std::uint64_t own = std::uint64_t{1} << pos;
    for (bool value : {true, false}) {
      Tick();
      gs.tt = value ? gs.tt | own : gs.tt & ~own;
      std::uint64_t y = x, ky = known;
      if (gs.letter[pos] >= 0) {
        const std::uint64_t bit = std::uint64_t{1} << gs.letter[pos];
        ky |= bit;
        if (value) y |= bit;
        if (abs.EvaluatePartial(root, y, ky) == 0) continue;
      }
      if (!Realize(i, pos + 1)) continue;
      if (Dfs(ii, pos + 1, y, ky, m)) return true;
    }
    gs.tt &= ~own;
    return false;
  }

  void Prepare(Agent i) {
    const int ii = static_cast<int>(i);
    if (leaves[ii].empty()) {
      method[ii] = "-";
      classes[ii] = {Class{}};
      return;
    }
    if (engine.strategy_ != Strategy::kSignature) {
      auto out = Enumerated(i);
      if (out) {
        classes[ii] = std::move(*out);
        return;
      }
      if (engine.strategy_ == Strategy::kExhaustive) {
        throw ResourceLimitError(std::string("candidate structures for agent ") + AgentChar(i) + " at depth " +
                                     std::to_string(depth[ii]) + " exceed the cap",
                                 std::string("E^") + std::to_string(depth[ii]) + "(" + AgentChar(i) + ")");
      }
    }
    PrepareGuess(i);
  }

  Verdict Run() {
    if (abs.letter_count() > 64) {
      throw ResourceLimitError("too many top-level letters", "letters");
    }
    const auto& letters = abs.letters();
    std::uint64_t fixed = 0;
    for (int k = 0; k < abs.letter_count(); ++k) {
      const Formula& l = letters[k];
      if (l.is(K::kAtom)) {
        atom_letters.push_back({k, engine.vocabulary().IndexOf(AtomKey(l))});
        fixed |= std::uint64_t{1} << k;
      } else if (l.is(K::kVal)) {
        if (engine.ValidCached(l.arg())) val_bits |= std::uint64_t{1} << k;
        fixed |= std::uint64_t{1} << k;
      } else {
        const int ii = static_cast<int>(l.agent());
        leaves[ii].push_back(k);
        depth[ii] = std::max(depth[ii], AgentDepth(l, l.agent()));
      }
    }
    Prepare(Agent::kA);
    Prepare(Agent::kB);

    Verdict v;
    v.vocabulary = engine.vocabulary();
    v.a_depth = AgentDepth(g, Agent::kA);
    v.b_depth = AgentDepth(g, Agent::kB);
    v.searched_a = depth[0];
    v.searched_b = depth[1];
    v.method = std::string("a:") + method[0] + " b:" + method[1];

    std::vector<World> worlds = {0};
    if (!atom_letters.empty()) worlds = engine.space_.worlds();
    for (World w : worlds) {
      std::uint64_t base = val_bits;
      for (auto [letter, idx] : atom_letters) {
        if (idx >= 0 && ((w >> idx) & 1u)) base |= std::uint64_t{1} << letter;
      }
      if (abs.EvaluatePartial(root, base, fixed) == 0) continue;
      PointedModel m;
      m.world = w;
      if (!Dfs(0, 0, base, fixed, m)) continue;
      if (!engine.Eval(m, g)) throw std::logic_error("witness failed to re-check: " + ToString(g));
      v.kind = VerdictKind::kSat;
      v.model = std::move(m);
      return v;
    }
    v.kind = VerdictKind::kUnsat;
    return v;
  }

  std::vector<Class> classes[2];
  bool lazy[2] = {false, false};
  Guess guess[2];
  std::map<Formula, Subset> sets[2];
  std::uint64_t nodes = 0;
};

Verdict Engine::Satisfiable(const Formula& g) {
  Search search(*this, g);
  return search.Run();
}

Verdict Engine::Valid(const Formula& g) {
  Verdict v = Satisfiable(Formula::Not(g));
  v.kind = v.kind == VerdictKind::kSat ? VerdictKind::kInvalid : VerdictKind::kValid;
  v.a_depth = AgentDepth(g, Agent::kA);
  v.b_depth = AgentDepth(g, Agent::kB);
  return v;
}

Vocabulary QueryVocabulary(const std::vector<Formula>& grounded, const Bounds& b) {
  std::set<std::string> atoms;
  for (const Formula& f : grounded) {
    auto p = Propositions(f);
    atoms.insert(p.begin(), p.end());
  }
  std::vector<std::string> names;
  if (!b.vocabulary.empty()) {
    names = b.vocabulary;
    for (const auto& a : atoms) {
      if (std::find(names.begin(), names.end(), a) == names.end()) {
        throw std::invalid_argument("atom '" + a + "' is not in the declared vocabulary");
      }
    }
  } else {
    names.assign(atoms.begin(), atoms.end());
  }
  int pads = b.pad_atoms;
  if (names.empty() && pads == 0) pads = 1;
  for (int k = 1; pads > 0; ++k) {
    const std::string pad = "pad" + std::to_string(k);
    if (std::find(names.begin(), names.end(), pad) != names.end()) continue;
    names.push_back(pad);
    --pads;
  }
  return Vocabulary(std::move(names));
}

NameDomain QueryDomain(const std::vector<Formula>& fs, const Bounds& b) {
  if (b.names) return *b.names;
  std::set<int> names;
  for (const Formula& f : fs) {
    auto n = NamesIn(f);
    names.insert(n.begin(), n.end());
  }
  if (names.empty()) return NameDomain::FirstN(1);
  return NameDomain(std::vector<int>(names.begin(), names.end()));
}

namespace {

Verdict Decide(const std::vector<Formula>& sigma, const Formula& f, const Bounds& b, bool validity) {
  std::vector<Formula> all = sigma;
  all.push_back(f);
  const NameDomain domain = QueryDomain(all, b);
  std::vector<Formula> grounded;
  for (const Formula& x : all) grounded.push_back(Desugar(Ground(x, domain)));
  const Vocabulary vocab = QueryVocabulary(grounded, b);
  const Formula goal = grounded.back();
  grounded.pop_back();
  Verdict v;
  v.vocabulary = vocab;
  v.a_depth = AgentDepth(goal, Agent::kA);
  v.b_depth = AgentDepth(goal, Agent::kB);
  try {
    Engine engine(vocab, b.limits, b.strategy);
    if (!validity) return engine.Satisfiable(goal);
    if (grounded.empty()) return engine.Valid(goal);
    Verdict s = engine.Satisfiable(Formula::And(Conjunction(grounded), Formula::Not(goal)));
    s.kind = s.kind == VerdictKind::kSat ? VerdictKind::kInvalid : VerdictKind::kValid;
    return s;
  } catch (const ResourceLimitError& e) {
    v.kind = VerdictKind::kBoundExceeded;
    v.level = e.level();
    v.detail = e.what();
  } catch (const PropositionalLimitError& e) {
    v.kind = VerdictKind::kBoundExceeded;
    v.level = "letters";
    v.detail = e.what();
  }
  return v;
}

}  // namespace

Verdict Satisfiable(const Formula& f, const Bounds& b) { return Decide({}, f, b, false); }
Verdict Valid(const Formula& f, const Bounds& b) { return Decide({}, f, b, true); }
Verdict Entails(const std::vector<Formula>& sigma, const Formula& f, const Bounds& b) {
  return Decide(sigma, f, b, true);
}

bool Eval(const PointedModel& m, const Formula& f, const Vocabulary& v, const Limits& limits) {
  Engine engine(v, limits);
  return engine.Eval(m, Desugar(GroundDefault(f)));
}

std::set<std::vector<Formula>> ObjTheory(const StructurePtr& e, Agent i, const std::vector<Formula>& pool,
                                         const Vocabulary& v, const Limits& limits) {
  if (!e) throw DepthError("obj_theory needs a structure, not the empty marker");
  if (e->agent() != i) throw std::invalid_argument("structure belongs to the other agent");
  std::vector<Formula> prepared;
  for (const Formula& phi : pool) {
    if (!IsIObjective(phi, i)) {
      throw std::invalid_argument(std::string("pool member is not ") + AgentChar(i) + "-objective: " + ToString(phi));
    }
    prepared.push_back(Desugar(GroundDefault(phi)));
  }
  Engine engine(v, limits);
  std::set<std::vector<Formula>> out;
  for (const Pair& p : e->pairs()) {
    PointedModel m;
    m.structure(Other(i)) = p.inner;
    m.world = p.world;
    std::vector<Formula> holds;
    for (std::size_t k = 0; k < pool.size(); ++k) {
      if (engine.Eval(m, prepared[k])) holds.push_back(pool[k]);
    }
    out.insert(std::move(holds));
  }
  return out;
}

}  // namespace okn
