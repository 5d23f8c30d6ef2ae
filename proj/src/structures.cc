#include "okn/structures.h"

#include <algorithm>
#include <set>
#include <sstream>

namespace okn {

Vocabulary::Vocabulary(std::vector<std::string> atoms) : atoms_(std::move(atoms)) {
  if (atoms_.empty()) throw std::invalid_argument("vocabulary must not be empty");
  if (atoms_.size() > static_cast<std::size_t>(kHardMaxAtoms)) {
    throw std::invalid_argument("vocabulary has more than " + std::to_string(kHardMaxAtoms) + " atoms");
  }
  std::set<std::string> seen;
  for (const auto& a : atoms_) {
    if (!seen.insert(a).second) throw std::invalid_argument("duplicate atom '" + a + "' in vocabulary");
  }
}

int Vocabulary::IndexOf(const std::string& atom) const {
  auto it = std::find(atoms_.begin(), atoms_.end(), atom);
  return it == atoms_.end() ? -1 : static_cast<int>(it - atoms_.begin());
}

std::vector<std::string> Vocabulary::TrueAtoms(World w) const {
  std::vector<std::string> out;
  for (int k = 0; k < size(); ++k) {
    if ((w >> k) & 1u) out.push_back(atoms_[k]);
  }
  return out;
}

std::string Vocabulary::WorldToString(World w) const {
  std::string s = "{";
  bool first = true;
  for (const auto& a : TrueAtoms(w)) {
    if (!first) s += ", ";
    s += a;
    first = false;
  }
  return s + "}";
}

int Compare(const StructurePtr& x, const StructurePtr& y) {
  if (x == y) return 0;
  if (!x) return -1;
  if (!y) return 1;
  if (x->agent() != y->agent()) return x->agent() < y->agent() ? -1 : 1;
  if (x->depth() != y->depth()) return x->depth() < y->depth() ? -1 : 1;
  const auto& p = x->pairs();
  const auto& q = y->pairs();
  const std::size_t n = std::min(p.size(), q.size());
  for (std::size_t k = 0; k < n; ++k) {
    if (int c = Compare(p[k], q[k]); c != 0) return c;
  }
  if (p.size() == q.size()) return 0;
  return p.size() < q.size() ? -1 : 1;
}

int Compare(const Pair& x, const Pair& y) {
  if (x.world != y.world) return x.world < y.world ? -1 : 1;
  return Compare(x.inner, y.inner);
}

bool StructuresEqual(const StructurePtr& x, const StructurePtr& y) {
  if (x == y) return true;
  if (!x || !y || x->hash() != y->hash()) return false;
  return Compare(x, y) == 0;
}

namespace {

std::size_t PairHash(const Pair& p) {
  const std::size_t inner = p.inner ? p.inner->hash() : 0x9e3779b9u;
  return (static_cast<std::size_t>(p.world) * 1000003u) ^ (inner + 0x9e3779b97f4a7c15ull + (inner << 6));
}

}  // namespace

StructurePtr EpistemicStructure::Make(Agent agent, int depth, std::vector<Pair> pairs) {
  if (depth < 1) throw std::invalid_argument("structure depth must be at least 1");
  for (const Pair& p : pairs) {
    if (depth == 1) {
      if (p.inner) throw std::invalid_argument("depth-1 pairs must carry the empty marker");
    } else if (!p.inner || p.inner->agent() != Other(agent) || p.inner->depth() != depth - 1) {
      throw std::invalid_argument(std::string("inner structure of a depth-") + std::to_string(depth) +
                                  " structure for " + AgentChar(agent) + " must be a depth-" +
                                  std::to_string(depth - 1) + " structure for " + AgentChar(Other(agent)));
    }
  }
  std::sort(pairs.begin(), pairs.end(), PairLess());
  pairs.erase(std::unique(pairs.begin(), pairs.end()), pairs.end());
  std::size_t h = std::hash<int>()(depth * 2 + static_cast<int>(agent));
  for (const Pair& p : pairs) h = h * 31 + PairHash(p);
  return std::make_shared<const EpistemicStructure>(agent, depth, std::move(pairs), h);
}

bool EpistemicStructure::Contains(const Pair& p) const {
  return std::binary_search(pairs_.begin(), pairs_.end(), p, PairLess());
}

std::vector<World> EnumerateWorlds(const Vocabulary& v, int max_atoms) {
  if (v.size() == 0) throw std::invalid_argument("vocabulary must not be empty");
  if (v.size() > max_atoms) {
    throw ResourceLimitError("vocabulary of " + std::to_string(v.size()) + " atoms exceeds the cap of " +
                                 std::to_string(max_atoms),
                             "W");
  }
  std::vector<World> out;
  for (std::uint64_t w = 0; w < v.world_count(); ++w) out.push_back(static_cast<World>(w));
  return out;
}

std::optional<std::uint64_t> StructureCount(const Vocabulary& v, int k) {
  if (k < 1) return 1;  // E^0 = {{}}
  auto inner = StructureCount(v, k - 1);
  if (!inner) return std::nullopt;
  const unsigned __int128 exponent = static_cast<unsigned __int128>(v.world_count()) * *inner;
  if (exponent >= 63) return std::nullopt;
  return 1ull << static_cast<int>(exponent);
}

StructurePtr Project(const StructurePtr& e, int k) {
  if (!e) throw DepthError("cannot project the empty marker");
  if (k < 1 || k > e->depth()) {
    throw DepthError("projection target " + std::to_string(k) + " outside 1.." + std::to_string(e->depth()));
  }
  if (k == e->depth()) return e;
  std::vector<Pair> pairs;
  pairs.reserve(e->pairs().size());
  for (const Pair& p : e->pairs()) pairs.push_back({p.world, k == 1 ? nullptr : Project(p.inner, k - 1)});
  return EpistemicStructure::Make(e->agent(), k, std::move(pairs));
}

StructureSpace::StructureSpace(Vocabulary vocabulary, Limits limits)
    : vocab_(std::move(vocabulary)), limits_(limits), worlds_(EnumerateWorlds(vocab_, limits_.max_atoms)) {}

void StructureSpace::CheckDeadline() const {
  if (limits_.deadline && std::chrono::steady_clock::now() > *limits_.deadline) {
    throw ResourceLimitError("deadline exceeded", "deadline");
  }
}

const std::vector<Pair>& StructureSpace::PairUniverse(Agent i, int k) {
  if (k < 1) throw DepthError("pair universe needs depth at least 1");
  const auto key = std::make_pair(static_cast<int>(i), k);
  if (auto it = universes_.find(key); it != universes_.end()) return it->second;
  std::vector<Pair> universe;
  if (k == 1) {
    for (World w : worlds_) universe.push_back({w, nullptr});
  } else {
    const auto& inner = Level(Other(i), k - 1);
    universe.reserve(worlds_.size() * inner.size());
    for (World w : worlds_) {
      for (const auto& e : inner) universe.push_back({w, e});
    }
  }
  return universes_.emplace(key, std::move(universe)).first->second;
}

namespace {

std::string LevelName(Agent i, int k) { return std::string("E^") + std::to_string(k) + "(" + AgentChar(i) + ")"; }

}  // namespace

void StructureSpace::ForEachStructure(Agent i, int k, const std::function<bool(const StructurePtr&)>& visit) {
  const auto key = std::make_pair(static_cast<int>(i), k);
  if (auto it = levels_.find(key); it != levels_.end()) {
    for (const auto& e : it->second) {
      if (!visit(e)) return;
    }
    return;
  }
  const auto count = StructureCount(vocab_, k);
  if (!count || *count > limits_.max_structures) {
    throw ResourceLimitError("enumerating " + LevelName(i, k) + " needs " +
                                 (count ? std::to_string(*count) : std::string("more than 2^63")) +
                                 " structures, cap is " + std::to_string(limits_.max_structures),
                             LevelName(i, k));
  }
  const auto& universe = PairUniverse(i, k);
  for (std::uint64_t mask = 0; mask < *count; ++mask) {
    if ((mask & 0xfff) == 0) CheckDeadline();
    std::vector<Pair> pairs;
    for (std::size_t b = 0; b < universe.size(); ++b) {
      if ((mask >> b) & 1u) pairs.push_back(universe[b]);
    }
    if (!visit(EpistemicStructure::Make(i, k, std::move(pairs)))) return;
  }
}

const std::vector<StructurePtr>& StructureSpace::Level(Agent i, int k) {
  const auto key = std::make_pair(static_cast<int>(i), k);
  if (auto it = levels_.find(key); it != levels_.end()) return it->second;
  std::vector<StructurePtr> all;
  ForEachStructure(i, k, [&](const StructurePtr& e) {
    all.push_back(e);
    return true;
  });
  return levels_.emplace(key, std::move(all)).first->second;
}

StructurePtr StructureSpace::FromUniverse(Agent i, int k, const std::vector<std::size_t>& members) {
  const auto& universe = PairUniverse(i, k);
  std::vector<Pair> pairs;
  pairs.reserve(members.size());
  for (std::size_t m : members) pairs.push_back(universe.at(m));
  return EpistemicStructure::Make(i, k, std::move(pairs));
}

namespace {

void Summarize(const Vocabulary& v, const StructurePtr& e, std::ostringstream& os) {
  if (!e) {
    os << "{}";
    return;
  }
  os << "[";
  bool first = true;
  for (const Pair& p : e->pairs()) {
    if (!first) os << ", ";
    first = false;
    os << "(" << v.WorldToString(p.world);
    if (p.inner) {
      os << ", ";
      Summarize(v, p.inner, os);
    }
    os << ")";
  }
  os << "]";
}

}  // namespace

std::string StructureSummary(const Vocabulary& v, const StructurePtr& e) {
  std::ostringstream os;
  Summarize(v, e, os);
  return os.str();
}

}  // namespace okn
