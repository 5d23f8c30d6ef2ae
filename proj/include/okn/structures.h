// Worlds, k-structures, the structure universes and projection.
//
// A k-structure for agent i is a set of pairs (w, e) where e is a
// (k-1)-structure for the other agent; at k = 1 every pair carries the empty
// marker {}, represented by a null StructurePtr. A non-null structure with no
// pairs is the empty set of possibilities and is a different value.

#ifndef OKN_STRUCTURES_H_
#define OKN_STRUCTURES_H_

#include <chrono>
#include <cstdint>
#include <functional>
#include <map>
#include <memory>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include "okn/formula.h"

namespace okn {

// Bit k set iff the k-th vocabulary atom is true.
using World = std::uint32_t;

class Vocabulary {
 public:
  static constexpr int kHardMaxAtoms = 16;

  Vocabulary() = default;
  explicit Vocabulary(std::vector<std::string> atoms);

  const std::vector<std::string>& atoms() const { return atoms_; }
  int size() const { return static_cast<int>(atoms_.size()); }
  int IndexOf(const std::string& atom) const;
  bool Contains(const std::string& atom) const { return IndexOf(atom) >= 0; }
  std::uint64_t world_count() const { return 1ull << atoms_.size(); }

  std::string WorldToString(World w) const;  // "{p, q}"
  std::vector<std::string> TrueAtoms(World w) const;

  friend bool operator==(const Vocabulary&, const Vocabulary&) = default;

 private:
  std::vector<std::string> atoms_;
};

// Raised when an enumeration or sub-query would exceed its configured bound.
class ResourceLimitError : public std::runtime_error {
 public:
  ResourceLimitError(const std::string& what, std::string level)
      : std::runtime_error(what), level_(std::move(level)) {}
  const std::string& level() const { return level_; }

 private:
  std::string level_;
};

class DepthError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

struct Limits {
  int max_atoms = 4;
  std::uint64_t max_structures = 1ull << 20;  // bound on |E^k| and candidate counts
  std::optional<std::chrono::steady_clock::time_point> deadline;
};

class EpistemicStructure;
using StructurePtr = std::shared_ptr<const EpistemicStructure>;

struct Pair {
  World world;
  StructurePtr inner;  // null at depth 1
};

int Compare(const StructurePtr& x, const StructurePtr& y);
int Compare(const Pair& x, const Pair& y);
inline bool operator==(const Pair& x, const Pair& y) { return Compare(x, y) == 0; }
struct PairLess {
  bool operator()(const Pair& x, const Pair& y) const { return Compare(x, y) < 0; }
};

class EpistemicStructure {
 public:
  // Sorts and deduplicates the pairs; throws std::invalid_argument if an
  // inner component has the wrong agent or depth.
  static StructurePtr Make(Agent agent, int depth, std::vector<Pair> pairs);

  Agent agent() const { return agent_; }
  int depth() const { return depth_; }
  const std::vector<Pair>& pairs() const { return pairs_; }
  bool empty() const { return pairs_.empty(); }
  std::size_t hash() const { return hash_; }
  bool Contains(const Pair& p) const;

  EpistemicStructure(Agent agent, int depth, std::vector<Pair> pairs, std::size_t hash)
      : agent_(agent), depth_(depth), pairs_(std::move(pairs)), hash_(hash) {}

 private:
  Agent agent_;
  int depth_;
  std::vector<Pair> pairs_;
  std::size_t hash_;
};

bool StructuresEqual(const StructurePtr& x, const StructurePtr& y);

// A (k,j)-model (e_a, e_b, w); either structure may be the empty marker.
struct PointedModel {
  StructurePtr ea;
  StructurePtr eb;
  World world = 0;

  const StructurePtr& structure(Agent i) const { return i == Agent::kA ? ea : eb; }
  StructurePtr& structure(Agent i) { return i == Agent::kA ? ea : eb; }
};

// All 2^|v| worlds in increasing bit order.
std::vector<World> EnumerateWorlds(const Vocabulary& v, int max_atoms = 4);

// Number of k-structures, 2^(|W| * |E^{k-1}|), or nullopt beyond 2^63.
std::optional<std::uint64_t> StructureCount(const Vocabulary& v, int k);

// Truncation to depth k; 1 <= k <= depth(e).
StructurePtr Project(const StructurePtr& e, int k);

// Lazily materialized structure universes over one vocabulary.
class StructureSpace {
 public:
  StructureSpace(Vocabulary vocabulary, Limits limits = {});

  const Vocabulary& vocabulary() const { return vocab_; }
  const Limits& limits() const { return limits_; }
  const std::vector<World>& worlds() const { return worlds_; }

  // E^k for agent i in enumeration order; throws ResourceLimitError when
  // |E^k| exceeds the structure cap.
  const std::vector<StructurePtr>& Level(Agent i, int k);
  // W x E^{k-1} of the other agent, the pairs a k-structure for i ranges over.
  const std::vector<Pair>& PairUniverse(Agent i, int k);

  // Streams every k-structure for i once, in bit-counting order over
  // PairUniverse(i, k); stops when the callback returns false.
  void ForEachStructure(Agent i, int k, const std::function<bool(const StructurePtr&)>& visit);

  // The subset of PairUniverse(i, k) selected by `members` (indices).
  StructurePtr FromUniverse(Agent i, int k, const std::vector<std::size_t>& members);

  void CheckDeadline() const;

 private:
  Vocabulary vocab_;
  Limits limits_;
  std::vector<World> worlds_;
  std::map<std::pair<int, int>, std::vector<StructurePtr>> levels_;
  std::map<std::pair<int, int>, std::vector<Pair>> universes_;
};

std::string StructureSummary(const Vocabulary& v, const StructurePtr& e);

}  // namespace okn

#endif  // OKN_STRUCTURES_H_
