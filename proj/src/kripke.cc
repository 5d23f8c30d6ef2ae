#include "okn/kripke.h"

#include <algorithm>
#include <map>
#include <stdexcept>

namespace okn {

KripkeModel::KripkeModel(Vocabulary vocabulary, std::vector<std::string> labels)
    : vocab_(std::move(vocabulary)), labels_(std::move(labels)), valuation_(labels_.size(), 0) {
  if (labels_.empty()) throw std::invalid_argument("a Kripke model needs at least one world");
  for (std::size_t k = 0; k < labels_.size(); ++k) {
    if (std::find(labels_.begin(), labels_.begin() + k, labels_[k]) != labels_.begin() + k) {
      throw std::invalid_argument("duplicate world label '" + labels_[k] + "'");
    }
  }
  for (auto& rel : acc_) rel.assign(labels_.size(), std::vector<bool>(labels_.size(), false));
}

int KripkeModel::IndexOf(const std::string& label) const {
  auto it = std::find(labels_.begin(), labels_.end(), label);
  return it == labels_.end() ? -1 : static_cast<int>(it - labels_.begin());
}

int KripkeModel::IndexOfOrThrow(const std::string& label) const {
  const int w = IndexOf(label);
  if (w < 0) throw std::invalid_argument("unknown world label '" + label + "'");
  return w;
}

void KripkeModel::AddEdge(Agent i, int from, int to) {
  if (to < 0 || to >= size()) throw std::out_of_range("edge target out of range");
  Row(i, from).at(to) = true;
}

bool KripkeModel::HasEdge(Agent i, int from, int to) const { return Row(i, from).at(to); }

std::vector<int> KripkeModel::Successors(Agent i, int w) const {
  std::vector<int> out;
  const auto& row = Row(i, w);
  for (int v = 0; v < size(); ++v) {
    if (row[v]) out.push_back(v);
  }
  return out;
}

bool KripkeModel::IsTransitive(Agent i) const {
  const int n = size();
  for (int x = 0; x < n; ++x) {
    for (int y = 0; y < n; ++y) {
      if (!HasEdge(i, x, y)) continue;
      for (int z = 0; z < n; ++z) {
        if (HasEdge(i, y, z) && !HasEdge(i, x, z)) return false;
      }
    }
  }
  return true;
}

bool KripkeModel::IsEuclidean(Agent i) const {
  const int n = size();
  for (int x = 0; x < n; ++x) {
    for (int y = 0; y < n; ++y) {
      if (!HasEdge(i, x, y)) continue;
      for (int z = 0; z < n; ++z) {
        if (HasEdge(i, x, z) && !HasEdge(i, y, z)) return false;
      }
    }
  }
  return true;
}

bool KripkeModel::IsK45() const {
  for (Agent i : kAgents) {
    if (!IsTransitive(i) || !IsEuclidean(i)) return false;
  }
  return true;
}

KripkeModel KripkeModel::K45Closure(KripkeModel m) {
  const int n = m.size();
  for (Agent i : kAgents) {
    bool changed = true;
    while (changed) {
      changed = false;
      for (int x = 0; x < n; ++x) {
        for (int y = 0; y < n; ++y) {
          if (!m.HasEdge(i, x, y)) continue;
          for (int z = 0; z < n; ++z) {
            if (m.HasEdge(i, y, z) && !m.HasEdge(i, x, z)) {
              m.AddEdge(i, x, z);
              changed = true;
            }
            if (m.HasEdge(i, x, z) && !m.HasEdge(i, y, z)) {
              m.AddEdge(i, y, z);
              changed = true;
            }
          }
        }
      }
    }
  }
  return m;
}

namespace {

class Unfolder {
 public:
  explicit Unfolder(const KripkeModel& m) : m_(m) {}

  StructurePtr Build(Agent i, int w, int k) {
    const auto key = std::make_tuple(static_cast<int>(i), w, k);
    if (auto it = memo_.find(key); it != memo_.end()) return it->second;
    std::vector<Pair> pairs;
    for (int v : m_.Successors(i, w)) {
      pairs.push_back({m_.valuation(v), k == 1 ? nullptr : Build(Other(i), v, k - 1)});
    }
    auto e = EpistemicStructure::Make(i, k, std::move(pairs));
    memo_.emplace(key, e);
    return e;
  }

 private:
  const KripkeModel& m_;
  std::map<std::tuple<int, int, int>, StructurePtr> memo_;
};

}  // namespace

PointedModel Correspondence(const KripkeModel& m, int w0, int k, int j) {
  if (w0 < 0 || w0 >= m.size()) throw std::invalid_argument("designated world out of range");
  if (k < 1 || j < 1) throw DepthError("correspondence depths must be at least 1");
  Unfolder u(m);
  return PointedModel{u.Build(Agent::kA, w0, k), u.Build(Agent::kB, w0, j), m.valuation(w0)};
}

PointedModel Correspondence(const KripkeModel& m, const std::string& w0, int k, int j) {
  return Correspondence(m, m.IndexOfOrThrow(w0), k, j);
}

}  // namespace okn
