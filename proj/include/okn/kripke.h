// Finite Kripke models and their unfolding into k-structures.

#ifndef OKN_KRIPKE_H_
#define OKN_KRIPKE_H_

#include <string>
#include <vector>

#include "okn/structures.h"

namespace okn {

class KripkeModel {
 public:
  KripkeModel(Vocabulary vocabulary, std::vector<std::string> labels);

  // Copy with both relations closed under transitivity and euclideanness.
  static KripkeModel K45Closure(KripkeModel m);

  const Vocabulary& vocabulary() const { return vocab_; }
  const std::vector<std::string>& labels() const { return labels_; }
  int size() const { return static_cast<int>(labels_.size()); }
  int IndexOf(const std::string& label) const;  // -1 if absent
  int IndexOfOrThrow(const std::string& label) const;

  World valuation(int w) const { return valuation_.at(w); }
  void set_valuation(int w, World v) { valuation_.at(w) = v; }

  void AddEdge(Agent i, int from, int to);
  bool HasEdge(Agent i, int from, int to) const;
  // Sorted successor indices.
  std::vector<int> Successors(Agent i, int w) const;

  bool IsTransitive(Agent i) const;
  bool IsEuclidean(Agent i) const;
  bool IsK45() const;

 private:
  std::vector<bool>& Row(Agent i, int w) { return acc_[static_cast<int>(i)].at(w); }
  const std::vector<bool>& Row(Agent i, int w) const { return acc_[static_cast<int>(i)].at(w); }

  Vocabulary vocab_;
  std::vector<std::string> labels_;
  std::vector<World> valuation_;
  std::vector<std::vector<bool>> acc_[2];
};

// The (k,j)-correspondence model of m at w0: e_a^k and e_b^j unfold the
// accessibility relations, the world component is the valuation of w0.
PointedModel Correspondence(const KripkeModel& m, int w0, int k, int j);
PointedModel Correspondence(const KripkeModel& m, const std::string& w0, int k, int j);

}  // namespace okn

#endif  // OKN_KRIPKE_H_
