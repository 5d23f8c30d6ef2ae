// Reading and writing model, Kripke and proof files.
//
//   (model (vocab p q) (world w0) (world w1 p)
//          (struct ea :agent a :depth 2 (pair w1 eb) (pair w0 eb))
//          (struct eb :agent b :depth 1 (pair w1))
//          (point :ea ea :eb eb :w w1))
//   (kripke (vocab p) (worlds u v) (val v p) (acc a (u v) (v v)) (acc b (u u)) (point u))
//   (proof :system AX2 (1 "N[a]p -> !L[a]p" (axiom A5 1)) (2 "..." (mp 1 3)))
//
// Structures may be defined after use. A point key left out means the empty
// marker. All readers throw ParseError.

#ifndef OKN_IO_H_
#define OKN_IO_H_

#include <optional>
#include <string>
#include <string_view>

#include "okn/kripke.h"
#include "okn/proof.h"
#include "okn/structures.h"

namespace okn {

struct ModelFile {
  Vocabulary vocabulary;
  PointedModel model;
};

ModelFile ReadModel(std::string_view text);
std::string WriteModel(const Vocabulary& v, const PointedModel& m);

struct KripkeFile {
  KripkeModel model;
  std::optional<int> point;
};

KripkeFile ReadKripke(std::string_view text);
std::string WriteKripke(const KripkeModel& m, std::optional<int> point = std::nullopt);

ProofScript ReadProof(std::string_view text);
std::string WriteProof(const ProofScript& script);

// Whole file contents; throws std::runtime_error if unreadable.
std::string ReadFile(const std::string& path);
void WriteFile(const std::string& path, const std::string& contents);

}  // namespace okn

#endif  // OKN_IO_H_
