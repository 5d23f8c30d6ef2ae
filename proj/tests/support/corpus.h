// Shared formula and proof corpora.

#ifndef OKN_TESTS_SUPPORT_CORPUS_H_
#define OKN_TESTS_SUPPORT_CORPUS_H_

#include <string>
#include <vector>

#include "okn/proof.h"

namespace okn::testing {

// Derivation of O[a](!L[a]X -> !X) -> L[a]!X from the axioms, pl steps
// included. X is the text of an a-objective formula; a5 is the stratum
// index used for N[a]X -> !L[a]X.
ProofScript DefaultProof(const std::string& x, int a5, const std::string& system);

// Single-line variants of a script that must all be rejected: changed
// axioms, indices, citations, formulas and rules.
std::vector<ProofScript> Mutations(const ProofScript& script);

}  // namespace okn::testing

#endif  // OKN_TESTS_SUPPORT_CORPUS_H_
