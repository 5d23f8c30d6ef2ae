// Negation normal form and clause/term expansions over Boolean structure.
// Leaves (atoms, L_i, N_i, Val) are kept as opaque letters; a literal is a
// letter or the negation of one.

#ifndef OKN_CLAUSAL_H_
#define OKN_CLAUSAL_H_

#include <vector>

#include "okn/formula.h"

namespace okn {

using Literals = std::vector<Formula>;

bool IsLiteral(const Formula& f);
Formula Complement(const Formula& literal);

// Input must be desugared and quantifier-free. Constants are folded away:
// a tautology yields no clauses, a contradiction one empty clause (and dually
// for terms). Literals inside each clause/term keep first-occurrence order
// and are deduplicated; complementary pairs drop the clause/term.
std::vector<Literals> ToCnf(const Formula& f);
std::vector<Literals> ToDnf(const Formula& f);

// Upper bound on produced clauses/terms before PropositionalLimitError.
inline constexpr std::size_t kMaxClauses = 1 << 14;

}  // namespace okn

#endif  // OKN_CLAUSAL_H_
