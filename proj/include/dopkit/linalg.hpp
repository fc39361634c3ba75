#pragma once

#include <vector>

#include "dopkit/rational.hpp"

namespace dopkit {

using RatVec = std::vector<Rat>;
using RatMat = std::vector<RatVec>; // row-major, rectangular

// Exact nullspace basis of A (rows of length n). Basis vectors are primitive
// integer vectors (denominators cleared, content divided out) with the free
// coordinate positive; one vector per non-pivot column of the RREF, ordered
// by free column index. Elimination is fraction-free (Bareiss) on the
// integer-cleared matrix.
std::vector<RatVec> nullspace(const RatMat& a);

// rank via the same elimination
std::size_t rank(const RatMat& a);

// Solve A x = b exactly. Returns false when inconsistent; free variables are
// set to zero.
bool solve_linear(const RatMat& a, const RatVec& b, RatVec& x);

} // namespace dopkit
