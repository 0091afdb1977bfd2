#pragma once

#include "knotcalc/intmatrix.hpp"
#include "knotcalc/laurent.hpp"

namespace knotcalc {

// det(V - tV^T) brought to canonical form (min exponent 0, positive
// lowest coefficient). The 0x0 matrix yields the constant 1.
Laurent alexander(const IntMatrix& V);

// Signature of V + V^T.
int signature(const IntMatrix& V);

// |Delta(-1)| evaluated on the canonical Alexander polynomial.
i64 determinant_invariant(const IntMatrix& V);

// max(ceil(spread/2), ceil(|sigma|/2)).
int genus_lower_bound(const Laurent& delta_canonical, int sigma);

enum class EnlargeKind { RowType, ColType };

// (n+2)x(n+2) elementary enlargement of V with the given border vector.
IntMatrix enlarge(const IntMatrix& V, const std::vector<i64>& vec, EnlargeKind kind);
// Inverse of enlarge; throws if the border pattern is absent.
IntMatrix reduce(const IntMatrix& W);

// P^T V P for unimodular P.
IntMatrix congruent(const IntMatrix& V, const IntMatrix& P);

enum class SDistinction { NotSEquivalent, Inconclusive };
SDistinction s_distinguish(const IntMatrix& V1, const IntMatrix& V2);

IntMatrix block_sum(const IntMatrix& V1, const IntMatrix& V2);

// gP + |w| * gK; requires gK >= 1.
i64 satellite_genus(i64 gP, i64 w, i64 gK);

}  // namespace knotcalc
