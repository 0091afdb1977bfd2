#include "knotcalc/invariants.hpp"

#include <cstdlib>
#include <stdexcept>

namespace knotcalc {

Laurent alexander(const IntMatrix& V) { return alexander_det(V).canonical(); }

int signature(const IntMatrix& V) { return signature_symmetrized(V); }

i64 determinant_invariant(const IntMatrix& V) { return std::llabs(alexander(V).eval(-1)); }

int genus_lower_bound(const Laurent& delta_canonical, int sigma) {
    int a = (delta_canonical.degree_spread() + 1) / 2;
    int b = (std::abs(sigma) + 1) / 2;
    return a > b ? a : b;
}

IntMatrix enlarge(const IntMatrix& V, const std::vector<i64>& vec, EnlargeKind kind) {
    int n = V.dim();
    if (static_cast<int>(vec.size()) != n) throw std::invalid_argument("enlarge: vector length mismatch");
    IntMatrix W(n + 2);
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j) W.at(i, j) = V.at(i, j);
    if (kind == EnlargeKind::RowType) {
        for (int j = 0; j < n; ++j) W.at(n, j) = vec[j];
        W.at(n + 1, n) = 1;
    } else {
        for (int i = 0; i < n; ++i) W.at(i, n) = vec[i];
        W.at(n, n + 1) = 1;
    }
    return W;
}

IntMatrix reduce(const IntMatrix& W) {
    int m = W.dim();
    if (m < 2) throw std::invalid_argument("reduce: matrix too small");
    int n = m - 2;
    auto zero_cross = [&](bool row_type) {
        // The two border rows/columns outside V and the border vector slot
        // must match one of the two enlargement patterns exactly.
        for (int i = 0; i < n; ++i) {
            if (row_type) {
                if (W.at(i, n) != 0 || W.at(i, n + 1) != 0) return false;
                if (W.at(n + 1, i) != 0) return false;
            } else {
                if (W.at(n, i) != 0 || W.at(n + 1, i) != 0) return false;
                if (W.at(i, n + 1) != 0) return false;
            }
        }
        if (row_type)
            return W.at(n, n) == 0 && W.at(n, n + 1) == 0 && W.at(n + 1, n) == 1 &&
                   W.at(n + 1, n + 1) == 0;
        return W.at(n, n) == 0 && W.at(n + 1, n) == 0 && W.at(n, n + 1) == 1 &&
               W.at(n + 1, n + 1) == 0;
    };
    if (!zero_cross(true) && !zero_cross(false))
        throw std::invalid_argument("reduce: no enlargement pattern in the last two rows/columns");
    IntMatrix V(n);
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j) V.at(i, j) = W.at(i, j);
    return V;
}

IntMatrix congruent(const IntMatrix& V, const IntMatrix& P) {
    if (P.dim() != V.dim()) throw std::invalid_argument("congruent: dimension mismatch");
    i64 d = P.det();
    if (d != 1 && d != -1) throw std::invalid_argument("congruent: P is not unimodular");
    return P.transpose() * V * P;
}

SDistinction s_distinguish(const IntMatrix& V1, const IntMatrix& V2) {
    if (!(alexander(V1) == alexander(V2))) return SDistinction::NotSEquivalent;
    if (signature(V1) != signature(V2)) return SDistinction::NotSEquivalent;
    return SDistinction::Inconclusive;
}

IntMatrix block_sum(const IntMatrix& V1, const IntMatrix& V2) {
    int n1 = V1.dim(), n2 = V2.dim();
    IntMatrix W(n1 + n2);
    for (int i = 0; i < n1; ++i)
        for (int j = 0; j < n1; ++j) W.at(i, j) = V1.at(i, j);
    for (int i = 0; i < n2; ++i)
        for (int j = 0; j < n2; ++j) W.at(n1 + i, n1 + j) = V2.at(i, j);
    return W;
}

i64 satellite_genus(i64 gP, i64 w, i64 gK) {
    if (gP < 0 || gK < 0) throw std::invalid_argument("satellite_genus: negative genus");
    if (gK == 0) throw std::invalid_argument("satellite_genus: companion must be nontrivial (gK >= 1)");
    return gP + std::llabs(w) * gK;
}

}  // namespace knotcalc
