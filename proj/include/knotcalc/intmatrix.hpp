#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "knotcalc/laurent.hpp"

namespace knotcalc {

// Dense square integer matrix.
class IntMatrix {
public:
    IntMatrix() : n_(0) {}
    explicit IntMatrix(int n) : n_(n), a_(static_cast<size_t>(n) * n, 0) {}
    static IntMatrix identity(int n);
    static IntMatrix from_rows(const std::vector<std::vector<i64>>& rows);

    int dim() const { return n_; }
    i64& at(int i, int j) { return a_[static_cast<size_t>(i) * n_ + j]; }
    i64 at(int i, int j) const { return a_[static_cast<size_t>(i) * n_ + j]; }

    IntMatrix transpose() const;
    IntMatrix operator+(const IntMatrix& o) const;
    IntMatrix operator*(const IntMatrix& o) const;
    bool operator==(const IntMatrix& o) const { return n_ == o.n_ && a_ == o.a_; }

    // Exact determinant (Bareiss fraction-free elimination).
    i64 det() const;
    // Characteristic polynomial det(xI - A), exact integer coefficients.
    std::vector<i64> char_poly() const;

    std::string to_json() const;
    static IntMatrix from_json(const std::string& text);

private:
    int n_;
    std::vector<i64> a_;
};

// det(V - t V^T) as an exact Laurent (here ordinary) polynomial.
Laurent alexander_det(const IntMatrix& V);

// Signature of the symmetric matrix V + V^T, computed exactly over the
// rationals by congruence diagonalization with hyperbolic-pivot fallback.
int signature_symmetrized(const IntMatrix& V);
// Signature of an already symmetric integer matrix.
int signature_symmetric(const IntMatrix& S);

// Independent signature oracle: exact characteristic polynomial plus
// Descartes' rule, which is sharp because symmetric matrices have all
// eigenvalues real.
int signature_charpoly_oracle(const IntMatrix& S);

}  // namespace knotcalc
