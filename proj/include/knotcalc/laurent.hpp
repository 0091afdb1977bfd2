#pragma once

#include <cstdint>
#include <map>
#include <string>

namespace knotcalc {

using i64 = long long;

// Integer Laurent polynomial in one variable t. Coefficient map never
// stores zeros. The canonical representative of the +/- t^m orbit has
// minimum exponent 0 and positive lowest coefficient.
class Laurent {
public:
    Laurent() = default;
    explicit Laurent(i64 constant);
    static Laurent monomial(i64 coeff, int exp);
    static Laurent t();  // the variable itself

    const std::map<int, i64>& coeffs() const { return c_; }
    bool is_zero() const { return c_.empty(); }
    int min_exp() const;
    int max_exp() const;
    // max_exp - min_exp; 0 for constants and for the zero polynomial.
    int degree_spread() const;

    i64 coeff(int exp) const;
    i64 eval(i64 x) const;  // requires min_exp() >= 0 or x = +/-1

    Laurent operator+(const Laurent& o) const;
    Laurent operator-(const Laurent& o) const;
    Laurent operator*(const Laurent& o) const;
    Laurent operator-() const;
    bool operator==(const Laurent& o) const { return c_ == o.c_; }

    Laurent shifted(int dexp) const;  // multiply by t^dexp
    // Exact division; aborts if the remainder is nonzero.
    Laurent divide_exact(const Laurent& divisor) const;

    // Representative with min exponent 0 and positive lowest coefficient.
    Laurent canonical() const;
    // Coefficients reversed end-to-end (t -> 1/t, then canonical shift).
    Laurent reversed() const;
    bool palindromic_up_to_units() const;

    std::string pretty() const;  // e.g. "1 - t + t^2"

    void set_coeff(int exp, i64 v);

private:
    std::map<int, i64> c_;
};

}  // namespace knotcalc
