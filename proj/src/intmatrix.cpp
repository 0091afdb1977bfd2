#include "knotcalc/intmatrix.hpp"

#include <cstdlib>
#include <numeric>
#include <sstream>
#include <stdexcept>

#include "json.hpp"

namespace knotcalc {

namespace {

i64 narrow(__int128 v, const char* what) {
    if (v > INT64_MAX || v < INT64_MIN) throw std::overflow_error(what);
    return static_cast<i64>(v);
}

// Small exact rational on 64-bit parts, enough for the congruence
// diagonalization of the matrices this library produces.
struct Rat {
    i64 n = 0, d = 1;
    Rat() = default;
    Rat(i64 num) : n(num), d(1) {}
    Rat(i64 num, i64 den) : n(num), d(den) { norm(); }
    void norm() {
        if (d < 0) {
            n = -n;
            d = -d;
        }
        i64 g = std::gcd(std::llabs(n), d);
        if (g > 1) {
            n /= g;
            d /= g;
        }
        if (n == 0) d = 1;
    }
    Rat operator+(const Rat& o) const {
        __int128 num = (__int128)n * o.d + (__int128)o.n * d;
        __int128 den = (__int128)d * o.d;
        return make(num, den);
    }
    Rat operator-(const Rat& o) const {
        __int128 num = (__int128)n * o.d - (__int128)o.n * d;
        return make(num, (__int128)d * o.d);
    }
    Rat operator*(const Rat& o) const { return make((__int128)n * o.n, (__int128)d * o.d); }
    Rat operator/(const Rat& o) const {
        if (o.n == 0) throw std::domain_error("rational division by zero");
        return make((__int128)n * o.d, (__int128)d * o.n);
    }
    int sign() const { return n > 0 ? 1 : (n < 0 ? -1 : 0); }
    static Rat make(__int128 num, __int128 den) {
        if (den < 0) {
            num = -num;
            den = -den;
        }
        __int128 a = num < 0 ? -num : num;
        __int128 b = den;
        while (b) {
            __int128 t = a % b;
            a = b;
            b = t;
        }
        if (a > 1) {
            num /= a;
            den /= a;
        }
        Rat r;
        r.n = narrow(num, "rational overflow");
        r.d = narrow(den, "rational overflow");
        if (r.n == 0) r.d = 1;
        return r;
    }
};

}  // namespace

IntMatrix IntMatrix::identity(int n) {
    IntMatrix m(n);
    for (int i = 0; i < n; ++i) m.at(i, i) = 1;
    return m;
}

IntMatrix IntMatrix::from_rows(const std::vector<std::vector<i64>>& rows) {
    int n = static_cast<int>(rows.size());
    IntMatrix m(n);
    for (int i = 0; i < n; ++i) {
        if (static_cast<int>(rows[i].size()) != n) throw std::invalid_argument("matrix must be square");
        for (int j = 0; j < n; ++j) m.at(i, j) = rows[i][j];
    }
    return m;
}

IntMatrix IntMatrix::transpose() const {
    IntMatrix m(n_);
    for (int i = 0; i < n_; ++i)
        for (int j = 0; j < n_; ++j) m.at(j, i) = at(i, j);
    return m;
}

IntMatrix IntMatrix::operator+(const IntMatrix& o) const {
    if (n_ != o.n_) throw std::invalid_argument("dimension mismatch");
    IntMatrix m(n_);
    for (size_t k = 0; k < a_.size(); ++k) m.a_[k] = a_[k] + o.a_[k];
    return m;
}

IntMatrix IntMatrix::operator*(const IntMatrix& o) const {
    if (n_ != o.n_) throw std::invalid_argument("dimension mismatch");
    IntMatrix m(n_);
    for (int i = 0; i < n_; ++i)
        for (int k = 0; k < n_; ++k) {
            __int128 aik = at(i, k);
            if (aik == 0) continue;
            for (int j = 0; j < n_; ++j) {
                __int128 v = (__int128)m.at(i, j) + aik * o.at(k, j);
                m.at(i, j) = narrow(v, "matrix product overflow");
            }
        }
    return m;
}

i64 IntMatrix::det() const {
    if (n_ == 0) return 1;
    std::vector<__int128> w(a_.begin(), a_.end());
    auto e = [&](int i, int j) -> __int128& { return w[static_cast<size_t>(i) * n_ + j]; };
    __int128 prev = 1;
    int sign = 1;
    for (int k = 0; k < n_ - 1; ++k) {
        if (e(k, k) == 0) {
            int p = -1;
            for (int i = k + 1; i < n_; ++i)
                if (e(i, k) != 0) {
                    p = i;
                    break;
                }
            if (p < 0) return 0;
            for (int j = 0; j < n_; ++j) std::swap(e(k, j), e(p, j));
            sign = -sign;
        }
        for (int i = k + 1; i < n_; ++i)
            for (int j = k + 1; j < n_; ++j)
                e(i, j) = (e(i, j) * e(k, k) - e(i, k) * e(k, j)) / prev;
        prev = e(k, k);
    }
    return sign * narrow(e(n_ - 1, n_ - 1), "determinant overflow");
}

std::vector<i64> IntMatrix::char_poly() const {
    // Exact det(xI - A) by evaluation at n+1 integer points and Lagrange
    // interpolation over the rationals; coefficients are integers.
    int n = n_;
    std::vector<i64> xs(n + 1), ys(n + 1);
    for (int k = 0; k <= n; ++k) {
        xs[k] = k - n / 2;
        IntMatrix m(n);
        for (int i = 0; i < n; ++i)
            for (int j = 0; j < n; ++j) m.at(i, j) = (i == j ? xs[k] : 0) - at(i, j);
        ys[k] = m.det();
    }
    // Newton's divided differences with rational intermediates.
    std::vector<Rat> dd(ys.begin(), ys.end());
    for (int lvl = 1; lvl <= n; ++lvl)
        for (int i = n; i >= lvl; --i)
            dd[i] = (dd[i] - dd[i - 1]) / Rat(xs[i] - xs[i - lvl]);
    std::vector<Rat> poly{dd[n]};
    for (int i = n - 1; i >= 0; --i) {
        poly.insert(poly.begin(), Rat(0));
        for (size_t j = 0; j + 1 < poly.size(); ++j) poly[j] = poly[j] - poly[j + 1] * Rat(xs[i]);
        poly[0] = poly[0] + dd[i];
    }
    std::vector<i64> out(n + 1);
    for (int i = 0; i <= n; ++i) {
        if (poly[i].d != 1) throw std::logic_error("char_poly: non-integer coefficient");
        out[i] = poly[i].n;
    }
    return out;  // out[i] = coefficient of x^i
}

std::string IntMatrix::to_json() const {
    nlohmann::ordered_json j = nlohmann::ordered_json::array();
    for (int i = 0; i < n_; ++i) {
        nlohmann::ordered_json row = nlohmann::ordered_json::array();
        for (int k = 0; k < n_; ++k) row.push_back(at(i, k));
        j.push_back(row);
    }
    return j.dump();
}

IntMatrix IntMatrix::from_json(const std::string& text) {
    auto j = nlohmann::json::parse(text);
    std::vector<std::vector<i64>> rows;
    for (auto& r : j) {
        std::vector<i64> row;
        for (auto& v : r) row.push_back(v.get<i64>());
        rows.push_back(row);
    }
    return from_rows(rows);
}

Laurent alexander_det(const IntMatrix& V) {
    // Bareiss elimination over Z[t]: every division is exact.
    int n = V.dim();
    if (n == 0) return Laurent(1);
    std::vector<Laurent> w(static_cast<size_t>(n) * n);
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j)
            w[static_cast<size_t>(i) * n + j] =
                Laurent(V.at(i, j)) - Laurent::monomial(V.at(j, i), 1);
    auto e = [&](int i, int j) -> Laurent& { return w[static_cast<size_t>(i) * n + j]; };
    Laurent prev(1);
    int sign = 1;
    for (int k = 0; k < n - 1; ++k) {
        if (e(k, k).is_zero()) {
            int p = -1;
            for (int i = k + 1; i < n; ++i)
                if (!e(i, k).is_zero()) {
                    p = i;
                    break;
                }
            if (p < 0) return Laurent();
            for (int j = 0; j < n; ++j) std::swap(e(k, j), e(p, j));
            sign = -sign;
        }
        for (int i = k + 1; i < n; ++i)
            for (int j = k + 1; j < n; ++j)
                e(i, j) = (e(i, j) * e(k, k) - e(i, k) * e(k, j)).divide_exact(prev);
        prev = e(k, k);
    }
    Laurent d = e(n - 1, n - 1);
    return sign > 0 ? d : -d;
}

int signature_symmetric(const IntMatrix& S) {
    int n = S.dim();
    std::vector<Rat> w(static_cast<size_t>(n) * n);
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j) w[static_cast<size_t>(i) * n + j] = Rat(S.at(i, j));
    auto e = [&](int i, int j) -> Rat& { return w[static_cast<size_t>(i) * n + j]; };
    int pos = 0, neg = 0;
    int k = 0;
    while (k < n) {
        // Find a nonzero diagonal pivot among rows/cols >= k.
        int p = -1;
        for (int i = k; i < n; ++i)
            if (e(i, i).sign() != 0) {
                p = i;
                break;
            }
        if (p < 0) {
            // Diagonal all zero: look for a nonzero off-diagonal entry and
            // add row/col j into i to create one.
            int ii = -1, jj = -1;
            for (int i = k; i < n && ii < 0; ++i)
                for (int j = i + 1; j < n; ++j)
                    if (e(i, j).sign() != 0) {
                        ii = i;
                        jj = j;
                        break;
                    }
            if (ii < 0) break;  // remaining block is zero
            for (int j = 0; j < n; ++j) e(ii, j) = e(ii, j) + e(jj, j);
            for (int i = 0; i < n; ++i) e(i, ii) = e(i, ii) + e(i, jj);
            continue;
        }
        if (p != k) {
            for (int j = 0; j < n; ++j) std::swap(e(p, j), e(k, j));
            for (int i = 0; i < n; ++i) std::swap(e(i, p), e(i, k));
        }
        Rat piv = e(k, k);
        if (piv.sign() > 0)
            ++pos;
        else
            ++neg;
        for (int i = k + 1; i < n; ++i) {
            if (e(i, k).sign() == 0) continue;
            Rat f = e(i, k) / piv;
            for (int j = k; j < n; ++j) e(i, j) = e(i, j) - f * e(k, j);
        }
        for (int j = k + 1; j < n; ++j) {
            if (e(k, j).sign() == 0) continue;
            Rat f = e(k, j) / piv;
            for (int i = k; i < n; ++i) e(i, j) = e(i, j) - f * e(i, k);
        }
        ++k;
    }
    return pos - neg;
}

int signature_symmetrized(const IntMatrix& V) { return signature_symmetric(V + V.transpose()); }

int signature_charpoly_oracle(const IntMatrix& S) {
    // Descartes' rule is exact for real-rooted polynomials, and the
    // characteristic polynomial of a symmetric matrix is real-rooted.
    auto p = S.char_poly();
    auto changes = [&](bool negate_odd) {
        int cnt = 0, prev = 0;
        for (size_t i = 0; i < p.size(); ++i) {
            i64 c = p[i];
            if (negate_odd && (i % 2 == 1)) c = -c;
            if (c == 0) continue;
            int s = c > 0 ? 1 : -1;
            if (prev != 0 && s != prev) ++cnt;
            prev = s;
        }
        return cnt;
    };
    int positive_roots = changes(false);
    int negative_roots = changes(true);
    return positive_roots - negative_roots;
}

}  // namespace knotcalc
