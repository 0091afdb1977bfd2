#include "knotcalc/laurent.hpp"

#include <cstdlib>
#include <sstream>
#include <stdexcept>

namespace knotcalc {

namespace {
i64 checked_mul(i64 a, i64 b) {
    i64 r;
    if (__builtin_mul_overflow(a, b, &r)) throw std::overflow_error("laurent: coefficient overflow");
    return r;
}
i64 checked_add(i64 a, i64 b) {
    i64 r;
    if (__builtin_add_overflow(a, b, &r)) throw std::overflow_error("laurent: coefficient overflow");
    return r;
}
}  // namespace

Laurent::Laurent(i64 constant) {
    if (constant != 0) c_[0] = constant;
}

Laurent Laurent::monomial(i64 coeff, int exp) {
    Laurent p;
    if (coeff != 0) p.c_[exp] = coeff;
    return p;
}

Laurent Laurent::t() { return monomial(1, 1); }

int Laurent::min_exp() const { return c_.empty() ? 0 : c_.begin()->first; }
int Laurent::max_exp() const { return c_.empty() ? 0 : c_.rbegin()->first; }
int Laurent::degree_spread() const { return c_.empty() ? 0 : max_exp() - min_exp(); }

i64 Laurent::coeff(int exp) const {
    auto it = c_.find(exp);
    return it == c_.end() ? 0 : it->second;
}

i64 Laurent::eval(i64 x) const {
    i64 acc = 0;
    for (auto& [e, v] : c_) {
        if (e < 0) {
            if (x != 1 && x != -1) throw std::domain_error("laurent: negative exponent");
            acc = checked_add(acc, (e % 2 == 0) ? v : checked_mul(v, x));
            continue;
        }
        i64 p = 1;
        for (int k = 0; k < e; ++k) p = checked_mul(p, x);
        acc = checked_add(acc, checked_mul(v, p));
    }
    return acc;
}

void Laurent::set_coeff(int exp, i64 v) {
    if (v == 0)
        c_.erase(exp);
    else
        c_[exp] = v;
}

Laurent Laurent::operator+(const Laurent& o) const {
    Laurent r = *this;
    for (auto& [e, v] : o.c_) r.set_coeff(e, checked_add(r.coeff(e), v));
    return r;
}

Laurent Laurent::operator-(const Laurent& o) const { return *this + (-o); }

Laurent Laurent::operator-() const {
    Laurent r;
    for (auto& [e, v] : c_) r.c_[e] = -v;
    return r;
}

Laurent Laurent::operator*(const Laurent& o) const {
    Laurent r;
    for (auto& [e1, v1] : c_)
        for (auto& [e2, v2] : o.c_)
            r.set_coeff(e1 + e2, checked_add(r.coeff(e1 + e2), checked_mul(v1, v2)));
    return r;
}

Laurent Laurent::shifted(int dexp) const {
    Laurent r;
    for (auto& [e, v] : c_) r.c_[e + dexp] = v;
    return r;
}

Laurent Laurent::divide_exact(const Laurent& divisor) const {
    if (divisor.is_zero()) throw std::domain_error("laurent: division by zero");
    if (is_zero()) return Laurent();
    // Shift both to ordinary polynomials, long-divide, shift back.
    Laurent num = shifted(-min_exp());
    Laurent den = divisor.shifted(-divisor.min_exp());
    int shift = min_exp() - divisor.min_exp();
    Laurent q;
    i64 lead = den.c_.rbegin()->second;
    int dlead = den.max_exp();
    while (!num.is_zero() && num.max_exp() >= dlead) {
        i64 top = num.c_.rbegin()->second;
        if (top % lead != 0) throw std::domain_error("laurent: inexact division");
        i64 f = top / lead;
        int de = num.max_exp() - dlead;
        Laurent term = monomial(f, de);
        q = q + term;
        num = num - term * den;
    }
    if (!num.is_zero()) throw std::domain_error("laurent: inexact division");
    return q.shifted(shift);
}

Laurent Laurent::canonical() const {
    if (is_zero()) return Laurent();
    Laurent r = shifted(-min_exp());
    if (r.c_.begin()->second < 0) r = -r;
    return r;
}

Laurent Laurent::reversed() const {
    Laurent r;
    for (auto& [e, v] : c_) r.c_[-e] = v;
    return r;
}

bool Laurent::palindromic_up_to_units() const {
    return canonical() == reversed().canonical();
}

std::string Laurent::pretty() const {
    if (c_.empty()) return "0";
    std::ostringstream os;
    bool first = true;
    for (auto& [e, v] : c_) {
        i64 a = v;
        if (first) {
            if (a < 0) {
                os << "-";
                a = -a;
            }
        } else {
            os << (a < 0 ? " - " : " + ");
            a = std::llabs(a);
        }
        if (e == 0) {
            os << a;
        } else {
            if (a != 1) os << a;
            if (e == 1)
                os << "t";
            else if (e == -1)
                os << "t^-1";
            else
                os << "t^" << e;
        }
        first = false;
    }
    return os.str();
}

}  // namespace knotcalc
