#pragma once

#include <string>
#include <vector>

#include "knotcalc/diagram.hpp"
#include "knotcalc/notation.hpp"

namespace knotcalc {

struct Rational {
    i64 num = 0;
    i64 den = 1;  // positive; gcd(|num|, den) = 1
};

// Closure of (sigma_1 ... sigma_{q-1})^p on |q| strands; requires
// gcd(|p|,|q|) = 1 and |q| >= 2. The sign of p sets the crossing signs.
Diagram torus_knot(int p, int q);

// a1 + 1/(a2 + 1/(... + 1/al)).
Rational continued_fraction(const std::vector<int>& a);

// Alternating full-twist regions; box i contributes 2|a_i| crossings of
// sign a_i. Requires the associated fraction to have an odd numerator.
Diagram two_bridge(const std::vector<int>& a);

// Fixture registry ("unknot", "trefoil+", "trefoil-", "4_1", "5_2",
// "8_3", "hopf+", and "C(m)").
Diagram named(const std::string& name);
std::vector<std::string> named_list();

}  // namespace knotcalc
