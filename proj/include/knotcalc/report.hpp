#pragma once

#include <optional>
#include <string>

#include "knotcalc/diagram.hpp"
#include "knotcalc/intmatrix.hpp"
#include "knotcalc/laurent.hpp"
#include "knotcalc/seifert.hpp"

namespace knotcalc {

struct InvariantReport {
    std::string input;
    int crossings = 0;
    int writhe = 0;
    int components = 1;
    SurfaceModel surface;
    IntMatrix seifert;
    Laurent alexander;
    int signature = 0;
    i64 determinant = 1;
    int genus_lower = 0;
    int genus_upper = 0;
    std::optional<int> genus_exact;

    std::string to_json() const;
    std::string to_table() const;
};

// Full pipeline for a knot diagram.
InvariantReport compute_report(const Diagram& d, const std::string& input_descriptor);

}  // namespace knotcalc
