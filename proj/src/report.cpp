#include "knotcalc/report.hpp"

#include <sstream>
#include <stdexcept>

#include "json.hpp"
#include "knotcalc/invariants.hpp"

namespace knotcalc {

InvariantReport compute_report(const Diagram& d, const std::string& input_descriptor) {
    require_valid(d);
    if (component_count(d) != 1)
        throw std::invalid_argument("invariant report requires a knot (one component)");
    InvariantReport r;
    r.input = input_descriptor;
    r.crossings = (int)d.crossings.size();
    r.writhe = knotcalc::writhe(d);
    r.components = 1;
    r.surface = build_surface(d);
    r.seifert = seifert_matrix(d);
    r.alexander = knotcalc::alexander(r.seifert);
    r.signature = knotcalc::signature(r.seifert);
    r.determinant = determinant_invariant(r.seifert);
    r.genus_lower = genus_lower_bound(r.alexander, r.signature);
    r.genus_upper = r.surface.genus;
    if (r.genus_lower == r.genus_upper) r.genus_exact = r.genus_lower;
    return r;
}

std::string InvariantReport::to_json() const {
    nlohmann::ordered_json j;
    j["input"] = input;
    j["crossings"] = crossings;
    j["writhe"] = writhe;
    j["components"] = components;
    j["seifert"] = nlohmann::json::parse(surface.to_json());
    j["seifert_matrix"] = nlohmann::json::parse(seifert.dim() == 0 ? "[]" : seifert.to_json());
    nlohmann::ordered_json coeffs;
    for (auto& [e, c] : alexander.coeffs()) coeffs[std::to_string(e)] = c;
    j["alexander"] = {{"pretty", alexander.pretty()}, {"coeffs", coeffs}};
    j["signature"] = signature;
    j["determinant"] = determinant;
    j["genus_lower"] = genus_lower;
    j["genus_upper"] = genus_upper;
    if (genus_exact)
        j["genus_exact"] = *genus_exact;
    else
        j["genus_exact"] = nullptr;
    return j.dump(2);
}

std::string InvariantReport::to_table() const {
    std::ostringstream os;
    os << "input           " << input << "\n";
    os << "crossings       " << crossings << "\n";
    os << "writhe          " << writhe << "\n";
    os << "seifert         discs " << surface.discs << ", bands " << surface.bands << ", euler "
       << surface.euler << ", genus " << surface.genus << "\n";
    os << "alexander       " << alexander.pretty() << "\n";
    os << "signature       " << signature << "\n";
    os << "determinant     " << determinant << "\n";
    os << "genus bounds    [" << genus_lower << ", " << genus_upper << "]";
    if (genus_exact) os << "  (exact " << *genus_exact << ")";
    os << "\n";
    return os.str();
}

}  // namespace knotcalc
