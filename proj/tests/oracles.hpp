#pragma once

// Test-only oracles, independent of the surface pipeline they check.

#include <functional>
#include <map>
#include <numeric>
#include <stdexcept>
#include <vector>

#include "knotcalc/diagram.hpp"
#include "knotcalc/laurent.hpp"

namespace knotcalc_oracles {

using knotcalc::ArcEnd;
using knotcalc::ArcTable;
using knotcalc::Crossing;
using knotcalc::Diagram;
using knotcalc::Laurent;

// Fraction-free determinant over the Laurent ring.
inline Laurent laurent_det(std::vector<std::vector<Laurent>> m) {
    int n = (int)m.size();
    if (n == 0) return Laurent(1);
    Laurent prev(1);
    int sign = 1;
    for (int k = 0; k < n - 1; ++k) {
        if (m[k][k].is_zero()) {
            int p = -1;
            for (int i = k + 1; i < n; ++i)
                if (!m[i][k].is_zero()) {
                    p = i;
                    break;
                }
            if (p < 0) return Laurent();
            std::swap(m[k], m[p]);
            sign = -sign;
        }
        for (int i = k + 1; i < n; ++i)
            for (int j = k + 1; j < n; ++j)
                m[i][j] = (m[i][j] * m[k][k] - m[i][k] * m[k][j]).divide_exact(prev);
        prev = m[k][k];
    }
    return sign > 0 ? m[n - 1][n - 1] : -m[n - 1][n - 1];
}

// Alexander polynomial via the knot group: one generator per maximal
// over-strand, one relation per crossing, free-differentiated and
// abelianized; one row and one column deleted before the determinant.
// Entirely independent of the Seifert-surface pipeline.
inline Laurent fox_alexander(const Diagram& d) {
    using namespace knotcalc;
    if (component_count(d) != 1) throw std::invalid_argument("fox_alexander expects a knot");
    if (d.crossings.empty()) return Laurent(1);
    ArcTable t = arc_table(d);
    // Merge arcs across over-passages into Wirtinger strands.
    std::map<int, int> parent;
    std::function<int(int)> find = [&](int a) {
        if (!parent.count(a)) parent[a] = a;
        return parent[a] == a ? a : parent[a] = find(parent[a]);
    };
    auto join = [&](int a, int b) { parent[find(a)] = find(b); };
    for (const Crossing& c : d.crossings) {
        int oin = c.sign > 0 ? c.arc[3] : c.arc[1];
        int oout = c.sign > 0 ? c.arc[1] : c.arc[3];
        join(oin, oout);
    }
    std::map<int, int> gen_id;
    for (int a : t.arcs) {
        int r = find(a);
        if (!gen_id.count(r)) gen_id[r] = (int)gen_id.size();
    }
    int ngen = (int)gen_id.size();
    int nrel = (int)d.crossings.size();
    if (ngen != nrel) throw std::logic_error("wirtinger: generator/relation mismatch");
    std::vector<std::vector<Laurent>> m(nrel, std::vector<Laurent>(ngen));
    for (int ci = 0; ci < nrel; ++ci) {
        const Crossing& c = d.crossings[ci];
        int o = gen_id.at(find(c.sign > 0 ? c.arc[3] : c.arc[1]));
        int uin = gen_id.at(find(c.arc[0]));
        int uout = gen_id.at(find(c.arc[2]));
        Laurent t1 = Laurent::t();
        if (c.sign > 0) {
            m[ci][o] = m[ci][o] + Laurent(1) - t1;
            m[ci][uin] = m[ci][uin] + t1;
            m[ci][uout] = m[ci][uout] - Laurent(1);
        } else {
            m[ci][o] = m[ci][o] + t1 - Laurent(1);
            m[ci][uin] = m[ci][uin] + Laurent(1);
            m[ci][uout] = m[ci][uout] - t1;
        }
    }
    // Drop the last relation and the last generator column.
    std::vector<std::vector<Laurent>> sq(nrel - 1, std::vector<Laurent>(ngen - 1));
    for (int i = 0; i + 1 < nrel; ++i)
        for (int j = 0; j + 1 < ngen; ++j) sq[i][j] = m[i][j];
    return laurent_det(sq).canonical();
}

}  // namespace knotcalc_oracles
