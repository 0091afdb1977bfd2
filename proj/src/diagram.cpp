#include "knotcalc/diagram.hpp"

#include <algorithm>
#include <map>
#include <numeric>
#include <set>
#include <sstream>
#include <stdexcept>

namespace knotcalc {

bool is_in_slot(const Crossing& c, int slot) {
    if (slot == 0) return true;
    if (slot == 2) return false;
    if (c.sign > 0) return slot == 3;  // over runs d -> b
    return slot == 1;                  // over runs b -> d
}

int out_slot_for_in(const Crossing& c, int in_slot) {
    if (in_slot == 0) return 2;
    (void)c;
    return in_slot == 1 ? 3 : 1;
}

ArcTable arc_table(const Diagram& d) {
    ArcTable t;
    std::set<int> labels;
    for (int ci = 0; ci < (int)d.crossings.size(); ++ci) {
        const Crossing& c = d.crossings[ci];
        for (int s = 0; s < 4; ++s) {
            labels.insert(c.arc[s]);
            auto& m = is_in_slot(c, s) ? t.head : t.tail;
            if (m.count(c.arc[s]))
                throw std::invalid_argument("arc " + std::to_string(c.arc[s]) +
                                            " has conflicting orientation data");
            m[c.arc[s]] = ArcEnd{ci, s};
        }
    }
    t.arcs.assign(labels.begin(), labels.end());
    for (int a : t.arcs)
        if (!t.head.count(a) || !t.tail.count(a))
            throw std::invalid_argument("arc " + std::to_string(a) + " lacks a head or tail");
    return t;
}

namespace {

int next_arc(const Diagram& d, const ArcTable& t, int arc) {
    ArcEnd h = t.head.at(arc);
    const Crossing& c = d.crossings[h.crossing];
    return c.arc[out_slot_for_in(c, h.slot)];
}

}  // namespace

std::vector<std::vector<int>> components(const Diagram& d) {
    ArcTable t = arc_table(d);
    std::set<int> seen;
    std::vector<std::vector<int>> comps;
    for (int a : t.arcs) {
        if (seen.count(a)) continue;
        std::vector<int> cyc;
        int x = a;
        do {
            cyc.push_back(x);
            seen.insert(x);
            x = next_arc(d, t, x);
        } while (x != a);
        comps.push_back(cyc);
    }
    std::sort(comps.begin(), comps.end(),
              [](const auto& p, const auto& q) { return *std::min_element(p.begin(), p.end()) <
                                                        *std::min_element(q.begin(), q.end()); });
    return comps;
}

int component_count(const Diagram& d) {
    return (int)components(d).size() + d.extra_circles;
}

int component_of_arc(const Diagram& d, int arc) {
    auto comps = components(d);
    for (int i = 0; i < (int)comps.size(); ++i)
        for (int a : comps[i])
            if (a == arc) return i;
    throw std::invalid_argument("arc not in diagram");
}

FaceData trace_faces(const Diagram& d) {
    FaceData f;
    int n = (int)d.crossings.size();
    f.corner_face.assign(n, {-1, -1, -1, -1});
    if (n == 0) return f;
    ArcTable t = arc_table(d);
    // State (crossing, slot): a walk arrives into that slot; it leaves via
    // slot+1 and follows the arc there to its other end.
    std::vector<std::array<bool, 4>> done(n, {false, false, false, false});
    for (int c0 = 0; c0 < n; ++c0)
        for (int s0 = 0; s0 < 4; ++s0) {
            if (done[c0][s0]) continue;
            std::vector<FaceStep> walk;
            int c = c0, s = s0;
            int fid = (int)f.faces.size();
            do {
                done[c][s] = true;
                f.corner_face[c][s] = fid;
                int arr = d.crossings[c].arc[s];
                bool forward = is_in_slot(d.crossings[c], s);
                walk.push_back(FaceStep{c, s, arr, forward});
                (forward ? f.right_of_forward : f.right_of_backward)[arr] = fid;
                int s_out = (s + 1) % 4;
                int a = d.crossings[c].arc[s_out];
                // Follow arc a away from (c, s_out) to its other end.
                ArcEnd h = t.head.at(a), tl = t.tail.at(a);
                ArcEnd other = (h.crossing == c && h.slot == s_out) ? tl : h;
                c = other.crossing;
                s = other.slot;
            } while (!(c == c0 && s == s0));
            f.faces.push_back(std::move(walk));
        }
    return f;
}

namespace {

struct UF {
    std::vector<int> p;
    explicit UF(int n) : p(n) { std::iota(p.begin(), p.end(), 0); }
    int find(int x) { return p[x] == x ? x : p[x] = find(p[x]); }
    void join(int a, int b) { p[find(a)] = find(b); }
};

}  // namespace

ValidationReport validate(const Diagram& d) {
    ValidationReport r;
    // Arc incidence: every label exactly twice.
    std::map<int, int> count;
    for (const Crossing& c : d.crossings) {
        if (c.sign != 1 && c.sign != -1)
            r.violations.push_back({"BadSign", "crossing sign must be +1 or -1"});
        for (int s = 0; s < 4; ++s) count[c.arc[s]]++;
    }
    for (auto& [a, k] : count)
        if (k != 2)
            r.violations.push_back({"ArcIncidence", "arc " + std::to_string(a) + " occurs " +
                                                        std::to_string(k) + " times (expected 2)"});
    if (!r.violations.empty()) {
        r.faces = d.crossings.empty() ? 1 + d.extra_circles : 0;
        return r;
    }
    // Orientation: one head and one tail occurrence per arc.
    try {
        arc_table(d);
    } catch (const std::invalid_argument& e) {
        r.violations.push_back({"OrientationConflict", e.what()});
        return r;
    }
    if (d.crossings.empty()) {
        r.faces = 1 + d.extra_circles;
        return r;
    }
    // Planarity: face count per connected piece of the 4-valent graph.
    FaceData f = trace_faces(d);
    int n = (int)d.crossings.size();
    UF uf(n);
    std::map<int, int> first_at;
    for (int ci = 0; ci < n; ++ci)
        for (int s = 0; s < 4; ++s) {
            int a = d.crossings[ci].arc[s];
            if (first_at.count(a))
                uf.join(ci, first_at[a]);
            else
                first_at[a] = ci;
        }
    std::map<int, int> verts, faces_per;
    for (int ci = 0; ci < n; ++ci) verts[uf.find(ci)]++;
    std::vector<int> face_comp(f.faces.size(), -1);
    for (int fi = 0; fi < (int)f.faces.size(); ++fi)
        face_comp[fi] = uf.find(f.faces[fi][0].crossing);
    for (int fi = 0; fi < (int)f.faces.size(); ++fi) faces_per[face_comp[fi]]++;
    for (auto& [root, v] : verts) {
        int euler = v - 2 * v + faces_per[root];  // V - A + F with A = 2V
        if (euler != 2)
            r.violations.push_back(
                {"Planarity", "connected piece has V-A+F = " + std::to_string(euler) +
                                  " (expected 2); not a plane diagram"});
    }
    r.faces = (int)f.faces.size() + d.extra_circles;
    return r;
}

void require_valid(const Diagram& d) {
    ValidationReport r = validate(d);
    if (!r.ok()) throw std::invalid_argument("invalid diagram: " + r.violations[0].code + ": " +
                                             r.violations[0].message);
}

int writhe(const Diagram& d) {
    int w = 0;
    for (const Crossing& c : d.crossings) w += c.sign;
    return w;
}

Diagram mirror(const Diagram& d) {
    Diagram m;
    m.extra_circles = d.extra_circles;
    for (const Crossing& c : d.crossings) {
        Crossing o;
        // Over/under swap keeps the plane projection: the new under-in is
        // the old over-in; counterclockwise order is unchanged.
        if (c.sign > 0)
            o.arc = {c.arc[3], c.arc[0], c.arc[1], c.arc[2]};
        else
            o.arc = {c.arc[1], c.arc[2], c.arc[3], c.arc[0]};
        o.sign = -c.sign;
        m.crossings.push_back(o);
    }
    return m;
}

Diagram reverse_component(const Diagram& d, int component_index) {
    auto comps = components(d);
    if (component_index < 0 || component_index >= (int)comps.size())
        throw std::invalid_argument("no such component");
    std::set<int> in_comp(comps[component_index].begin(), comps[component_index].end());
    Diagram r;
    r.extra_circles = d.extra_circles;
    for (const Crossing& c : d.crossings) {
        bool under_in = in_comp.count(c.arc[0]) > 0;
        bool over_in = in_comp.count(c.sign > 0 ? c.arc[3] : c.arc[1]) > 0;
        Crossing o = c;
        if (under_in) o.arc = {c.arc[2], c.arc[3], c.arc[0], c.arc[1]};
        if (under_in != over_in) o.sign = -c.sign;
        r.crossings.push_back(o);
    }
    return r;
}

Diagram connected_sum(const Diagram& d1, const Diagram& d2) {
    require_valid(d1);
    require_valid(d2);
    if (component_count(d1) != 1 || component_count(d2) != 1)
        throw std::invalid_argument("connected sum requires two knots");
    if (d1.empty() && d1.extra_circles == 1) return d2;
    if (d2.empty() && d2.extra_circles == 1) return d1;
    // Shift d2 labels above d1's.
    int shift = 0;
    for (const Crossing& c : d1.crossings)
        for (int s = 0; s < 4; ++s) shift = std::max(shift, c.arc[s]);
    Diagram s2 = d2;
    for (Crossing& c : s2.crossings)
        for (int s = 0; s < 4; ++s) c.arc[s] += shift;
    // Cut the lowest arc of each and rejoin head-to-tail, preserving flow:
    // alpha now runs into where beta ran, and beta into where alpha ran.
    ArcTable t1 = arc_table(d1), t2 = arc_table(s2);
    int alpha = t1.arcs.front();
    int beta = t2.arcs.front();  // labels in s2 are already shifted
    Diagram out;
    out.crossings = d1.crossings;
    out.crossings.insert(out.crossings.end(), s2.crossings.begin(), s2.crossings.end());
    ArcEnd ha = t1.head.at(alpha);
    ArcEnd hb = t2.head.at(beta);
    out.crossings[ha.crossing].arc[ha.slot] = beta;
    out.crossings[d1.crossings.size() + hb.crossing].arc[hb.slot] = alpha;
    return out;
}

int linking_number(const Diagram& d, int comp1, int comp2) {
    auto comps = components(d);
    int nc = (int)comps.size();
    int total = nc + d.extra_circles;
    if (comp1 == comp2 || comp1 < 0 || comp2 < 0 || comp1 >= total || comp2 >= total)
        throw std::invalid_argument("linking number needs two distinct components");
    if (comp1 >= nc || comp2 >= nc) return 0;  // a crossingless circle links nothing
    std::set<int> a(comps[comp1].begin(), comps[comp1].end());
    std::set<int> b(comps[comp2].begin(), comps[comp2].end());
    int lk = 0;
    for (const Crossing& c : d.crossings) {
        int over = c.sign > 0 ? c.arc[3] : c.arc[1];
        int under = c.arc[0];
        if (a.count(over) && b.count(under)) lk += c.sign;
    }
    return lk;
}

namespace {

std::string serialize_with_labels(const Diagram& d, const std::map<int, int>& relabel) {
    std::vector<std::array<int, 5>> rows;
    for (const Crossing& c : d.crossings)
        rows.push_back({relabel.at(c.arc[0]), relabel.at(c.arc[1]), relabel.at(c.arc[2]),
                        relabel.at(c.arc[3]), c.sign});
    std::sort(rows.begin(), rows.end());
    std::ostringstream os;
    for (auto& r : rows)
        os << r[0] << "," << r[1] << "," << r[2] << "," << r[3] << "," << (r[4] > 0 ? "+" : "-")
           << ";";
    os << "U" << d.extra_circles;
    return os.str();
}

void min_over_orders(const Diagram& d, const std::vector<std::vector<int>>& comps,
                     std::vector<int>& order, std::vector<bool>& used, std::string& best) {
    if (order.size() == comps.size()) {
        // Basepoint choices per component, in the fixed order.
        std::vector<size_t> base(comps.size(), 0);
        // Enumerate all basepoint combinations.
        while (true) {
            std::map<int, int> relabel;
            int next = 1;
            for (size_t oi = 0; oi < order.size(); ++oi) {
                const auto& cyc = comps[order[oi]];
                for (size_t k = 0; k < cyc.size(); ++k)
                    relabel[cyc[(base[oi] + k) % cyc.size()]] = next++;
            }
            std::string s = serialize_with_labels(d, relabel);
            if (best.empty() || s < best) best = s;
            size_t i = 0;
            for (; i < base.size(); ++i) {
                if (++base[i] < comps[order[i]].size()) break;
                base[i] = 0;
            }
            if (i == base.size()) break;
        }
        return;
    }
    for (size_t c = 0; c < comps.size(); ++c) {
        if (used[c]) continue;
        used[c] = true;
        order.push_back((int)c);
        min_over_orders(d, comps, order, used, best);
        order.pop_back();
        used[c] = false;
    }
}

}  // namespace

std::string canonical_form(const Diagram& d) {
    if (d.crossings.empty()) return "U" + std::to_string(d.extra_circles);
    auto comps = components(d);
    std::string best;
    std::vector<int> order;
    std::vector<bool> used(comps.size(), false);
    min_over_orders(d, comps, order, used, best);
    return best;
}

uint64_t canonical_hash(const Diagram& d) {
    std::string s = canonical_form(d);
    uint64_t h = 1469598103934665603ull;
    for (unsigned char c : s) {
        h ^= c;
        h *= 1099511628211ull;
    }
    return h;
}

}  // namespace knotcalc
