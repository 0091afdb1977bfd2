#include "knotcalc/moves.hpp"

#include <algorithm>
#include <deque>
#include <map>
#include <numeric>
#include <set>
#include <sstream>
#include <stdexcept>

#include "json.hpp"

namespace knotcalc {

const char* to_string(MoveKind k) {
    switch (k) {
        case MoveKind::R1Plus: return "R1+";
        case MoveKind::R1Minus: return "R1-";
        case MoveKind::R2Plus: return "R2+";
        case MoveKind::R2Minus: return "R2-";
        case MoveKind::R3: return "R3";
    }
    return "?";
}

const char* to_string(SimplifyVerdict v) {
    switch (v) {
        case SimplifyVerdict::ReducedToUnknot: return "ReducedToUnknot";
        case SimplifyVerdict::IrreducibleWithinBudget: return "IrreducibleWithinBudget";
        case SimplifyVerdict::BudgetExhausted: return "BudgetExhausted";
    }
    return "?";
}

std::string MoveSite::to_json() const {
    nlohmann::ordered_json j;
    j["kind"] = to_string(kind);
    j["crossings"] = nlohmann::ordered_json::array();
    for (int c : {c1, c2, c3})
        if (c >= 0) j["crossings"].push_back(c);
    j["arcs"] = nlohmann::ordered_json::array();
    for (int a : {a1, a2})
        if (a >= 0) j["arcs"].push_back(a);
    j["variant"] = variant;
    j["dirs"] = {dir1, dir2};
    return j.dump();
}

namespace {

bool over_slot(int s) { return s == 1 || s == 3; }

int max_arc(const Diagram& d) {
    int m = 0;
    for (const Crossing& c : d.crossings)
        for (int s = 0; s < 4; ++s) m = std::max(m, c.arc[s]);
    return m;
}

int occurrences(const Diagram& d, int arc) {
    int n = 0;
    for (const Crossing& c : d.crossings)
        for (int s = 0; s < 4; ++s)
            if (c.arc[s] == arc) ++n;
    return n;
}

void relabel_arc(Diagram& d, int from, int to) {
    if (from == to) return;
    for (Crossing& c : d.crossings)
        for (int s = 0; s < 4; ++s)
            if (c.arc[s] == from) c.arc[s] = to;
}

struct UFm {
    std::map<int, int> p;
    int find(int x) {
        if (!p.count(x)) p[x] = x;
        return p[x] == x ? x : p[x] = find(p[x]);
    }
    void join(int a, int b) { p[find(a)] = find(b); }
};

// Role data for an R3 triangle.
struct TriangleRoles {
    int c_ou, c_om, c_um;          // crossings: over+under, over+middle, under+middle
    int t_arc, b_arc, m_arc;       // triangle arcs of the over/under/middle strands
    bool valid = false;
};

TriangleRoles classify_triangle(const ArcTable& t,
                                const std::vector<FaceStep>& steps) {
    TriangleRoles r;
    int cr[3] = {steps[0].crossing, steps[1].crossing, steps[2].crossing};
    int ar[3] = {steps[0].arc, steps[1].arc, steps[2].arc};
    if (cr[0] == cr[1] || cr[1] == cr[2] || cr[0] == cr[2]) return r;
    if (ar[0] == ar[1] || ar[1] == ar[2] || ar[0] == ar[2]) return r;
    int t_arc = -1, b_arc = -1, m_arc = -1;
    for (int k = 0; k < 3; ++k) {
        bool oh = over_slot(t.head.at(ar[k]).slot);
        bool ot = over_slot(t.tail.at(ar[k]).slot);
        if (oh && ot)
            t_arc = ar[k];
        else if (!oh && !ot)
            b_arc = ar[k];
        else
            m_arc = ar[k];
    }
    if (t_arc < 0 || b_arc < 0 || m_arc < 0) return r;  // cyclic triangle: no slide
    auto ends = [&](int arc) {
        return std::pair<int, int>{t.head.at(arc).crossing, t.tail.at(arc).crossing};
    };
    auto [th, tt] = ends(t_arc);
    auto [bh, bt] = ends(b_arc);
    auto [mh, mt] = ends(m_arc);
    // The crossing not touched by an arc is named by the other two strands.
    auto other = [&](int p, int q) {
        for (int k = 0; k < 3; ++k)
            if (cr[k] != p && cr[k] != q) return cr[k];
        return -1;
    };
    r.c_um = other(th, tt);  // not on the over strand's arc
    r.c_om = other(bh, bt);
    r.c_ou = other(mh, mt);
    r.t_arc = t_arc;
    r.b_arc = b_arc;
    r.m_arc = m_arc;
    r.valid = r.c_um >= 0 && r.c_om >= 0 && r.c_ou >= 0;
    return r;
}

// The other arc of the same strand at a crossing: the opposite slot pair.
int strand_partner_slot(int slot) { return (slot + 2) % 4; }

int partner_arc_at(const Diagram& d, const ArcTable& t, int arc, int crossing) {
    // The strand continues at the opposite slot of the arc's end there.
    for (auto end : {t.head.at(arc), t.tail.at(arc)})
        if (end.crossing == crossing)
            return d.crossings[crossing].arc[strand_partner_slot(end.slot)];
    throw std::logic_error("arc has no end at the crossing");
}

}  // namespace

namespace {
Diagram apply_move_unchecked(const Diagram& d, const MoveSite& site);
}

std::vector<MoveSite> find_move_sites(const Diagram& d) {
    std::vector<MoveSite> candidates;
    auto& sites = candidates;
    // R1+ insertions, one family of four kink shapes per arc.
    std::set<int> arcs_seen;
    for (const Crossing& c : d.crossings)
        for (int s = 0; s < 4; ++s) arcs_seen.insert(c.arc[s]);
    for (int a : arcs_seen)
        for (int v = 0; v < 4; ++v) {
            MoveSite ms;
            ms.kind = MoveKind::R1Plus;
            ms.a1 = a;
            ms.variant = v;
            sites.push_back(ms);
        }
    if (d.extra_circles > 0)
        for (int v = 0; v < 4; ++v) {
            MoveSite ms;
            ms.kind = MoveKind::R1Plus;
            ms.a1 = 0;
            ms.variant = v;
            sites.push_back(ms);
        }
    // R1- at monogon corners.
    for (int ci = 0; ci < (int)d.crossings.size(); ++ci)
        for (int v = 0; v < 4; ++v)
            if (d.crossings[ci].arc[v] == d.crossings[ci].arc[(v + 1) % 4]) {
                MoveSite ms;
                ms.kind = MoveKind::R1Minus;
                ms.c1 = ci;
                ms.variant = v;
                sites.push_back(ms);
            }
    if (d.crossings.empty()) return sites;
    ArcTable t = arc_table(d);
    FaceData f = trace_faces(d);
    for (const auto& face : f.faces) {
        if (face.size() == 2 && face[0].arc != face[1].arc &&
            face[0].crossing != face[1].crossing) {
            // Bigon: removable when one arc is over at both ends and the
            // other under at both ends.
            int u = face[0].arc, v = face[1].arc;
            int cu = face[0].crossing, cv = face[1].crossing;
            bool u_over_both = over_slot(t.head.at(u).slot) && over_slot(t.tail.at(u).slot);
            bool u_under_both = !over_slot(t.head.at(u).slot) && !over_slot(t.tail.at(u).slot);
            bool v_over_both = over_slot(t.head.at(v).slot) && over_slot(t.tail.at(v).slot);
            bool v_under_both = !over_slot(t.head.at(v).slot) && !over_slot(t.tail.at(v).slot);
            if ((u_over_both && v_under_both) || (u_under_both && v_over_both)) {
                MoveSite ms;
                ms.kind = MoveKind::R2Minus;
                ms.c1 = cu;
                ms.c2 = cv;
                ms.a1 = u_over_both ? u : v;
                ms.a2 = u_over_both ? v : u;
                sites.push_back(ms);
            }
        }
        if (face.size() == 3) {
            TriangleRoles r = classify_triangle(t, face);
            if (r.valid) {
                MoveSite ms;
                ms.kind = MoveKind::R3;
                ms.c1 = r.c_ou;
                ms.c2 = r.c_om;
                ms.c3 = r.c_um;
                ms.a1 = r.b_arc;
                ms.a2 = r.m_arc;
                sites.push_back(ms);
            }
        }
        // R2+ insertions for every ordered pair of distinct arcs on the face.
        std::set<std::tuple<int, bool, int, bool>> done;
        for (const FaceStep& sx : face)
            for (const FaceStep& sy : face) {
                if (sx.arc == sy.arc) continue;
                auto key = std::make_tuple(sx.arc, sx.forward, sy.arc, sy.forward);
                if (!done.insert(key).second) continue;
                MoveSite ms;
                ms.kind = MoveKind::R2Plus;
                ms.a1 = sx.arc;
                ms.a2 = sy.arc;
                ms.dir1 = sx.forward;
                ms.dir2 = sy.forward;
                sites.push_back(ms);
            }
    }
    // Keep only sites whose application yields a valid diagram. Heavily
    // degenerate local patterns (kink loops doubling as two of a
    // triangle's outer strands, say) match the slot tests but cannot be
    // rewired by the generic templates.
    std::vector<MoveSite> good;
    for (const MoveSite& ms : candidates) {
        try {
            Diagram nd = apply_move_unchecked(d, ms);
            if (validate(nd).ok()) good.push_back(ms);
        } catch (const std::exception&) {
        }
    }
    return good;
}

namespace {

Diagram apply_r1_minus(const Diagram& d, const MoveSite& site) {
    if (site.c1 < 0 || site.c1 >= (int)d.crossings.size())
        throw std::invalid_argument("R1-: no such crossing");
    const Crossing c = d.crossings[site.c1];
    int v = site.variant & 3;
    if (c.arc[v] != c.arc[(v + 1) % 4])
        throw std::invalid_argument("R1-: no monogon at the given corner");
    // Outer strand: the arcs at the two remaining slots merge.
    int in_arc, out_arc;
    switch (v) {
        case 0: in_arc = c.arc[3]; out_arc = c.arc[2]; break;
        case 1: in_arc = c.arc[0]; out_arc = c.arc[3]; break;
        case 2: in_arc = c.arc[0]; out_arc = c.arc[1]; break;
        default: in_arc = c.arc[1]; out_arc = c.arc[2]; break;
    }
    Diagram out = d;
    out.crossings.erase(out.crossings.begin() + site.c1);
    int keep = std::min(in_arc, out_arc);
    relabel_arc(out, std::max(in_arc, out_arc), keep);
    if (occurrences(out, keep) == 0) out.extra_circles++;
    return out;
}

Diagram apply_r1_plus(const Diagram& d, const MoveSite& site) {
    Diagram out = d;
    int x, m, loop;
    if (site.a1 == 0) {
        if (d.extra_circles <= 0) throw std::invalid_argument("R1+: no free circle");
        out.extra_circles--;
        int base = max_arc(d);
        x = m = base + 1;
        loop = base + 2;
    } else {
        ArcTable t = arc_table(d);
        if (!t.head.count(site.a1)) throw std::invalid_argument("R1+: no such arc");
        x = site.a1;
        m = max_arc(d) + 1;
        loop = m + 1;
        ArcEnd h = t.head.at(x);
        out.crossings[h.crossing].arc[h.slot] = m;
    }
    Crossing nc;
    switch (site.variant & 3) {
        case 0: nc.arc = {loop, loop, m, x}; nc.sign = 1; break;
        case 1: nc.arc = {x, loop, loop, m}; nc.sign = -1; break;
        case 2: nc.arc = {x, m, loop, loop}; nc.sign = 1; break;
        default: nc.arc = {loop, x, m, loop}; nc.sign = -1; break;
    }
    out.crossings.push_back(nc);
    return out;
}

Diagram apply_r2_minus(const Diagram& d, const MoveSite& site) {
    int n = (int)d.crossings.size();
    if (site.c1 < 0 || site.c2 < 0 || site.c1 >= n || site.c2 >= n || site.c1 == site.c2)
        throw std::invalid_argument("R2-: bad crossings");
    ArcTable t = arc_table(d);
    int u = site.a1, v = site.a2;
    auto check_between = [&](int arc) {
        auto h = t.head.at(arc), tl = t.tail.at(arc);
        return (h.crossing == site.c1 && tl.crossing == site.c2) ||
               (h.crossing == site.c2 && tl.crossing == site.c1);
    };
    if (!t.head.count(u) || !t.head.count(v) || !check_between(u) || !check_between(v))
        throw std::invalid_argument("R2-: arcs do not join the two crossings");
    bool u_over = over_slot(t.head.at(u).slot) && over_slot(t.tail.at(u).slot);
    bool v_under = !over_slot(t.head.at(v).slot) && !over_slot(t.tail.at(v).slot);
    if (!u_over || !v_under)
        throw std::invalid_argument("R2-: strands are not over-over/under-under");
    if (d.crossings[site.c1].sign == d.crossings[site.c2].sign)
        throw std::invalid_argument("R2-: crossings do not have opposite signs");
    // Chain neighbours: p -> u -> q and r -> v -> s.
    int p = partner_arc_at(d, t, u, t.tail.at(u).crossing);
    int q = partner_arc_at(d, t, u, t.head.at(u).crossing);
    int r = partner_arc_at(d, t, v, t.tail.at(v).crossing);
    int s = partner_arc_at(d, t, v, t.head.at(v).crossing);
    Diagram out = d;
    out.crossings.erase(out.crossings.begin() + std::max(site.c1, site.c2));
    out.crossings.erase(out.crossings.begin() + std::min(site.c1, site.c2));
    UFm uf;
    uf.join(u, p);
    uf.join(q, p);
    uf.join(v, r);
    uf.join(s, r);
    std::map<int, int> rep_min;
    for (int a : {p, u, q, r, v, s}) {
        int root = uf.find(a);
        if (!rep_min.count(root) || a < rep_min[root]) rep_min[root] = a;
    }
    for (int a : {p, u, q, r, v, s}) relabel_arc(out, a, rep_min[uf.find(a)]);
    for (auto& [root, rep] : rep_min)
        if (occurrences(out, rep) == 0) out.extra_circles++;
    return out;
}

Diagram apply_r2_plus(const Diagram& d, const MoveSite& site) {
    ArcTable t = arc_table(d);
    int x = site.a1, y = site.a2;
    if (x == y || !t.head.count(x) || !t.head.count(y))
        throw std::invalid_argument("R2+: need two distinct arcs");
    FaceData f = trace_faces(d);
    int fx = site.dir1 ? f.right_of_forward.at(x) : f.right_of_backward.at(x);
    int fy = site.dir2 ? f.right_of_forward.at(y) : f.right_of_backward.at(y);
    if (fx != fy) throw std::invalid_argument("R2+: arcs do not share the given face");
    int base = max_arc(d);
    int xm = base + 1, xe = base + 2, ym = base + 3, ye = base + 4;
    Diagram out = d;
    // Split both arcs into three pieces along their flow.
    ArcEnd hx = t.head.at(x), hy = t.head.at(y);
    out.crossings[hx.crossing].arc[hx.slot] = xe;
    out.crossings[hy.crossing].arc[hy.slot] = ye;
    Crossing c1, c2;
    bool xf = site.dir1, yf = site.dir2;
    if (!xf && yf) {  // x east below the face, y east above
        c1.arc = {y, x, ym, xm};
        c2.arc = {ym, xe, ye, xm};
    } else if (!xf && !yf) {
        c1.arc = {ym, xm, ye, x};
        c2.arc = {y, xm, ym, xe};
    } else if (xf && yf) {
        c1.arc = {ym, x, ye, xm};
        c2.arc = {y, xe, ym, xm};
    } else {
        c1.arc = {y, xm, ym, x};
        c2.arc = {ym, xm, ye, xe};
    }
    // Signs follow from which over slot receives the incoming over piece:
    // x runs into c1 and xm into c2 in every layout.
    auto fix_sign = [&](Crossing& c, int over_in_arc) {
        c.sign = c.arc[3] == over_in_arc ? 1 : -1;
    };
    fix_sign(c1, x);
    fix_sign(c2, xm);
    out.crossings.push_back(c1);
    out.crossings.push_back(c2);
    return out;
}

Diagram apply_r3(const Diagram& d, const MoveSite& site) {
    int n = (int)d.crossings.size();
    if (site.c1 < 0 || site.c2 < 0 || site.c3 < 0 || site.c1 >= n || site.c2 >= n ||
        site.c3 >= n)
        throw std::invalid_argument("R3: bad crossings");
    ArcTable t = arc_table(d);
    int b_arc = site.a1, m_arc = site.a2;
    // Locate the external strand pieces.
    auto has_end_at = [&](int arc, int crossing) {
        return t.head.at(arc).crossing == crossing || t.tail.at(arc).crossing == crossing;
    };
    if (!t.head.count(b_arc) || !t.head.count(m_arc))
        throw std::invalid_argument("R3: missing arcs");
    if (!has_end_at(b_arc, site.c1) || !has_end_at(b_arc, site.c3) ||
        !has_end_at(m_arc, site.c2) || !has_end_at(m_arc, site.c3))
        throw std::invalid_argument("R3: arcs do not match the triangle");
    // Slot-targeted rewiring: external strand pieces can alias triangle
    // arcs by label, so every substitution addresses a slot, not a label.
    auto slot_at = [&](int arc, int crossing) {
        ArcEnd h = t.head.at(arc), tl = t.tail.at(arc);
        if (h.crossing == crossing) return h.slot;
        if (tl.crossing == crossing) return tl.slot;
        throw std::invalid_argument("R3: arc has no end at the crossing");
    };
    int ext_b1 = partner_arc_at(d, t, b_arc, site.c1);
    int ext_b2 = partner_arc_at(d, t, b_arc, site.c3);
    int ext_m1 = partner_arc_at(d, t, m_arc, site.c2);
    int ext_m2 = partner_arc_at(d, t, m_arc, site.c3);
    Diagram out = d;
    {
        Crossing& c = out.crossings[site.c3];
        int sb = slot_at(b_arc, site.c3), sm = slot_at(m_arc, site.c3);
        c.arc[sb] = ext_b1;
        c.arc[strand_partner_slot(sb)] = b_arc;
        c.arc[sm] = ext_m1;
        c.arc[strand_partner_slot(sm)] = m_arc;
    }
    {
        Crossing& c = out.crossings[site.c1];
        int sb = slot_at(b_arc, site.c1);
        c.arc[sb] = ext_b2;
        c.arc[strand_partner_slot(sb)] = b_arc;
    }
    {
        Crossing& c = out.crossings[site.c2];
        int sm = slot_at(m_arc, site.c2);
        c.arc[sm] = ext_m2;
        c.arc[strand_partner_slot(sm)] = m_arc;
    }
    return out;
}

Diagram apply_move_unchecked(const Diagram& d, const MoveSite& site) {
    switch (site.kind) {
        case MoveKind::R1Minus: return apply_r1_minus(d, site);
        case MoveKind::R1Plus: return apply_r1_plus(d, site);
        case MoveKind::R2Minus: return apply_r2_minus(d, site);
        case MoveKind::R2Plus: return apply_r2_plus(d, site);
        case MoveKind::R3: return apply_r3(d, site);
    }
    throw std::invalid_argument("unknown move kind");
}

}  // namespace

Diagram apply_move(const Diagram& d, const MoveSite& site) {
    Diagram out = apply_move_unchecked(d, site);
    ValidationReport rep = validate(out);
    if (!rep.ok())
        throw std::invalid_argument("move site does not apply: " + rep.violations[0].code);
    return out;
}

namespace {

struct SearchNode {
    Diagram diagram;
    int parent;
    MoveSite via;
};

}  // namespace

SimplifyResult simplify(const Diagram& d, int max_crossings, int max_states) {
    require_valid(d);
    if (component_count(d) != 1) throw std::invalid_argument("simplify expects a knot diagram");
    std::vector<SearchNode> nodes;
    std::map<std::string, int> seen;
    nodes.push_back({d, -1, MoveSite{}});
    seen[canonical_form(d)] = 0;
    size_t qhead = 0;
    bool exhausted_budget = false;
    bool found_unknot = d.crossings.empty();
    while (qhead < nodes.size() && !found_unknot) {
        if ((int)nodes.size() >= max_states) {
            exhausted_budget = true;
            break;
        }
        int cur = (int)qhead++;
        Diagram curd = nodes[cur].diagram;  // copy: nodes may reallocate
        for (const MoveSite& ms : find_move_sites(curd)) {
            int delta = ms.kind == MoveKind::R1Plus    ? 1
                        : ms.kind == MoveKind::R2Plus  ? 2
                        : ms.kind == MoveKind::R1Minus ? -1
                        : ms.kind == MoveKind::R2Minus ? -2
                                                       : 0;
            if ((int)curd.crossings.size() + delta > max_crossings) continue;
            Diagram nd = apply_move(curd, ms);
            std::string key = canonical_form(nd);
            if (seen.count(key)) continue;
            seen[key] = (int)nodes.size();
            nodes.push_back({nd, cur, ms});
            if (nd.crossings.empty()) {
                found_unknot = true;
                break;
            }
            if ((int)nodes.size() >= max_states) {
                exhausted_budget = true;
                break;
            }
        }
    }
    // Report the first minimum-crossing diagram reached.
    int best = 0;
    for (size_t i = 1; i < nodes.size(); ++i)
        if (nodes[i].diagram.crossings.size() < nodes[best].diagram.crossings.size())
            best = (int)i;
    SimplifyResult res;
    res.result = nodes[best].diagram;
    res.states_explored = (int)nodes.size();
    for (int at = best; nodes[at].parent >= 0; at = nodes[at].parent)
        res.trace.push_back(nodes[at].via);
    std::reverse(res.trace.begin(), res.trace.end());
    if (res.result.crossings.empty())
        res.verdict = SimplifyVerdict::ReducedToUnknot;
    else if (exhausted_budget)
        res.verdict = SimplifyVerdict::BudgetExhausted;
    else
        res.verdict = SimplifyVerdict::IrreducibleWithinBudget;
    return res;
}

std::vector<Diagram> move_orbit(const Diagram& d, int max_crossings, int max_states) {
    require_valid(d);
    std::vector<Diagram> out;
    std::set<std::string> seen;
    std::deque<Diagram> queue;
    queue.push_back(d);
    seen.insert(canonical_form(d));
    while (!queue.empty() && (int)out.size() < max_states) {
        Diagram cur = queue.front();
        queue.pop_front();
        out.push_back(cur);
        for (const MoveSite& ms : find_move_sites(cur)) {
            int delta = ms.kind == MoveKind::R1Plus    ? 1
                        : ms.kind == MoveKind::R2Plus  ? 2
                        : ms.kind == MoveKind::R1Minus ? -1
                        : ms.kind == MoveKind::R2Minus ? -2
                                                       : 0;
            if ((int)cur.crossings.size() + delta > max_crossings) continue;
            if ((int)(seen.size()) >= max_states) break;
            Diagram nd = apply_move(cur, ms);
            std::string key = canonical_form(nd);
            if (seen.count(key)) continue;
            seen.insert(key);
            queue.push_back(nd);
        }
    }
    return out;
}

std::string SimplifyResult::trace_json() const {
    nlohmann::ordered_json j = nlohmann::ordered_json::array();
    for (const MoveSite& m : trace) j.push_back(nlohmann::ordered_json::parse(m.to_json()));
    return j.dump();
}

}  // namespace knotcalc
