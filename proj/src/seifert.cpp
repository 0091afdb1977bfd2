#include "knotcalc/seifert.hpp"

#include <algorithm>
#include <map>
#include <numeric>
#include <queue>
#include <set>
#include <sstream>
#include <stdexcept>

#include "json.hpp"

namespace knotcalc {

namespace {

// Arc following the oriented smoothing: at the head crossing of an arc the
// strand reconnects without crossing. sign +1 joins a->b and d->c; sign -1
// joins a->d and b->c.
int smooth_succ(const Diagram& d, const ArcTable& t, int arc) {
    ArcEnd h = t.head.at(arc);
    const Crossing& c = d.crossings[h.crossing];
    if (h.slot == 0) return c.sign > 0 ? c.arc[1] : c.arc[3];
    return c.arc[2];  // over-in continues to the under-out side
}

int pick_outer_face(const FaceData& f) {
    int best = -1;
    size_t best_size = 0;
    std::vector<int> best_arcs;
    for (int fi = 0; fi < (int)f.faces.size(); ++fi) {
        std::vector<int> arcs;
        for (const FaceStep& st : f.faces[fi]) arcs.push_back(st.arc);
        std::sort(arcs.begin(), arcs.end());
        if (best < 0 || f.faces[fi].size() > best_size ||
            (f.faces[fi].size() == best_size && arcs < best_arcs)) {
            best = fi;
            best_size = f.faces[fi].size();
            best_arcs = arcs;
        }
    }
    return best;
}

struct UF {
    std::vector<int> p;
    explicit UF(int n) : p(n) { std::iota(p.begin(), p.end(), 0); }
    int find(int x) { return p[x] == x ? x : p[x] = find(p[x]); }
    void join(int a, int b) { p[find(a)] = find(b); }
};

}  // namespace

SeifertStructure build_structure(const Diagram& d, int outer_face) {
    require_valid(d);
    SeifertStructure st;
    st.diagram = d;
    if (d.crossings.empty()) {
        st.outer_face = 0;
        st.region_count = 1;
        return st;
    }
    ArcTable t = arc_table(d);
    // Circles = orbits of the smoothing successor.
    std::map<int, int> circle_of;
    for (int a : t.arcs) {
        if (circle_of.count(a)) continue;
        std::vector<int> cyc;
        int x = a;
        do {
            cyc.push_back(x);
            circle_of[x] = (int)st.circles.circles.size();
            x = smooth_succ(d, t, x);
        } while (x != a);
        st.circles.circles.push_back(cyc);
    }
    int nc = (int)st.circles.circles.size();
    // Bands and rim events.
    st.bands.resize(d.crossings.size());
    st.tail_event.assign(d.crossings.size(), -1);
    st.head_event.assign(d.crossings.size(), -1);
    st.events.resize(nc);
    for (int ci = 0; ci < (int)d.crossings.size(); ++ci) {
        const Crossing& c = d.crossings[ci];
        int over_in = c.sign > 0 ? c.arc[3] : c.arc[1];
        st.bands[ci] = Band{ci, circle_of.at(c.arc[0]), circle_of.at(over_in), c.sign};
        if (st.bands[ci].tail_circle == st.bands[ci].head_circle)
            throw std::logic_error("smoothing produced a band from a circle to itself");
    }
    for (int circ = 0; circ < nc; ++circ) {
        for (int arc : st.circles.circles[circ]) {
            ArcEnd h = t.head.at(arc);
            int side = h.slot == 0 ? 0 : 1;
            int ev = (int)st.events[circ].size();
            st.events[circ].push_back({h.crossing, side});
            (side == 0 ? st.tail_event : st.head_event)[h.crossing] = ev;
        }
    }
    // Plane regions: faces merged across the two smoothing channels.
    FaceData f = trace_faces(d);
    st.outer_face = (outer_face >= 0 && outer_face < (int)f.faces.size()) ? outer_face
                                                                          : pick_outer_face(f);
    UF uf((int)f.faces.size());
    // The oriented smoothing of a + crossing hugs the corners (a,b) and
    // (c,d); the channel between the pieces joins corners (b,c) and (d,a).
    // A - crossing is the reverse.
    for (int ci = 0; ci < (int)d.crossings.size(); ++ci) {
        const auto& cf = f.corner_face[ci];
        if (d.crossings[ci].sign > 0)
            uf.join(cf[1], cf[3]);
        else
            uf.join(cf[0], cf[2]);
    }
    std::map<int, int> region_id;
    for (int fi = 0; fi < (int)f.faces.size(); ++fi) {
        int r = uf.find(fi);
        if (!region_id.count(r)) region_id[r] = (int)region_id.size();
    }
    st.region_count = (int)region_id.size();
    auto region = [&](int face) { return region_id.at(uf.find(face)); };
    st.region_of_band.resize(d.crossings.size());
    for (int ci = 0; ci < (int)d.crossings.size(); ++ci)
        st.region_of_band[ci] =
            region(f.corner_face[ci][d.crossings[ci].sign > 0 ? 1 : 0]);
    // Each circle separates exactly two regions.
    std::vector<int> right_region(nc, -1), left_region(nc, -1);
    for (int circ = 0; circ < nc; ++circ) {
        for (int arc : st.circles.circles[circ]) {
            int rr = region(f.right_of_forward.at(arc));
            int lr = region(f.right_of_backward.at(arc));
            if (right_region[circ] < 0) {
                right_region[circ] = rr;
                left_region[circ] = lr;
            } else if (right_region[circ] != rr || left_region[circ] != lr) {
                throw std::logic_error("circle does not separate two regions consistently");
            }
        }
    }
    // Region tree rooted at the outer region.
    std::vector<std::vector<std::pair<int, int>>> adj(st.region_count);  // (other, circle)
    for (int circ = 0; circ < nc; ++circ) {
        adj[right_region[circ]].push_back({left_region[circ], circ});
        adj[left_region[circ]].push_back({right_region[circ], circ});
    }
    std::vector<int> depth(st.region_count, -1);
    std::queue<int> q;
    int root = region(st.outer_face);
    depth[root] = 0;
    q.push(root);
    while (!q.empty()) {
        int r = q.front();
        q.pop();
        for (auto& [o, circ] : adj[r])
            if (depth[o] < 0) {
                depth[o] = depth[r] + 1;
                q.push(o);
            }
    }
    st.r_in.resize(nc);
    st.r_out.resize(nc);
    st.rho.resize(nc);
    st.circles.height.resize(nc);
    for (int circ = 0; circ < nc; ++circ) {
        int a = right_region[circ], b = left_region[circ];
        if (depth[a] < 0 || depth[b] < 0 || std::abs(depth[a] - depth[b]) != 1)
            throw std::logic_error("region nesting is not a tree");
        st.r_out[circ] = depth[a] < depth[b] ? a : b;
        st.r_in[circ] = depth[a] < depth[b] ? b : a;
        st.circles.height[circ] = std::min(depth[a], depth[b]);
        st.rho[circ] = (right_region[circ] == st.r_in[circ]) ? -1 : 1;
    }
    // Orientation consistency across every band: in the band's local frame
    // (tail rim at the bottom, head rim at the top) the rotation sense
    // times the interior direction must agree at both ends. The interior
    // direction points toward the channel at the tail end and away from it
    // at the head end.
    for (const Band& b : st.bands) {
        int r = st.region_of_band[b.crossing];
        auto check_adjacent = [&](int circ) {
            if (r != st.r_in[circ] && r != st.r_out[circ])
                throw std::logic_error("band region not adjacent to its circle");
        };
        check_adjacent(b.tail_circle);
        check_adjacent(b.head_circle);
        int s_tail = r == st.r_in[b.tail_circle] ? 1 : -1;
        int s_head = r == st.r_out[b.head_circle] ? 1 : -1;
        if (st.rho[b.tail_circle] * s_tail != st.rho[b.head_circle] * s_head)
            throw std::logic_error("inconsistent surface orientation across a band");
    }
    return st;
}

SeifertCircles seifert_circles(const Diagram& d, int outer_face) {
    SeifertStructure st = build_structure(d, outer_face);
    SeifertCircles sc = st.circles;
    for (int k = 0; k < d.extra_circles; ++k) {
        sc.circles.push_back({});
        sc.height.push_back(0);
    }
    return sc;
}

SurfaceModel build_surface(const Diagram& d, int outer_face) {
    SeifertStructure st = build_structure(d, outer_face);
    SurfaceModel m;
    m.discs = (int)st.circles.circles.size() + d.extra_circles;
    m.bands = (int)d.crossings.size();
    m.band_list = st.bands;
    m.euler = m.discs - m.bands;
    m.boundary_components = component_count(d);
    m.genus = (2 - m.boundary_components - m.euler) / 2;
    return m;
}

int genus_upper_bound(const Diagram& d) {
    if (component_count(d) != 1)
        throw std::invalid_argument("genus bound requires a knot (one component)");
    return build_surface(d).genus;
}

SeifertGraph seifert_graph(const Diagram& d) {
    if (component_count(d) != 1)
        throw std::invalid_argument("Seifert graph requires a knot (one component)");
    SeifertStructure st = build_structure(d);
    SeifertGraph g;
    g.vertices = (int)st.circles.circles.size() + d.extra_circles;
    g.edges = st.bands;
    g.in_tree.assign(g.edges.size(), false);
    if (g.vertices == 0) return g;
    // Breadth-first spanning tree from circle 0, edges in crossing order.
    std::vector<int> parent_edge(g.vertices, -1), parent_vertex(g.vertices, -1);
    std::vector<bool> visited(g.vertices, false);
    std::queue<int> q;
    visited[0] = true;
    q.push(0);
    while (!q.empty()) {
        int v = q.front();
        q.pop();
        for (int e = 0; e < (int)g.edges.size(); ++e) {
            int o = -1;
            if (g.edges[e].tail_circle == v) o = g.edges[e].head_circle;
            if (g.edges[e].head_circle == v) o = g.edges[e].tail_circle;
            if (o < 0 || visited[o]) continue;
            visited[o] = true;
            g.in_tree[e] = true;
            parent_edge[o] = e;
            parent_vertex[o] = v;
            q.push(o);
        }
    }
    for (size_t e = 0; e < g.edges.size(); ++e)
        if (!visited[g.edges[e].tail_circle])
            throw std::logic_error("Seifert graph of a knot must be connected");
    // Fundamental cycle per non-tree edge: the edge, then the tree path
    // from its head back to its tail.
    auto path_to_root = [&](int v) {
        std::vector<std::pair<int, int>> steps;  // (edge, direction)
        while (parent_edge[v] >= 0) {
            int e = parent_edge[v];
            int up = parent_vertex[v];
            steps.push_back({e, g.edges[e].tail_circle == v ? 1 : -1});
            v = up;
        }
        return steps;
    };
    for (int e = 0; e < (int)g.edges.size(); ++e) {
        if (g.in_tree[e]) continue;
        std::vector<std::pair<int, int>> cyc{{e, 1}};
        auto up_h = path_to_root(g.edges[e].head_circle);
        auto up_t = path_to_root(g.edges[e].tail_circle);
        // Drop the common tail toward the root.
        while (!up_h.empty() && !up_t.empty() && up_h.back().first == up_t.back().first) {
            up_h.pop_back();
            up_t.pop_back();
        }
        for (auto& s : up_h) cyc.push_back(s);
        for (auto it = up_t.rbegin(); it != up_t.rend(); ++it)
            cyc.push_back({it->first, -it->second});
        g.cycles.push_back(cyc);
    }
    return g;
}

std::string SurfaceModel::to_json() const {
    nlohmann::ordered_json j;
    j["discs"] = discs;
    j["bands"] = nlohmann::ordered_json::array();
    for (const Band& b : band_list)
        j["bands"].push_back({{"i", b.tail_circle}, {"j", b.head_circle}, {"sign", b.sign}});
    j["euler"] = euler;
    j["genus"] = genus;
    j["boundary_components"] = boundary_components;
    return j.dump();
}

std::string SeifertGraph::to_json() const {
    nlohmann::ordered_json j;
    j["vertices"] = vertices;
    j["edges"] = nlohmann::ordered_json::array();
    for (size_t e = 0; e < edges.size(); ++e)
        j["edges"].push_back({{"i", edges[e].tail_circle},
                              {"j", edges[e].head_circle},
                              {"sign", edges[e].sign},
                              {"tree", (bool)in_tree[e]}});
    j["cycles"] = nlohmann::ordered_json::array();
    for (auto& cyc : cycles) {
        nlohmann::ordered_json row = nlohmann::ordered_json::array();
        for (auto& [e, dir] : cyc) row.push_back({{"edge", e}, {"dir", dir}});
        j["cycles"].push_back(row);
    }
    return j.dump();
}

}  // namespace knotcalc
