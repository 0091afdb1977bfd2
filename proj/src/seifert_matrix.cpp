#include <algorithm>
#include <map>
#include <stdexcept>
#include <vector>

#include "knotcalc/seifert.hpp"

// Linking numbers of basis curves with push-offs, computed from an exact
// piecewise-linear realization of the curves over the disc-and-band
// surface. Each band together with its two rim attachment zones is laid
// out in a local integer patch:
//   x: along both rims (they run parallel there), +x = rim flow,
//   y: 0 at the tail rim (the under-in piece), 2304 at the head rim,
//   z: disc heights times 4096, with the half-twist realized as a
//      width-proportional bump at mid-band.
// A strand at width w enters the band at x = 288w and leaves at -288w;
// the exchange of width order plus the z-bump reproduces the crossing the
// band carries, calibrated so that its two boundary edges cross with the
// sign of the original crossing. Chords across a disc run at small track
// depths next to the rim and appear in every patch their angular span
// covers. The patch frame has global handedness equal to the crossing
// sign, so patch determinants are multiplied by it.
namespace knotcalc {

namespace {

constexpr i64 kRimY = 2304;    // head rim y (tail rim at 0)
constexpr i64 kMidY = 1152;
constexpr i64 kDiveX = 288;    // x per width unit
constexpr i64 kTrackY = 9;     // y per depth unit
constexpr i64 kZScale = 4096;  // z per height unit
constexpr i64 kZBump = 512;    // z per width unit at mid-band
constexpr i64 kPosScale = 1000000;  // circular position per rim event

i64 mid_x(i64 w) { return 32 * w + 4 * w * w; }

struct Seg {
    i64 x0, y0, z0, x1, y1, z1;
};

using CurveGeom = std::map<int, std::vector<Seg>>;  // band -> segments

struct RouteStep {
    int band;
    int dir;  // +1 tail->head
};

int side_flag(int side) { return side == 0 ? 1 : -1; }

struct Engine {
    const SeifertStructure& st;
    explicit Engine(const SeifertStructure& s) : st(s) {}

    // Interior direction of the disc in the band's patch frame: +1 means
    // the disc body lies toward the channel at a tail zone, or beyond the
    // rim at a head zone.
    int s_of(int band, int circle, int side) const {
        int in_side;
        if (st.region_of_band[band] == st.r_in[circle])
            in_side = 1;
        else if (st.region_of_band[band] == st.r_out[circle])
            in_side = -1;
        else
            throw std::logic_error("band region not beside its circle");
        return side == 0 ? in_side : -in_side;
    }

    int arrival_circle(const RouteStep& r) const {
        return r.dir > 0 ? st.bands[r.band].head_circle : st.bands[r.band].tail_circle;
    }
    int departure_circle(const RouteStep& r) const {
        return r.dir > 0 ? st.bands[r.band].tail_circle : st.bands[r.band].head_circle;
    }

    // omega per step; depth parity 0 gives depths 1,3,5..., 1 gives 2,4,...
    CurveGeom realize(const std::vector<RouteStep>& route,
                      const std::vector<i64>& omega, int depth_parity, bool lifted) const {
        CurveGeom out;
        int n = (int)route.size();
        std::map<int, int> visits;
        for (int k = 0; k < n; ++k) {
            // Band strand of step k.
            const RouteStep& stp = route[k];
            const Band& b = st.bands[stp.band];
            i64 w = omega[k];
            i64 zt = (i64)st.circles.height[b.tail_circle] * kZScale;
            i64 zh = (i64)st.circles.height[b.head_circle] * kZScale;
            i64 zm = (zt + zh) / 2 + w * kZBump;
            i64 xt = w * kDiveX, xm = mid_x(w), xh = -w * kDiveX;
            auto& segs = out[stp.band];
            if (stp.dir > 0) {
                segs.push_back({xt, 0, zt, xm, kMidY, zm});
                segs.push_back({xm, kMidY, zm, xh, kRimY, zh});
            } else {
                segs.push_back({xh, kRimY, zh, xm, kMidY, zm});
                segs.push_back({xm, kMidY, zm, xt, 0, zt});
            }
        }
        for (int k = 0; k < n; ++k) {
            // Chord from the arrival of step k to the departure of step k+1.
            const RouteStep& in = route[k];
            const RouteStep& nx = route[(k + 1) % n];
            int cir = arrival_circle(in);
            if (departure_circle(nx) != cir)
                throw std::logic_error("route is not a closed walk");
            int side_in = in.dir > 0 ? 1 : 0;
            int side_out = nx.dir > 0 ? 0 : 1;
            int depth = 2 * visits[cir] + 1 + depth_parity;
            visits[cir]++;
            i64 z = (i64)st.circles.height[cir] * kZScale + (lifted ? st.rho[cir] : 0);
            i64 xin = side_flag(side_in) * omega[k] * kDiveX;
            i64 xout = side_flag(side_out) * omega[(k + 1) % n] * kDiveX;
            i64 rim_in = side_in == 0 ? 0 : kRimY;
            i64 rim_out = side_out == 0 ? 0 : kRimY;
            i64 ytr_in = rim_in + s_of(in.band, cir, side_in) * kTrackY * depth;
            i64 ytr_out = rim_out + s_of(nx.band, cir, side_out) * kTrackY * depth;
            out[in.band].push_back({xin, rim_in, z, xin, ytr_in, z});
            out[in.band].push_back({xin, ytr_in, z, kRimY, ytr_in, z});
            out[nx.band].push_back({-kRimY, ytr_out, z, xout, ytr_out, z});
            out[nx.band].push_back({xout, ytr_out, z, xout, rim_out, z});
            // Through-lines at the other zones the chord's span covers.
            int ev_in = side_in == 0 ? st.tail_event[in.band] : st.head_event[in.band];
            int ev_out = side_out == 0 ? st.tail_event[nx.band] : st.head_event[nx.band];
            i64 m = (i64)st.events[cir].size() * kPosScale;
            i64 p = ev_in * kPosScale + xin;
            i64 q = ev_out * kPosScale + xout;
            i64 span = ((q - p) % m + m) % m;
            for (int ev = 0; ev < (int)st.events[cir].size(); ++ev) {
                auto [cr, side] = st.events[cir][ev];
                bool own_in = (cr == in.band && side == side_in && ev == ev_in);
                bool own_out = (cr == nx.band && side == side_out && ev == ev_out);
                if (own_in || own_out) continue;
                i64 rel = (((i64)ev * kPosScale - p) % m + m) % m;
                if (!(0 < rel && rel < span)) continue;
                i64 y = (side == 0 ? 0 : kRimY) + s_of(cr, cir, side) * kTrackY * depth;
                out[cr].push_back({-kRimY, y, z, kRimY, y, z});
            }
        }
        return out;
    }
};

struct LinkCount {
    i64 over_a = 0;
    i64 over_b = 0;
};

i64 cross2(i64 ax, i64 ay, i64 bx, i64 by) { return ax * by - ay * bx; }

void count_crossings(const Seg& a, const Seg& b, int band_sign, LinkCount& lc) {
    i64 d1x = a.x1 - a.x0, d1y = a.y1 - a.y0;
    i64 d2x = b.x1 - b.x0, d2y = b.y1 - b.y0;
    i64 rx = b.x0 - a.x0, ry = b.y0 - a.y0;
    i64 denom = cross2(d1x, d1y, d2x, d2y);
    if (denom == 0) {
        if (cross2(rx, ry, d1x, d1y) != 0) return;  // parallel, apart
        // Collinear: tolerate only disjoint ranges.
        auto lo = [](i64 u, i64 v) { return u < v ? u : v; };
        auto hi = [](i64 u, i64 v) { return u > v ? u : v; };
        bool apart_x = hi(a.x0, a.x1) <= lo(b.x0, b.x1) || hi(b.x0, b.x1) <= lo(a.x0, a.x1);
        bool apart_y = hi(a.y0, a.y1) <= lo(b.y0, b.y1) || hi(b.y0, b.y1) <= lo(a.y0, a.y1);
        if ((d1x != 0 && apart_x) || (d1x == 0 && apart_y)) return;
        throw std::logic_error("degenerate geometry: collinear overlap");
    }
    i64 tnum = cross2(rx, ry, d2x, d2y);
    i64 unum = cross2(rx, ry, d1x, d1y);
    if (denom < 0) {
        denom = -denom;
        tnum = -tnum;
        unum = -unum;
    }
    bool t_in = 0 < tnum && tnum < denom;
    bool u_in = 0 < unum && unum < denom;
    if (!t_in || !u_in) {
        bool t_touch = tnum == 0 || tnum == denom;
        bool u_touch = unum == 0 || unum == denom;
        if ((t_touch && (u_in || u_touch)) && (u_touch || u_in) && (t_touch || t_in))
            throw std::logic_error("degenerate geometry: endpoint contact");
        return;
    }
    __int128 za = (__int128)a.z0 * denom + (__int128)tnum * (a.z1 - a.z0);
    __int128 zb = (__int128)b.z0 * denom + (__int128)unum * (b.z1 - b.z0);
    if (za == zb) throw std::logic_error("degenerate geometry: equal heights at a crossing");
    bool a_over = za > zb;
    i64 det = a_over ? cross2(d1x, d1y, d2x, d2y) : cross2(d2x, d2y, d1x, d1y);
    int sign = (det > 0 ? 1 : -1) * band_sign;
    if (a_over)
        lc.over_a += sign;
    else
        lc.over_b += sign;
}

}  // namespace

IntMatrix seifert_matrix(const Diagram& d, int outer_face) {
    if (component_count(d) != 1)
        throw std::invalid_argument("Seifert matrix requires a knot (one component)");
    if (d.crossings.empty()) return IntMatrix(0);
    SeifertStructure st = build_structure(d, outer_face);
    SeifertGraph g = seifert_graph(d);
    int n = (int)g.cycles.size();
    std::vector<std::vector<RouteStep>> routes(n);
    for (int i = 0; i < n; ++i)
        for (auto& [e, dir] : g.cycles[i]) routes[i].push_back({g.edges[e].crossing, dir});
    Engine eng(st);
    IntMatrix V(n);
    for (int i = 0; i < n; ++i) {
        std::vector<i64> omega_a(routes[i].size(), 2);
        CurveGeom A = eng.realize(routes[i], omega_a, 0, false);
        for (int j = 0; j < n; ++j) {
            std::vector<i64> omega_b(routes[j].size(), 3);
            if (i == j)
                for (size_t k = 0; k < routes[j].size(); ++k)
                    omega_b[k] = 2 + routes[j][k].dir;
            CurveGeom B = eng.realize(routes[j], omega_b, 1, true);
            LinkCount lc;
            for (auto& [band, asegs] : A) {
                auto it = B.find(band);
                if (it == B.end()) continue;
                int band_sign = d.crossings[band].sign;
                for (const Seg& sa : asegs)
                    for (const Seg& sb : it->second) count_crossings(sa, sb, band_sign, lc);
            }
            if (lc.over_a != lc.over_b)
                throw std::logic_error("linking count mismatch between over/under buckets");
            V.at(i, j) = lc.over_a;
        }
    }
    return V;
}

}  // namespace knotcalc
