#include "knotcalc/catalog.hpp"

#include <algorithm>
#include <map>
#include <numeric>
#include <set>
#include <sstream>
#include <stdexcept>

namespace knotcalc {

Diagram torus_knot(int p, int q) {
    int ap = std::abs(p), aq = std::abs(q);
    if (aq < 2) throw std::invalid_argument("torus knot needs |q| >= 2");
    if (ap == 0 || std::gcd(ap, aq) != 1)
        throw std::invalid_argument("gcd(|p|,|q|) = " + std::to_string(std::gcd(ap, aq)) +
                                    ": that is a " + std::to_string(std::gcd(ap == 0 ? aq : ap, aq)) +
                                    "-component torus link, not a knot");
    BraidWord b;
    b.strand_count = aq;
    int sgn = p > 0 ? 1 : -1;
    for (int round_ = 0; round_ < ap; ++round_)
        for (int k = 1; k < aq; ++k) b.letters.push_back(sgn * k);
    return braid_closure(b);
}

Rational continued_fraction(const std::vector<int>& a) {
    if (a.empty()) throw std::invalid_argument("empty continued fraction");
    // Evaluate from the tail: num/den starts as a_l/1.
    i64 num = a.back(), den = 1;
    for (int k = (int)a.size() - 2; k >= 0; --k) {
        if (num == 0) throw std::invalid_argument("zero intermediate denominator");
        i64 n2 = a[k] * num + den;  // a_k + den/num
        den = num;
        num = n2;
        if (den < 0) {
            den = -den;
            num = -num;
        }
    }
    if (den == 0) throw std::invalid_argument("zero denominator");
    i64 g = std::gcd(std::abs(num), den);
    if (g == 0) g = 1;
    return Rational{num / g, den / g};
}

namespace {

// Crossing under construction: four ports at the diagonal compass
// directions, counterclockwise NE, NW, SW, SE. Strands pass NW<->SE and
// NE<->SW; over_rl marks the NE->SW mover as the over-strand.
struct PortCrossing {
    int port[4];  // NE, NW, SW, SE
    bool over_rl;
};

constexpr int NE = 0, NW = 1, SW = 2, SE = 3;

// Plane curves assembled from braid-style crossings plus free joints
// (plat caps, untouched strands). Joints have degree 2, crossing corners
// degree 1; arcs are the chains between corners.
class PlatBuilder {
public:
    int fresh_port() { return next_port_++; }

    void link(int a, int b) {
        adj_[a].push_back(b);
        adj_[b].push_back(a);
    }

    // Append a half twist between columns c and c+1 (0-based), s = +-1.
    void half_twist(std::vector<int>& end, int c, int s) {
        PortCrossing pc;
        for (int k = 0; k < 4; ++k) pc.port[k] = fresh_port();
        pc.over_rl = s > 0;
        link(pc.port[NW], end[c]);
        link(pc.port[NE], end[c + 1]);
        end[c] = pc.port[SW];
        end[c + 1] = pc.port[SE];
        crossings_.push_back(pc);
    }

    Diagram finish() {
        std::map<int, std::pair<int, int>> at;  // corner port -> (crossing, corner)
        for (int ci = 0; ci < (int)crossings_.size(); ++ci)
            for (int k = 0; k < 4; ++k) at[crossings_[ci].port[k]] = {ci, k};
        // Arcs between corner ports, walking through degree-2 joints.
        std::map<int, int> arc_mate;  // corner port -> corner port
        std::set<int> used_joints;
        for (auto& [p, nb] : adj_) {
            if (!at.count(p)) continue;
            if (arc_mate.count(p)) continue;
            if (nb.size() != 1) throw std::logic_error("corner port degree must be 1");
            int prev = p, cur = nb[0];
            while (!at.count(cur)) {
                if (adj_.at(cur).size() != 2) throw std::logic_error("joint degree must be 2");
                used_joints.insert(cur);
                int nxt = adj_.at(cur)[0] == prev ? adj_.at(cur)[1] : adj_.at(cur)[0];
                prev = cur;
                cur = nxt;
            }
            arc_mate[p] = cur;
            arc_mate[cur] = p;
        }
        int extra = 0;
        for (auto& [p, nb] : adj_) {
            if (at.count(p) || used_joints.count(p)) continue;
            // A joint-only cycle: a crossingless circle.
            int prev = p, cur = nb[0];
            used_joints.insert(p);
            while (cur != p) {
                used_joints.insert(cur);
                int nxt = adj_.at(cur)[0] == prev ? adj_.at(cur)[1] : adj_.at(cur)[0];
                prev = cur;
                cur = nxt;
            }
            ++extra;
        }
        // Orient components and label arcs along them.
        std::map<int, int> arc_of;     // corner port -> arc label
        std::map<int, bool> port_out;  // departing end of its arc?
        int next_arc = 1;
        std::set<int> visited;
        for (auto& [start, q0] : arc_mate) {
            if (visited.count(start)) continue;
            int depart = start;
            do {
                int arrive = arc_mate.at(depart);
                visited.insert(depart);
                visited.insert(arrive);
                port_out[depart] = true;
                port_out[arrive] = false;
                arc_of[depart] = next_arc;
                arc_of[arrive] = next_arc;
                ++next_arc;
                auto [ci, corner] = at.at(arrive);
                depart = crossings_[ci].port[corner ^ 2];  // straight through
            } while (depart != start);
        }
        Diagram d;
        d.extra_circles = extra;
        for (auto& pc : crossings_) {
            int in_rl = port_out.at(pc.port[NE]) ? pc.port[SW] : pc.port[NE];
            int in_lr = port_out.at(pc.port[NW]) ? pc.port[SE] : pc.port[NW];
            int under_in = pc.over_rl ? in_lr : in_rl;
            int over_in = pc.over_rl ? in_rl : in_lr;
            auto [ci, a_corner] = at.at(under_in);
            (void)ci;
            Crossing c;
            for (int k = 0; k < 4; ++k) c.arc[k] = arc_of.at(pc.port[(a_corner + k) % 4]);
            c.sign = pc.port[(a_corner + 3) % 4] == over_in ? 1 : -1;
            d.crossings.push_back(c);
        }
        return renumber_arcs(d);
    }

private:
    std::vector<PortCrossing> crossings_;
    std::map<int, std::vector<int>> adj_;
    int next_port_ = 1;
};

}  // namespace

Diagram two_bridge(const std::vector<int>& a) {
    if (a.empty()) throw std::invalid_argument("two_bridge needs at least one box");
    Rational fr = continued_fraction(a);
    if (fr.num % 2 == 0)
        throw std::invalid_argument("fraction " + std::to_string(fr.num) + "/" +
                                    std::to_string(fr.den) +
                                    " has even numerator: a 2-component link, not a knot");
    // Normalize to an odd number of boxes; the closure caps only match up
    // with the odd layout. These rewrites preserve the fraction exactly.
    std::vector<int> boxes = a;
    while (boxes.size() % 2 == 0) {
        int last = boxes.back();
        if (last == 1 && boxes.size() >= 2) {
            boxes.pop_back();
            boxes.back() += 1;
        } else if (last == -1 && boxes.size() >= 2) {
            boxes.pop_back();
            boxes.back() -= 1;
        } else if (last > 1) {
            boxes.back() = last - 1;
            boxes.push_back(1);
        } else if (last < -1) {
            boxes.back() = last + 1;
            boxes.push_back(-1);
        } else {
            throw std::invalid_argument("cannot normalize a trailing zero box");
        }
    }
    PlatBuilder pb;
    std::vector<int> top(4), end(4);
    for (int c = 0; c < 4; ++c) top[c] = end[c] = pb.fresh_port();
    // Boxes alternate between the middle pair and the left pair; left-pair
    // boxes take the opposite handedness, matching the continued-fraction
    // alternation of the plat form.
    for (int i = 0; i < (int)boxes.size(); ++i) {
        int twists = std::abs(boxes[i]);
        int s = boxes[i] >= 0 ? 1 : -1;
        int col = (i % 2 == 0) ? 1 : 0;
        int sgn = (i % 2 == 0) ? s : -s;
        for (int k = 0; k < twists; ++k) pb.half_twist(end, col, sgn);
    }
    pb.link(top[0], top[1]);
    pb.link(top[2], top[3]);
    pb.link(end[0], end[1]);
    pb.link(end[2], end[3]);
    Diagram d = pb.finish();
    if (component_count(d) != 1)
        throw std::logic_error("two-bridge construction produced a link");
    return d;
}

Diagram named(const std::string& name) {
    if (name == "unknot") {
        Diagram d;
        d.extra_circles = 1;
        return d;
    }
    if (name == "trefoil+") return torus_knot(3, 2);
    if (name == "trefoil-") return torus_knot(-3, 2);
    if (name == "4_1") return two_bridge({2, 2});
    if (name == "5_2") return two_bridge({2, 3});
    if (name == "8_3") return two_bridge({4, 4});
    if (name == "hopf+") return braid_closure(BraidWord{2, {1, 1}});
    if (name.size() > 3 && name.substr(0, 2) == "C(" && name.back() == ')') {
        int m = std::stoi(name.substr(2, name.size() - 3));
        if (m == 0) throw std::invalid_argument("C(0) is not a knot");
        return two_bridge({2 * m, 2 * m});
    }
    std::ostringstream os;
    os << "unknown name '" << name << "'; available:";
    for (auto& n : named_list()) os << " " << n;
    throw std::invalid_argument(os.str());
}

std::vector<std::string> named_list() {
    return {"unknot", "trefoil+", "trefoil-", "4_1", "5_2", "8_3", "hopf+", "C(m)"};
}

}  // namespace knotcalc
