#include "knotcalc/surfaces.hpp"

#include <algorithm>
#include <cctype>
#include <map>
#include <numeric>
#include <set>
#include <sstream>
#include <stdexcept>

namespace knotcalc {

namespace {

struct Occurrence {
    int face;
    int pos;
    int exp;
};

std::map<std::string, std::vector<Occurrence>> occurrences(const PolygonalPresentation& p) {
    std::map<std::string, std::vector<Occurrence>> occ;
    for (int f = 0; f < (int)p.faces.size(); ++f)
        for (int i = 0; i < (int)p.faces[f].size(); ++i)
            occ[p.faces[f][i].symbol].push_back({f, i, p.faces[f][i].exp});
    return occ;
}

void require_closed(const PolygonalPresentation& p) {
    if (p.faces.empty()) throw std::invalid_argument("presentation needs at least one face");
    for (auto& w : p.faces)
        if (w.empty()) throw std::invalid_argument("empty face word");
    for (auto& [sym, v] : occurrences(p))
        if (v.size() != 2)
            throw std::invalid_argument("edge '" + sym + "' occurs " + std::to_string(v.size()) +
                                        " times; a closed surface needs exactly 2");
}

struct UF {
    std::vector<int> p;
    explicit UF(int n) : p(n) { std::iota(p.begin(), p.end(), 0); }
    int find(int x) { return p[x] == x ? x : p[x] = find(p[x]); }
    void join(int a, int b) { p[find(a)] = find(b); }
};

}  // namespace

PolygonalPresentation parse_presentation(const std::string& text) {
    PolygonalPresentation p;
    std::vector<EdgeLetter> word;
    size_t i = 0;
    auto flush = [&] {
        if (!word.empty()) {
            p.faces.push_back(word);
            word.clear();
        }
    };
    while (i < text.size()) {
        if (std::isspace((unsigned char)text[i])) {
            ++i;
            continue;
        }
        if (text[i] == ';') {
            flush();
            ++i;
            continue;
        }
        size_t start = i;
        while (i < text.size() && (std::isalnum((unsigned char)text[i]) || text[i] == '_')) ++i;
        if (i == start) throw std::invalid_argument("bad symbol in face word");
        EdgeLetter l;
        l.symbol = text.substr(start, i - start);
        l.exp = 1;
        if (i < text.size() && text[i] == '\'') {
            l.exp = -1;
            ++i;
        }
        word.push_back(l);
    }
    flush();
    return p;
}

std::string serialize_presentation(const PolygonalPresentation& p) {
    std::ostringstream os;
    for (size_t f = 0; f < p.faces.size(); ++f) {
        if (f) os << " ; ";
        for (size_t i = 0; i < p.faces[f].size(); ++i) {
            if (i) os << " ";
            os << p.faces[f][i].symbol << (p.faces[f][i].exp < 0 ? "'" : "");
        }
    }
    return os.str();
}

int euler_characteristic(const PolygonalPresentation& p) {
    require_closed(p);
    auto occ = occurrences(p);
    int C = (int)p.faces.size();
    int A = (int)occ.size();
    // Corner tracing: corners between consecutive letters are identified
    // with the abstract endpoints of the edges they touch. Nodes: one per
    // corner plus two (tail, head) per edge symbol.
    std::map<std::string, int> edge_id;
    for (auto& [sym, v] : occ) {
        int id = (int)edge_id.size();
        edge_id[sym] = id;
    }
    std::vector<int> corner_base(p.faces.size() + 1, 0);
    for (size_t f = 0; f < p.faces.size(); ++f)
        corner_base[f + 1] = corner_base[f] + (int)p.faces[f].size();
    int ncorners = corner_base.back();
    UF uf(ncorners + 2 * A);
    auto endpoint = [&](const std::string& sym, bool head) {
        return ncorners + 2 * edge_id[sym] + (head ? 1 : 0);
    };
    for (size_t f = 0; f < p.faces.size(); ++f) {
        int len = (int)p.faces[f].size();
        for (int i = 0; i < len; ++i) {
            int corner = corner_base[f] + i;  // corner after letter i
            const EdgeLetter& cur = p.faces[f][i];
            const EdgeLetter& nxt = p.faces[f][(i + 1) % len];
            // End of the current letter's traversal, start of the next's.
            uf.join(corner, endpoint(cur.symbol, cur.exp > 0));
            uf.join(corner, endpoint(nxt.symbol, nxt.exp < 0));
        }
    }
    std::set<int> vertex_roots;
    for (int c = 0; c < ncorners; ++c) vertex_roots.insert(uf.find(c));
    int V = (int)vertex_roots.size();
    return V - A + C;
}

bool is_orientable(const PolygonalPresentation& p) {
    require_closed(p);
    auto occ = occurrences(p);
    // Orient faces (possibly reversing words) so every symbol occurs once
    // with each exponent; propagate across shared edges.
    int nf = (int)p.faces.size();
    std::vector<int> orient(nf, 0);
    for (int start = 0; start < nf; ++start) {
        if (orient[start] != 0) continue;
        orient[start] = 1;
        std::vector<int> stack{start};
        while (!stack.empty()) {
            int f = stack.back();
            stack.pop_back();
            for (auto& [sym, v] : occ) {
                if (v.size() != 2) continue;
                const Occurrence &o1 = v[0], &o2 = v[1];
                if (o1.face == o2.face) {
                    if (o1.face == f && o1.exp == o2.exp) return false;
                    continue;
                }
                const Occurrence* here = nullptr;
                const Occurrence* there = nullptr;
                if (o1.face == f) {
                    here = &o1;
                    there = &o2;
                } else if (o2.face == f) {
                    here = &o2;
                    there = &o1;
                } else {
                    continue;
                }
                // Need effective exponents opposite: o_here*exp_here = -o_there*exp_there.
                int want = -orient[f] * here->exp * there->exp;
                if (orient[there->face] == 0) {
                    orient[there->face] = want;
                    stack.push_back(there->face);
                } else if (orient[there->face] != want) {
                    return false;
                }
            }
        }
    }
    return true;
}

SurfaceClass classify(const PolygonalPresentation& p) {
    SurfaceClass sc;
    sc.euler = euler_characteristic(p);
    sc.orientable = is_orientable(p);
    if (sc.orientable) {
        if ((2 - sc.euler) % 2 != 0)
            throw std::logic_error("orientable surface with odd Euler characteristic");
        sc.genus = (2 - sc.euler) / 2;
    }
    return sc;
}

namespace {

std::string fresh_symbol(const PolygonalPresentation& p, const std::string& base) {
    auto occ = occurrences(p);
    for (int k = 0;; ++k) {
        std::string cand = base + std::to_string(k);
        if (!occ.count(cand)) return cand;
    }
}

}  // namespace

PolygonalPresentation apply_modification(const PolygonalPresentation& p, Modification which,
                                         ModDirection direction, const ModSite& site) {
    require_closed(p);
    PolygonalPresentation out = p;
    if (which == Modification::M1 && direction == ModDirection::Forward) {
        if (site.face < 0 || site.face >= (int)p.faces.size())
            throw std::invalid_argument("M1: no such face");
        auto& w = out.faces[site.face];
        int len = (int)w.size();
        if (len <= 2) throw std::invalid_argument("M1: word too short to cancel a pair");
        int i = site.position % len;
        int j = (i + 1) % len;
        if (w[i].symbol != w[j].symbol || w[i].exp != -w[j].exp)
            throw std::invalid_argument("M1: no adjacent cancelling pair at the position");
        // The symbol must not occur elsewhere (its two occurrences are here).
        for (int k = 0; k < len; ++k)
            if (k != i && k != j && w[k].symbol == w[i].symbol)
                throw std::invalid_argument("M1: symbol also occurs elsewhere");
        if (j > i)
            w.erase(w.begin() + i, w.begin() + j + 1);
        else {
            w.erase(w.begin() + i);
            w.erase(w.begin());
        }
        return out;
    }
    if (which == Modification::M1 && direction == ModDirection::Backward) {
        if (site.face < 0 || site.face >= (int)p.faces.size())
            throw std::invalid_argument("M1: no such face");
        auto& w = out.faces[site.face];
        int i = site.position % ((int)w.size() + 1);
        std::string s = fresh_symbol(p, "e");
        w.insert(w.begin() + i, {EdgeLetter{s, 1}, EdgeLetter{s, -1}});
        return out;
    }
    if (which == Modification::M2 && direction == ModDirection::Forward) {
        if (site.face < 0 || site.face >= (int)p.faces.size())
            throw std::invalid_argument("M2: no such face");
        const auto& w = p.faces[site.face];
        int len = (int)w.size();
        int i = site.position, j = site.position2;
        if (i < 0 || j < 0 || i >= len || j >= len || i == j)
            throw std::invalid_argument("M2: need two distinct corners");
        if (i > j) std::swap(i, j);
        std::string s = fresh_symbol(p, "e");
        // Cut between corner-after-i and corner-after-j.
        std::vector<EdgeLetter> f1, f2;
        f1.push_back({s, 1});
        for (int k = (j + 1) % len; k != (i + 1) % len; k = (k + 1) % len) f1.push_back(w[k]);
        f2.push_back({s, -1});
        for (int k = (i + 1) % len; k != (j + 1) % len; k = (k + 1) % len) f2.push_back(w[k]);
        out.faces[site.face] = f1;
        out.faces.push_back(f2);
        return out;
    }
    if (which == Modification::M2 && direction == ModDirection::Backward) {
        auto occ = occurrences(p);
        if (!occ.count(site.symbol)) throw std::invalid_argument("M2: no such symbol");
        auto& v = occ[site.symbol];
        if (v[0].face == v[1].face)
            throw std::invalid_argument("M2: symbol must join two distinct faces");
        // Rotate face A to end right before the symbol; splice in face B
        // rotated to start right after its matching occurrence, reversed if
        // the exponents agree.
        const Occurrence &oa = v[0], &ob = v[1];
        std::vector<EdgeLetter> wa = p.faces[oa.face], wb = p.faces[ob.face];
        std::rotate(wa.begin(), wa.begin() + oa.pos, wa.end());  // symbol now first
        std::rotate(wb.begin(), wb.begin() + ob.pos, wb.end());
        wa.erase(wa.begin());
        wb.erase(wb.begin());
        if (oa.exp == ob.exp) {
            std::reverse(wb.begin(), wb.end());
            for (auto& l : wb) l.exp = -l.exp;
        }
        std::vector<EdgeLetter> merged = wb;
        merged.insert(merged.end(), wa.begin(), wa.end());
        if (merged.empty()) throw std::invalid_argument("M2: gluing would leave an empty face");
        PolygonalPresentation res;
        for (int f = 0; f < (int)p.faces.size(); ++f)
            if (f != oa.face && f != ob.face) res.faces.push_back(p.faces[f]);
        res.faces.push_back(merged);
        return res;
    }
    if (which == Modification::M3 && direction == ModDirection::Forward) {
        auto occ = occurrences(p);
        if (!occ.count(site.symbol)) throw std::invalid_argument("M3: no such symbol");
        std::string y = fresh_symbol(p, "s");
        std::string z = fresh_symbol(p, y);  // distinct from y by construction
        if (z == y) z = y + "x";
        for (auto& w : out.faces) {
            std::vector<EdgeLetter> nw;
            for (auto& l : w) {
                if (l.symbol != site.symbol) {
                    nw.push_back(l);
                } else if (l.exp > 0) {
                    nw.push_back({y, 1});
                    nw.push_back({z, 1});
                } else {
                    nw.push_back({z, -1});
                    nw.push_back({y, -1});
                }
            }
            w = nw;
        }
        return out;
    }
    // M3 backward: recombine a subdivided pair y z.
    auto occ = occurrences(p);
    if (!occ.count(site.symbol)) throw std::invalid_argument("M3: no such symbol");
    std::string y = site.symbol;
    // Find the partner: the symbol that always follows y (+) / precedes y (-).
    std::string z;
    for (auto& o : occ[y]) {
        const auto& w = p.faces[o.face];
        int len = (int)w.size();
        const EdgeLetter& nb = o.exp > 0 ? w[(o.pos + 1) % len] : w[(o.pos + len - 1) % len];
        if (nb.symbol == y) throw std::invalid_argument("M3: pair pattern absent");
        if (nb.exp != o.exp) throw std::invalid_argument("M3: pair pattern absent");
        if (z.empty())
            z = nb.symbol;
        else if (z != nb.symbol)
            throw std::invalid_argument("M3: pair pattern absent");
    }
    for (auto& w : out.faces) {
        std::vector<EdgeLetter> nw;
        for (int i = 0; i < (int)w.size(); ++i) {
            const EdgeLetter& l = w[i];
            int len = (int)w.size();
            if (l.symbol == y && l.exp > 0) {
                if (w[(i + 1) % len].symbol != z || w[(i + 1) % len].exp != 1)
                    throw std::invalid_argument("M3: pair pattern absent");
                nw.push_back({y, 1});
                ++i;  // skip z
            } else if (l.symbol == z && l.exp < 0) {
                if (w[(i + 1) % len].symbol != y || w[(i + 1) % len].exp != -1)
                    throw std::invalid_argument("M3: pair pattern absent");
                nw.push_back({y, -1});
                ++i;  // skip y^-1
            } else if (l.symbol == z) {
                throw std::invalid_argument("M3: pair pattern absent");
            } else {
                nw.push_back(l);
            }
        }
        w = nw;
    }
    return out;
}

std::vector<ModSite> modification_sites(const PolygonalPresentation& p, Modification which,
                                        ModDirection direction) {
    std::vector<ModSite> sites;
    auto occ = occurrences(p);
    if (which == Modification::M1 && direction == ModDirection::Forward) {
        for (int f = 0; f < (int)p.faces.size(); ++f) {
            const auto& w = p.faces[f];
            int len = (int)w.size();
            if (len <= 2) continue;
            for (int i = 0; i < len; ++i) {
                int j = (i + 1) % len;
                if (w[i].symbol == w[j].symbol && w[i].exp == -w[j].exp) {
                    bool elsewhere = false;
                    for (int k = 0; k < len; ++k)
                        if (k != i && k != j && w[k].symbol == w[i].symbol) elsewhere = true;
                    if (!elsewhere) sites.push_back({f, i, 0, ""});
                }
            }
        }
    } else if (which == Modification::M1 && direction == ModDirection::Backward) {
        for (int f = 0; f < (int)p.faces.size(); ++f)
            for (int i = 0; i <= (int)p.faces[f].size(); ++i) sites.push_back({f, i, 0, ""});
    } else if (which == Modification::M2 && direction == ModDirection::Forward) {
        for (int f = 0; f < (int)p.faces.size(); ++f) {
            int len = (int)p.faces[f].size();
            for (int i = 0; i < len; ++i)
                for (int j = i + 1; j < len; ++j) sites.push_back({f, i, j, ""});
        }
    } else if (which == Modification::M2 && direction == ModDirection::Backward) {
        for (auto& [sym, v] : occ)
            if (v.size() == 2 && v[0].face != v[1].face) sites.push_back({0, 0, 0, sym});
    } else if (which == Modification::M3 && direction == ModDirection::Forward) {
        for (auto& [sym, v] : occ) sites.push_back({0, 0, 0, sym});
    } else {
        for (auto& [sym, v] : occ) {
            try {
                apply_modification(p, Modification::M3, ModDirection::Backward, {0, 0, 0, sym});
                sites.push_back({0, 0, 0, sym});
            } catch (const std::invalid_argument&) {
            }
        }
    }
    return sites;
}

PolygonalPresentation canonical_presentation(int genus) {
    if (genus < 0) throw std::invalid_argument("genus must be nonnegative");
    PolygonalPresentation p;
    std::vector<EdgeLetter> w;
    if (genus == 0) {
        w = {{"a", 1}, {"a", -1}};
    } else {
        for (int g = 1; g <= genus; ++g) {
            std::string a = "a" + std::to_string(g), b = "b" + std::to_string(g);
            w.push_back({a, 1});
            w.push_back({b, 1});
            w.push_back({a, -1});
            w.push_back({b, -1});
        }
    }
    p.faces.push_back(w);
    return p;
}

}  // namespace knotcalc
