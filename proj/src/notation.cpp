#include "knotcalc/notation.hpp"

#include <algorithm>
#include <cctype>
#include <functional>
#include <map>
#include <numeric>
#include <set>
#include <sstream>

namespace knotcalc {

const char* to_string(NotationErrorKind k) {
    switch (k) {
        case NotationErrorKind::Syntax: return "Syntax";
        case NotationErrorKind::ArcIncidence: return "ArcIncidence";
        case NotationErrorKind::OrientationConflict: return "OrientationConflict";
        case NotationErrorKind::OutOfRange: return "OutOfRange";
    }
    return "?";
}

namespace {

struct RawCrossing {
    std::array<int, 4> arc;
    size_t pos;  // offset of the tuple in the input
};

std::vector<RawCrossing> lex_pd(const std::string& text) {
    std::vector<RawCrossing> out;
    size_t i = 0;
    auto skip = [&] {
        while (i < text.size() && (std::isspace((unsigned char)text[i]) || text[i] == ';')) ++i;
    };
    skip();
    while (i < text.size()) {
        size_t start = i;
        if (text[i] != 'X' && text[i] != 'x')
            throw NotationError(NotationErrorKind::Syntax, i, "expected crossing tuple 'X(...)'");
        ++i;
        if (i >= text.size() || text[i] != '(')
            throw NotationError(NotationErrorKind::Syntax, i, "expected '(' after X");
        ++i;
        RawCrossing rc;
        rc.pos = start;
        for (int k = 0; k < 4; ++k) {
            while (i < text.size() && std::isspace((unsigned char)text[i])) ++i;
            size_t numstart = i;
            while (i < text.size() && std::isdigit((unsigned char)text[i])) ++i;
            if (i == numstart)
                throw NotationError(NotationErrorKind::Syntax, i, "expected arc label");
            rc.arc[k] = std::stoi(text.substr(numstart, i - numstart));
            if (rc.arc[k] <= 0)
                throw NotationError(NotationErrorKind::OutOfRange, numstart,
                                    "arc labels must be positive");
            while (i < text.size() && std::isspace((unsigned char)text[i])) ++i;
            char want = k < 3 ? ',' : ')';
            if (i >= text.size() || text[i] != want)
                throw NotationError(NotationErrorKind::Syntax, i,
                                    std::string("expected '") + want + "' in crossing tuple");
            ++i;
        }
        out.push_back(rc);
        skip();
    }
    return out;
}

}  // namespace

Diagram parse_pd(const std::string& text) {
    std::vector<RawCrossing> raw = lex_pd(text);
    if (raw.empty()) {
        Diagram d;
        d.extra_circles = 1;
        return d;
    }
    // Every arc exactly twice.
    std::map<int, std::vector<size_t>> occ;
    for (size_t ci = 0; ci < raw.size(); ++ci)
        for (int s = 0; s < 4; ++s) occ[raw[ci].arc[s]].push_back(ci);
    for (auto& [a, v] : occ)
        if (v.size() != 2)
            throw NotationError(NotationErrorKind::ArcIncidence, raw[v[0]].pos,
                                "arc " + std::to_string(a) + " occurs " +
                                    std::to_string(v.size()) + " times (expected 2)");
    // Strand classes: a~c and b~d at each crossing.
    std::vector<int> labels;
    for (auto& [a, v] : occ) labels.push_back(a);
    std::map<int, int> idx;
    for (size_t k = 0; k < labels.size(); ++k) idx[labels[k]] = (int)k;
    std::vector<int> parent(labels.size());
    std::iota(parent.begin(), parent.end(), 0);
    std::function<int(int)> find = [&](int x) {
        return parent[x] == x ? x : parent[x] = find(parent[x]);
    };
    for (auto& rc : raw) {
        parent[find(idx[rc.arc[0]])] = find(idx[rc.arc[2]]);
        parent[find(idx[rc.arc[1]])] = find(idx[rc.arc[3]]);
    }
    std::map<int, std::vector<int>> classes;
    for (int a : labels) classes[find(idx[a])].push_back(a);
    std::map<int, int> succ;
    for (auto& [root, cls] : classes) {
        std::sort(cls.begin(), cls.end());
        for (size_t k = 0; k < cls.size(); ++k) succ[cls[k]] = cls[(k + 1) % cls.size()];
    }
    // Under-strand must follow succession.
    for (auto& rc : raw)
        if (succ[rc.arc[0]] != rc.arc[2])
            throw NotationError(NotationErrorKind::OrientationConflict, rc.pos,
                                "under-strand " + std::to_string(rc.arc[0]) + " -> " +
                                    std::to_string(rc.arc[2]) + " breaks the successor rule");
    // Over-strand direction: sign +1 means flow d->b, -1 means b->d.
    // When both satisfy the successor rule (2-arc classes), use in/out
    // balancing; stubborn leftovers take a deterministic tie-break.
    std::vector<int> sign(raw.size(), 0);
    std::map<int, int> typed;  // arc -> net typing: +1 has an in, -1 has an out, 2 both
    std::map<int, std::vector<size_t>> over_of;
    for (size_t ci = 0; ci < raw.size(); ++ci) {
        over_of[raw[ci].arc[1]].push_back(ci);
        over_of[raw[ci].arc[3]].push_back(ci);
        bool bd = succ[raw[ci].arc[1]] == raw[ci].arc[3];
        bool db = succ[raw[ci].arc[3]] == raw[ci].arc[1];
        if (!bd && !db)
            throw NotationError(NotationErrorKind::OrientationConflict, raw[ci].pos,
                                "over-strand breaks the successor rule");
        if (bd && !db) sign[ci] = -1;
        if (db && !bd) sign[ci] = 1;
    }
    // Balance propagation for the ambiguous crossings.
    std::map<int, int> dir;  // arc -> +1 if its over-slot occurrence is incoming
    auto set_in = [&](int arc, int ci, bool incoming) {
        // arc occupies slot 1 or 3 of crossing ci
        bool at_b = raw[ci].arc[1] == arc;
        int want = incoming ? (at_b ? -1 : 1) : (at_b ? 1 : -1);
        if (sign[ci] == 0)
            sign[ci] = want;
        else if (sign[ci] != want)
            throw NotationError(NotationErrorKind::OrientationConflict, raw[ci].pos,
                                "conflicting over-strand orientation at crossing");
    };
    bool progress = true;
    while (progress) {
        progress = false;
        // Under slots type their arcs; typed arcs force their other occurrence.
        std::map<int, std::pair<int, int>> status;  // arc -> (#in, #out)
        for (size_t ci = 0; ci < raw.size(); ++ci) {
            status[raw[ci].arc[0]].first++;
            status[raw[ci].arc[2]].second++;
            if (sign[ci] != 0) {
                int bin = sign[ci] > 0 ? raw[ci].arc[3] : raw[ci].arc[1];
                int bout = sign[ci] > 0 ? raw[ci].arc[1] : raw[ci].arc[3];
                status[bin].first++;
                status[bout].second++;
            }
        }
        for (auto& [a, io] : status) {
            if (io.first > 1 || io.second > 1)
                throw NotationError(NotationErrorKind::OrientationConflict, 0,
                                    "arc " + std::to_string(a) + " has inconsistent flow");
            if (io.first + io.second == 2) continue;
            // One end typed, the over-occurrence still open?
            for (size_t ci : over_of[a]) {
                if (sign[ci] != 0) continue;
                if (io.first == 1) {
                    set_in(a, (int)ci, false);
                    progress = true;
                } else if (io.second == 1) {
                    set_in(a, (int)ci, true);
                    progress = true;
                }
            }
        }
        if (!progress) {
            // Tie-break one undecided crossing: lower over-label flows in.
            for (size_t ci = 0; ci < raw.size(); ++ci)
                if (sign[ci] == 0) {
                    sign[ci] = raw[ci].arc[1] < raw[ci].arc[3] ? -1 : 1;
                    progress = true;
                    break;
                }
            if (progress) continue;
            break;
        }
    }
    Diagram d;
    for (size_t ci = 0; ci < raw.size(); ++ci) d.crossings.push_back(Crossing{raw[ci].arc, sign[ci]});
    // Final structural check (each arc one head, one tail).
    try {
        arc_table(d);
    } catch (const std::invalid_argument& e) {
        throw NotationError(NotationErrorKind::OrientationConflict, 0, e.what());
    }
    return d;
}

BraidWord parse_braid(const std::string& text) {
    size_t colon = text.find(':');
    if (colon == std::string::npos)
        throw NotationError(NotationErrorKind::Syntax, 0, "expected 'n: letters'");
    BraidWord b;
    try {
        size_t used = 0;
        b.strand_count = std::stoi(text.substr(0, colon), &used);
        while (used < colon)
            if (!std::isspace((unsigned char)text[used++]))
                throw NotationError(NotationErrorKind::Syntax, used - 1, "bad strand count");
    } catch (const NotationError&) {
        throw;
    } catch (...) {
        throw NotationError(NotationErrorKind::Syntax, 0, "bad strand count");
    }
    if (b.strand_count < 1)
        throw NotationError(NotationErrorKind::OutOfRange, 0, "strand count must be >= 1");
    size_t i2 = colon + 1;
    while (i2 < text.size()) {
        while (i2 < text.size() && std::isspace((unsigned char)text[i2])) ++i2;
        if (i2 >= text.size()) break;
        size_t pos = i2;
        while (i2 < text.size() && !std::isspace((unsigned char)text[i2])) ++i2;
        std::string tok = text.substr(pos, i2 - pos);
        int v;
        try {
            size_t used = 0;
            v = std::stoi(tok, &used);
            if (used != tok.size()) throw std::invalid_argument("");
        } catch (...) {
            throw NotationError(NotationErrorKind::Syntax, pos, "bad braid letter '" + tok + "'");
        }
        if (v == 0 || std::abs(v) >= b.strand_count)
            throw NotationError(NotationErrorKind::OutOfRange, pos,
                                "letter " + tok + " out of range for " +
                                    std::to_string(b.strand_count) + " strands");
        b.letters.push_back(v);
    }
    return b;
}

Diagram braid_closure(const BraidWord& b) {
    if (b.strand_count < 1) throw std::invalid_argument("braid needs at least one strand");
    int next_label = b.strand_count + 1;
    std::vector<int> start(b.strand_count), cur(b.strand_count);
    std::iota(start.begin(), start.end(), 1);
    cur = start;
    Diagram d;
    for (int letter : b.letters) {
        int k = std::abs(letter) - 1;
        int L = cur[k], R = cur[k + 1];
        int Lp = next_label++, Rp = next_label++;
        Crossing c;
        if (letter > 0) {
            c.arc = {L, Lp, Rp, R};
            c.sign = 1;
        } else {
            c.arc = {R, L, Lp, Rp};
            c.sign = -1;
        }
        d.crossings.push_back(c);
        cur[k] = Lp;
        cur[k + 1] = Rp;
    }
    // Close up: the arc leaving the bottom of position i is the arc that
    // entered its top.
    for (int i = 0; i < b.strand_count; ++i) {
        if (cur[i] == start[i]) {
            d.extra_circles++;  // strand never crossed: free circle
            continue;
        }
        for (Crossing& c : d.crossings)
            for (int s = 0; s < 4; ++s)
                if (c.arc[s] == cur[i]) c.arc[s] = start[i];
    }
    return renumber_arcs(d);
}

Diagram parse_gauss(const std::string& text) {
    struct Entry {
        bool over;
        int crossing;
        int sign;
        size_t pos;
    };
    std::vector<Entry> entries;
    size_t i = 0;
    while (i < text.size()) {
        if (std::isspace((unsigned char)text[i])) {
            ++i;
            continue;
        }
        Entry e;
        e.pos = i;
        if (text[i] == 'O' || text[i] == 'o')
            e.over = true;
        else if (text[i] == 'U' || text[i] == 'u')
            e.over = false;
        else
            throw NotationError(NotationErrorKind::Syntax, i, "expected O or U entry");
        ++i;
        size_t numstart = i;
        while (i < text.size() && std::isdigit((unsigned char)text[i])) ++i;
        if (i == numstart)
            throw NotationError(NotationErrorKind::Syntax, i, "expected crossing number");
        e.crossing = std::stoi(text.substr(numstart, i - numstart));
        if (i >= text.size() || (text[i] != '+' && text[i] != '-'))
            throw NotationError(NotationErrorKind::Syntax, i, "expected sign + or -");
        e.sign = text[i] == '+' ? 1 : -1;
        ++i;
        entries.push_back(e);
    }
    if (entries.empty()) {
        Diagram d;
        d.extra_circles = 1;
        return d;
    }
    std::map<int, std::vector<size_t>> visits;
    for (size_t k = 0; k < entries.size(); ++k) visits[entries[k].crossing].push_back(k);
    for (auto& [cr, v] : visits) {
        if (v.size() != 2 || entries[v[0]].over == entries[v[1]].over)
            throw NotationError(NotationErrorKind::ArcIncidence, entries[v[0]].pos,
                                "crossing " + std::to_string(cr) +
                                    " needs exactly one O and one U entry");
        if (entries[v[0]].sign != entries[v[1]].sign)
            throw NotationError(NotationErrorKind::OrientationConflict, entries[v[1]].pos,
                                "crossing " + std::to_string(cr) + " has conflicting signs");
    }
    int n = (int)entries.size();  // 2m passages; arc k runs passage k-1 -> k
    auto arc_in = [&](int p) { return p == 0 ? n : p; };
    auto arc_out = [&](int p) { return p + 1; };
    Diagram d;
    for (auto& [cr, v] : visits) {
        int pu = entries[v[0]].over ? (int)v[1] : (int)v[0];
        int po = entries[v[0]].over ? (int)v[0] : (int)v[1];
        int s = entries[v[0]].sign;
        Crossing c;
        c.sign = s;
        if (s > 0)
            c.arc = {arc_in(pu), arc_out(po), arc_out(pu), arc_in(po)};
        else
            c.arc = {arc_in(pu), arc_in(po), arc_out(pu), arc_out(po)};
        d.crossings.push_back(c);
    }
    return d;
}

Diagram renumber_arcs(const Diagram& d) {
    if (d.crossings.empty()) return d;
    auto comps = components(d);
    std::map<int, int> relabel;
    int next = 1;
    for (auto& cyc : comps) {
        size_t base = std::min_element(cyc.begin(), cyc.end()) - cyc.begin();
        for (size_t k = 0; k < cyc.size(); ++k) relabel[cyc[(base + k) % cyc.size()]] = next++;
    }
    Diagram out = d;
    for (Crossing& c : out.crossings)
        for (int s = 0; s < 4; ++s) c.arc[s] = relabel.at(c.arc[s]);
    return out;
}

std::string serialize(const Diagram& d, TextFormat format) {
    require_valid(d);
    if (format == TextFormat::PD) {
        if (d.extra_circles > (d.crossings.empty() ? 1 : 0))
            throw std::invalid_argument("PD text cannot express extra crossingless circles");
        Diagram r = renumber_arcs(d);
        std::vector<std::array<int, 4>> rows;
        for (const Crossing& c : r.crossings) rows.push_back(c.arc);
        std::sort(rows.begin(), rows.end());
        std::ostringstream os;
        for (size_t k = 0; k < rows.size(); ++k) {
            if (k) os << " ";
            os << "X(" << rows[k][0] << "," << rows[k][1] << "," << rows[k][2] << ","
               << rows[k][3] << ")";
        }
        return os.str();
    }
    // Gauss: knots only.
    if (component_count(d) != 1)
        throw std::invalid_argument("Gauss code requires a one-component diagram");
    if (d.crossings.empty()) return "";
    Diagram r = renumber_arcs(d);
    ArcTable t = arc_table(r);
    auto comps = components(r);
    std::map<int, int> number;
    int nextc = 1;
    std::ostringstream os;
    bool first = true;
    for (int arc : comps[0]) {
        ArcEnd h = t.head.at(arc);
        const Crossing& c = r.crossings[h.crossing];
        if (!number.count(h.crossing)) number[h.crossing] = nextc++;
        if (!first) os << " ";
        os << (h.slot == 0 ? "U" : "O") << number[h.crossing] << (c.sign > 0 ? "+" : "-");
        first = false;
    }
    return os.str();
}

}  // namespace knotcalc
