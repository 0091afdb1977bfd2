#include "doctest.h"
#include "knotcalc/catalog.hpp"
#include "knotcalc/invariants.hpp"
#include "knotcalc/moves.hpp"
#include "knotcalc/notation.hpp"
#include "knotcalc/seifert.hpp"

#include <random>

using namespace knotcalc;

namespace {

Diagram n_kink_unknot(int n, std::mt19937& rng) {
    Diagram d = named("unknot");
    for (int k = 0; k < n; ++k) {
        std::vector<MoveSite> kinks;
        for (const MoveSite& ms : find_move_sites(d))
            if (ms.kind == MoveKind::R1Plus) kinks.push_back(ms);
        REQUIRE(!kinks.empty());
        d = apply_move(d, kinks[rng() % kinks.size()]);
    }
    return d;
}

int count_kind(const Diagram& d, MoveKind k) {
    int n = 0;
    for (const MoveSite& ms : find_move_sites(d))
        if (ms.kind == k) ++n;
    return n;
}

}  // namespace

TEST_CASE("site inventory on small diagrams") {
    Diagram kink = parse_gauss("O1+ U1+");
    CHECK(count_kind(kink, MoveKind::R1Minus) == 1);

    Diagram round_unknot = named("unknot");
    CHECK(count_kind(round_unknot, MoveKind::R1Minus) == 0);
    CHECK(count_kind(round_unknot, MoveKind::R1Plus) == 4);  // one family, four shapes

    Diagram tre = braid_closure(BraidWord{2, {1, 1, 1}});
    CHECK(count_kind(tre, MoveKind::R1Minus) == 0);
    CHECK(count_kind(tre, MoveKind::R2Minus) == 0);
}

TEST_CASE("R1 remove undoes a kink") {
    Diagram kink = parse_gauss("O1+ U1+");
    MoveSite site;
    for (const MoveSite& ms : find_move_sites(kink))
        if (ms.kind == MoveKind::R1Minus) site = ms;
    Diagram u = apply_move(kink, site);
    CHECK(u.crossings.empty());
    CHECK(u.extra_circles == 1);
}

TEST_CASE("R1 and R2 insertions round-trip under the matching removal") {
    std::mt19937 rng(99);
    for (const char* name : {"trefoil+", "4_1"}) {
        Diagram d = named(name);
        std::string canon = canonical_form(d);
        for (const MoveSite& ms : find_move_sites(d)) {
            if (ms.kind != MoveKind::R1Plus && ms.kind != MoveKind::R2Plus) continue;
            Diagram up = apply_move(d, ms);
            CHECK(validate(up).ok());
            int want = (int)d.crossings.size();
            MoveKind inverse =
                ms.kind == MoveKind::R1Plus ? MoveKind::R1Minus : MoveKind::R2Minus;
            bool recovered = false;
            for (const MoveSite& back : find_move_sites(up)) {
                if (back.kind != inverse) continue;
                Diagram down = apply_move(up, back);
                if ((int)down.crossings.size() == want && canonical_form(down) == canon)
                    recovered = true;
            }
            CHECK(recovered);
        }
    }
}

TEST_CASE("R3 keeps the crossing count and revalidates") {
    // Find diagrams with R3 sites inside the trefoil orbit.
    int seen_r3 = 0;
    for (const Diagram& d : move_orbit(named("trefoil+"), 6, 400)) {
        for (const MoveSite& ms : find_move_sites(d)) {
            if (ms.kind != MoveKind::R3) continue;
            ++seen_r3;
            Diagram nd = apply_move(d, ms);
            CHECK(nd.crossings.size() == d.crossings.size());
            CHECK(validate(nd).ok());
            // The slid triangle can be slid back.
            bool back = false;
            for (const MoveSite& ms2 : find_move_sites(nd))
                if (ms2.kind == MoveKind::R3 &&
                    canonical_form(apply_move(nd, ms2)) == canonical_form(d))
                    back = true;
            CHECK(back);
            if (seen_r3 > 10) break;
        }
        if (seen_r3 > 10) break;
    }
    CHECK(seen_r3 > 0);
}

TEST_CASE("simplify unknots kinked unknots") {
    std::mt19937 rng(123);
    for (int n = 1; n <= 8; ++n) {
        Diagram d = n_kink_unknot(n, rng);
        SimplifyResult res = simplify(d, n + 2, 100000);
        CHECK(res.verdict == SimplifyVerdict::ReducedToUnknot);
        CHECK(res.result.crossings.empty());
        CHECK((int)res.trace.size() == n);  // monotone kink removal
        // Replay the trace.
        Diagram replay = d;
        for (const MoveSite& ms : res.trace) replay = apply_move(replay, ms);
        CHECK(canonical_form(replay) == canonical_form(res.result));
    }
}

TEST_CASE("simplify verdicts on the trefoil") {
    Diagram tre = named("trefoil+");
    SimplifyResult res = simplify(tre, 5, 100000);
    CHECK(res.verdict == SimplifyVerdict::IrreducibleWithinBudget);
    CHECK(res.result.crossings.size() == 3);
    SimplifyResult tiny = simplify(tre, 5, 10);
    CHECK(tiny.verdict == SimplifyVerdict::BudgetExhausted);
}

TEST_CASE("a kink plus poke unknot reduces by removals") {
    // Kink, then poke one arc under another: 3 crossings, removable by
    // R2- and R1-.
    std::mt19937 rng(7);
    Diagram d = n_kink_unknot(1, rng);
    Diagram poked;
    bool have = false;
    for (const MoveSite& ms : find_move_sites(d)) {
        if (ms.kind != MoveKind::R2Plus) continue;
        poked = apply_move(d, ms);
        have = true;
        break;
    }
    REQUIRE(have);
    CHECK(poked.crossings.size() == 3);
    SimplifyResult res = simplify(poked, 3, 1000);
    CHECK(res.verdict == SimplifyVerdict::ReducedToUnknot);
    // Trace replays.
    Diagram replay = poked;
    for (const MoveSite& ms : res.trace) replay = apply_move(replay, ms);
    CHECK(replay.crossings.empty());
}

TEST_CASE("linking number is invariant under moves on 2-component links") {
    std::mt19937 rng(555);
    int tested = 0;
    for (int iter = 0; iter < 60 && tested < 6; ++iter) {
        BraidWord b;
        b.strand_count = 2 + (int)(rng() % 2);
        int len = 2 + (int)(rng() % 4);
        for (int k = 0; k < len; ++k) {
            int g = 1 + (int)(rng() % (b.strand_count - 1));
            b.letters.push_back(rng() % 2 ? g : -g);
        }
        Diagram d = braid_closure(b);
        if (component_count(d) != 2 || d.extra_circles > 0) continue;
        ++tested;
        int lk0 = linking_number(d, 0, 1);
        for (const Diagram& o : move_orbit(d, (int)d.crossings.size() + 2, 80)) {
            if (component_count(o) != 2 || o.extra_circles > 0) continue;
            CHECK(linking_number(o, 0, 1) == lk0);
        }
    }
    CHECK(tested >= 3);
}

TEST_CASE("alexander and signature are invariant across move orbits") {
    for (const char* name : {"trefoil+", "4_1"}) {
        Diagram d = named(name);
        Laurent delta0 = alexander(seifert_matrix(d));
        int sigma0 = signature(seifert_matrix(d));
        int states = 0;
        for (const Diagram& o : move_orbit(d, (int)d.crossings.size() + 2, 250)) {
            ++states;
            IntMatrix v = seifert_matrix(o);
            CHECK(alexander(v) == delta0);
            CHECK(signature(v) == sigma0);
        }
        CHECK(states > 50);
    }
}

TEST_CASE("move site serialization") {
    MoveSite ms;
    ms.kind = MoveKind::R2Minus;
    ms.c1 = 0;
    ms.c2 = 1;
    ms.a1 = 3;
    ms.a2 = 4;
    CHECK(ms.to_json().find("\"R2-\"") != std::string::npos);
}
