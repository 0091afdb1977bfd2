#include "doctest.h"
#include "knotcalc/catalog.hpp"
#include "knotcalc/notation.hpp"

#include <random>

using namespace knotcalc;

namespace {
const char* kTrefoilPD = "X(1,4,2,5) X(3,6,4,1) X(5,2,6,3)";
}

TEST_CASE("parse_pd on the standard trefoil code") {
    Diagram d = parse_pd(kTrefoilPD);
    CHECK(d.crossings.size() == 3);
    CHECK(component_count(d) == 1);
    ValidationReport r = validate(d);
    CHECK(r.ok());
    CHECK(r.faces == 5);
}

TEST_CASE("parse_pd of the empty text is the round unknot") {
    Diagram d = parse_pd("");
    CHECK(d.crossings.empty());
    CHECK(d.extra_circles == 1);
    CHECK(component_count(d) == 1);
}

TEST_CASE("parse_pd rejects bad input with positions") {
    CHECK_THROWS_AS(parse_pd("X(1,2,3)"), NotationError);
    try {
        parse_pd("X(1,2,3)");
    } catch (const NotationError& e) {
        CHECK(e.kind == NotationErrorKind::Syntax);
    }
    try {
        parse_pd("X(1,4,2,5) X(3,6,4,1) X(5,2,6,1)");
    } catch (const NotationError& e) {
        CHECK((e.kind == NotationErrorKind::ArcIncidence ||
               e.kind == NotationErrorKind::OrientationConflict));
        CHECK(e.position < std::string("X(1,4,2,5) X(3,6,4,1) X(5,2,6,1)").size());
    }
    CHECK_THROWS_AS(parse_pd("Y(1,2,3,4)"), NotationError);
    // Arc used three times.
    CHECK_THROWS_AS(parse_pd("X(1,4,2,5) X(3,6,4,1) X(5,2,6,4)"), NotationError);
}

TEST_CASE("parse_braid grammar") {
    BraidWord b = parse_braid("2: 1 1 1");
    CHECK(b.strand_count == 2);
    CHECK(b.letters == std::vector<int>{1, 1, 1});
    BraidWord f8 = parse_braid("3: 1 -2 1 -2");
    CHECK(f8.strand_count == 3);
    CHECK(f8.letters == std::vector<int>{1, -2, 1, -2});
    CHECK_THROWS_AS(parse_braid("2: 3"), NotationError);
    try {
        parse_braid("2: 3");
    } catch (const NotationError& e) {
        CHECK(e.kind == NotationErrorKind::OutOfRange);
    }
    CHECK_THROWS_AS(parse_braid("nonsense"), NotationError);
    CHECK_THROWS_AS(parse_braid("2: x"), NotationError);
    BraidWord empty = parse_braid("2:");
    CHECK(empty.letters.empty());
}

TEST_CASE("braid closure basics") {
    Diagram tre = braid_closure(BraidWord{2, {1, 1, 1}});
    CHECK(tre.crossings.size() == 3);
    CHECK(component_count(tre) == 1);
    CHECK(writhe(tre) == 3);
    CHECK(validate(tre).ok());

    Diagram unlink = braid_closure(BraidWord{2, {}});
    CHECK(unlink.crossings.empty());
    CHECK(unlink.extra_circles == 2);
    CHECK(component_count(unlink) == 2);

    Diagram fig8 = braid_closure(BraidWord{3, {1, -2, 1, -2}});
    CHECK(fig8.crossings.size() == 4);
    CHECK(component_count(fig8) == 1);
    CHECK(writhe(fig8) == 0);
    CHECK(validate(fig8).ok());
}

TEST_CASE("braid closure component count equals permutation cycle count") {
    // Brute-force cycle oracle for the underlying strand permutation.
    auto cycle_count = [](const BraidWord& b) {
        std::vector<int> perm(b.strand_count);
        for (int i = 0; i < b.strand_count; ++i) perm[i] = i;
        for (int letter : b.letters) std::swap(perm[std::abs(letter) - 1], perm[std::abs(letter)]);
        std::vector<bool> seen(b.strand_count, false);
        int cyc = 0;
        for (int i = 0; i < b.strand_count; ++i) {
            if (seen[i]) continue;
            ++cyc;
            for (int j = i; !seen[j]; j = perm[j]) seen[j] = true;
        }
        return cyc;
    };
    std::mt19937 rng(2024);
    for (int iter = 0; iter < 60; ++iter) {
        BraidWord b;
        b.strand_count = 2 + (int)(rng() % 3);
        int len = (int)(rng() % 7);
        for (int k = 0; k < len; ++k) {
            int g = 1 + (int)(rng() % (b.strand_count - 1));
            b.letters.push_back(rng() % 2 ? g : -g);
        }
        Diagram d = braid_closure(b);
        CHECK((int)d.crossings.size() == len);
        CHECK(component_count(d) == cycle_count(b));
        CHECK(validate(d).ok());
    }
}

TEST_CASE("gauss code parsing") {
    Diagram tre = parse_gauss("O1+ U2+ O3+ U1+ O2+ U3+");
    CHECK(tre.crossings.size() == 3);
    CHECK(component_count(tre) == 1);
    CHECK(validate(tre).ok());
    CHECK(writhe(tre) == 3);

    Diagram kink = parse_gauss("O1+ U1+");
    CHECK(kink.crossings.size() == 1);
    CHECK(validate(kink).ok());
    CHECK(component_count(kink) == 1);

    CHECK_THROWS_AS(parse_gauss("O1+ O1+"), NotationError);
    try {
        parse_gauss("O1+ O1+");
    } catch (const NotationError& e) {
        CHECK(e.kind == NotationErrorKind::ArcIncidence);
    }
    CHECK_THROWS_AS(parse_gauss("O1+ U1-"), NotationError);
    CHECK_THROWS_AS(parse_gauss("Q1+"), NotationError);
}

TEST_CASE("serialize round-trips through both formats") {
    for (const char* name : {"trefoil+", "4_1", "5_2"}) {
        Diagram d = named(name);
        Diagram back = parse_pd(serialize(d, TextFormat::PD));
        CHECK(canonical_form(back) == canonical_form(d));
        Diagram gback = parse_gauss(serialize(d, TextFormat::Gauss));
        CHECK(canonical_form(gback) == canonical_form(d));
    }
    Diagram tre = parse_pd(kTrefoilPD);
    CHECK(canonical_form(parse_pd(serialize(tre, TextFormat::PD))) == canonical_form(tre));
    CHECK(serialize(named("unknot"), TextFormat::PD) == "");
}

TEST_CASE("gauss serialization refuses links") {
    Diagram hopf = braid_closure(BraidWord{2, {1, 1}});
    CHECK(component_count(hopf) == 2);
    CHECK_THROWS(serialize(hopf, TextFormat::Gauss));
}

TEST_CASE("relabelled PD parses to the same canonical form") {
    Diagram d = parse_pd(kTrefoilPD);
    Diagram shifted = d;
    for (Crossing& c : shifted.crossings)
        for (int s = 0; s < 4; ++s) c.arc[s] += 10;
    CHECK(canonical_form(shifted) == canonical_form(d));
    CHECK(canonical_hash(shifted) == canonical_hash(d));
}
