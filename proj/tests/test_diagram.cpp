#include "doctest.h"
#include "knotcalc/catalog.hpp"
#include "knotcalc/notation.hpp"

#include <random>

using namespace knotcalc;

namespace {
const char* kTrefoilPD = "X(1,4,2,5) X(3,6,4,1) X(5,2,6,3)";
}

TEST_CASE("validate reports faces and violations") {
    ValidationReport r = validate(parse_pd(kTrefoilPD));
    CHECK(r.ok());
    CHECK(r.faces == 5);  // V=3, A=6, V-A+F=2

    // Arc used three times.
    Diagram bad;
    bad.crossings.push_back(Crossing{{1, 2, 2, 1}, 1});
    bad.crossings.push_back(Crossing{{2, 3, 3, 4}, 1});
    ValidationReport rb = validate(bad);
    CHECK(!rb.ok());
    CHECK(rb.violations[0].code == "ArcIncidence");

    // Swapping the two incoming entries of one tuple keeps incidences and
    // orientations but breaks the sphere count: the face trace exposes it.
    Diagram tor = parse_pd(kTrefoilPD);
    REQUIRE(tor.crossings[0].sign == -1);
    std::swap(tor.crossings[0].arc[0], tor.crossings[0].arc[1]);
    ValidationReport rt = validate(tor);
    CHECK(!rt.ok());
    bool planarity = false;
    for (auto& v : rt.violations) planarity |= v.code == "Planarity";
    CHECK(planarity);
}

TEST_CASE("writhe and mirror") {
    Diagram tre = braid_closure(BraidWord{2, {1, 1, 1}});
    CHECK(writhe(tre) == 3);
    CHECK(writhe(named("unknot")) == 0);
    Diagram m = mirror(tre);
    CHECK(writhe(m) == -3);
    CHECK(validate(m).ok());
    CHECK(canonical_form(mirror(m)) == canonical_form(tre));
    // Chirality is visible to the canonical form at three crossings.
    CHECK(canonical_form(m) != canonical_form(tre));
}

TEST_CASE("canonical hash separates different knots") {
    CHECK(canonical_hash(named("trefoil+")) != canonical_hash(named("4_1")));
}

TEST_CASE("reverse: full reversal preserves signs, involution holds") {
    Diagram tre = parse_pd(kTrefoilPD);
    Diagram rev = reverse_component(tre, 0);
    CHECK(validate(rev).ok());
    for (size_t i = 0; i < tre.crossings.size(); ++i)
        CHECK(rev.crossings[i].sign == tre.crossings[i].sign);
    Diagram back = reverse_component(rev, 0);
    CHECK(canonical_form(back) == canonical_form(tre));
}

TEST_CASE("linking number of the positive Hopf link") {
    Diagram hopf = braid_closure(BraidWord{2, {1, 1}});
    CHECK(component_count(hopf) == 2);
    CHECK(linking_number(hopf, 0, 1) == 1);
    CHECK(linking_number(hopf, 1, 0) == 1);
    CHECK_THROWS(linking_number(hopf, 0, 0));
    // Reversing one component flips the linking number.
    Diagram r = reverse_component(hopf, 1);
    CHECK(linking_number(r, 0, 1) == -1);
}

TEST_CASE("linking number of the 2-component unlink is zero") {
    Diagram unlink = braid_closure(BraidWord{2, {1, -1}});  // poke pair, split circles
    REQUIRE(component_count(unlink) == 2);
    CHECK(linking_number(unlink, 0, 1) == 0);
    Diagram round2 = braid_closure(BraidWord{2, {}});
    REQUIRE(component_count(round2) == 2);
    CHECK(linking_number(round2, 0, 1) == 0);
}

TEST_CASE("linking number is symmetric on random 2-component closures") {
    std::mt19937 rng(77);
    int found = 0;
    for (int iter = 0; iter < 200 && found < 40; ++iter) {
        BraidWord b;
        b.strand_count = 2 + (int)(rng() % 2);
        int len = 1 + (int)(rng() % 6);
        for (int k = 0; k < len; ++k) {
            int g = 1 + (int)(rng() % (b.strand_count - 1));
            b.letters.push_back(rng() % 2 ? g : -g);
        }
        Diagram d = braid_closure(b);
        if (component_count(d) != 2 || d.extra_circles > 0) continue;
        ++found;
        CHECK(linking_number(d, 0, 1) == linking_number(d, 1, 0));
    }
    CHECK(found >= 20);
}

TEST_CASE("connected sum: crossing counts add, unknot is the identity") {
    Diagram tre = named("trefoil+");
    Diagram s = connected_sum(named("unknot"), tre);
    CHECK(canonical_form(s) == canonical_form(tre));
    Diagram tt = connected_sum(tre, named("4_1"));
    CHECK(tt.crossings.size() == 7);
    CHECK(component_count(tt) == 1);
    CHECK(validate(tt).ok());
    Diagram hopf = braid_closure(BraidWord{2, {1, 1}});
    CHECK_THROWS(connected_sum(tre, hopf));
}
