#pragma once

#include <optional>
#include <string>
#include <vector>

namespace knotcalc {

// Signed edge symbol of a face word; exp is +1 or -1.
struct EdgeLetter {
    std::string symbol;
    int exp = 1;
    bool operator==(const EdgeLetter& o) const { return symbol == o.symbol && exp == o.exp; }
};

// Closed-surface presentation: every symbol occurs exactly twice.
struct PolygonalPresentation {
    std::vector<std::vector<EdgeLetter>> faces;
};

struct SurfaceClass {
    bool orientable = false;
    int euler = 0;
    std::optional<int> genus;  // defined when orientable
};

// Word syntax: whitespace-separated symbols, trailing apostrophe for the
// inverse; faces separated by ';'.
PolygonalPresentation parse_presentation(const std::string& text);
std::string serialize_presentation(const PolygonalPresentation& p);

int euler_characteristic(const PolygonalPresentation& p);
bool is_orientable(const PolygonalPresentation& p);
SurfaceClass classify(const PolygonalPresentation& p);

enum class Modification { M1, M2, M3 };
enum class ModDirection { Forward, Backward };

// Site selectors:
//   M1 forward: face, position of an adjacent x x^-1 pair (word length > 2)
//   M1 backward: face, position at which to insert a fresh cancelling pair
//   M2 forward: face, two corner positions i < j to cut between
//   M2 backward: symbol occurring once in each of two faces to glue along
//   M3 forward: symbol to subdivide
//   M3 backward: symbol whose subdivided pair y z is recombined (pass y)
struct ModSite {
    int face = 0;
    int position = 0;
    int position2 = 0;
    std::string symbol;
};

PolygonalPresentation apply_modification(const PolygonalPresentation& p, Modification which,
                                         ModDirection direction, const ModSite& site);

// All sites where a modification applies, for randomized property tests.
std::vector<ModSite> modification_sites(const PolygonalPresentation& p, Modification which,
                                        ModDirection direction);

PolygonalPresentation canonical_presentation(int genus);

}  // namespace knotcalc
