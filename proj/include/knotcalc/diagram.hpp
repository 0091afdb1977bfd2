#pragma once

#include <array>
#include <cstdint>
#include <map>
#include <string>
#include <vector>

#include "knotcalc/laurent.hpp"

namespace knotcalc {

// One crossing of an oriented diagram. arc[0..3] are the incident arc
// labels counterclockwise with arc[0] the incoming under-strand.
// sign +1 means the over-strand runs arc[3] -> arc[1]; sign -1 means it
// runs arc[1] -> arc[3] (right-hand rule: det[over,under] > 0 is +1).
struct Crossing {
    std::array<int, 4> arc{};
    int sign = 0;
};

struct Violation {
    std::string code;     // ArcIncidence | OrientationConflict | Planarity | BadSign
    std::string message;
};

struct ValidationReport {
    std::vector<Violation> violations;
    int faces = 0;  // face count of the 4-valent plane graph (plus free circles)
    bool ok() const { return violations.empty(); }
};

// Oriented link diagram. Crossingless unknot components are counted
// separately since tuples cannot carry them.
struct Diagram {
    std::vector<Crossing> crossings;
    int extra_circles = 0;

    bool empty() const { return crossings.empty(); }
};

// Occurrence of an arc at a crossing slot.
struct ArcEnd {
    int crossing = -1;
    int slot = -1;
};

// Per-arc incidence and orientation data derived from a diagram.
struct ArcTable {
    std::map<int, ArcEnd> head;  // slot where the arc flows in
    std::map<int, ArcEnd> tail;  // slot where the arc flows out
    std::vector<int> arcs;       // sorted arc labels
};

// Step of a face walk: the walk arrives along `arc` into `slot` of
// `crossing`; `forward` is true when the arc was traversed with its flow.
struct FaceStep {
    int crossing;
    int slot;
    int arc;
    bool forward;
};

struct FaceData {
    std::vector<std::vector<FaceStep>> faces;
    // face id of the corner between slot s and s+1 of each crossing,
    // indexed [crossing][s]
    std::vector<std::array<int, 4>> corner_face;
    // face to the right of each directed arc traversal
    std::map<int, int> right_of_forward;
    std::map<int, int> right_of_backward;
};

bool is_in_slot(const Crossing& c, int slot);
int out_slot_for_in(const Crossing& c, int in_slot);

ArcTable arc_table(const Diagram& d);
// Components as arc cycles in flow order, sorted by smallest arc label.
// Crossingless circles are not represented here.
std::vector<std::vector<int>> components(const Diagram& d);
int component_count(const Diagram& d);
// Index into components() for an arc label.
int component_of_arc(const Diagram& d, int arc);

FaceData trace_faces(const Diagram& d);

ValidationReport validate(const Diagram& d);
void require_valid(const Diagram& d);  // throws std::invalid_argument

int writhe(const Diagram& d);
Diagram mirror(const Diagram& d);
Diagram reverse_component(const Diagram& d, int component_index);
Diagram connected_sum(const Diagram& d1, const Diagram& d2);
int linking_number(const Diagram& d, int comp1, int comp2);

// Serialization minimized over per-component basepoints and component
// order; equal strings exactly for relabel-equivalent diagrams.
std::string canonical_form(const Diagram& d);
uint64_t canonical_hash(const Diagram& d);

}  // namespace knotcalc
