#pragma once

#include <string>
#include <vector>

#include "knotcalc/diagram.hpp"
#include "knotcalc/intmatrix.hpp"

namespace knotcalc {

struct SeifertCircles {
    std::vector<std::vector<int>> circles;  // arcs in flow order
    std::vector<int> height;                // nesting height per circle
};

struct Band {
    int crossing;
    int tail_circle;  // circle through the smoothed piece containing the under-in arc
    int head_circle;  // circle through the other piece
    int sign;
};

struct SurfaceModel {
    int discs = 0;
    int bands = 0;
    std::vector<Band> band_list;
    int euler = 0;
    int genus = 0;
    int boundary_components = 0;
    std::string to_json() const;
};

struct SeifertGraph {
    int vertices = 0;
    std::vector<Band> edges;
    std::vector<bool> in_tree;
    // fundamental cycles as (edge index, +1 tail->head / -1) sequences
    std::vector<std::vector<std::pair<int, int>>> cycles;
    std::string to_json() const;
};

// Internal combinatorics of the smoothed diagram: circles, their rim
// event orders, plane regions with the nesting tree, rotation senses.
struct SeifertStructure {
    Diagram diagram;
    SeifertCircles circles;
    std::vector<Band> bands;
    // per circle: cyclic list of (crossing, side) rim events, side 0 = the
    // under-in piece (band tail), 1 = the other piece
    std::vector<std::vector<std::pair<int, int>>> events;
    // event index on the tail/head circle per band
    std::vector<int> tail_event, head_event;
    std::vector<int> region_of_band;
    std::vector<int> r_in, r_out;  // regions beside each circle
    std::vector<int> rho;          // +1 counterclockwise, -1 clockwise
    int outer_face = -1;
    int region_count = 0;
};

SeifertStructure build_structure(const Diagram& d, int outer_face = -1);

SeifertCircles seifert_circles(const Diagram& d, int outer_face = -1);
SurfaceModel build_surface(const Diagram& d, int outer_face = -1);
int genus_upper_bound(const Diagram& d);
SeifertGraph seifert_graph(const Diagram& d);

// Matrix of linking numbers of the fundamental-cycle curves with the
// positive push-offs of one another, taken over the disc-and-band surface.
IntMatrix seifert_matrix(const Diagram& d, int outer_face = -1);

}  // namespace knotcalc
