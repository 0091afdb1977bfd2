#pragma once

#include <string>
#include <vector>

#include "knotcalc/diagram.hpp"

namespace knotcalc {

enum class MoveKind { R1Plus, R1Minus, R2Plus, R2Minus, R3 };

const char* to_string(MoveKind k);

// Location data for one local move. Field use per kind:
//   R1-: c1 = crossing, variant = monogon corner (0..3)
//   R1+: a1 = arc (0 = a free circle), variant = kink shape (0..3)
//   R2-: c1, c2 = crossings, a1/a2 = the two bigon arcs
//   R2+: a1 = arc pushed over, a2 = arc pushed under, dir1/dir2 = their
//        traversal directions in the shared face walk
//   R3:  c1 = crossing of the over and under strands, c2 = over/middle,
//        c3 = under/middle, a1 = under strand's triangle arc, a2 = middle's
struct MoveSite {
    MoveKind kind;
    int c1 = -1, c2 = -1, c3 = -1;
    int a1 = -1, a2 = -1;
    int variant = 0;
    bool dir1 = true, dir2 = true;
    std::string to_json() const;
};

std::vector<MoveSite> find_move_sites(const Diagram& d);
Diagram apply_move(const Diagram& d, const MoveSite& site);

enum class SimplifyVerdict { ReducedToUnknot, IrreducibleWithinBudget, BudgetExhausted };

const char* to_string(SimplifyVerdict v);

struct SimplifyResult {
    Diagram result;
    std::vector<MoveSite> trace;
    SimplifyVerdict verdict;
    int states_explored = 0;
    std::string trace_json() const;
};

SimplifyResult simplify(const Diagram& d, int max_crossings, int max_states);

// All distinct diagrams reachable within the budgets; used by invariance
// property tests over move orbits.
std::vector<Diagram> move_orbit(const Diagram& d, int max_crossings, int max_states);

}  // namespace knotcalc
