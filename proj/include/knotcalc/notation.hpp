#pragma once

#include <stdexcept>
#include <string>
#include <vector>

#include "knotcalc/diagram.hpp"

namespace knotcalc {

enum class NotationErrorKind { Syntax, ArcIncidence, OrientationConflict, OutOfRange };

class NotationError : public std::runtime_error {
public:
    NotationError(NotationErrorKind kind, size_t position, const std::string& message)
        : std::runtime_error(message + " (at offset " + std::to_string(position) + ")"),
          kind(kind),
          position(position),
          message(message) {}
    NotationErrorKind kind;
    size_t position;
    std::string message;
};

const char* to_string(NotationErrorKind k);

struct BraidWord {
    int strand_count = 1;
    std::vector<int> letters;
};

enum class TextFormat { PD, Gauss };

// Tuples `X(a,b,c,d)`: a is the incoming under-strand, b,c,d follow
// counterclockwise. Orientation is inferred from the label successor rule
// (arc k flows into the next-larger label of its component, wrapping).
Diagram parse_pd(const std::string& text);

// `n: i1 i2 ...` with signed generator indices.
BraidWord parse_braid(const std::string& text);

// Signed entries `O<k><sign>` / `U<k><sign>`, one O and one U per crossing.
Diagram parse_gauss(const std::string& text);

Diagram braid_closure(const BraidWord& b);

std::string serialize(const Diagram& d, TextFormat format);

// Relabel arcs 1..A sequentially along each component.
Diagram renumber_arcs(const Diagram& d);

}  // namespace knotcalc
