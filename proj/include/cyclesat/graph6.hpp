#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

#include "cyclesat/graph.hpp"

namespace cyclesat {

struct Graph6Error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// Standard graph6 text encoding: N(n) followed by the upper-triangle bits in
// column-major order, packed 6 per byte, each byte offset by 63. Orders up to
// 62 use the single-byte header, larger orders the '~' three-byte form.
Graph parse_graph6(std::string_view text);
std::string emit_graph6(const Graph& g);

}  // namespace cyclesat
