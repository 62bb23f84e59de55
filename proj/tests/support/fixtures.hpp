#pragma once

#include "zfc/graph.hpp"
#include "zfc/rational_matrix.hpp"

namespace zfc::fixtures {

// Loop directed graph with a loop on vertex 1 (the canonical worked example).
inline DirectedGraph loop_example() { return DirectedGraph(3, {{1, 1}, {2, 1}, {1, 2}, {1, 3}, {2, 3}}); }

// Same graph without its loop.
inline DirectedGraph simple_example() { return DirectedGraph(3, {{2, 1}, {1, 2}, {1, 3}, {2, 3}}); }

// Undamped graph whose self-less matching input set is not minimum.
inline DirectedGraph undamped_example() { return DirectedGraph(3, {{2, 1}, {1, 2}, {1, 3}, {2, 3}}); }

inline RationalMatrix a1() { return RationalMatrix{{-3, 1, 0}, {9, 0, 0}, {-5, -4, 0}}; }
inline RationalMatrix a2() { return RationalMatrix{{0, 1, 0}, {2, -3, 0}, {1, -4, 8}}; }

}  // namespace zfc::fixtures
