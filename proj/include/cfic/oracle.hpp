#pragma once

#include <functional>

#include "cfic/coloring.hpp"
#include "cfic/edge_coloring.hpp"
#include "cfic/graph.hpp"

namespace cfic {

// Exact decision/search procedures for conflict-free incidence coloring.
// Intended for small instances (reference answers, tests); palettes are
// limited to 63 colors by the bitmask representation.

struct FeasibleResult {
    SearchStatus status = SearchStatus::infeasible;
    IncidenceColoring coloring;  // meaningful when status == found
};

// Does g admit a conflict-free incidence coloring with colors 1..k?
// Backtracking over edges in id order, assigning each edge an ordered color
// pair; per-vertex bitmasks of blocked colors make the conflict test O(1).
// Deterministic; the first edge is pinned to {1,2} (color symmetry).
FeasibleResult feasible(const Graph& g, int k, Budget budget = {});

struct ChiResult {
    SearchStatus status = SearchStatus::infeasible;
    int chi = 0;                 // exact conflict-free incidence chromatic number
    IncidenceColoring witness;   // optimal coloring
};

// Exact optimum.  Candidate palettes are 2*max_degree .. 2*max_degree + 2;
// the first feasible one is optimal since 2*max_degree is a lower bound and
// the upper end always succeeds.
ChiResult chi_exact(const Graph& g, Budget budget = {});

// Enumerates every conflict-free k-coloring of g (no symmetry breaking),
// in lexicographic order of the assignment vector.  The callback returns
// false to stop early.  Returns the number of colorings visited.
std::uint64_t for_each_coloring(const Graph& g, int k,
                                const std::function<bool(const IncidenceColoring&)>& fn);

// The graph whose vertices are g's incidences, adjacent iff conflicting.
// Vertex tokens are "<vertex>:<lower>-<higher>" for incidence (vertex, edge).
Graph conflict_graph(const Graph& g);

} // namespace cfic
