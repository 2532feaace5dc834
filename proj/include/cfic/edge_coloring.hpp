#pragma once

#include <cstdint>
#include <vector>

#include "cfic/coloring.hpp"
#include "cfic/graph.hpp"

namespace cfic {

// Shared by the exhaustive searches: a node is one tentative assignment made
// during backtracking.  Exceeding the limit aborts the search with a distinct
// outcome instead of an answer.
struct Budget {
    std::uint64_t node_limit = UINT64_MAX;
};

enum class SearchStatus { found, infeasible, budget_exceeded };

// Proper edge coloring with colors 1..k (adjacent edges differ).
struct EdgeColoring {
    std::vector<int> color;  // per edge id
    int k = 0;
};

bool proper(const Graph& g, const EdgeColoring& ec);

struct EdgeColoringResult {
    SearchStatus status = SearchStatus::infeasible;
    EdgeColoring coloring;  // meaningful when status == found
};

// Exact backtracking search for a proper edge coloring with k colors.
// Deterministic: edges in id order, colors ascending, first edge pinned to
// color 1.
EdgeColoringResult edge_color_exact(const Graph& g, int k, Budget budget = {});

struct ChromaticIndexResult {
    SearchStatus status = SearchStatus::infeasible;
    int value = 0;          // least k admitting a proper edge coloring
    EdgeColoring coloring;  // witness at k = value
};

// Exact chromatic index; only max_degree and max_degree + 1 need testing.
ChromaticIndexResult chromatic_index(const Graph& g, Budget budget = {});

// Lifts a proper edge coloring to a conflict-free incidence coloring on
// 2k colors: the edge's lower slot keeps color c, the higher gets c + k.
// Rejects improper or out-of-range inputs.
IncidenceColoring doubled(const Graph& g, const EdgeColoring& ec);

} // namespace cfic
