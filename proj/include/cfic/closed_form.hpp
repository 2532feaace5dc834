#pragma once

#include <vector>

#include "cfic/coloring.hpp"
#include "cfic/graph.hpp"

namespace cfic {

struct ColoredGraph {
    Graph graph;
    IncidenceColoring coloring;
};

// Vertices "v1".."vn".
Graph make_cycle(int n);     // n >= 3
Graph make_complete(int n);  // n >= 1
Graph make_path(int n);      // n >= 1 vertices

// Color sets along a cycle v1..vn, entry i for edge v_{i+1}v_{i+2} (mod n).
// n = 3 uses {1,2},{3,4},{5,6}; even n alternates {1,2},{3,4}; odd n >= 5
// alternates for the first n-3 edges and closes with {1,5},{2,3},{4,5}.
std::vector<ColorPair> cycle_edge_pairs(int n);

// Optimal cycle coloring: palette 6 for n = 3, 4 for even n, 5 for odd n >= 5.
ColoredGraph color_cycle(int n);

// Optimal complete-graph coloring on 2n-2 colors (even n) or 2n (odd n >= 3).
// Edges are partitioned into near-perfect matchings by the rotation classes
// of a regular polygon; class i gets the color set {2i-1, 2i}.
ColoredGraph color_complete(int n);

// The rotation classes themselves, as lists of edge ids of make_complete(n);
// class count is n-1 for even n, n for odd n.  Exposed for tests.
std::vector<std::vector<int>> complete_matching_classes(int n);

} // namespace cfic
