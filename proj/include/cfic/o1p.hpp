#pragma once

#include "cfic/coloring.hpp"
#include "cfic/edge_coloring.hpp"
#include "cfic/graph.hpp"

namespace cfic {

// Optimal conflict-free incidence coloring for connected outer-1-planar
// inputs (max degree 3 except for cycles, which are handled at any n).
// Dispatch: cycles by the closed form; members of P+ need 7 colors; anything
// else is class one, so doubling an exact edge coloring on max_degree colors
// is optimal at 2*max_degree.

enum class O1PCase { triangle, even_cycle, odd_cycle, p_plus, class_one };

struct O1PVerdict {
    O1PCase kind = O1PCase::class_one;
    int chi = 0;
    IncidenceColoring coloring;
};

// Throws ErrorKind::domain when g is disconnected, or when the class-one
// branch finds no edge coloring on max_degree colors (the input then lies
// outside the advertised class); ErrorKind::budget if that search is cut off.
O1PVerdict color_o1p(const Graph& g, Budget budget = {});

// The optimum alone, without constructing a coloring.
int chi_o1p(const Graph& g);

} // namespace cfic
