#pragma once

#include <iosfwd>
#include <string>

#include "cfic/coloring.hpp"
#include "cfic/graph.hpp"

namespace cfic {

// Edge-list format: one `u v` per line, a lone token declares an isolated
// vertex, `#` starts a comment, blank lines are ignored.  Errors carry line
// numbers.
Graph read_graph(std::istream& in);
void write_graph(std::ostream& out, const Graph& g);

// Coloring format: one `u v color_at_u color_at_v` per line for an edge of g,
// plus a trailing `# palette <k>` line on output.  On input the palette line
// is optional but must match palette_size when present.  Missing edges yield
// a partial coloring (verify reports those); unknown edges are errors.
IncidenceColoring read_coloring(std::istream& in, const Graph& g);
void write_coloring(std::ostream& out, const Graph& g, const IncidenceColoring& c);

// Graphviz export; edges are labeled "cu|cv" when a coloring is given.
std::string to_dot(const Graph& g, const IncidenceColoring* c = nullptr);

} // namespace cfic
