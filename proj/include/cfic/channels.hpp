#pragma once

#include <vector>

#include "cfic/coloring.hpp"
#include "cfic/graph.hpp"

namespace cfic {

// Receiver's view of a coloring: the channels heard at v are the colors on
// its incidence neighborhood, rainbow iff all 2*deg(v) are distinct.  A total
// coloring is conflict-free exactly when every vertex is rainbow.
struct VertexChannels {
    int vertex = -1;
    std::vector<int> channels;  // in neighborhood order
    bool rainbow = false;
};

struct ChannelReport {
    std::vector<VertexChannels> per_vertex;  // by vertex id
    bool all_rainbow = false;
};

// Requires a total coloring (throws ErrorKind::domain otherwise).
ChannelReport channel_report(const Graph& g, const IncidenceColoring& c);

} // namespace cfic
