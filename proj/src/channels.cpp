#include "cfic/channels.hpp"

#include <set>

namespace cfic {

ChannelReport channel_report(const Graph& g, const IncidenceColoring& c) {
    if (c.edge_count() != g.edge_count() || !c.total())
        fail_domain("channel report needs a total coloring");
    ChannelReport rep;
    rep.all_rainbow = true;
    rep.per_vertex.reserve(g.vertex_count());
    for (int v = 0; v < g.vertex_count(); ++v) {
        VertexChannels vc;
        vc.vertex = v;
        for (const Graph::HalfEdge& h : g.neighbors(v)) {
            vc.channels.push_back(c.color_at(g, {v, h.edge}));
            vc.channels.push_back(c.color_at(g, {h.to, h.edge}));
        }
        std::set<int> distinct(vc.channels.begin(), vc.channels.end());
        vc.rainbow = distinct.size() == vc.channels.size();
        rep.all_rainbow = rep.all_rainbow && vc.rainbow;
        rep.per_vertex.push_back(std::move(vc));
    }
    return rep;
}

} // namespace cfic
