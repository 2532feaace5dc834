#include "cfic/coloring.hpp"

#include <algorithm>
#include <set>

namespace cfic {

int IncidenceColoring::color_at(const Graph& g, Incidence i) const {
    auto [u, v] = g.edge(i.edge);
    if (i.vertex == u) return colors_[i.edge][0];
    if (i.vertex == v) return colors_[i.edge][1];
    fail_domain("incidence vertex is not an endpoint of its edge");
}

ColorPair IncidenceColoring::edge_set(int e) const {
    ColorPair p = colors_[e];
    if (p[0] > p[1]) std::swap(p[0], p[1]);
    return p;
}

bool IncidenceColoring::total() const {
    for (const ColorPair& p : colors_)
        if (p[0] <= 0 || p[1] <= 0) return false;
    return true;
}

int IncidenceColoring::palette_size() const {
    int m = 0;
    for (const ColorPair& p : colors_) m = std::max({m, p[0], p[1]});
    return m;
}

int palette_count(const IncidenceColoring& c) {
    std::set<int> used;
    for (int e = 0; e < c.edge_count(); ++e)
        for (int s = 0; s < 2; ++s)
            if (c.color(e, s) > 0) used.insert(c.color(e, s));
    return static_cast<int>(used.size());
}

VerifyResult verify(const Graph& g, const IncidenceColoring& c) {
    VerifyResult r;
    if (c.edge_count() != g.edge_count()) {
        r.status = VerifyResult::Status::partial;
        r.message = "coloring covers " + std::to_string(c.edge_count()) + " edges, graph has " +
                    std::to_string(g.edge_count());
        return r;
    }
    for (int e = 0; e < g.edge_count(); ++e) {
        ColorPair p = c.edge_pair(e);
        if (p[0] <= 0 || p[1] <= 0) {
            auto [u, v] = g.edge(e);
            r.status = VerifyResult::Status::partial;
            r.message = "edge " + g.token(u) + " " + g.token(v) + " is uncolored";
            return r;
        }
    }
    // every violation of rules (i)-(iii) repeats a color inside some
    // incidence neighborhood, so one pass over the vertices finds it
    for (int w = 0; w < g.vertex_count(); ++w) {
        std::vector<std::pair<int, Incidence>> seen;  // (color, incidence)
        for (const Graph::HalfEdge& h : g.neighbors(w)) {
            for (Incidence i : {Incidence{w, h.edge}, Incidence{h.to, h.edge}}) {
                int col = c.color_at(g, i);
                for (const auto& [col2, i2] : seen) {
                    if (col2 != col) continue;
                    r.status = VerifyResult::Status::clash;
                    r.first = i2;
                    r.second = i;
                    r.witness = w;
                    auto [a1, b1] = g.edge(i2.edge);
                    auto [a2, b2] = g.edge(i.edge);
                    r.message = "color " + std::to_string(col) + " repeats around vertex " +
                                g.token(w) + ": (" + g.token(i2.vertex) + "; " + g.token(a1) +
                                " " + g.token(b1) + ") vs (" + g.token(i.vertex) + "; " +
                                g.token(a2) + " " + g.token(b2) + ")";
                    return r;
                }
                seen.push_back({col, i});
            }
        }
    }
    r.message = "ok";
    return r;
}

} // namespace cfic
