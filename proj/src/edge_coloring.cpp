#include "cfic/edge_coloring.hpp"

#include <algorithm>

namespace cfic {

bool proper(const Graph& g, const EdgeColoring& ec) {
    if (static_cast<int>(ec.color.size()) != g.edge_count()) return false;
    if (ec.k < 0 || ec.k > 63) return false;
    for (int e = 0; e < g.edge_count(); ++e)
        if (ec.color[e] < 1 || ec.color[e] > ec.k) return false;
    for (int v = 0; v < g.vertex_count(); ++v) {
        std::uint64_t seen = 0;
        for (const Graph::HalfEdge& h : g.neighbors(v)) {
            std::uint64_t bit = 1ull << ec.color[h.edge];
            if (seen & bit) return false;
            seen |= bit;
        }
    }
    return true;
}

namespace {

struct EdgeSearch {
    const Graph& g;
    int k;
    std::uint64_t nodes = 0;
    std::uint64_t limit;
    bool out_of_budget = false;
    std::vector<int> color;               // per edge, 0 = unassigned
    std::vector<std::uint64_t> used;      // per vertex, bitmask of colors 1..k

    EdgeSearch(const Graph& g_, int k_, Budget b)
        : g(g_), k(k_), limit(b.node_limit), color(g_.edge_count(), 0),
          used(g_.vertex_count(), 0) {}

    bool extend(int e) {
        if (e == g.edge_count()) return true;
        auto [u, v] = g.edge(e);
        // first edge pinned to color 1: colors are interchangeable
        int top = (e == 0) ? 1 : k;
        std::uint64_t blocked = used[u] | used[v];
        for (int c = 1; c <= top; ++c) {
            std::uint64_t bit = 1ull << c;
            if (blocked & bit) continue;
            if (++nodes > limit) {
                out_of_budget = true;
                return false;
            }
            color[e] = c;
            used[u] |= bit;
            used[v] |= bit;
            if (extend(e + 1)) return true;
            used[u] &= ~bit;
            used[v] &= ~bit;
            color[e] = 0;
            if (out_of_budget) return false;
        }
        return false;
    }
};

} // namespace

EdgeColoringResult edge_color_exact(const Graph& g, int k, Budget budget) {
    if (k < 0 || k > 63) fail_domain("edge color count must be in 0..63");
    EdgeColoringResult r;
    if (g.edge_count() == 0) {
        r.status = SearchStatus::found;
        r.coloring = {std::vector<int>{}, k};
        return r;
    }
    if (k == 0) return r;  // edges but no colors
    EdgeSearch s(g, k, budget);
    if (s.extend(0)) {
        r.status = SearchStatus::found;
        r.coloring = {std::move(s.color), k};
    } else {
        r.status = s.out_of_budget ? SearchStatus::budget_exceeded : SearchStatus::infeasible;
    }
    return r;
}

ChromaticIndexResult chromatic_index(const Graph& g, Budget budget) {
    ChromaticIndexResult r;
    int delta = g.max_degree();
    // chromatic index is max degree or max degree + 1 on simple graphs
    for (int k = delta; k <= delta + 1; ++k) {
        EdgeColoringResult at_k = edge_color_exact(g, k, budget);
        if (at_k.status == SearchStatus::found) {
            r.status = SearchStatus::found;
            r.value = k;
            r.coloring = std::move(at_k.coloring);
            return r;
        }
        if (at_k.status == SearchStatus::budget_exceeded) {
            r.status = SearchStatus::budget_exceeded;
            return r;
        }
    }
    r.status = SearchStatus::infeasible;  // unreachable on simple graphs
    return r;
}

IncidenceColoring doubled(const Graph& g, const EdgeColoring& ec) {
    if (!proper(g, ec)) fail_domain("doubling requires a proper edge coloring");
    IncidenceColoring c(g.edge_count());
    for (int e = 0; e < g.edge_count(); ++e)
        c.set_edge(e, ec.color[e], ec.color[e] + ec.k);
    return c;
}

} // namespace cfic
