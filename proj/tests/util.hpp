#pragma once

#include <random>
#include <string>
#include <utility>
#include <vector>

#include "cfic/coloring.hpp"
#include "cfic/graph.hpp"

namespace cfic::testutil {

inline std::string vt(int i) { return "v" + std::to_string(i); }

// every labeled graph on exactly n vertices, one per edge-subset
inline std::vector<Graph> all_labeled_graphs(int n) {
    std::vector<std::pair<int, int>> slots;
    for (int i = 0; i < n; ++i)
        for (int j = i + 1; j < n; ++j) slots.push_back({i, j});
    std::vector<Graph> out;
    for (std::uint64_t mask = 0; mask < (1ull << slots.size()); ++mask) {
        GraphBuilder b;
        for (int v = 0; v < n; ++v) b.add_vertex(vt(v));
        for (size_t s = 0; s < slots.size(); ++s)
            if (mask & (1ull << s)) b.add_edge(vt(slots[s].first), vt(slots[s].second));
        out.push_back(b.build());
    }
    return out;
}

inline Graph random_graph(std::mt19937_64& rng, int n, double p) {
    GraphBuilder b;
    for (int v = 0; v < n; ++v) b.add_vertex(vt(v));
    std::bernoulli_distribution coin(p);
    for (int i = 0; i < n; ++i)
        for (int j = i + 1; j < n; ++j)
            if (coin(rng)) b.add_edge(vt(i), vt(j));
    return b.build();
}

// arbitrary total assignment, almost surely not conflict-free
inline IncidenceColoring random_coloring(std::mt19937_64& rng, const Graph& g, int k) {
    IncidenceColoring c(g.edge_count());
    std::uniform_int_distribution<int> col(1, k);
    for (int e = 0; e < g.edge_count(); ++e) c.set_edge(e, col(rng), col(rng));
    return c;
}

// I(w) straight from the definition, via the edge list only: both incidences
// of every edge touching w
inline std::vector<Incidence> neighborhood_by_definition(const Graph& g, int w) {
    std::vector<Incidence> out;
    for (int e = 0; e < g.edge_count(); ++e) {
        auto [u, v] = g.edge(e);
        if (u != w && v != w) continue;
        out.push_back({u, e});
        out.push_back({v, e});
    }
    return out;
}

// conflict = distinct incidences meeting in some common neighborhood
inline bool conflict_by_common_neighborhood(const Graph& g, Incidence a, Incidence b) {
    if (a == b) return false;
    for (int w = 0; w < g.vertex_count(); ++w) {
        bool has_a = false, has_b = false;
        for (Incidence i : neighborhood_by_definition(g, w)) {
            has_a = has_a || (i == a);
            has_b = has_b || (i == b);
        }
        if (has_a && has_b) return true;
    }
    return false;
}

// validity by the quadratic scan: total and no conflicting pair shares a color
inline bool valid_by_pair_scan(const Graph& g, const IncidenceColoring& c) {
    if (c.edge_count() != g.edge_count() || !c.total()) return false;
    std::vector<Incidence> inc = all_incidences(g);
    for (size_t i = 0; i < inc.size(); ++i)
        for (size_t j = i + 1; j < inc.size(); ++j)
            if (c.color_at(g, inc[i]) == c.color_at(g, inc[j]) &&
                conflict_by_common_neighborhood(g, inc[i], inc[j]))
                return false;
    return true;
}

inline Graph prism() {
    GraphBuilder b;
    b.add_edge("a", "b");
    b.add_edge("b", "c");
    b.add_edge("a", "c");
    b.add_edge("d", "e");
    b.add_edge("e", "f");
    b.add_edge("d", "f");
    b.add_edge("a", "d");
    b.add_edge("b", "e");
    b.add_edge("c", "f");
    return b.build();
}

inline Graph star(int leaves) {
    GraphBuilder b;
    b.add_vertex("c");
    for (int i = 1; i <= leaves; ++i) b.add_edge("c", "l" + std::to_string(i));
    return b.build();
}

// rebuild g with extra token edges appended (fresh tokens interned on the fly)
inline Graph add_edges(const Graph& g,
                       const std::vector<std::pair<std::string, std::string>>& extra) {
    GraphBuilder b;
    for (int v = 0; v < g.vertex_count(); ++v) b.add_vertex(g.token(v));
    for (int e = 0; e < g.edge_count(); ++e) {
        auto [u, v] = g.edge(e);
        b.add_edge(g.token(u), g.token(v));
    }
    for (const auto& [u, v] : extra) b.add_edge(u, v);
    return b.build();
}

// copy with every token prefixed (for building disjoint unions by token)
inline Graph prefixed(const Graph& g, const std::string& p) {
    GraphBuilder b;
    for (int v = 0; v < g.vertex_count(); ++v) b.add_vertex(p + g.token(v));
    for (int e = 0; e < g.edge_count(); ++e) {
        auto [u, v] = g.edge(e);
        b.add_edge(p + g.token(u), p + g.token(v));
    }
    return b.build();
}

inline Graph graph_union(const Graph& a, const Graph& b) {
    GraphBuilder bb;
    for (int v = 0; v < a.vertex_count(); ++v) bb.add_vertex(a.token(v));
    for (int v = 0; v < b.vertex_count(); ++v) bb.add_vertex(b.token(v));
    for (int e = 0; e < a.edge_count(); ++e) {
        auto [u, v] = a.edge(e);
        bb.add_edge(a.token(u), a.token(v));
    }
    for (int e = 0; e < b.edge_count(); ++e) {
        auto [u, v] = b.edge(e);
        bb.add_edge(b.token(u), b.token(v));
    }
    return bb.build();
}

inline bool same_labeled_graph(const Graph& a, const Graph& b) {
    if (a.vertex_count() != b.vertex_count() || a.edge_count() != b.edge_count()) return false;
    for (int v = 0; v < a.vertex_count(); ++v)
        if (b.find_vertex(a.token(v)) < 0) return false;
    for (int e = 0; e < a.edge_count(); ++e) {
        auto [u, v] = a.edge(e);
        int bu = b.find_vertex(a.token(u)), bv = b.find_vertex(a.token(v));
        if (bu < 0 || bv < 0 || b.find_edge(bu, bv) < 0) return false;
    }
    return true;
}

} // namespace cfic::testutil
