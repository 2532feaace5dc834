#pragma once

#include <array>
#include <string>
#include <string_view>
#include <unordered_map>
#include <vector>

#include "cfic/error.hpp"

namespace cfic {

// Finite simple undirected graph.  Vertex tokens are interned to dense ids in
// first-seen order; every edge stores its endpoints lower id first.  Instances
// are immutable once built (construct through GraphBuilder), so shared reads
// are safe.
class Graph {
public:
    struct HalfEdge {
        int to;    // neighbor vertex id
        int edge;  // edge id
    };

    int vertex_count() const { return static_cast<int>(adj_.size()); }
    int edge_count() const { return static_cast<int>(edges_.size()); }

    const std::string& token(int v) const { return tokens_[v]; }
    // {u, v} with u < v
    std::array<int, 2> edge(int e) const { return edges_[e]; }
    const std::vector<HalfEdge>& neighbors(int v) const { return adj_[v]; }
    int degree(int v) const { return static_cast<int>(adj_[v].size()); }
    int max_degree() const;
    int min_degree() const;

    // -1 when absent
    int find_vertex(std::string_view token) const;
    int find_edge(int u, int v) const;
    bool adjacent(int u, int v) const { return find_edge(u, v) >= 0; }

    bool is_connected() const;  // vacuously true for the empty graph
    bool is_cycle() const;      // connected and 2-regular, n >= 3

private:
    friend class GraphBuilder;
    std::vector<std::string> tokens_;
    std::vector<std::array<int, 2>> edges_;
    std::vector<std::vector<HalfEdge>> adj_;
    std::unordered_map<std::string, int> index_;
};

// Incremental construction; rejects loops and parallel edges.
class GraphBuilder {
public:
    // Interns the token, returning its id (existing or fresh).
    int add_vertex(std::string_view token);
    // Adds edge between two tokens (interning as needed); returns edge id.
    int add_edge(std::string_view u, std::string_view v);
    // Same on already-interned ids.
    int add_edge_ids(int u, int v);

    int vertex_count() const { return g_.vertex_count(); }
    int find_vertex(std::string_view token) const { return g_.find_vertex(token); }

    Graph build();  // leaves the builder empty

private:
    Graph g_;
};

// An incidence is a (vertex, edge) pair with the vertex an endpoint of the
// edge.  Slot 0 of an edge is its lower endpoint, slot 1 the higher.
struct Incidence {
    int vertex;
    int edge;
    bool operator==(const Incidence&) const = default;
    bool operator<(const Incidence& o) const {
        return edge != o.edge ? edge < o.edge : vertex < o.vertex;
    }
};

// The incidence neighborhood of v: both incidences of every edge touching v,
// 2*deg(v) in total, in adjacency order (own incidence first per edge).
std::vector<Incidence> incidences_at(const Graph& g, int v);

// All 2|E| incidences in canonical order (edge id, then lower endpoint first).
std::vector<Incidence> all_incidences(const Graph& g);

// Two distinct incidences (u,e), (v,f) clash when they cannot share a color:
// u == v, or e and f share endpoints u and v, or some w has uw == e, vw == f.
// Equivalent to both lying in a common incidence neighborhood.
bool conflicting(const Graph& g, Incidence a, Incidence b);

// Connected subgraph with maps back to the host graph's ids.
struct Subgraph {
    Graph graph;
    std::vector<int> vertex_to_parent;  // subgraph vid -> parent vid
    std::vector<int> edge_to_parent;    // subgraph eid -> parent eid
};

// Component of `start` in g, optionally with one edge deleted first.
// Vertex tokens carry over from g.
Subgraph component_of(const Graph& g, int start, int skip_edge = -1);

} // namespace cfic
