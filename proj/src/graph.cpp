#include "cfic/graph.hpp"

#include <algorithm>

namespace cfic {

int Graph::max_degree() const {
    int d = 0;
    for (const auto& nb : adj_) d = std::max(d, static_cast<int>(nb.size()));
    return d;
}

int Graph::min_degree() const {
    if (adj_.empty()) return 0;
    int d = degree(0);
    for (const auto& nb : adj_) d = std::min(d, static_cast<int>(nb.size()));
    return d;
}

int Graph::find_vertex(std::string_view token) const {
    auto it = index_.find(std::string(token));
    return it == index_.end() ? -1 : it->second;
}

int Graph::find_edge(int u, int v) const {
    if (u < 0 || v < 0 || u >= vertex_count() || v >= vertex_count() || u == v) return -1;
    for (const HalfEdge& h : adj_[u])
        if (h.to == v) return h.edge;
    return -1;
}

bool Graph::is_connected() const {
    if (vertex_count() == 0) return true;
    std::vector<char> seen(vertex_count(), 0);
    std::vector<int> stack{0};
    seen[0] = 1;
    int reached = 1;
    while (!stack.empty()) {
        int v = stack.back();
        stack.pop_back();
        for (const HalfEdge& h : adj_[v])
            if (!seen[h.to]) {
                seen[h.to] = 1;
                ++reached;
                stack.push_back(h.to);
            }
    }
    return reached == vertex_count();
}

bool Graph::is_cycle() const {
    if (vertex_count() < 3 || edge_count() != vertex_count()) return false;
    for (int v = 0; v < vertex_count(); ++v)
        if (degree(v) != 2) return false;
    return is_connected();
}

int GraphBuilder::add_vertex(std::string_view token) {
    std::string key(token);
    auto it = g_.index_.find(key);
    if (it != g_.index_.end()) return it->second;
    int id = g_.vertex_count();
    g_.index_.emplace(std::move(key), id);
    g_.tokens_.emplace_back(token);
    g_.adj_.emplace_back();
    return id;
}

int GraphBuilder::add_edge(std::string_view u, std::string_view v) {
    int iu = add_vertex(u);  // sequenced: u interns first
    int iv = add_vertex(v);
    return add_edge_ids(iu, iv);
}

int GraphBuilder::add_edge_ids(int u, int v) {
    if (u < 0 || v < 0 || u >= g_.vertex_count() || v >= g_.vertex_count())
        fail_domain("edge endpoint out of range");
    if (u == v) fail_domain("loop at vertex '" + g_.tokens_[u] + "'");
    if (u > v) std::swap(u, v);
    if (g_.find_edge(u, v) >= 0)
        fail_domain("duplicate edge '" + g_.tokens_[u] + " " + g_.tokens_[v] + "'");
    int e = g_.edge_count();
    g_.edges_.push_back({u, v});
    g_.adj_[u].push_back({v, e});
    g_.adj_[v].push_back({u, e});
    return e;
}

Graph GraphBuilder::build() {
    Graph out = std::move(g_);
    g_ = Graph{};
    return out;
}

std::vector<Incidence> incidences_at(const Graph& g, int v) {
    if (v < 0 || v >= g.vertex_count()) fail_domain("unknown vertex id");
    std::vector<Incidence> out;
    out.reserve(2 * g.degree(v));
    for (const Graph::HalfEdge& h : g.neighbors(v)) {
        out.push_back({v, h.edge});
        out.push_back({h.to, h.edge});
    }
    return out;
}

std::vector<Incidence> all_incidences(const Graph& g) {
    std::vector<Incidence> out;
    out.reserve(2 * g.edge_count());
    for (int e = 0; e < g.edge_count(); ++e) {
        auto [u, v] = g.edge(e);
        out.push_back({u, e});
        out.push_back({v, e});
    }
    return out;
}

static void check_incidence(const Graph& g, Incidence i) {
    if (i.edge < 0 || i.edge >= g.edge_count()) fail_domain("incidence names an unknown edge");
    auto [u, v] = g.edge(i.edge);
    if (i.vertex != u && i.vertex != v)
        fail_domain("incidence vertex is not an endpoint of its edge");
}

bool conflicting(const Graph& g, Incidence a, Incidence b) {
    check_incidence(g, a);
    check_incidence(g, b);
    if (a == b) return false;
    if (a.vertex == b.vertex) return true;
    auto [eu, ev] = g.edge(a.edge);
    auto [fu, fv] = g.edge(b.edge);
    // e or f is exactly the edge between the two incidence vertices
    if (eu == b.vertex || ev == b.vertex) return true;
    if (fu == a.vertex || fv == a.vertex) return true;
    // a common neighbor w carrying both edges: uw = e and vw = f
    int wa = (eu == a.vertex) ? ev : eu;
    int wb = (fu == b.vertex) ? fv : fu;
    return wa == wb;
}

Subgraph component_of(const Graph& g, int start, int skip_edge) {
    if (start < 0 || start >= g.vertex_count()) fail_domain("unknown vertex id");
    std::vector<char> seen(g.vertex_count(), 0);
    std::vector<int> order{start};
    seen[start] = 1;
    for (size_t k = 0; k < order.size(); ++k)
        for (const Graph::HalfEdge& h : g.neighbors(order[k])) {
            if (h.edge == skip_edge || seen[h.to]) continue;
            seen[h.to] = 1;
            order.push_back(h.to);
        }
    std::sort(order.begin(), order.end());

    Subgraph s;
    GraphBuilder b;
    for (int v : order) {
        b.add_vertex(g.token(v));
        s.vertex_to_parent.push_back(v);
    }
    for (int e = 0; e < g.edge_count(); ++e) {
        if (e == skip_edge) continue;
        auto [u, v] = g.edge(e);
        if (!seen[u] || !seen[v]) continue;
        b.add_edge(g.token(u), g.token(v));
        s.edge_to_parent.push_back(e);
    }
    s.graph = b.build();
    return s;
}

} // namespace cfic
