#include "cfic/oracle.hpp"

#include <bit>

namespace cfic {

namespace {

// Each incidence of edge uv lies in exactly the two neighborhoods I(u) and
// I(v), so a per-vertex bitmask of colors already present makes the clash
// test for a tentative pair O(1).
struct PairSearch {
    const Graph& g;
    int k;
    std::uint64_t limit;
    std::uint64_t nodes = 0;
    bool out_of_budget = false;
    IncidenceColoring c;
    std::vector<std::uint64_t> used;  // colors present in I(v)
    std::vector<int> left;            // uncolored edges at v

    PairSearch(const Graph& g_, int k_, std::uint64_t limit_)
        : g(g_), k(k_), limit(limit_), c(g_.edge_count()),
          used(g_.vertex_count(), 0), left(g_.vertex_count(), 0) {
        for (int v = 0; v < g.vertex_count(); ++v) left[v] = g.degree(v);
    }

    // both endpoints must keep room for two fresh colors per uncolored edge
    bool capacity_ok(int v) const {
        return k - std::popcount(used[v]) >= 2 * left[v];
    }

    bool place(int e, int cu, int cv) {
        auto [u, v] = g.edge(e);
        std::uint64_t add = (1ull << cu) | (1ull << cv);
        if ((used[u] | used[v]) & add) return false;
        used[u] |= add;
        used[v] |= add;
        --left[u];
        --left[v];
        c.set_edge(e, cu, cv);
        if (capacity_ok(u) && capacity_ok(v)) return true;
        unplace(e, cu, cv);
        return false;
    }

    void unplace(int e, int cu, int cv) {
        auto [u, v] = g.edge(e);
        std::uint64_t add = (1ull << cu) | (1ull << cv);
        used[u] &= ~add;
        used[v] &= ~add;
        ++left[u];
        ++left[v];
        c.set_edge(e, 0, 0);
    }

    // first-solution search; the first edge is pinned to (1,2) since color
    // names are interchangeable
    bool find(int e) {
        if (e == g.edge_count()) return true;
        int top_u = (e == 0) ? 1 : k;
        for (int cu = 1; cu <= top_u; ++cu) {
            int lo_v = (e == 0) ? 2 : 1;
            int top_v = (e == 0) ? 2 : k;
            for (int cv = lo_v; cv <= top_v; ++cv) {
                if (cu == cv) continue;
                if (++nodes > limit) {
                    out_of_budget = true;
                    return false;
                }
                if (!place(e, cu, cv)) continue;
                if (find(e + 1)) return true;
                unplace(e, cu, cv);
                if (out_of_budget) return false;
            }
        }
        return false;
    }

    // exhaustive enumeration, no pinning
    std::uint64_t visited = 0;
    bool enumerate(int e, const std::function<bool(const IncidenceColoring&)>& fn) {
        if (e == g.edge_count()) {
            ++visited;
            return fn(c);
        }
        for (int cu = 1; cu <= k; ++cu)
            for (int cv = 1; cv <= k; ++cv) {
                if (cu == cv) continue;
                if (!place(e, cu, cv)) continue;
                bool keep_going = enumerate(e + 1, fn);
                unplace(e, cu, cv);
                if (!keep_going) return false;
            }
        return true;
    }
};

} // namespace

FeasibleResult feasible(const Graph& g, int k, Budget budget) {
    if (k < 0 || k > 63) fail_domain("palette must be in 0..63");
    FeasibleResult r;
    if (g.edge_count() == 0) {
        r.status = SearchStatus::found;
        r.coloring = IncidenceColoring(0);
        return r;
    }
    if (k < 2) return r;  // an edge alone needs two colors
    PairSearch s(g, k, budget.node_limit);
    for (int v = 0; v < g.vertex_count(); ++v)
        if (!s.capacity_ok(v)) return r;  // k < 2*deg(v), hopeless
    if (s.find(0)) {
        r.status = SearchStatus::found;
        r.coloring = std::move(s.c);
    } else {
        r.status = s.out_of_budget ? SearchStatus::budget_exceeded : SearchStatus::infeasible;
    }
    return r;
}

ChiResult chi_exact(const Graph& g, Budget budget) {
    ChiResult r;
    if (g.edge_count() == 0) {
        r.status = SearchStatus::found;
        r.chi = 0;
        r.witness = IncidenceColoring(0);
        return r;
    }
    int lo = 2 * g.max_degree();
    // lo is a lower bound and lo + 2 always suffices, so the first hit is exact
    for (int k = lo; k <= lo + 2; ++k) {
        FeasibleResult at_k = feasible(g, k, budget);
        if (at_k.status == SearchStatus::found) {
            r.status = SearchStatus::found;
            r.chi = k;
            r.witness = std::move(at_k.coloring);
            return r;
        }
        if (at_k.status == SearchStatus::budget_exceeded) {
            r.status = SearchStatus::budget_exceeded;
            return r;
        }
    }
    fail_domain("no palette in the guaranteed range worked; graph is outside the theory");
}

std::uint64_t for_each_coloring(const Graph& g, int k,
                                const std::function<bool(const IncidenceColoring&)>& fn) {
    if (k < 0 || k > 63) fail_domain("palette must be in 0..63");
    if (g.edge_count() == 0) {
        IncidenceColoring empty(0);
        fn(empty);
        return 1;
    }
    PairSearch s(g, k, UINT64_MAX);
    for (int v = 0; v < g.vertex_count(); ++v)
        if (!s.capacity_ok(v)) return 0;
    s.enumerate(0, fn);
    return s.visited;
}

Graph conflict_graph(const Graph& g) {
    std::vector<Incidence> inc = all_incidences(g);
    auto name = [&](Incidence i) {
        auto [u, v] = g.edge(i.edge);
        return g.token(i.vertex) + ":" + g.token(u) + "-" + g.token(v);
    };
    GraphBuilder b;
    for (Incidence i : inc) b.add_vertex(name(i));
    for (size_t a = 0; a < inc.size(); ++a)
        for (size_t bb = a + 1; bb < inc.size(); ++bb)
            if (conflicting(g, inc[a], inc[bb])) b.add_edge(name(inc[a]), name(inc[bb]));
    return b.build();
}

} // namespace cfic
