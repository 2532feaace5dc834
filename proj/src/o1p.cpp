#include "cfic/o1p.hpp"

#include "cfic/class_p.hpp"
#include "cfic/closed_form.hpp"

namespace cfic {

namespace {

// edges of the cycle in traversal order, starting at vertex 0
std::vector<int> cycle_edge_order(const Graph& g) {
    std::vector<int> order;
    int prev = -1, at = 0;
    do {
        const Graph::HalfEdge& step =
            g.neighbors(at)[0].to != prev ? g.neighbors(at)[0] : g.neighbors(at)[1];
        order.push_back(step.edge);
        prev = at;
        at = step.to;
    } while (at != 0);
    return order;
}

O1PCase cycle_case(int n) {
    if (n == 3) return O1PCase::triangle;
    return n % 2 == 0 ? O1PCase::even_cycle : O1PCase::odd_cycle;
}

int cycle_chi(int n) {
    if (n == 3) return 6;
    return n % 2 == 0 ? 4 : 5;
}

} // namespace

O1PVerdict color_o1p(const Graph& g, Budget budget) {
    if (!g.is_connected()) fail_domain("input must be connected");
    O1PVerdict v;
    if (g.is_cycle()) {
        int n = g.vertex_count();
        v.kind = cycle_case(n);
        v.chi = cycle_chi(n);
        v.coloring = IncidenceColoring(n);
        std::vector<ColorPair> pairs = cycle_edge_pairs(n);
        std::vector<int> order = cycle_edge_order(g);
        for (int i = 0; i < n; ++i)
            v.coloring.set_edge(order[i], pairs[i][0], pairs[i][1]);
        return v;
    }
    if (g.max_degree() == 3 && is_in_p_plus(g)) {
        v.kind = O1PCase::p_plus;
        v.chi = 7;
        v.coloring = color_class_p_plus(g);
        return v;
    }
    // anything else in the class is class one: doubling an edge coloring on
    // max_degree colors is optimal
    int delta = g.max_degree();
    EdgeColoringResult ec = edge_color_exact(g, delta, budget);
    if (ec.status == SearchStatus::budget_exceeded)
        fail_budget("edge coloring search ran out of budget");
    if (ec.status != SearchStatus::found)
        fail_domain("no edge coloring on max_degree colors: input is outside the class");
    v.kind = O1PCase::class_one;
    v.chi = 2 * delta;
    v.coloring = doubled(g, ec.coloring);
    return v;
}

int chi_o1p(const Graph& g) {
    if (!g.is_connected()) fail_domain("input must be connected");
    if (g.is_cycle()) return cycle_chi(g.vertex_count());
    if (g.max_degree() == 3 && is_in_p_plus(g)) return 7;
    return 2 * g.max_degree();
}

} // namespace cfic
