#include "cfic/closed_form.hpp"

namespace cfic {

static std::string vtok(int i) { return "v" + std::to_string(i); }

Graph make_cycle(int n) {
    if (n < 3) fail_domain("a cycle needs at least 3 vertices");
    GraphBuilder b;
    for (int i = 1; i <= n; ++i) b.add_vertex(vtok(i));
    for (int i = 1; i <= n; ++i) b.add_edge(vtok(i), vtok(i % n + 1));
    return b.build();
}

Graph make_complete(int n) {
    if (n < 1) fail_domain("a complete graph needs at least 1 vertex");
    GraphBuilder b;
    for (int i = 1; i <= n; ++i) b.add_vertex(vtok(i));
    for (int i = 1; i <= n; ++i)
        for (int j = i + 1; j <= n; ++j) b.add_edge(vtok(i), vtok(j));
    return b.build();
}

Graph make_path(int n) {
    if (n < 1) fail_domain("a path needs at least 1 vertex");
    GraphBuilder b;
    for (int i = 1; i <= n; ++i) b.add_vertex(vtok(i));
    for (int i = 1; i < n; ++i) b.add_edge(vtok(i), vtok(i + 1));
    return b.build();
}

std::vector<ColorPair> cycle_edge_pairs(int n) {
    if (n < 3) fail_domain("a cycle needs at least 3 vertices");
    std::vector<ColorPair> pairs(n);
    if (n == 3) {
        pairs = {{1, 2}, {3, 4}, {5, 6}};
    } else if (n % 2 == 0) {
        for (int i = 0; i < n; ++i) pairs[i] = (i % 2 == 0) ? ColorPair{1, 2} : ColorPair{3, 4};
    } else {
        // alternate up to the last three edges, then close the odd gap with 5
        for (int i = 0; i < n - 3; ++i)
            pairs[i] = (i % 2 == 0) ? ColorPair{1, 2} : ColorPair{3, 4};
        pairs[n - 3] = {1, 5};
        pairs[n - 2] = {2, 3};
        pairs[n - 1] = {4, 5};
    }
    return pairs;
}

// Disjoint sets on adjacent edges make any slot split conflict-free: the
// colors heard at a vertex are the union of the sets of its edges.
static void assign_pairs(const std::vector<int>& edge_order, const std::vector<ColorPair>& pairs,
                         IncidenceColoring& c) {
    for (size_t i = 0; i < edge_order.size(); ++i)
        c.set_edge(edge_order[i], pairs[i][0], pairs[i][1]);
}

ColoredGraph color_cycle(int n) {
    ColoredGraph out{make_cycle(n), IncidenceColoring(n)};
    std::vector<ColorPair> pairs = cycle_edge_pairs(n);
    std::vector<int> order(n);
    for (int i = 0; i < n; ++i) order[i] = i;  // edge i is v_{i+1} v_{i+2 mod n}
    assign_pairs(order, pairs, out.coloring);
    return out;
}

std::vector<std::vector<int>> complete_matching_classes(int n) {
    Graph g = make_complete(n);
    // 1-based index arithmetic modulo m
    auto idx = [](int t, int m) { return ((t - 1) % m + m) % m + 1; };
    std::vector<std::vector<int>> classes;
    if (n < 2) return classes;
    if (n % 2 == 0) {
        // rotations of a near-perfect matching of v1..v_{n-1} plus a spoke to vn
        int m = n - 1;
        for (int i = 1; i <= n - 1; ++i) {
            std::vector<int> cls;
            for (int j = 1; j <= (n - 2) / 2; ++j) {
                int a = g.find_vertex(vtok(idx(i - j, m)));
                int b = g.find_vertex(vtok(idx(i + j, m)));
                cls.push_back(g.find_edge(a, b));
            }
            cls.push_back(g.find_edge(g.find_vertex(vtok(i)), g.find_vertex(vtok(n))));
            classes.push_back(std::move(cls));
        }
    } else {
        for (int i = 1; i <= n; ++i) {
            std::vector<int> cls;
            for (int j = 0; j <= (n - 3) / 2; ++j) {
                int a = g.find_vertex(vtok(idx(i - j, n)));
                int b = g.find_vertex(vtok(idx(i + j + 1, n)));
                cls.push_back(g.find_edge(a, b));
            }
            classes.push_back(std::move(cls));
        }
    }
    return classes;
}

ColoredGraph color_complete(int n) {
    ColoredGraph out{make_complete(n), IncidenceColoring(n * (n - 1) / 2)};
    std::vector<std::vector<int>> classes = complete_matching_classes(n);
    for (size_t i = 0; i < classes.size(); ++i)
        for (int e : classes[i])
            out.coloring.set_edge(e, 2 * static_cast<int>(i) + 1, 2 * static_cast<int>(i) + 2);
    return out;
}

} // namespace cfic
