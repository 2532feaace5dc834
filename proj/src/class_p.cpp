#include "cfic/class_p.hpp"

#include <algorithm>
#include <map>
#include <set>
#include <string>

#include "cfic/oracle.hpp"

namespace cfic {

namespace {

[[noreturn]] void internal_fail(const std::string& msg) {
    throw std::logic_error("internal: " + msg);
}

void require(bool ok, const char* msg) {
    if (!ok) internal_fail(msg);
}

} // namespace

// ---------------------------------------------------------------- base core

Graph k4_plus() {
    GraphBuilder b;
    for (const char* t : {"z", "a", "b", "c", "d"}) b.add_vertex(t);
    b.add_edge("z", "a");
    b.add_edge("z", "b");
    b.add_edge("a", "c");
    b.add_edge("a", "d");
    b.add_edge("b", "c");
    b.add_edge("b", "d");
    b.add_edge("c", "d");
    return b.build();
}

IncidenceColoring k4_plus_coloring() {
    // first solution of the exact search on k4_plus() with 7 colors, frozen;
    // edge order za, zb, ac, ad, bc, bd, cd, slot order (lower, higher)
    static const ColorPair frozen[7] = {
        {1, 2}, {3, 4}, {3, 5}, {6, 7}, {6, 7}, {1, 5}, {2, 4},
    };
    IncidenceColoring c(7);
    for (int e = 0; e < 7; ++e) c.set_edge(e, frozen[e][0], frozen[e][1]);
    return c;
}

bool is_k4_plus(const Graph& g) {
    if (g.vertex_count() != 5 || g.edge_count() != 7) return false;
    int z = -1;
    for (int v = 0; v < 5; ++v) {
        if (g.degree(v) == 2) {
            if (z >= 0) return false;
            z = v;
        } else if (g.degree(v) != 3) {
            return false;
        }
    }
    if (z < 0) return false;
    int a = g.neighbors(z)[0].to, b = g.neighbors(z)[1].to;
    if (g.adjacent(a, b)) return false;
    std::vector<int> rest;
    for (int v = 0; v < 5; ++v)
        if (v != z && v != a && v != b) rest.push_back(v);
    int c = rest[0], d = rest[1];
    return g.adjacent(c, d) && g.adjacent(a, c) && g.adjacent(a, d) && g.adjacent(b, c) &&
           g.adjacent(b, d);
}

// ------------------------------------------------------- gadget templates

Graph gadget_graph(GadgetKind kind, int t) {
    GraphBuilder b;
    switch (kind) {
    case GadgetKind::g2:
        b.add_edge("u", "v");
        b.add_edge("u", "w");
        b.add_edge("v", "w");
        b.add_edge("v", "x");
        b.add_edge("w", "y");
        break;
    case GadgetKind::g4:
        b.add_edge("u0", "u1");
        b.add_edge("u0", "v1");
        b.add_edge("u0", "w");
        b.add_edge("u1", "v0");
        b.add_edge("v0", "v1");
        b.add_edge("v0", "w");
        b.add_edge("u1", "x");
        b.add_edge("v1", "y");
        break;
    case GadgetKind::g8:
        b.add_edge("u0", "u1");
        b.add_edge("u1", "u2");
        b.add_edge("u0", "v0");
        b.add_edge("u0", "v1");
        b.add_edge("v0", "v1");
        b.add_edge("u2", "v0");
        b.add_edge("u2", "x");
        b.add_edge("v1", "y");
        break;
    case GadgetKind::h: {
        if (t < 1) fail_domain("ladder rail length must be >= 1");
        auto xv = [&](int i) { return i == t ? std::string("x") : "x" + std::to_string(i); };
        auto yv = [&](int i) { return i == t ? std::string("y") : "y" + std::to_string(i); };
        b.add_edge("xp", "yp");
        b.add_edge("xp", yv(0));
        b.add_edge(xv(0), "yp");
        b.add_edge("xp", xv(0));
        b.add_edge("yp", yv(0));
        for (int i = 0; i < t; ++i) {
            b.add_edge(xv(i), xv(i + 1));
            b.add_edge(yv(i), yv(i + 1));
        }
        for (int i = 1; i <= t - 1; ++i) b.add_edge(xv(i), yv(i));
        break;
    }
    }
    return b.build();
}

// ------------------------------------------------------------------ pastes

namespace {

std::string fresh_token(const GraphBuilder& b, const std::string& base) {
    if (b.find_vertex(base) < 0) return base;
    for (int i = 2;; ++i) {
        std::string t = base + "." + std::to_string(i);
        if (b.find_vertex(t) < 0) return t;
    }
}

} // namespace

Graph paste_g(const Graph& g, int z, int t) {
    if (z < 0 || z >= g.vertex_count()) fail_domain("unknown vertex id");
    if (g.degree(z) != 2) fail_domain("degree-2 expansion needs a degree-2 anchor");
    if (t != 2 && t != 4 && t != 8) fail_domain("gadget size must be 2, 4 or 8");
    int n1 = g.neighbors(z)[0].to, n2 = g.neighbors(z)[1].to;
    if (n1 > n2) std::swap(n1, n2);

    GraphBuilder b;
    for (int v = 0; v < g.vertex_count(); ++v)
        if (v != z) b.add_vertex(g.token(v));
    for (int e = 0; e < g.edge_count(); ++e) {
        auto [u, v] = g.edge(e);
        if (u == z || v == z) continue;
        b.add_edge(g.token(u), g.token(v));
    }
    std::string suffix = std::to_string(g.vertex_count());
    auto role = [&](const char* r) { return fresh_token(b, r + suffix); };
    const std::string& tx = g.token(n1);
    const std::string& ty = g.token(n2);
    if (t == 2) {
        std::string u = role("u"), v = role("v"), w = role("w");
        b.add_edge(u, v);
        b.add_edge(u, w);
        b.add_edge(v, w);
        b.add_edge(v, tx);
        b.add_edge(w, ty);
    } else if (t == 4) {
        std::string u0 = role("u0"), u1 = role("u1"), v0 = role("v0"), v1 = role("v1"),
                    w = role("w");
        b.add_edge(u0, u1);
        b.add_edge(u0, v1);
        b.add_edge(u0, w);
        b.add_edge(u1, v0);
        b.add_edge(v0, v1);
        b.add_edge(v0, w);
        b.add_edge(u1, tx);
        b.add_edge(v1, ty);
    } else {
        std::string u0 = role("u0"), u1 = role("u1"), u2 = role("u2"), v0 = role("v0"),
                    v1 = role("v1");
        b.add_edge(u0, u1);
        b.add_edge(u1, u2);
        b.add_edge(u0, v0);
        b.add_edge(u0, v1);
        b.add_edge(v0, v1);
        b.add_edge(u2, v0);
        b.add_edge(u2, tx);
        b.add_edge(v1, ty);
    }
    return b.build();
}

Graph paste_h(const Graph& g, int e, int t) {
    if (e < 0 || e >= g.edge_count()) fail_domain("unknown edge id");
    if (t < 1) fail_domain("ladder rail length must be >= 1");
    auto [ex, ey] = g.edge(e);

    GraphBuilder b;
    for (int v = 0; v < g.vertex_count(); ++v) b.add_vertex(g.token(v));
    for (int f = 0; f < g.edge_count(); ++f) {
        if (f == e) continue;
        auto [u, v] = g.edge(f);
        b.add_edge(g.token(u), g.token(v));
    }
    std::string suffix = std::to_string(g.vertex_count());
    auto role = [&](const std::string& r) { return fresh_token(b, r + suffix); };
    std::vector<std::string> xs(t + 1), ys(t + 1);
    for (int i = 0; i < t; ++i) {
        xs[i] = role("x" + std::to_string(i));
        ys[i] = role("y" + std::to_string(i));
    }
    xs[t] = g.token(ex);
    ys[t] = g.token(ey);
    std::string xp = role("xp"), yp = role("yp");
    b.add_edge(xp, yp);
    b.add_edge(xp, ys[0]);
    b.add_edge(xs[0], yp);
    b.add_edge(xp, xs[0]);
    b.add_edge(yp, ys[0]);
    for (int i = 0; i < t; ++i) {
        b.add_edge(xs[i], xs[i + 1]);
        b.add_edge(ys[i], ys[i + 1]);
    }
    for (int i = 1; i <= t - 1; ++i) b.add_edge(xs[i], ys[i]);
    return b.build();
}

// -------------------------------------------------------------------- peel

namespace {

// Mutable scratch copy of a graph for the reversal search.  Vertex ids are
// stable and never reused; reversals kill gadget interiors and may mint a
// fresh degree-2 vertex.
struct Workspace {
    std::vector<char> alive;
    std::vector<std::vector<int>> adj;  // sorted neighbor lists
    int alive_count = 0;

    static Workspace from(const Graph& g) {
        Workspace ws;
        ws.alive.assign(g.vertex_count(), 1);
        ws.adj.resize(g.vertex_count());
        ws.alive_count = g.vertex_count();
        for (int v = 0; v < g.vertex_count(); ++v) {
            for (const Graph::HalfEdge& h : g.neighbors(v)) ws.adj[v].push_back(h.to);
            std::sort(ws.adj[v].begin(), ws.adj[v].end());
        }
        return ws;
    }

    int size() const { return static_cast<int>(adj.size()); }
    int degree(int v) const { return static_cast<int>(adj[v].size()); }
    bool adjacent(int u, int v) const {
        return std::binary_search(adj[u].begin(), adj[u].end(), v);
    }

    void add_edge(int u, int v) {
        adj[u].insert(std::lower_bound(adj[u].begin(), adj[u].end(), v), v);
        adj[v].insert(std::lower_bound(adj[v].begin(), adj[v].end(), u), u);
    }

    void remove_vertex(int v) {
        for (int w : adj[v]) {
            auto& nb = adj[w];
            nb.erase(std::lower_bound(nb.begin(), nb.end(), v));
        }
        adj[v].clear();
        alive[v] = 0;
        --alive_count;
    }

    int new_vertex() {
        adj.emplace_back();
        alive.push_back(1);
        ++alive_count;
        return size() - 1;
    }

    // third neighbor: the single element of adj[v] minus the given two
    int third(int v, int skip1, int skip2) const {
        for (int w : adj[v])
            if (w != skip1 && w != skip2) return w;
        return -1;
    }
};

// degree profile every member of the class satisfies at every peel level
bool profile_ok(const Workspace& ws) {
    if (ws.alive_count < 5 || ws.alive_count % 2 == 0) return false;
    int deg2 = 0;
    for (int v = 0; v < ws.size(); ++v) {
        if (!ws.alive[v]) continue;
        int d = ws.degree(v);
        if (d == 2)
            ++deg2;
        else if (d != 3)
            return false;
    }
    return deg2 == 1;
}

bool core_reached(const Workspace& ws, std::array<int, 5>& base) {
    if (ws.alive_count != 5) return false;
    int z = -1, edges2 = 0;
    for (int v = 0; v < ws.size(); ++v) {
        if (!ws.alive[v]) continue;
        edges2 += ws.degree(v);
        if (ws.degree(v) == 2)
            z = v;
        else if (ws.degree(v) != 3)
            return false;
    }
    if (edges2 != 14 || z < 0) return false;
    int a = ws.adj[z][0], b = ws.adj[z][1];
    if (ws.adjacent(a, b)) return false;
    std::vector<int> rest;
    for (int v = 0; v < ws.size(); ++v)
        if (ws.alive[v] && v != z && v != a && v != b) rest.push_back(v);
    int c = rest[0], d = rest[1];
    if (!ws.adjacent(c, d) || !ws.adjacent(a, c) || !ws.adjacent(a, d) || !ws.adjacent(b, c) ||
        !ws.adjacent(b, d))
        return false;
    base = {z, a, b, c, d};
    return true;
}

void match_g2(const Workspace& ws, int u, std::vector<PeelStep>& out) {
    if (ws.degree(u) != 2) return;
    int v = ws.adj[u][0], w = ws.adj[u][1];
    if (ws.degree(v) != 3 || ws.degree(w) != 3 || !ws.adjacent(v, w)) return;
    int x = ws.third(v, u, w), y = ws.third(w, u, v);
    if (x == y) return;
    PeelStep s;
    s.kind = GadgetKind::g2;
    s.internal = {u, v, w};
    s.x = x;
    s.y = y;
    out.push_back(std::move(s));
}

void match_g4(const Workspace& ws, int w, std::vector<PeelStep>& out) {
    if (ws.degree(w) != 2) return;
    int u0 = ws.adj[w][0], v0 = ws.adj[w][1];
    if (ws.degree(u0) != 3 || ws.degree(v0) != 3) return;
    if (ws.adjacent(u0, v0)) return;
    // both their non-w neighborhoods must be the same pair {u1, v1}
    std::vector<int> A;
    for (int q : ws.adj[u0])
        if (q != w) A.push_back(q);
    std::vector<int> B;
    for (int q : ws.adj[v0])
        if (q != w) B.push_back(q);
    if (A != B) return;  // both sorted
    int u1 = A[0], v1 = A[1];
    if (ws.adjacent(u1, v1)) return;
    if (ws.degree(u1) != 3 || ws.degree(v1) != 3) return;
    int x = ws.third(u1, u0, v0), y = ws.third(v1, u0, v0);
    if (x == y) return;
    PeelStep s;
    s.kind = GadgetKind::g4;
    s.internal = {u0, u1, v0, v1, w};
    s.x = x;
    s.y = y;
    out.push_back(std::move(s));
}

void match_g8(const Workspace& ws, int u1, std::vector<PeelStep>& out) {
    if (ws.degree(u1) != 2) return;
    for (int flip = 0; flip < 2; ++flip) {
        int u0 = ws.adj[u1][flip], u2 = ws.adj[u1][1 - flip];
        if (ws.degree(u0) != 3 || ws.degree(u2) != 3 || ws.adjacent(u0, u2)) continue;
        std::vector<int> A;
        for (int q : ws.adj[u0])
            if (q != u1) A.push_back(q);
        bool first_rung = ws.adjacent(A[0], u2), second_rung = ws.adjacent(A[1], u2);
        if (first_rung == second_rung) continue;  // exactly one of them borders u2
        int v0 = first_rung ? A[0] : A[1];
        int v1 = first_rung ? A[1] : A[0];
        if (!ws.adjacent(v0, v1)) continue;
        if (ws.degree(v0) != 3 || ws.degree(v1) != 3) continue;
        int x = ws.third(u2, u1, v0), y = ws.third(v1, u0, v0);
        if (x == y) continue;
        std::set<int> inside{u0, u1, u2, v0, v1};
        if (inside.count(x) || inside.count(y)) continue;
        PeelStep s;
        s.kind = GadgetKind::g8;
        s.internal = {u0, u1, u2, v0, v1};
        s.x = x;
        s.y = y;
        out.push_back(std::move(s));
    }
}

void match_h(const Workspace& ws, int x0, std::vector<PeelStep>& out) {
    if (ws.degree(x0) != 3) return;
    for (int i = 0; i < 3; ++i) {
        for (int j = i + 1; j < 3; ++j) {
            int xp = ws.adj[x0][i], yp = ws.adj[x0][j];
            if (!ws.adjacent(xp, yp)) continue;
            if (ws.degree(xp) != 3 || ws.degree(yp) != 3) continue;
            int y0 = ws.third(xp, yp, x0);
            if (y0 != ws.third(yp, xp, x0)) continue;  // both must close on one vertex
            if (x0 >= y0) continue;                    // mirror copy; rails swapped
            if (ws.degree(y0) != 3 || ws.adjacent(x0, y0)) continue;

            std::set<int> inside{xp, yp, x0, y0};
            std::vector<int> internal{xp, yp, x0, y0};
            int px = x0, py = y0;
            int cx = ws.third(x0, xp, yp), cy = ws.third(y0, xp, yp);
            int t = 1;
            bool dead = false;
            while (true) {
                if (cx == cy || inside.count(cx) || inside.count(cy)) {
                    dead = true;
                    break;
                }
                if (!ws.adjacent(cx, cy)) break;  // hollow boundary reached
                if (ws.degree(cx) != 3 || ws.degree(cy) != 3) {
                    dead = true;  // rung present but the ladder cannot continue
                    break;
                }
                internal.push_back(cx);
                internal.push_back(cy);
                inside.insert(cx);
                inside.insert(cy);
                int nx = ws.third(cx, px, cy), ny = ws.third(cy, py, cx);
                px = cx;
                py = cy;
                cx = nx;
                cy = ny;
                ++t;
            }
            if (dead) continue;
            PeelStep s;
            s.kind = GadgetKind::h;
            s.t = t;
            s.internal = std::move(internal);
            s.x = cx;
            s.y = cy;
            out.push_back(std::move(s));
        }
    }
}

std::vector<PeelStep> reversal_candidates(const Workspace& ws) {
    std::vector<PeelStep> out;
    for (int v = 0; v < ws.size(); ++v)
        if (ws.alive[v]) match_g2(ws, v, out);
    for (int v = 0; v < ws.size(); ++v)
        if (ws.alive[v]) match_g4(ws, v, out);
    for (int v = 0; v < ws.size(); ++v)
        if (ws.alive[v]) match_g8(ws, v, out);
    for (int v = 0; v < ws.size(); ++v)
        if (ws.alive[v]) match_h(ws, v, out);
    return out;
}

// applies the reversal, minting the fresh vertex for g-steps
void apply_reversal(Workspace& ws, PeelStep& s) {
    for (int v : s.internal) ws.remove_vertex(v);
    if (s.kind == GadgetKind::h) {
        ws.add_edge(s.x, s.y);
    } else {
        s.z = ws.new_vertex();
        ws.add_edge(s.z, s.x);
        ws.add_edge(s.z, s.y);
    }
}

bool peel_dfs(const Workspace& ws, std::vector<PeelStep>& steps, std::array<int, 5>& base) {
    if (!profile_ok(ws)) return false;
    if (core_reached(ws, base)) return true;
    for (PeelStep& cand : reversal_candidates(ws)) {
        Workspace next = ws;
        apply_reversal(next, cand);
        steps.push_back(cand);
        if (peel_dfs(next, steps, base)) return true;
        steps.pop_back();
    }
    return false;
}

} // namespace

PeelResult peel(const Graph& g) {
    PeelResult r;
    if (!g.is_connected() || g.max_degree() > 3) return r;
    Workspace ws = Workspace::from(g);
    std::vector<PeelStep> steps;
    std::array<int, 5> base{};
    if (!peel_dfs(ws, steps, base)) return r;
    r.in_p = true;
    r.trace.steps = std::move(steps);
    r.trace.base = base;
    return r;
}

bool is_in_p(const Graph& g) { return peel(g).in_p; }

// ------------------------------------------------------------------ replay

namespace {

// Scratch edge set keyed by workspace vertex ids; replaying a trace through
// it reproduces the peeled graph exactly.
struct EdgeSet {
    std::set<std::pair<int, int>> edges;

    static std::pair<int, int> key(int u, int v) { return {std::min(u, v), std::max(u, v)}; }

    void add(int u, int v) {
        require(u != v && edges.insert(key(u, v)).second, "replay built a duplicate edge");
    }
    void drop_vertex(int v) {
        for (auto it = edges.begin(); it != edges.end();)
            it = (it->first == v || it->second == v) ? edges.erase(it) : ++it;
    }
    void drop_edge(int u, int v) {
        require(edges.erase(key(u, v)) == 1, "replay removed a missing edge");
    }
};

// role accessors for an h step's internal list {xp, yp, x0, y0, x1, y1, ...}
int h_rail_x(const PeelStep& s, int i) {
    if (i == s.t) return s.x;
    return i == 0 ? s.internal[2] : s.internal[4 + 2 * (i - 1)];
}
int h_rail_y(const PeelStep& s, int i) {
    if (i == s.t) return s.y;
    return i == 0 ? s.internal[3] : s.internal[5 + 2 * (i - 1)];
}

template <typename AddEdge, typename DropVertex, typename DropEdge>
void replay_trace(const PeelTrace& trace, AddEdge add, DropVertex drop_vertex,
                  DropEdge drop_edge) {
    const auto& [z, a, b, c, d] = trace.base;
    add(z, a);
    add(z, b);
    add(a, c);
    add(a, d);
    add(b, c);
    add(b, d);
    add(c, d);
    for (auto it = trace.steps.rbegin(); it != trace.steps.rend(); ++it) {
        const PeelStep& s = *it;
        switch (s.kind) {
        case GadgetKind::g2: {
            drop_vertex(s.z);
            int u = s.internal[0], v = s.internal[1], w = s.internal[2];
            add(u, v);
            add(u, w);
            add(v, w);
            add(v, s.x);
            add(w, s.y);
            break;
        }
        case GadgetKind::g4: {
            drop_vertex(s.z);
            int u0 = s.internal[0], u1 = s.internal[1], v0 = s.internal[2], v1 = s.internal[3],
                w = s.internal[4];
            add(u0, u1);
            add(u0, v1);
            add(u0, w);
            add(u1, v0);
            add(v0, v1);
            add(v0, w);
            add(u1, s.x);
            add(v1, s.y);
            break;
        }
        case GadgetKind::g8: {
            drop_vertex(s.z);
            int u0 = s.internal[0], u1 = s.internal[1], u2 = s.internal[2], v0 = s.internal[3],
                v1 = s.internal[4];
            add(u0, u1);
            add(u1, u2);
            add(u0, v0);
            add(u0, v1);
            add(v0, v1);
            add(u2, v0);
            add(u2, s.x);
            add(v1, s.y);
            break;
        }
        case GadgetKind::h: {
            drop_edge(s.x, s.y);
            int xp = s.internal[0], yp = s.internal[1];
            add(xp, yp);
            add(xp, h_rail_y(s, 0));
            add(h_rail_x(s, 0), yp);
            add(xp, h_rail_x(s, 0));
            add(yp, h_rail_y(s, 0));
            for (int i = 0; i < s.t; ++i) {
                add(h_rail_x(s, i), h_rail_x(s, i + 1));
                add(h_rail_y(s, i), h_rail_y(s, i + 1));
            }
            for (int i = 1; i <= s.t - 1; ++i) add(h_rail_x(s, i), h_rail_y(s, i));
            break;
        }
        }
    }
}

} // namespace

bool trace_rebuilds(const PeelTrace& trace, const Graph& g) {
    EdgeSet es;
    try {
        replay_trace(
            trace, [&](int u, int v) { es.add(u, v); }, [&](int v) { es.drop_vertex(v); },
            [&](int u, int v) { es.drop_edge(u, v); });
    } catch (const std::logic_error&) {
        return false;
    }
    if (static_cast<int>(es.edges.size()) != g.edge_count()) return false;
    for (int e = 0; e < g.edge_count(); ++e) {
        auto [u, v] = g.edge(e);
        if (!es.edges.count(EdgeSet::key(u, v))) return false;
    }
    return true;
}

// --------------------------------------------------------------- extenders

namespace {

ColorPair norm_pair(ColorPair p, int palette, const char* what) {
    if (p[0] > p[1]) std::swap(p[0], p[1]);
    if (p[0] < 1 || p[1] > palette || p[0] == p[1])
        fail_domain(std::string(what) + " is not a valid color pair");
    return p;
}

ColorPair fresh_pair(std::initializer_list<ColorPair> used, int palette) {
    std::uint32_t mask = 0;
    for (ColorPair p : used) mask |= (1u << p[0]) | (1u << p[1]);
    ColorPair q{0, 0};
    int have = 0;
    for (int c = 1; c <= palette && have < 2; ++c)
        if (!(mask & (1u << c))) q[have++] = c;
    if (have < 2) fail_domain("palette too small for a fresh pair");
    return q;
}

} // namespace

G2Interior extend_g2(ColorPair p1, ColorPair p2, int palette) {
    p1 = norm_pair(p1, palette, "p1");
    p2 = norm_pair(p2, palette, "p2");
    if (!pair_disjoint(p1, p2)) fail_domain("stub pairs must be disjoint");
    ColorPair q = fresh_pair({p1, p2}, palette);
    return {/*uv=*/p2, /*uw=*/p1, /*vw=*/q};
}

G4Interior extend_g4(ColorPair p1, ColorPair p2, int palette) {
    p1 = norm_pair(p1, palette, "p1");
    p2 = norm_pair(p2, palette, "p2");
    if (!pair_disjoint(p1, p2)) fail_domain("stub pairs must be disjoint");
    ColorPair q = fresh_pair({p1, p2}, palette);
    return {/*u0u1=*/q, /*u0v1=*/p1, /*u0w=*/p2, /*u1v0=*/p2, /*v0v1=*/q, /*v0w=*/p1};
}

G8Interior extend_g8(ColorPair p1, ColorPair p2, int palette) {
    p1 = norm_pair(p1, palette, "p1");
    p2 = norm_pair(p2, palette, "p2");
    if (!pair_disjoint(p1, p2)) fail_domain("stub pairs must be disjoint");
    ColorPair q = fresh_pair({p1, p2}, palette);
    return {/*u0u1=*/p1, /*u1u2=*/p2, /*u0v0=*/p2, /*u0v1=*/q, /*v0v1=*/p1, /*u2v0=*/q};
}

HInterior extend_h(int t, ColorPair boundary, int palette) {
    if (t < 1) fail_domain("ladder rail length must be >= 1");
    boundary = norm_pair(boundary, palette, "boundary");
    HInterior out;
    out.rail.resize(t);
    out.rung.resize(t - 1);
    out.rail[t - 1] = boundary;
    for (int j = t - 2; j >= 0; --j) out.rail[j] = fresh_pair({out.rail[j + 1]}, palette);
    for (int r = 1; r <= t - 1; ++r)
        out.rung[r - 1] = fresh_pair({out.rail[r - 1], out.rail[r]}, palette);
    ColorPair base = out.rail[0];
    ColorPair q1 = fresh_pair({base}, palette);
    ColorPair q2 = fresh_pair({base, q1}, palette);
    out.xp_yp = base;
    out.xp_y0 = q1;
    out.x0_yp = q1;
    out.xp_x0 = q2;
    out.yp_y0 = q2;
    return out;
}

// --------------------------------------------------------- replay coloring

IncidenceColoring color_class_p(const Graph& g) {
    PeelResult pr = peel(g);
    if (!pr.in_p) fail_domain("graph is not in the hard class");
    const PeelTrace& trace = pr.trace;

    std::map<std::pair<int, int>, ColorPair> pairs;
    auto put = [&](int u, int v, ColorPair p) {
        require(pairs.emplace(EdgeSet::key(u, v), p).second, "replay recolored an edge");
    };
    auto take = [&](int u, int v) {
        auto it = pairs.find(EdgeSet::key(u, v));
        require(it != pairs.end(), "replay lost a host pair");
        ColorPair p = it->second;
        pairs.erase(it);
        return p;
    };

    // base core colors, transported from the canonical constant by role
    // (core ids equal role positions z,a,b,c,d by construction)
    {
        Graph core = k4_plus();
        IncidenceColoring cc = k4_plus_coloring();
        for (int e = 0; e < core.edge_count(); ++e) {
            auto [u, v] = core.edge(e);
            put(trace.base[u], trace.base[v], cc.edge_set(e));
        }
    }

    for (auto it = trace.steps.rbegin(); it != trace.steps.rend(); ++it) {
        const PeelStep& s = *it;
        switch (s.kind) {
        case GadgetKind::g2: {
            ColorPair p1 = take(s.z, s.x), p2 = take(s.z, s.y);
            G2Interior in = extend_g2(p1, p2);
            int u = s.internal[0], v = s.internal[1], w = s.internal[2];
            put(u, v, in.uv);
            put(u, w, in.uw);
            put(v, w, in.vw);
            put(v, s.x, p1);
            put(w, s.y, p2);
            break;
        }
        case GadgetKind::g4: {
            ColorPair p1 = take(s.z, s.x), p2 = take(s.z, s.y);
            G4Interior in = extend_g4(p1, p2);
            int u0 = s.internal[0], u1 = s.internal[1], v0 = s.internal[2], v1 = s.internal[3],
                w = s.internal[4];
            put(u0, u1, in.u0u1);
            put(u0, v1, in.u0v1);
            put(u0, w, in.u0w);
            put(u1, v0, in.u1v0);
            put(v0, v1, in.v0v1);
            put(v0, w, in.v0w);
            put(u1, s.x, p1);
            put(v1, s.y, p2);
            break;
        }
        case GadgetKind::g8: {
            ColorPair p1 = take(s.z, s.x), p2 = take(s.z, s.y);
            G8Interior in = extend_g8(p1, p2);
            int u0 = s.internal[0], u1 = s.internal[1], u2 = s.internal[2], v0 = s.internal[3],
                v1 = s.internal[4];
            put(u0, u1, in.u0u1);
            put(u1, u2, in.u1u2);
            put(u0, v0, in.u0v0);
            put(u0, v1, in.u0v1);
            put(v0, v1, in.v0v1);
            put(u2, v0, in.u2v0);
            put(u2, s.x, p1);
            put(v1, s.y, p2);
            break;
        }
        case GadgetKind::h: {
            ColorPair p = take(s.x, s.y);
            HInterior in = extend_h(s.t, p);
            int xp = s.internal[0], yp = s.internal[1];
            put(xp, yp, in.xp_yp);
            put(xp, h_rail_y(s, 0), in.xp_y0);
            put(h_rail_x(s, 0), yp, in.x0_yp);
            put(xp, h_rail_x(s, 0), in.xp_x0);
            put(yp, h_rail_y(s, 0), in.yp_y0);
            for (int i = 0; i < s.t; ++i) {
                put(h_rail_x(s, i), h_rail_x(s, i + 1), in.rail[i]);
                put(h_rail_y(s, i), h_rail_y(s, i + 1), in.rail[i]);
            }
            for (int i = 1; i <= s.t - 1; ++i)
                put(h_rail_x(s, i), h_rail_y(s, i), in.rung[i - 1]);
            break;
        }
        }
    }

    IncidenceColoring out(g.edge_count());
    for (int e = 0; e < g.edge_count(); ++e) {
        auto [u, v] = g.edge(e);
        auto it = pairs.find(EdgeSet::key(u, v));
        require(it != pairs.end(), "replay missed an edge of the input");
        out.set_edge(e, it->second[0], it->second[1]);
        pairs.erase(it);
    }
    require(pairs.empty(), "replay colored edges the input lacks");
    require(verify(g, out).ok(), "replay produced a clashing coloring");
    return out;
}

// ------------------------------------------------------------------- P+

namespace {

struct PSplit {
    Subgraph h;   // the generating subgraph, containing u with degree 2
    int u = -1;   // cut vertex, host id
    int ux = -1;  // u's third edge, host id, not in h
};

std::optional<PSplit> find_p_subgraph(const Graph& g) {
    for (int u = 0; u < g.vertex_count(); ++u) {
        if (g.degree(u) != 3) continue;
        for (const Graph::HalfEdge& he : g.neighbors(u)) {
            Subgraph comp = component_of(g, u, he.edge);
            if (comp.graph.vertex_count() >= g.vertex_count()) continue;  // nothing split off
            if (!peel(comp.graph).in_p) continue;
            PSplit s;
            s.h = std::move(comp);
            s.u = u;
            s.ux = he.edge;
            return s;
        }
    }
    return std::nullopt;
}

} // namespace

bool is_in_p_plus(const Graph& g) {
    if (!g.is_connected() || g.max_degree() != 3) return false;
    if (is_in_p(g)) return true;
    return find_p_subgraph(g).has_value();
}

IncidenceColoring color_class_p_plus(const Graph& g) {
    if (is_in_p(g)) return color_class_p(g);
    if (!g.is_connected() || g.max_degree() != 3)
        fail_domain("graph is not in the extended hard class");
    std::optional<PSplit> split = find_p_subgraph(g);
    if (!split) fail_domain("graph is not in the extended hard class");

    const Subgraph& h = split->h;
    std::vector<char> in_h_vertex(g.vertex_count(), 0);
    for (int pv : h.vertex_to_parent) in_h_vertex[pv] = 1;
    std::vector<char> in_h_edge(g.edge_count(), 0);
    for (int pe : h.edge_to_parent) in_h_edge[pe] = 1;

    // the rest of g: everything outside h, plus the cut vertex and its third edge
    Subgraph rest;
    {
        GraphBuilder b;
        for (int v = 0; v < g.vertex_count(); ++v)
            if (!in_h_vertex[v] || v == split->u) {
                b.add_vertex(g.token(v));
                rest.vertex_to_parent.push_back(v);
            }
        for (int e = 0; e < g.edge_count(); ++e) {
            if (in_h_edge[e]) continue;
            auto [u, v] = g.edge(e);
            b.add_edge(g.token(u), g.token(v));
            rest.edge_to_parent.push_back(e);
        }
        rest.graph = b.build();
    }

    IncidenceColoring rest_col;
    if (is_in_p_plus(rest.graph)) {
        rest_col = color_class_p_plus(rest.graph);
    } else {
        EdgeColoringResult ec = edge_color_exact(rest.graph, 3);
        if (ec.status != SearchStatus::found)
            fail_domain("remainder is not 3-edge-colorable; graph is outside the theory");
        rest_col = doubled(rest.graph, ec.coloring);
    }

    IncidenceColoring h_col = color_class_p(h.graph);

    // palette permutation making the three color sets at the cut vertex disjoint
    int u_in_h = -1, u_in_rest = -1;
    for (size_t i = 0; i < h.vertex_to_parent.size(); ++i)
        if (h.vertex_to_parent[i] == split->u) u_in_h = static_cast<int>(i);
    for (size_t i = 0; i < rest.vertex_to_parent.size(); ++i)
        if (rest.vertex_to_parent[i] == split->u) u_in_rest = static_cast<int>(i);
    require(u_in_h >= 0 && u_in_rest >= 0, "cut vertex lost in the split");
    int ux_in_rest = -1;
    for (size_t i = 0; i < rest.edge_to_parent.size(); ++i)
        if (rest.edge_to_parent[i] == split->ux) ux_in_rest = static_cast<int>(i);
    require(ux_in_rest >= 0, "cut edge lost in the split");

    require(h.graph.degree(u_in_h) == 2, "cut vertex is not the open end of the subgraph");
    ColorPair at_uv = h_col.edge_set(h.graph.neighbors(u_in_h)[0].edge);
    ColorPair at_uw = h_col.edge_set(h.graph.neighbors(u_in_h)[1].edge);
    ColorPair at_ux = rest_col.edge_set(ux_in_rest);

    std::vector<int> perm(8, 0);
    {
        std::vector<int> targets;  // the five colors the rest leaves free at u
        for (int c = 1; c <= 7; ++c)
            if (c != at_ux[0] && c != at_ux[1]) targets.push_back(c);
        perm[at_uv[0]] = targets[0];
        perm[at_uv[1]] = targets[1];
        perm[at_uw[0]] = targets[2];
        perm[at_uw[1]] = targets[3];
        std::vector<int> src_left, dst_left;
        for (int c = 1; c <= 7; ++c) {
            if (c != at_uv[0] && c != at_uv[1] && c != at_uw[0] && c != at_uw[1])
                src_left.push_back(c);
            if (c != targets[0] && c != targets[1] && c != targets[2] && c != targets[3])
                dst_left.push_back(c);
        }
        for (size_t i = 0; i < src_left.size(); ++i) perm[src_left[i]] = dst_left[i];
    }

    IncidenceColoring out(g.edge_count());
    for (int eh = 0; eh < h.graph.edge_count(); ++eh) {
        ColorPair p = h_col.edge_set(eh);
        p = {perm[p[0]], perm[p[1]]};
        if (p[0] > p[1]) std::swap(p[0], p[1]);
        out.set_edge(h.edge_to_parent[eh], p[0], p[1]);
    }
    for (int er = 0; er < rest.graph.edge_count(); ++er) {
        ColorPair p = rest_col.edge_set(er);
        out.set_edge(rest.edge_to_parent[er], p[0], p[1]);
    }
    require(verify(g, out).ok(), "merge produced a clashing coloring");
    return out;
}

// -------------------------------------------------------------- generators

std::vector<ClassPStep> parse_step_spec(std::string_view spec) {
    std::vector<ClassPStep> out;
    size_t pos = 0;
    while (true) {
        size_t comma = spec.find(',', pos);
        std::string_view item =
            comma == std::string_view::npos ? spec.substr(pos) : spec.substr(pos, comma - pos);
        size_t a = item.find_first_not_of(" \t");
        size_t b = item.find_last_not_of(" \t");
        if (a == std::string_view::npos)
            throw Error(ErrorKind::parse, "empty step in plan '" + std::string(spec) + "'");
        item = item.substr(a, b - a + 1);
        ClassPStep step;
        if (item == "g2") {
            step.kind = GadgetKind::g2;
        } else if (item == "g4") {
            step.kind = GadgetKind::g4;
        } else if (item == "g8") {
            step.kind = GadgetKind::g8;
        } else if (item.size() >= 2 && item[0] == 'h') {
            int t = 0;
            for (char ch : item.substr(1)) {
                if (ch < '0' || ch > '9')
                    throw Error(ErrorKind::parse, "bad step '" + std::string(item) + "'");
                t = t * 10 + (ch - '0');
                if (t > 1000) throw Error(ErrorKind::parse, "rail length out of range");
            }
            if (t < 1) throw Error(ErrorKind::parse, "rail length must be >= 1");
            step.kind = GadgetKind::h;
            step.t = t;
        } else {
            throw Error(ErrorKind::parse, "bad step '" + std::string(item) + "'");
        }
        out.push_back(step);
        if (comma == std::string_view::npos) break;
        pos = comma + 1;
    }
    return out;
}

namespace {

int sole_degree2_vertex(const Graph& g) {
    for (int v = 0; v < g.vertex_count(); ++v)
        if (g.degree(v) == 2) return v;
    fail_domain("no degree-2 vertex to expand");
}

} // namespace

Graph build_class_p(const std::vector<ClassPStep>& steps) {
    Graph g = k4_plus();
    for (const ClassPStep& s : steps) {
        switch (s.kind) {
        case GadgetKind::g2: g = paste_g(g, sole_degree2_vertex(g), 2); break;
        case GadgetKind::g4: g = paste_g(g, sole_degree2_vertex(g), 4); break;
        case GadgetKind::g8: g = paste_g(g, sole_degree2_vertex(g), 8); break;
        case GadgetKind::h: g = paste_h(g, 0, s.t); break;
        }
    }
    return g;
}

Graph random_class_p(std::mt19937_64& rng, int n_steps, int max_rail) {
    if (n_steps < 0 || max_rail < 1) fail_domain("bad generator parameters");
    Graph g = k4_plus();
    std::uniform_int_distribution<int> kind(0, 3);
    for (int i = 0; i < n_steps; ++i) {
        switch (kind(rng)) {
        case 0: g = paste_g(g, sole_degree2_vertex(g), 2); break;
        case 1: g = paste_g(g, sole_degree2_vertex(g), 4); break;
        case 2: g = paste_g(g, sole_degree2_vertex(g), 8); break;
        default: {
            std::uniform_int_distribution<int> rail(1, max_rail);
            std::uniform_int_distribution<int> anchor(0, g.edge_count() - 1);
            int t = rail(rng), e = anchor(rng);
            g = paste_h(g, e, t);
        }
        }
    }
    return g;
}

} // namespace cfic
