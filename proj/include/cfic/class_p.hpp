#pragma once

#include <array>
#include <cstdint>
#include <optional>
#include <random>
#include <string_view>
#include <vector>

#include "cfic/coloring.hpp"
#include "cfic/graph.hpp"

namespace cfic {

// The hard class P: connected graphs with one vertex of degree 2 and the rest
// of degree 3, generated inductively from the subdivided K4 by two pastes:
//
//   paste_g (degree-2 expansion): the degree-2 vertex z with neighbors z1, z2
//   is replaced by a gadget whose two stubs attach to z1 and z2.
//     g2: vertices u,v,w; edges uv, uw, vw; stubs v-z1, w-z2.
//     g4: vertices u0,u1,v0,v1,w; edges u0u1, u0v1, u0w, u1v0, v0v1, v0w;
//         stubs u1-z1, v1-z2.
//     g8: vertices u0,u1,u2,v0,v1; edges u0u1, u1u2, u0v0, u0v1, v0v1, u2v0;
//         stubs u2-z1, v1-z2.
//
//   paste_h (edge expansion): an edge xy is replaced by a ladder of rail
//   length t >= 1: head x',y',x0,y0 with edges x'y', x'y0, x0y', x'x0, y'y0
//   (a K4 missing x0y0), rungs x_i y_i for 1 <= i <= t-1, and rails
//   x_i x_{i+1}, y_i y_{i+1} for 0 <= i <= t-1 where x_t = x, y_t = y.
//
// Every member needs the full palette of 7 = 2*3 + 1 colors.  P+ additionally
// contains the connected cubic-maximum graphs having a member of P as a
// subgraph; those also need 7.

enum class GadgetKind { g2, g4, g8, h };

// K4 with one edge subdivided: tokens z,a,b,c,d, edges za, zb, ac, ad, bc,
// bd, cd.  The smallest member of P (7 edges, 14 incidences).
Graph k4_plus();

// Canonical optimal 7-coloring of k4_plus(): the first coloring in the exact
// oracle's search order, frozen as a constant.
IncidenceColoring k4_plus_coloring();

// True iff g is the subdivided K4 (up to isomorphism, which its degree
// profile pins down).
bool is_k4_plus(const Graph& g);

// The gadget configurations as standalone graphs, stub/boundary endpoints
// included as leaves: role tokens as in the lists above, hollow vertices
// "x","y".  For kind h, t is the rail length and the hollow pair is x_t, y_t
// (tokens "x","y") with no xy edge.
Graph gadget_graph(GadgetKind kind, int t = 1);

// Degree-2 expansion at vertex z of g (t in {2,4,8} picks g2/g4/g8).  The
// stub through the second template role attaches to z's lower-id neighbor.
// New vertices get fresh tokens.  Throws unless deg(z) == 2.
Graph paste_g(const Graph& g, int z, int t);

// Edge expansion of edge id e with rail length t >= 1.
Graph paste_h(const Graph& g, int e, int t);

// One reversal recorded while peeling: the gadget occurrence found in the
// host graph, by template role.  internal lists, in order,
//   g2: u, v, w            g4: u0, u1, v0, v1, w     g8: u0, u1, u2, v0, v1
//   h:  x', y', x0, y0, x1, y1, ..., x_{t-1}, y_{t-1}
// x and y are the attachment vertices that survive the reversal; g-steps
// record in z the restored degree-2 vertex (a fresh id), h-steps restore the
// edge xy instead.
struct PeelStep {
    GadgetKind kind = GadgetKind::g2;
    int t = 0;  // rail length, h only
    std::vector<int> internal;
    int x = -1;
    int y = -1;
    int z = -1;
};

// Full derivation: undoing steps[0], then steps[1], ... reduces the input to
// the subdivided K4 whose roles z,a,b,c,d sit at ids base[0..4].  Replaying
// the steps in reverse order rebuilds the input exactly (same vertex ids).
struct PeelTrace {
    std::vector<PeelStep> steps;
    std::array<int, 5> base{-1, -1, -1, -1, -1};
};

struct PeelResult {
    bool in_p = false;
    PeelTrace trace;  // meaningful when in_p
};

// Membership test for P with certificate.  Depth-first search over gadget
// reversals; every reversal shrinks the graph, and the profile (connected,
// max degree 3, exactly one degree-2 vertex, odd order) prunes dead branches
// early.  Exact: a graph is accepted iff some derivation exists.
PeelResult peel(const Graph& g);

// Replays trace bottom-up and checks the result is exactly g (vertex ids and
// edges).  The round-trip guarantee behind color_class_p.
bool trace_rebuilds(const PeelTrace& trace, const Graph& g);

// Interior color sets for a pasted gadget, given the two host pairs p1 (on
// the stub through the lower-role side) and p2 (the other stub); p1, p2 must
// be disjoint valid pairs.  The fresh pair q takes the two least colors
// available in 1..palette.
struct G2Interior {
    ColorPair uv, uw, vw;
};
G2Interior extend_g2(ColorPair p1, ColorPair p2, int palette = 7);

struct G4Interior {
    ColorPair u0u1, u0v1, u0w, u1v0, v0v1, v0w;
};
G4Interior extend_g4(ColorPair p1, ColorPair p2, int palette = 7);

struct G8Interior {
    ColorPair u0u1, u1u2, u0v0, u0v1, v0v1, u2v0;
};
G8Interior extend_g8(ColorPair p1, ColorPair p2, int palette = 7);

// Interior sets for a pasted ladder whose two boundary rails carry the host
// pair `boundary` (both rails x_{t-1}x_t and y_{t-1}y_t get it).  Rails
// alternate with the least fresh pair level by level; each rung avoids the
// two rails at its endpoints; the head is colored from rail[0].
struct HInterior {
    ColorPair xp_yp, xp_y0, x0_yp, xp_x0, yp_y0;  // head edges
    std::vector<ColorPair> rail;  // rail[i] on x_i x_{i+1} and y_i y_{i+1}
    std::vector<ColorPair> rung;  // rung[i] on x_{i+1} y_{i+1}, i <= t-2
};
HInterior extend_h(int t, ColorPair boundary, int palette = 7);

// Optimal 7-coloring of a member of P: peel to the core, color it with the
// canonical constant, replay the steps applying the extenders.  Throws when
// g is not in P.
IncidenceColoring color_class_p(const Graph& g);

bool is_in_p(const Graph& g);

// P+ = P together with the connected max-degree-3 graphs that contain a
// member of P.  The containment search only needs to try, for each vertex u
// of degree 3 and incident edge ux, the component of u in g - ux: a proper
// P-subgraph has every vertex except its degree-2 one saturated, so it is
// exactly such a component.
bool is_in_p_plus(const Graph& g);

// Optimal 7-coloring of a member of P+.  Splits at the cut vertex u into the
// P-subgraph H and the rest H' (+ the edge ux), colors H' recursively or by
// doubling a 3-edge-coloring, colors H by replay, then permutes H's palette
// so the three color sets meeting at u are disjoint.
IncidenceColoring color_class_p_plus(const Graph& g);

// Construction plans for members of P, e.g. "g2,h3,g8" = paste g2, then a
// ladder of rail length 3, then g8, onto the subdivided K4.
struct ClassPStep {
    GadgetKind kind = GadgetKind::g2;
    int t = 0;  // h only
};
std::vector<ClassPStep> parse_step_spec(std::string_view spec);

// Deterministic build: g-steps expand the unique degree-2 vertex, h-steps
// expand edge id 0.
Graph build_class_p(const std::vector<ClassPStep>& steps);

// Seeded random member: uniform gadget kinds, uniform rail lengths in
// 1..max_rail, uniform h anchors.
Graph random_class_p(std::mt19937_64& rng, int n_steps, int max_rail = 3);

} // namespace cfic
