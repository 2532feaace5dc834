#pragma once

#include <array>
#include <string>

#include "cfic/graph.hpp"

namespace cfic {

// An unordered pair of colors, stored ascending when it denotes a set.
using ColorPair = std::array<int, 2>;

inline bool pair_disjoint(ColorPair a, ColorPair b) {
    return a[0] != b[0] && a[0] != b[1] && a[1] != b[0] && a[1] != b[1];
}

// Assignment of one color per incidence, indexed (edge, slot); slot 0 is the
// edge's lower endpoint.  0 means unassigned, assigned colors are >= 1.
// Invalid states (equal colors on an edge, clashes) are representable so that
// verify() can report them; producers in this library only return verified
// colorings.
class IncidenceColoring {
public:
    IncidenceColoring() = default;
    explicit IncidenceColoring(int edge_count) : colors_(edge_count, ColorPair{0, 0}) {}

    int edge_count() const { return static_cast<int>(colors_.size()); }

    int color(int edge, int slot) const { return colors_[edge][slot]; }
    int color_at(const Graph& g, Incidence i) const;

    ColorPair edge_pair(int e) const { return colors_[e]; }  // slot order
    ColorPair edge_set(int e) const;                         // ascending

    void set_slot(int edge, int slot, int color) { colors_[edge][slot] = color; }
    void set_edge(int edge, int at_lower, int at_higher) {
        colors_[edge] = {at_lower, at_higher};
    }

    bool total() const;        // every slot assigned
    int palette_size() const;  // largest color used, 0 when blank

    bool operator==(const IncidenceColoring&) const = default;

private:
    std::vector<ColorPair> colors_;
};

// Number of distinct colors used.
int palette_count(const IncidenceColoring& c);

struct VerifyResult {
    enum class Status { ok, partial, clash };
    Status status = Status::ok;
    // for clash: the offending incidence pair and the vertex witnessing it
    Incidence first{-1, -1};
    Incidence second{-1, -1};
    int witness = -1;
    std::string message;  // human-readable account of the first violation

    bool ok() const { return status == Status::ok; }
    explicit operator bool() const { return ok(); }
};

// Checks c is a total conflict-free coloring of g.  Scans each vertex's
// incidence neighborhood for repeated colors, so rules (i)-(iii) are all
// caught, including equal colors on one edge.  Reports the first violation in
// vertex order.
VerifyResult verify(const Graph& g, const IncidenceColoring& c);

} // namespace cfic
