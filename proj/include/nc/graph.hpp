#pragma once

#include <compare>
#include <cstdint>
#include <ostream>
#include <string>
#include <vector>

namespace nc {

// Chord of the circle through vertices 1..n, stored with a < b.
struct Chord {
    int a = 0;
    int b = 0;

    Chord() = default;
    Chord(int x, int y) : a(x < y ? x : y), b(x < y ? y : x) {}

    friend auto operator<=>(const Chord&, const Chord&) = default;
};

// True iff the endpoints strictly interleave; chords sharing an endpoint
// never cross.
bool crosses(const Chord& e1, const Chord& e2);

// Labeled graph on circle-arranged vertices 1..n with pairwise
// non-crossing edges, edges sorted lexicographically.
struct NcGraph {
    int n = 0;
    std::vector<Chord> edges;

    NcGraph() = default;
    NcGraph(int n_, std::vector<Chord> edges_);

    // Validating factory: sorts, rejects duplicates, out-of-range labels
    // and crossing pairs.
    static NcGraph checked(int n, std::vector<Chord> edges);

    int edge_count() const { return static_cast<int>(edges.size()); }
    bool has_edge(const Chord& e) const;

    // Number of connected components; an isolated vertex is a component.
    int component_count() const;
    bool is_connected() const { return component_count() == 1; }
    bool is_forest() const;
    bool is_spanning_tree() const;

    friend auto operator<=>(const NcGraph&, const NcGraph&) = default;
};

// Vertex i maps to ((i - 1 + steps) mod n) + 1; edges re-normalized and
// re-sorted. Rotation preserves the circle, so the result is non-crossing.
NcGraph rotate(const NcGraph& g, int steps);

// Edge-list text format: `n=6; 1-2 1-6 2-3 3-4 4-5 5-6`.
std::string format_graph(const NcGraph& g);
NcGraph parse_graph(const std::string& line);

std::ostream& operator<<(std::ostream& os, const NcGraph& g);

}  // namespace nc
