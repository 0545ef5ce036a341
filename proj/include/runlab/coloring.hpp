#pragma once

#include <chrono>
#include <cstdint>
#include <optional>
#include <vector>

#include "runlab/debruijn.hpp"
#include "runlab/numeric.hpp"

namespace runlab {

// A color per vertex of D(k,m), keyed by colex rank.
struct VertexColoring {
    int k = 0;
    int m = 0;
    int colors = 0;                // r
    std::vector<int> assign;       // size C(m,k), entries in [0, colors)
};

// A color per edge of D(k,m), keyed by the colex rank of the (k+1)-word the
// edge corresponds to under phi.
struct EdgeColoring {
    int k = 0;
    int m = 0;
    int colors = 0;                // q
    std::vector<int> assign;       // size C(m,k+1)
};

struct DirectedPath {
    std::vector<std::uint64_t> vertices;
    // a path of v vertices spans v-1 edges
    int length_vertices() const { return int(vertices.size()); }
    int length_edges() const { return int(vertices.size()) - 1; }
};

void require_matching(const DeBruijnGraph& g, const VertexColoring& vc);
void require_matching(const DeBruijnGraph& g, const EdgeColoring& ec);

// The line-graph bijection: an edge coloring of D(k,m) is a vertex coloring of
// D(k+1,m) and vice versa.  Pure relabeling; the assignment array is shared.
VertexColoring as_vertex_coloring(const EdgeColoring& ec);
EdgeColoring as_edge_coloring(const VertexColoring& vc);

// Exact chromatic number of the underlying undirected graph (direction is
// ignored for properness), certified by exhaustive branch and bound with
// DSATUR ordering.  Throws ResourceError with the best known bounds attached
// when the vertex count exceeds the budget.
int chromatic_number(const DeBruijnGraph& g, std::uint64_t vertex_budget = 2000);

// Theorem A lift: C'(u) = set of colors on the out-edges of u, encoded as a
// subset index in {0 .. 2^q - 1}.  Requires ec to contain no monochromatic
// directed path of 2 edges; the result is verified proper before returning.
VertexColoring lift_edge_coloring(const DeBruijnGraph& g, const EdgeColoring& ec);

// Longest-path dynamic programming in topological (rank) order; returns a
// monochromatic directed path of exactly l_vertices vertices if one exists.
std::optional<DirectedPath> find_mono_path(const DeBruijnGraph& g, const VertexColoring& vc,
                                           int l_vertices);

enum class CheckMode { exhaustive, sampled };

struct ChvatalOptions {
    CheckMode mode = CheckMode::exhaustive;
    std::uint64_t max_exhaustive = 10'000'000;  // colorings
    std::uint64_t samples = 100'000;
    std::uint64_t seed = 0;
    int threads = 1;
};

struct ChvatalReport {
    int k = 0, m = 0, r = 0, l_edges = 0;
    int chi = 0;
    BigInt threshold;                    // l^r
    bool hypothesis_met = false;         // chi > l^r
    bool checked = false;                // enumeration actually ran
    bool exhaustive = false;
    std::uint64_t colorings_checked = 0;
    std::uint64_t colorings_with_mono_path = 0;
    // lowest-index counterexample; nonempty only on an implementation bug
    std::optional<EdgeColoring> counterexample;
    std::uint64_t seed = 0;
    bool holds() const { return !checked || !counterexample.has_value(); }
};

// Verifies Chvatal's implication on one instance: if chi(g) > l^r, every
// r-edge-coloring enumerated (or sampled) contains a monochromatic directed
// path of l_edges edges.
ChvatalReport check_chvatal(const DeBruijnGraph& g, int r, int l_edges,
                            const ChvatalOptions& opts = {});

enum class SearchStatus { found, exhausted, timeout };

struct SearchResult {
    SearchStatus status = SearchStatus::timeout;
    std::optional<VertexColoring> coloring;
    std::uint64_t nodes = 0;      // backtracking nodes expanded
    std::uint64_t repairs = 0;    // local-repair flips in the warm phase
    double seconds = 0.0;
};

// Searches for an r-coloring of the vertices of D(k,m) with no monochromatic
// directed path of l_vertices vertices.  A bounded local-repair phase tries to
// find a coloring quickly; backtracking over vertices in topological order
// (pruned by per-color longest-path counters) then decides exhaustively.
// `exhausted` is reported only when the backtracking phase completed, so
// nonexistence is never inferred from a timeout.
SearchResult search_coloring(int k, int m, int r, int l_vertices,
                             std::chrono::milliseconds time_budget,
                             std::uint64_t vertex_budget = kDefaultVertexBudget);

}  // namespace runlab
