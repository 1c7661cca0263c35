// Flips between k-triangulations, the flip graph with its extremal
// triangulations, slope-monotone descent, zigzags, and diameter bounds.
#pragma once

#include <optional>
#include <vector>

#include "multitri/core.hpp"

namespace multitri {

struct Flip {
    Edge removed;
    Edge inserted;

    friend bool operator==(const Flip&, const Flip&) = default;
};

/// A flip removing f and inserting e is slope-decreasing when the endpoints
/// interleave as e.a < f.a < e.b < f.b.
bool slope_decreasing(const Flip& f);

struct FlipResult {
    KTriangulation result;
    Edge inserted;
};

/// Exchange relevant edge f for the common bisector of the two stars
/// containing it. Throws if f is not a relevant edge of t.
FlipResult flip(const KTriangulation& t, Edge f);

/// Every flip available from t, sorted by removed edge. One per relevant edge.
std::vector<Flip> all_flips(const KTriangulation& t);

/// The fan triangulation: relevant edges from the first k vertices to
/// everything far enough away. Unique slope-minimal triangulation.
KTriangulation t_min(const GonContext& g);

/// Reflection of t_min, fanning from the last k vertices.
KTriangulation t_max(const GonContext& g);

/// Sum of a+b over the relevant edges.
long long total_slope(const KTriangulation& t);

/// Greedy path to t_min: repeatedly flip an edge outside t_min whose
/// replacement lands inside it, preferring the lexicographically smallest
/// inserted edge. Each step grows the overlap, so at most k(n-2k-1) flips.
std::vector<Flip> descend_to_min(const KTriangulation& t);

struct FlipGraph {
    struct Arc {
        int to;
        Edge removed;
        Edge inserted;
    };

    GonContext ctx;
    std::vector<KTriangulation> nodes;       // discovery (BFS) order from t_min
    std::vector<std::vector<Arc>> adjacency;  // arcs sorted by removed edge

    int index_of(const KTriangulation& t) const;
};

/// BFS over all triangulations starting at t_min. Throws when the node
/// count would exceed max_nodes.
FlipGraph build_flip_graph(const GonContext& g, std::size_t max_nodes = 1000000);

/// Exact diameter by all-pairs BFS, or nullopt when the graph is too large
/// to sweep (more than max_nodes nodes).
std::optional<int> diameter(const FlipGraph& g, std::size_t max_nodes = 100000);

/// k(n-2k-1) <= diameter <= 2k(n-2k-1); the lower bound is only claimed for
/// n >= 4k, and the improved upper bound 2k(n-4k-1) only for n > 8k^3+4k^2.
struct DiameterBounds {
    std::optional<long long> lower;
    long long upper;
    std::optional<long long> improved_upper;
};

DiameterBounds diameter_bounds(const GonContext& g);

/// The rotated zigzag {[q-1, n-q-k]} ∪ {[q, n-q-k]}: n-2k-1 relevant edges,
/// pairwise non-crossing. Requires n >= 4k. Sorted.
std::vector<Edge> zigzag(const GonContext& g, int rotation);

}  // namespace multitri
