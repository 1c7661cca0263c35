// Ambient combinatorics of chords in a convex polygon: cyclic arithmetic,
// edge classification, mutual crossings, angles, and triangulation validity.
#pragma once

#include <compare>
#include <span>
#include <string>
#include <vector>

namespace multitri {

/// Problem frame: chords of a convex n-gon with vertices 0..n-1 labeled
/// counterclockwise, constrained to carry no k+1 pairwise crossing edges.
/// Requires k >= 1 and n >= 2k+1.
struct GonContext {
    int n = 0;
    int k = 0;

    GonContext(int n, int k);

    void check_vertex(int v) const;

    friend bool operator==(const GonContext&, const GonContext&) = default;
};

/// Chord with endpoints normalized so that a < b. Endpoint range against a
/// particular polygon is checked by the operations that receive a context.
struct Edge {
    int a = 0;
    int b = 0;

    Edge() = default;
    Edge(int u, int v);

    friend auto operator<=>(const Edge&, const Edge&) = default;
};

enum class EdgeKind { Irrelevant, Boundary, Relevant };

/// Two edges [u,v] and [v,w] hinged at v, with no edge from v into the gap
/// arc ]w,u[. Normalized so that u, v, w appear counterclockwise.
struct Angle {
    int u = 0;
    int v = 0;
    int w = 0;

    friend auto operator<=>(const Angle&, const Angle&) = default;
};

// --- cyclic arithmetic -------------------------------------------------

/// Counterclockwise steps from one vertex to another, in [0, n).
int ccw_steps(const GonContext& g, int from, int to);

/// Membership of x in the open arc ]from,to[ read counterclockwise.
bool in_open_arc(const GonContext& g, int x, int from, int to);

/// Membership of x in the closed arc [from,to] read counterclockwise.
bool in_closed_arc(const GonContext& g, int x, int from, int to);

/// min(|b-a|, n-|b-a|): the number of polygon sides on the shorter side.
int cyclic_distance(const GonContext& g, int u, int v);

int edge_length(const GonContext& g, Edge e);

/// Irrelevant when length < k, boundary at exactly k, relevant beyond.
EdgeKind classify_edge(const GonContext& g, Edge e);

// --- crossings ----------------------------------------------------------

/// Strict interleaving of endpoints; edges sharing an endpoint never cross.
bool crosses(const GonContext& g, Edge e, Edge f);

/// Size of the largest set of pairwise crossing edges, 0 for an empty input.
int max_crossing_size(const GonContext& g, std::span<const Edge> edges);

/// Largest pairwise-crossing subset that contains e (e itself counts, so the
/// result is at least 1). e need not be a member of `edges`.
int max_crossing_through(const GonContext& g, std::span<const Edge> edges, Edge e);

/// Whether some l edges pairwise cross; short-circuits on the first witness.
bool has_l_crossing(const GonContext& g, std::span<const Edge> edges, int l);

// --- angles --------------------------------------------------------------

/// All angles of the given edge set: a vertex of degree d contributes d-1,
/// one per pair of cyclically consecutive neighbours. Sorted by (v, u, w).
std::vector<Angle> angles_of(const GonContext& g, std::span<const Edge> edges);

/// Both arms of the angle have length >= k.
bool angle_is_k_relevant(const GonContext& g, const Angle& a);

// --- edge inventories ----------------------------------------------------

/// The kn edges of length <= k, present in every k-triangulation.
std::vector<Edge> implicit_edges(const GonContext& g);

/// The n edges of length exactly k.
std::vector<Edge> boundary_edges(const GonContext& g);

/// Every edge of length > k, sorted.
std::vector<Edge> relevant_edge_universe(const GonContext& g);

// --- triangulation validity ----------------------------------------------

/// True iff the set has exactly k(n-2k-1) edges and no k+1 of them pairwise
/// cross. Rejects (throws) inputs containing a non-relevant or repeated edge.
bool is_k_triangulation(const GonContext& g, std::vector<Edge> relevant);

/// Independent route: no (k+1)-crossing, and every absent relevant edge
/// would complete one. Never consults the cardinality formula.
bool is_k_triangulation_by_maximality(const GonContext& g, std::vector<Edge> relevant);

/// A k-triangulation, stored by its relevant edges (sorted). The kn edges of
/// length <= k are implicit members of every triangulation and are
/// materialized on demand by all_edges(). Construction validates fully.
class KTriangulation {
  public:
    KTriangulation(GonContext g, std::vector<Edge> relevant);

    const GonContext& ctx() const { return ctx_; }
    const std::vector<Edge>& relevant() const { return relevant_; }

    /// Implicit edges plus relevant ones, sorted.
    std::vector<Edge> all_edges() const;

    bool contains(Edge e) const;

    friend bool operator==(const KTriangulation&, const KTriangulation&) = default;
    friend auto operator<=>(const KTriangulation& x, const KTriangulation& y) {
        return x.relevant_ <=> y.relevant_;
    }

  private:
    GonContext ctx_;
    std::vector<Edge> relevant_;
};

std::string to_string(Edge e);
std::string to_string(const Angle& a);

}  // namespace multitri
