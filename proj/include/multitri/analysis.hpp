// Sparsity and generic rigidity of the full edge graph, the surface swept
// out by the stars, and the chirotope they induce.
#pragma once

#include <cstdint>
#include <span>
#include <vector>

#include "multitri/core.hpp"
#include "multitri/stars.hpp"

namespace multitri {

/// Every edge subset spanning at least p vertices has |E'| <= p|V(E')| - q.
/// Below q = 2p this is decided by the pebble game; from q = 2p up (where
/// single edges would already violate the unfloored inequality) it is
/// evaluated exactly over induced subsets. p >= 1, q >= 0.
bool is_sparse_graph(int vertex_count, std::span<const Edge> edges, int p, int q);

/// Sparsity of the triangulation's full edge graph.
bool sparsity_check(const KTriangulation& t, int p, int q);

/// dim*n - binom(dim+1, 2): the rank a generically rigid graph reaches in
/// R^dim, and exactly the edge count of a k-triangulation when dim = 2k.
int rigidity_target_rank(const GonContext& g, int dim);

/// Rank of the rigidity matrix of all edges of t at random points of
/// F_p^dim (p = 2^31 - 1), maximized over the given number of trials.
/// Deterministic for a fixed seed; trial i draws from seed+i.
int rigidity_rank(const KTriangulation& t, int dim, int trials, std::uint64_t seed = 0x6d756c746974726bULL);

struct SurfaceStats {
    int v = 0;
    int e = 0;  // boundary + relevant edges
    int f = 0;  // stars
    int chi = 0;
    int boundary_components = 0;
    int genus = 0;
    bool orientable = false;
};

/// The surface glued from the star polygons: Euler characteristic from the
/// face counts, boundary components traced along the length-k edges, genus
/// from both and cross-checked against the closed form.
SurfaceStats surface_stats(const KTriangulation& t);

enum class ChirotopeSign { Negative, Positive };

/// Sign of the ordered star triple (s, s1, s2): with [u,v] the common
/// bisector of s and s1 (u in s, v in s1), Negative iff s2 has more
/// vertices in ]u,v[ than in ]v,u[. A tie throws; the three stars must be
/// distinct stars of t.
ChirotopeSign chirotope_sign(const KTriangulation& t, const KStar& s, const KStar& s1,
                             const KStar& s2);

/// Stars on the convex hull of the chirotope: s is extreme iff some second
/// star b makes chirotope_sign(s, b, y) constant over all other stars y.
/// With fewer than three stars everything is extreme.
std::vector<KStar> chirotope_extreme_stars(const KTriangulation& t);

}  // namespace multitri
