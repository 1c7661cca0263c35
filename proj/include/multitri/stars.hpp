// k-stars: the 2k+1-vertex star polygons that tile a k-triangulation, their
// angles and bisectors, extraction from a triangulation, and side counts.
#pragma once

#include <map>
#include <span>
#include <vector>

#include "multitri/core.hpp"

namespace multitri {

/// Star polygon on 2k+1 vertices of the n-gon: edges join each vertex to the
/// k-th next one in circle order. Stored by circle_order, sorted ascending.
struct KStar {
    GonContext ctx;
    std::vector<int> circle_order;

    KStar(GonContext g, std::vector<int> vertices);

    bool contains_vertex(int v) const;

    friend bool operator==(const KStar& x, const KStar& y) {
        return x.circle_order == y.circle_order;
    }
    friend auto operator<=>(const KStar& x, const KStar& y) {
        return x.circle_order <=> y.circle_order;
    }
};

enum class Side { Negative, Positive };

/// The 2k+1 edges [c_i, c_{i+k}] of the star, sorted.
std::vector<Edge> star_edges(const KStar& s);

/// Vertices in traversal order of the star polygon: hop k circle positions
/// at a time, starting from the smallest vertex.
std::vector<int> star_order(const KStar& s);

/// Same traversal, rotated to begin at `start` (must be a star vertex).
std::vector<int> star_order_from(const KStar& s, int start);

/// The star's angle at vertex r: arms to the k-th next and k-th previous
/// star vertices in circle order; its gap arc holds no star vertex.
Angle star_angle_at(const KStar& s, int r);

/// Whether e joins a star vertex r to a point inside the gap of the star's
/// angle at r.
bool star_bisects(const KStar& s, Edge e);

/// Decompose a triangulation into its n-2k stars, sorted. Walks the
/// k-relevant angles, chaining each to the next around a star polygon.
std::vector<KStar> extract_stars(const KTriangulation& t);

/// Which side of the directed line u -> v the star lies on: positive when
/// the closed arc from u counterclockwise to v holds strictly fewer star
/// vertices than the opposite closed arc. Equal counts throw.
Side star_side(const KStar& s, int u, int v);

/// Number of the given stars lying on the positive side of u -> v.
int stars_on_positive_side(std::span<const KStar> stars, int u, int v);

/// Count over the stars of t. [u,v] must be a relevant or boundary edge of t;
/// the count then equals ccw_steps(v, u) - k.
int stars_on_positive_side(const KTriangulation& t, int u, int v);

/// Every edge of the triangulation mapped to the stars it is an edge of:
/// relevant edges get two, length-k edges one, shorter edges none.
/// Violations of those multiplicities throw.
std::map<Edge, std::vector<KStar>> star_incidences(const KTriangulation& t,
                                                   std::span<const KStar> stars);

/// The unique edge bisecting an angle of both stars, with the vertex it
/// takes in each.
struct CommonBisector {
    Edge edge;
    int first_vertex;   // vertex of the first star
    int second_vertex;  // vertex of the second star
};

CommonBisector common_bisector(const KStar& r, const KStar& s);

std::string to_string(const KStar& s);

}  // namespace multitri
