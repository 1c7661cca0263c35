// Ears, internal/external stars, accordion decompositions, and the
// colorability characterization.
#pragma once

#include <map>
#include <optional>
#include <span>
#include <vector>

#include "multitri/core.hpp"
#include "multitri/stars.hpp"

namespace multitri {

/// Color per relevant edge, 0..k-1.
using Coloring = std::map<Edge, int>;

/// All edges of T of length exactly k+1. Requires n >= 2k+3 so that ears
/// are a meaningful notion (below that every candidate wraps onto itself).
std::vector<Edge> k_ears(const KTriangulation& t);

struct StarClassification {
    std::vector<KStar> internal;  // no length-k edge
    std::vector<KStar> external;  // at least one length-k edge
};

StarClassification classify_stars(const KTriangulation& t);

/// Whether e, an ear belonging to star s, is a positive ear of s: orienting
/// e as u -> v with s on the positive side, the arc back from v to u (half
/// open) has exactly k+1 vertices.
bool is_positive_ear(const KStar& s, const KTriangulation& t, Edge e);

/// The positive ears of s: one fewer than its length-k edge count.
/// Validates that s is a star of t.
std::vector<Edge> positive_ears(const KStar& s, const KTriangulation& t);

/// True iff the edges can be ordered as a chain e_1..e_{n-2k-1} where e_1
/// spans k+1 steps and each e_i extends e_{i-1} by one step at either end.
/// Such a chain is 2-crossing-free with one edge per span k+1..n-k-1; the
/// converse fails (a 7-gon triangulation with three ears is a non-chain
/// witness), so the chain itself is what gets checked.
bool is_accordion(const GonContext& g, std::span<const Edge> edges);

/// Partition of the relevant edges into k accordions, when one exists
/// (exactly when T has no internal star, given n >= 2k+2). Each accordion
/// is listed in walk order, starting at an ear.
std::optional<std::vector<std::vector<Edge>>> accordion_decomposition(const KTriangulation& t);

/// Same walk, but seeded from the given ears in order (for the uniqueness
/// check: any seed order yields the same partition).
std::optional<std::vector<std::vector<Edge>>> accordion_decomposition(
    const KTriangulation& t, std::span<const Edge> seed_ears);

/// For k >= 2: colorable iff an accordion decomposition exists. Every
/// triangulation is 1-colorable.
bool is_k_colorable(const KTriangulation& t);

/// A k-coloring with no monochromatic crossing, if one exists: color i goes
/// to accordion i. For k = 1 everything gets color 0.
std::optional<Coloring> color(const KTriangulation& t);

/// Check a proposed coloring: every relevant edge colored in 0..k-1, no two
/// edges of one color cross.
bool valid_coloring(const KTriangulation& t, const Coloring& c);

/// Number of edges of T longer than p, for k <= p <= (n-1)/2. Bounded by
/// k(n-2p-1), with equality for colorable triangulations.
int p_relevant_count(const KTriangulation& t, int p);

}  // namespace multitri
