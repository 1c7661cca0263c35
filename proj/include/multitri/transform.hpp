// Flattening a length-k edge (n -> n-1) and inflating an external
// k-crossing (n -> n+1), exact inverses of one another.
#pragma once

#include <vector>

#include "multitri/core.hpp"

namespace multitri {

/// k mutually crossing edges of a triangulation whose near endpoints form
/// the consecutive run anchor..anchor+k-1. Edge i joins run vertex
/// (anchor+i) mod n to a far endpoint; mutual crossing forces the far
/// endpoints to advance counterclockwise with i.
///
/// insert_label records which label the new vertex takes when the crossing
/// is inflated: normally the anchor itself (the run shifts up by one), but a
/// crossing produced by flattening the edge [n-1, k-1] remembers that the
/// deleted vertex sat at the top of the label range, so re-inflation appends
/// label n instead of shifting. Only anchor and (for anchor 0) the value n
/// are legal.
struct ExternalCrossing {
    int anchor = 0;
    std::vector<Edge> edges;
    int insert_label = 0;

    ExternalCrossing(int anchor, std::vector<Edge> edges);
    ExternalCrossing(int anchor, std::vector<Edge> edges, int insert_label);
};

struct FlattenOutcome {
    KTriangulation result;
    ExternalCrossing glued;  // the k pairwise-glued edges, ready to re-inflate
};

/// Remove the length-k edge e = [s_0, s_0+k] together with vertex s_0,
/// rewriting the edges incident to the run s_0..s_k through the far
/// vertices of the star containing e. Drops 2k edges. Requires n >= 2k+2.
FlattenOutcome flatten(const KTriangulation& t, Edge e);

/// Image of edge g under the rewrite of flatten(t, e), in the flattened
/// labeling. The k edges [s_0, s_i] have no image and throw.
Edge flatten_image(const KTriangulation& t, Edge e, Edge g);

/// Insert a new vertex into the anchor run of the crossing, splitting the
/// edge fans of the run vertices at the crossing's far endpoints. Adds 2k
/// edges. Exact inverse of flatten.
KTriangulation inflate(const KTriangulation& t, const ExternalCrossing& x);

/// All external k-crossings of t with the given anchor, far endpoints in
/// counterclockwise order.
std::vector<ExternalCrossing> external_crossings_at(const KTriangulation& t, int anchor);

/// All external k-crossings over every anchor 0..n-1. A crossing whose edge
/// set admits several anchor runs appears once per anchor.
std::vector<ExternalCrossing> external_crossings(const KTriangulation& t);

}  // namespace multitri
