// JSON interchange: {"n": int, "k": int, "relevant_edges": [[a,b], ...]},
// star reports, and flip-graph exports.
#pragma once

#include <iosfwd>
#include <stdexcept>
#include <string>

#include <json.hpp>

#include "multitri/core.hpp"
#include "multitri/flips.hpp"
#include "multitri/stars.hpp"

namespace multitri {

using Json = nlohmann::ordered_json;

/// A structurally broken input document or argument (missing field, wrong
/// type, unparseable edge syntax), as opposed to a well-formed document
/// describing an invalid triangulation.
struct DocumentError : std::invalid_argument {
    using std::invalid_argument::invalid_argument;
};

Json to_json(const KTriangulation& t);
Json to_json(Edge e);
Json to_json(const KStar& s);  // {"vertices": [...]}

/// Parse the edge-list document. Throws DocumentError on missing or
/// ill-typed fields; triangulation validation errors propagate from the
/// KTriangulation constructor.
KTriangulation triangulation_from_json(const Json& doc);
KTriangulation triangulation_from_json(const std::string& text);

/// One JSON object per line: {"node": i, "edges": [{"to", "removed", "inserted"}...]}.
void write_flip_graph_json(const FlipGraph& g, std::ostream& out);

/// Undirected DOT graph, arcs labeled by the edge exchange.
void write_flip_graph_dot(const FlipGraph& g, std::ostream& out);

/// "a,b" -> Edge. Throws on malformed input.
Edge parse_edge_arg(const std::string& text);

/// "a1,b1;a2,b2;..." -> edges. Throws on malformed input.
std::vector<Edge> parse_edge_list_arg(const std::string& text);

}  // namespace multitri
