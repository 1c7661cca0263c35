#include "multitri/io.hpp"

#include <charconv>
#include <ostream>

namespace multitri {

Json to_json(Edge e) { return Json::array({e.a, e.b}); }

Json to_json(const KTriangulation& t) {
    Json edges = Json::array();
    for (Edge e : t.relevant()) edges.push_back(to_json(e));
    return Json{{"n", t.ctx().n}, {"k", t.ctx().k}, {"relevant_edges", std::move(edges)}};
}

Json to_json(const KStar& s) { return Json{{"vertices", s.circle_order}}; }

namespace {

int require_int(const Json& doc, const char* key) {
    if (!doc.contains(key) || !doc[key].is_number_integer())
        throw DocumentError(std::string("triangulation document: missing integer field \"") +
                            key + "\"");
    return doc[key].get<int>();
}

}  // namespace

KTriangulation triangulation_from_json(const Json& doc) {
    if (!doc.is_object()) throw DocumentError("triangulation document: expected a JSON object");
    int n = require_int(doc, "n");
    int k = require_int(doc, "k");
    if (!doc.contains("relevant_edges") || !doc["relevant_edges"].is_array())
        throw DocumentError("triangulation document: missing array field \"relevant_edges\"");
    std::vector<Edge> edges;
    for (const Json& item : doc["relevant_edges"]) {
        if (!item.is_array() || item.size() != 2 || !item[0].is_number_integer() ||
            !item[1].is_number_integer())
            throw DocumentError("triangulation document: edges must be [a, b] integer pairs");
        int a = item[0].get<int>(), b = item[1].get<int>();
        if (a == b) throw DocumentError("triangulation document: degenerate edge");
        edges.emplace_back(a, b);
    }
    return KTriangulation(GonContext(n, k), std::move(edges));
}

KTriangulation triangulation_from_json(const std::string& text) {
    Json doc;
    try {
        doc = Json::parse(text);
    } catch (const Json::parse_error& e) {
        throw DocumentError(std::string("triangulation document: ") + e.what());
    }
    return triangulation_from_json(doc);
}

void write_flip_graph_json(const FlipGraph& g, std::ostream& out) {
    for (std::size_t i = 0; i < g.nodes.size(); ++i) {
        Json arcs = Json::array();
        for (const FlipGraph::Arc& a : g.adjacency[i])
            arcs.push_back(Json{{"to", a.to}, {"removed", to_json(a.removed)},
                                {"inserted", to_json(a.inserted)}});
        Json line{{"node", static_cast<int>(i)}, {"edges", std::move(arcs)}};
        out << line.dump() << '\n';
    }
}

void write_flip_graph_dot(const FlipGraph& g, std::ostream& out) {
    out << "graph flip_graph {\n";
    for (std::size_t i = 0; i < g.nodes.size(); ++i)
        for (const FlipGraph::Arc& a : g.adjacency[i]) {
            if (a.to < static_cast<int>(i)) continue;
            out << "  " << i << " -- " << a.to << " [label=\"-" << to_string(a.removed) << " +"
                << to_string(a.inserted) << "\"];\n";
        }
    out << "}\n";
}

namespace {

int parse_int_token(std::string_view token, const std::string& whole) {
    int value = 0;
    const char* first = token.data();
    const char* last = token.data() + token.size();
    auto [ptr, ec] = std::from_chars(first, last, value);
    if (ec != std::errc() || ptr != last)
        throw DocumentError("malformed edge argument \"" + whole + "\"");
    return value;
}

}  // namespace

Edge parse_edge_arg(const std::string& text) {
    std::string_view sv(text);
    std::size_t comma = sv.find(',');
    if (comma == std::string_view::npos || sv.find(',', comma + 1) != std::string_view::npos)
        throw DocumentError("malformed edge argument \"" + text + "\"");
    int a = parse_int_token(sv.substr(0, comma), text);
    int b = parse_int_token(sv.substr(comma + 1), text);
    if (a == b || a < 0 || b < 0) throw DocumentError("malformed edge argument \"" + text + "\"");
    return Edge(a, b);
}

std::vector<Edge> parse_edge_list_arg(const std::string& text) {
    if (text.empty()) throw DocumentError("empty edge list argument");
    std::vector<Edge> edges;
    std::size_t pos = 0;
    while (true) {
        std::size_t semi = text.find(';', pos);
        edges.push_back(parse_edge_arg(text.substr(pos, semi - pos)));
        if (semi == std::string::npos) break;
        pos = semi + 1;
    }
    return edges;
}

}  // namespace multitri
