#include "multitri/flips.hpp"

#include <algorithm>
#include <deque>
#include <map>
#include <set>
#include <stdexcept>

#include "multitri/stars.hpp"

namespace multitri {

bool slope_decreasing(const Flip& f) {
    return f.inserted.a < f.removed.a && f.removed.a < f.inserted.b && f.inserted.b < f.removed.b;
}

namespace {

// The two stars containing relevant edge f, via one extraction pass.
std::pair<KStar, KStar> stars_of_edge(const KTriangulation& t, Edge f) {
    if (classify_edge(t.ctx(), f) != EdgeKind::Relevant || !t.contains(f))
        throw std::invalid_argument("flip: " + to_string(f) + " is not a relevant edge of the triangulation");
    std::vector<KStar> found;
    for (const KStar& s : extract_stars(t)) {
        std::vector<Edge> es = star_edges(s);
        if (std::binary_search(es.begin(), es.end(), f)) found.push_back(s);
    }
    if (found.size() != 2) throw std::logic_error("relevant edge not in exactly two stars");
    return {found[0], found[1]};
}

KTriangulation with_exchanged(const KTriangulation& t, Edge out, Edge in) {
    std::vector<Edge> rel = t.relevant();
    rel.erase(std::find(rel.begin(), rel.end(), out));
    rel.push_back(in);
    return KTriangulation(t.ctx(), std::move(rel));
}

}  // namespace

FlipResult flip(const KTriangulation& t, Edge f) {
    auto [r, s] = stars_of_edge(t, f);
    Edge e = common_bisector(r, s).edge;
    return {with_exchanged(t, f, e), e};
}

std::vector<Flip> all_flips(const KTriangulation& t) {
    // Group the stars by relevant edge once instead of re-extracting per flip.
    std::map<Edge, std::vector<const KStar*>> by_edge;
    std::vector<KStar> stars = extract_stars(t);
    for (const KStar& s : stars)
        for (const Edge& e : star_edges(s))
            if (classify_edge(t.ctx(), e) == EdgeKind::Relevant) by_edge[e].push_back(&s);
    std::vector<Flip> out;
    for (const Edge& f : t.relevant()) {
        const auto& owners = by_edge.at(f);
        if (owners.size() != 2) throw std::logic_error("relevant edge not in exactly two stars");
        out.push_back({f, common_bisector(*owners[0], *owners[1]).edge});
    }
    return out;
}

KTriangulation t_min(const GonContext& g) {
    std::vector<Edge> rel;
    for (int i = 0; i < g.k; ++i)
        for (int j = i + g.k; j <= i - g.k + g.n; ++j) {
            Edge e(i, j % g.n);
            if (classify_edge(g, e) == EdgeKind::Relevant) rel.push_back(e);
        }
    std::sort(rel.begin(), rel.end());
    rel.erase(std::unique(rel.begin(), rel.end()), rel.end());
    return KTriangulation(g, std::move(rel));
}

KTriangulation t_max(const GonContext& g) {
    std::vector<Edge> rel;
    for (const Edge& e : t_min(g).relevant()) rel.push_back(Edge(g.n - 1 - e.a, g.n - 1 - e.b));
    std::sort(rel.begin(), rel.end());
    return KTriangulation(g, std::move(rel));
}

long long total_slope(const KTriangulation& t) {
    long long sum = 0;
    for (const Edge& e : t.relevant()) sum += e.a + e.b;
    return sum;
}

std::vector<Flip> descend_to_min(const KTriangulation& t) {
    KTriangulation target = t_min(t.ctx());
    KTriangulation current = t;
    std::vector<Flip> path;
    while (!(current == target)) {
        std::optional<Flip> best;
        for (const Flip& f : all_flips(current)) {
            if (target.contains(f.removed) || !target.contains(f.inserted)) continue;
            if (!best || f.inserted < best->inserted ||
                (f.inserted == best->inserted && f.removed < best->removed))
                best = f;
        }
        if (!best) throw std::logic_error("descend_to_min: no flip makes progress");
        current = with_exchanged(current, best->removed, best->inserted);
        path.push_back(*best);
        if (path.size() > t.relevant().size())
            throw std::logic_error("descend_to_min: exceeded the flip budget");
    }
    return path;
}

int FlipGraph::index_of(const KTriangulation& t) const {
    for (std::size_t i = 0; i < nodes.size(); ++i)
        if (nodes[i] == t) return static_cast<int>(i);
    throw std::invalid_argument("triangulation is not a node of this flip graph");
}

FlipGraph build_flip_graph(const GonContext& g, std::size_t max_nodes) {
    FlipGraph graph{g, {}, {}};
    std::map<std::vector<Edge>, int> seen;
    std::deque<int> frontier;
    KTriangulation start = t_min(g);
    seen[start.relevant()] = 0;
    graph.nodes.push_back(std::move(start));
    frontier.push_back(0);
    while (!frontier.empty()) {
        int at = frontier.front();
        frontier.pop_front();
        std::vector<FlipGraph::Arc> arcs;
        for (const Flip& f : all_flips(graph.nodes[at])) {
            KTriangulation next = with_exchanged(graph.nodes[at], f.removed, f.inserted);
            auto [it, fresh] = seen.try_emplace(next.relevant(), static_cast<int>(graph.nodes.size()));
            if (fresh) {
                if (graph.nodes.size() >= max_nodes)
                    throw std::runtime_error("build_flip_graph: node budget exceeded");
                graph.nodes.push_back(std::move(next));
                frontier.push_back(it->second);
            }
            arcs.push_back({it->second, f.removed, f.inserted});
        }
        graph.adjacency.resize(graph.nodes.size());
        graph.adjacency[at] = std::move(arcs);
    }
    graph.adjacency.resize(graph.nodes.size());
    return graph;
}

std::optional<int> diameter(const FlipGraph& g, std::size_t max_nodes) {
    if (g.nodes.size() > max_nodes) return std::nullopt;
    int best = 0;
    std::vector<int> dist(g.nodes.size());
    for (std::size_t src = 0; src < g.nodes.size(); ++src) {
        std::fill(dist.begin(), dist.end(), -1);
        dist[src] = 0;
        std::deque<int> queue = {static_cast<int>(src)};
        while (!queue.empty()) {
            int at = queue.front();
            queue.pop_front();
            best = std::max(best, dist[at]);
            for (const FlipGraph::Arc& arc : g.adjacency[at])
                if (dist[arc.to] < 0) {
                    dist[arc.to] = dist[at] + 1;
                    queue.push_back(arc.to);
                }
        }
        for (int d : dist)
            if (d < 0) throw std::invalid_argument("diameter: flip graph is disconnected");
    }
    return best;
}

DiameterBounds diameter_bounds(const GonContext& g) {
    long long m = static_cast<long long>(g.k) * (g.n - 2 * g.k - 1);
    DiameterBounds b{std::nullopt, 2 * m, std::nullopt};
    if (g.n >= 4 * g.k) b.lower = m;
    long long k = g.k;
    if (g.n > 8 * k * k * k + 4 * k * k) b.improved_upper = 2 * k * (g.n - 4 * k - 1);
    return b;
}

std::vector<Edge> zigzag(const GonContext& g, int rotation) {
    if (g.n < 4 * g.k)
        throw std::invalid_argument("zigzag: needs n >= 4k");
    auto rot = [&](int v) { return ((v + rotation) % g.n + g.n) % g.n; };
    std::vector<Edge> out;
    for (int q = 1; q <= g.n / 2 - g.k; ++q)
        out.push_back(Edge(rot(q - 1), rot(g.n - q - g.k)));
    for (int q = 1; q <= (g.n - 1) / 2 - g.k; ++q)
        out.push_back(Edge(rot(q), rot(g.n - q - g.k)));
    std::sort(out.begin(), out.end());
    return out;
}

}  // namespace multitri
