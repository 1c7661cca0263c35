#include "multitri/core.hpp"

#include <algorithm>
#include <map>
#include <set>
#include <stdexcept>

namespace multitri {

GonContext::GonContext(int n_, int k_) : n(n_), k(k_) {
    if (k < 1) throw std::invalid_argument("GonContext: k must be >= 1");
    if (n < 2 * k + 1)
        throw std::invalid_argument("GonContext: need n >= 2k+1, got n=" + std::to_string(n) +
                                    " k=" + std::to_string(k));
}

void GonContext::check_vertex(int v) const {
    if (v < 0 || v >= n)
        throw std::out_of_range("vertex " + std::to_string(v) + " outside 0.." +
                                std::to_string(n - 1));
}

Edge::Edge(int u, int v) : a(std::min(u, v)), b(std::max(u, v)) {
    if (u == v) throw std::invalid_argument("Edge: endpoints coincide at " + std::to_string(u));
    if (a < 0) throw std::invalid_argument("Edge: negative vertex label");
}

int ccw_steps(const GonContext& g, int from, int to) {
    g.check_vertex(from);
    g.check_vertex(to);
    int d = to - from;
    return d >= 0 ? d : d + g.n;
}

bool in_open_arc(const GonContext& g, int x, int from, int to) {
    g.check_vertex(x);
    int span = ccw_steps(g, from, to);
    int pos = ccw_steps(g, from, x);
    return pos > 0 && pos < span;
}

bool in_closed_arc(const GonContext& g, int x, int from, int to) {
    g.check_vertex(x);
    int span = ccw_steps(g, from, to);
    int pos = ccw_steps(g, from, x);
    return pos <= span;
}

int cyclic_distance(const GonContext& g, int u, int v) {
    g.check_vertex(u);
    g.check_vertex(v);
    int d = std::abs(u - v);
    return std::min(d, g.n - d);
}

int edge_length(const GonContext& g, Edge e) {
    return cyclic_distance(g, e.a, e.b);
}

EdgeKind classify_edge(const GonContext& g, Edge e) {
    g.check_vertex(e.a);
    g.check_vertex(e.b);
    int len = edge_length(g, e);
    if (len < g.k) return EdgeKind::Irrelevant;
    if (len == g.k) return EdgeKind::Boundary;
    return EdgeKind::Relevant;
}

bool crosses(const GonContext& g, Edge e, Edge f) {
    g.check_vertex(e.a);
    g.check_vertex(e.b);
    g.check_vertex(f.a);
    g.check_vertex(f.b);
    if (e.a == f.a || e.a == f.b || e.b == f.a || e.b == f.b) return false;
    // Endpoints normalized a < b, so openness is plain interval membership.
    bool a_in = e.a < f.a && f.a < e.b;
    bool b_in = e.a < f.b && f.b < e.b;
    return a_in != b_in;
}

namespace {

// Longest strictly increasing subsequence length (patience sorting).
int strict_lis(const std::vector<int>& xs) {
    std::vector<int> tails;
    for (int x : xs) {
        auto it = std::lower_bound(tails.begin(), tails.end(), x);
        if (it == tails.end())
            tails.push_back(x);
        else
            *it = x;
    }
    return static_cast<int>(tails.size());
}

}  // namespace

int max_crossing_through(const GonContext& g, std::span<const Edge> edges, Edge e) {
    g.check_vertex(e.a);
    g.check_vertex(e.b);
    // Every crosser f of e has one endpoint strictly inside ]e.a,e.b[ and one
    // strictly inside ]e.b,e.a[. Write f as (x, y) with x the ccw offset of
    // the inside endpoint from e.a and y the ccw offset of the outside
    // endpoint from e.b. Two crossers f, f' of e cross each other exactly
    // when their endpoints interleave around both gaps, i.e. when x and y
    // are strictly ordered the same way. So the largest pairwise-crossing
    // set of crossers is the longest chain in the (x, y) product order,
    // which is a strict LIS after sorting by (x asc, y desc).
    std::vector<std::pair<int, int>> coords;
    for (const Edge& f : edges) {
        if (!crosses(g, e, f)) continue;
        int inside = (e.a < f.a && f.a < e.b) ? f.a : f.b;
        int outside = (inside == f.a) ? f.b : f.a;
        coords.push_back({ccw_steps(g, e.a, inside), ccw_steps(g, e.b, outside)});
    }
    std::sort(coords.begin(), coords.end(), [](const auto& p, const auto& q) {
        if (p.first != q.first) return p.first < q.first;
        return p.second > q.second;
    });
    std::vector<int> ys;
    ys.reserve(coords.size());
    for (const auto& [x, y] : coords) ys.push_back(y);
    return 1 + strict_lis(ys);
}

int max_crossing_size(const GonContext& g, std::span<const Edge> edges) {
    int best = 0;
    for (const Edge& e : edges) best = std::max(best, max_crossing_through(g, edges, e));
    return best;
}

bool has_l_crossing(const GonContext& g, std::span<const Edge> edges, int l) {
    if (l < 1) throw std::invalid_argument("has_l_crossing: l must be >= 1");
    if (l == 1) return !edges.empty();
    for (const Edge& e : edges)
        if (max_crossing_through(g, edges, e) >= l) return true;
    return false;
}

std::vector<Angle> angles_of(const GonContext& g, std::span<const Edge> edges) {
    std::map<int, std::vector<int>> nbrs;
    for (const Edge& e : edges) {
        g.check_vertex(e.a);
        g.check_vertex(e.b);
        nbrs[e.a].push_back(e.b);
        nbrs[e.b].push_back(e.a);
    }
    std::vector<Angle> out;
    for (auto& [v, ts] : nbrs) {
        std::sort(ts.begin(), ts.end(),
                  [&](int s, int t) { return ccw_steps(g, v, s) < ccw_steps(g, v, t); });
        ts.erase(std::unique(ts.begin(), ts.end()), ts.end());
        // Consecutive neighbours t_i, t_{i+1} leave the gap ]t_i,t_{i+1}[
        // free of v-edges; the angle is (u, v, w) = (t_{i+1}, v, t_i) so
        // that u precedes v precedes w counterclockwise.
        for (size_t i = 0; i + 1 < ts.size(); ++i) out.push_back({ts[i + 1], v, ts[i]});
    }
    std::sort(out.begin(), out.end(), [](const Angle& x, const Angle& y) {
        return std::tie(x.v, x.u, x.w) < std::tie(y.v, y.u, y.w);
    });
    return out;
}

bool angle_is_k_relevant(const GonContext& g, const Angle& a) {
    return cyclic_distance(g, a.u, a.v) >= g.k && cyclic_distance(g, a.v, a.w) >= g.k;
}

std::vector<Edge> implicit_edges(const GonContext& g) {
    std::vector<Edge> out;
    for (int v = 0; v < g.n; ++v)
        for (int d = 1; d <= g.k; ++d) out.push_back(Edge(v, (v + d) % g.n));
    std::sort(out.begin(), out.end());
    out.erase(std::unique(out.begin(), out.end()), out.end());
    return out;
}

std::vector<Edge> boundary_edges(const GonContext& g) {
    std::vector<Edge> out;
    for (int v = 0; v < g.n; ++v) out.push_back(Edge(v, (v + g.k) % g.n));
    std::sort(out.begin(), out.end());
    out.erase(std::unique(out.begin(), out.end()), out.end());
    return out;
}

std::vector<Edge> relevant_edge_universe(const GonContext& g) {
    std::vector<Edge> out;
    for (int a = 0; a < g.n; ++a)
        for (int b = a + 1; b < g.n; ++b) {
            Edge e(a, b);
            if (classify_edge(g, e) == EdgeKind::Relevant) out.push_back(e);
        }
    return out;
}

namespace {

void validate_relevant_set(const GonContext& g, std::vector<Edge>& relevant) {
    std::sort(relevant.begin(), relevant.end());
    for (size_t i = 0; i < relevant.size(); ++i) {
        if (i && relevant[i] == relevant[i - 1])
            throw std::invalid_argument("repeated edge " + to_string(relevant[i]));
        if (classify_edge(g, relevant[i]) != EdgeKind::Relevant)
            throw std::invalid_argument("edge " + to_string(relevant[i]) +
                                        " is not relevant for n=" + std::to_string(g.n) +
                                        " k=" + std::to_string(g.k));
    }
}

}  // namespace

bool is_k_triangulation(const GonContext& g, std::vector<Edge> relevant) {
    validate_relevant_set(g, relevant);
    // A (k+1)-crossing-free set of relevant edges is maximal exactly when it
    // has k(n-2k-1) of them, so the count substitutes for a maximality scan.
    if (static_cast<int>(relevant.size()) != g.k * (g.n - 2 * g.k - 1)) return false;
    return !has_l_crossing(g, relevant, g.k + 1);
}

bool is_k_triangulation_by_maximality(const GonContext& g, std::vector<Edge> relevant) {
    validate_relevant_set(g, relevant);
    if (has_l_crossing(g, relevant, g.k + 1)) return false;
    std::set<Edge> have(relevant.begin(), relevant.end());
    std::vector<Edge> probe = relevant;
    for (const Edge& e : relevant_edge_universe(g)) {
        if (have.count(e)) continue;
        // e must be blocked: together with the present edges it completes a
        // (k+1)-crossing. Irrelevant and boundary edges cross nothing extra
        // that matters, so scanning the relevant universe suffices.
        if (max_crossing_through(g, probe, e) < g.k + 1) return false;
    }
    return true;
}

KTriangulation::KTriangulation(GonContext g, std::vector<Edge> relevant)
    : ctx_(g), relevant_(std::move(relevant)) {
    validate_relevant_set(ctx_, relevant_);
    if (static_cast<int>(relevant_.size()) != g.k * (g.n - 2 * g.k - 1))
        throw std::invalid_argument(
            "expected " + std::to_string(g.k * (g.n - 2 * g.k - 1)) + " relevant edges, got " +
            std::to_string(relevant_.size()));
    if (has_l_crossing(ctx_, relevant_, g.k + 1))
        throw std::invalid_argument("edge set contains a forbidden crossing");
}

std::vector<Edge> KTriangulation::all_edges() const {
    std::vector<Edge> out = implicit_edges(ctx_);
    out.insert(out.end(), relevant_.begin(), relevant_.end());
    std::sort(out.begin(), out.end());
    return out;
}

bool KTriangulation::contains(Edge e) const {
    if (classify_edge(ctx_, e) != EdgeKind::Relevant)
        return edge_length(ctx_, e) <= ctx_.k && e.a != e.b;
    return std::binary_search(relevant_.begin(), relevant_.end(), e);
}

std::string to_string(Edge e) {
    return "[" + std::to_string(e.a) + "," + std::to_string(e.b) + "]";
}

std::string to_string(const Angle& a) {
    return "(" + std::to_string(a.u) + "," + std::to_string(a.v) + "," + std::to_string(a.w) + ")";
}

}  // namespace multitri
