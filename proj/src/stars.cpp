#include "multitri/stars.hpp"

#include <algorithm>
#include <set>
#include <stdexcept>

namespace multitri {

KStar::KStar(GonContext g, std::vector<int> vertices) : ctx(g), circle_order(std::move(vertices)) {
    if (static_cast<int>(circle_order.size()) != 2 * ctx.k + 1)
        throw std::invalid_argument("KStar: expected " + std::to_string(2 * ctx.k + 1) +
                                    " vertices, got " + std::to_string(circle_order.size()));
    for (int v : circle_order) ctx.check_vertex(v);
    std::sort(circle_order.begin(), circle_order.end());
    if (std::adjacent_find(circle_order.begin(), circle_order.end()) != circle_order.end())
        throw std::invalid_argument("KStar: repeated vertex");
}

bool KStar::contains_vertex(int v) const {
    return std::binary_search(circle_order.begin(), circle_order.end(), v);
}

std::vector<Edge> star_edges(const KStar& s) {
    int m = 2 * s.ctx.k + 1;
    std::vector<Edge> out;
    out.reserve(m);
    for (int i = 0; i < m; ++i)
        out.push_back(Edge(s.circle_order[i], s.circle_order[(i + s.ctx.k) % m]));
    std::sort(out.begin(), out.end());
    return out;
}

std::vector<int> star_order(const KStar& s) {
    int m = 2 * s.ctx.k + 1;
    std::vector<int> out;
    out.reserve(m);
    for (int i = 0, pos = 0; i < m; ++i, pos = (pos + s.ctx.k) % m)
        out.push_back(s.circle_order[pos]);
    return out;
}

std::vector<int> star_order_from(const KStar& s, int start) {
    std::vector<int> ord = star_order(s);
    auto it = std::find(ord.begin(), ord.end(), start);
    if (it == ord.end())
        throw std::invalid_argument("star_order_from: " + std::to_string(start) +
                                    " is not a star vertex");
    std::rotate(ord.begin(), it, ord.end());
    return ord;
}

Angle star_angle_at(const KStar& s, int r) {
    auto it = std::find(s.circle_order.begin(), s.circle_order.end(), r);
    if (it == s.circle_order.end())
        throw std::invalid_argument("star_angle_at: " + std::to_string(r) +
                                    " is not a star vertex");
    int m = 2 * s.ctx.k + 1;
    int i = static_cast<int>(it - s.circle_order.begin());
    return Angle{s.circle_order[(i + s.ctx.k + 1) % m], r, s.circle_order[(i + s.ctx.k) % m]};
}

namespace {

bool bisects_at(const KStar& s, int r, int t) {
    Angle a = star_angle_at(s, r);
    return in_open_arc(s.ctx, t, a.w, a.u);
}

}  // namespace

bool star_bisects(const KStar& s, Edge e) {
    if (s.contains_vertex(e.a) && bisects_at(s, e.a, e.b)) return true;
    if (s.contains_vertex(e.b) && bisects_at(s, e.b, e.a)) return true;
    return false;
}

namespace {

// Neighbour lists per vertex, sorted by counterclockwise offset.
std::map<int, std::vector<int>> neighbour_fans(const GonContext& g,
                                               const std::vector<Edge>& edges) {
    std::map<int, std::vector<int>> nbrs;
    for (const Edge& e : edges) {
        nbrs[e.a].push_back(e.b);
        nbrs[e.b].push_back(e.a);
    }
    for (auto& [v, ts] : nbrs)
        std::sort(ts.begin(), ts.end(),
                  [&](int s, int t) { return ccw_steps(g, v, s) < ccw_steps(g, v, t); });
    return nbrs;
}

// The third vertex of the angle whose arms are [a,b] and [b,?]: the
// neighbour of b immediately clockwise of a.
int next_in_star(const std::map<int, std::vector<int>>& nbrs, int a, int b) {
    const std::vector<int>& fan = nbrs.at(b);
    auto it = std::find(fan.begin(), fan.end(), a);
    if (it == fan.end() || it == fan.begin())
        throw std::logic_error("angle walk left the complex at (" + std::to_string(a) + "," +
                               std::to_string(b) + ")");
    return *(it - 1);
}

}  // namespace

std::vector<KStar> extract_stars(const KTriangulation& t) {
    const GonContext& g = t.ctx();
    int m = 2 * g.k + 1;
    std::vector<Edge> full = t.all_edges();
    std::set<Edge> edge_set(full.begin(), full.end());
    std::map<int, std::vector<int>> nbrs = neighbour_fans(g, full);

    std::vector<Angle> pool;
    for (const Angle& a : angles_of(g, full))
        if (angle_is_k_relevant(g, a)) pool.push_back(a);
    std::set<Angle> open(pool.begin(), pool.end());

    std::vector<KStar> stars;
    for (const Angle& seed : pool) {
        if (!open.count(seed)) continue;
        std::vector<int> walk = {seed.u, seed.v, seed.w};
        while (static_cast<int>(walk.size()) < m)
            walk.push_back(next_in_star(nbrs, walk[walk.size() - 2], walk.back()));
        if (next_in_star(nbrs, walk[m - 2], walk[m - 1]) != walk[0] ||
            next_in_star(nbrs, walk[m - 1], walk[0]) != walk[1])
            throw std::logic_error("angle walk failed to close");
        for (int j = 0; j < m; ++j) {
            Angle a{walk[j], walk[(j + 1) % m], walk[(j + 2) % m]};
            if (!open.erase(a))
                throw std::logic_error("angle walk revisited " + to_string(a));
        }
        KStar s(g, walk);
        for (const Edge& e : star_edges(s))
            if (!edge_set.count(e))
                throw std::logic_error("star edge " + to_string(e) + " missing from complex");
        stars.push_back(std::move(s));
    }
    if (!open.empty() || static_cast<int>(stars.size()) != g.n - 2 * g.k)
        throw std::logic_error("star extraction did not partition the angles");
    std::sort(stars.begin(), stars.end());
    return stars;
}

Side star_side(const KStar& s, int u, int v) {
    const GonContext& g = s.ctx;
    g.check_vertex(u);
    g.check_vertex(v);
    if (u == v) throw std::invalid_argument("star_side: endpoints coincide");
    int forward = 0, backward = 0;
    for (int x : s.circle_order) {
        if (in_closed_arc(g, x, u, v)) ++forward;
        if (in_closed_arc(g, x, v, u)) ++backward;
    }
    if (forward == backward)
        throw std::invalid_argument("star_side: star is balanced across " + std::to_string(u) +
                                    "->" + std::to_string(v));
    return forward < backward ? Side::Positive : Side::Negative;
}

int stars_on_positive_side(std::span<const KStar> stars, int u, int v) {
    int count = 0;
    for (const KStar& s : stars)
        if (star_side(s, u, v) == Side::Positive) ++count;
    return count;
}

int stars_on_positive_side(const KTriangulation& t, int u, int v) {
    Edge e(u, v);
    if (classify_edge(t.ctx(), e) == EdgeKind::Irrelevant || !t.contains(e))
        throw std::invalid_argument("stars_on_positive_side: " + to_string(e) +
                                    " is not a relevant or boundary edge of the triangulation");
    std::vector<KStar> stars = extract_stars(t);
    return stars_on_positive_side(stars, u, v);
}

std::map<Edge, std::vector<KStar>> star_incidences(const KTriangulation& t,
                                                   std::span<const KStar> stars) {
    const GonContext& g = t.ctx();
    std::map<Edge, std::vector<KStar>> inc;
    for (const Edge& e : t.all_edges()) inc[e];
    for (const KStar& s : stars)
        for (const Edge& e : star_edges(s)) {
            auto it = inc.find(e);
            if (it == inc.end())
                throw std::invalid_argument("star edge " + to_string(e) +
                                            " is not an edge of the triangulation");
            it->second.push_back(s);
        }
    for (const auto& [e, owners] : inc) {
        size_t expect = 0;
        switch (classify_edge(g, e)) {
            case EdgeKind::Relevant: expect = 2; break;
            case EdgeKind::Boundary: expect = 1; break;
            case EdgeKind::Irrelevant: expect = 0; break;
        }
        if (owners.size() != expect)
            throw std::invalid_argument("edge " + to_string(e) + " lies in " +
                                        std::to_string(owners.size()) + " stars, expected " +
                                        std::to_string(expect));
    }
    return inc;
}

CommonBisector common_bisector(const KStar& r, const KStar& s) {
    if (r == s) throw std::invalid_argument("common_bisector: stars coincide");
    std::vector<CommonBisector> found;
    for (int rv : r.circle_order)
        for (int sv : s.circle_order) {
            if (rv == sv) continue;
            if (bisects_at(r, rv, sv) && bisects_at(s, sv, rv))
                found.push_back({Edge(rv, sv), rv, sv});
        }
    if (found.size() != 1)
        throw std::invalid_argument("common_bisector: found " + std::to_string(found.size()) +
                                    " candidates, expected exactly one");
    return found[0];
}

std::string to_string(const KStar& s) {
    std::string out = "{";
    for (size_t i = 0; i < s.circle_order.size(); ++i) {
        if (i) out += ",";
        out += std::to_string(s.circle_order[i]);
    }
    return out + "}";
}

}  // namespace multitri
