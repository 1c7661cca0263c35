#include "multitri/structure.hpp"

#include <algorithm>
#include <set>
#include <stdexcept>

namespace multitri {

std::vector<Edge> k_ears(const KTriangulation& t) {
    const GonContext& g = t.ctx();
    if (g.n < 2 * g.k + 3) throw std::invalid_argument("k_ears: needs n >= 2k+3");
    std::vector<Edge> out;
    for (const Edge& e : t.relevant())
        if (edge_length(g, e) == g.k + 1) out.push_back(e);
    return out;
}

namespace {

bool is_external(const KStar& s) {
    for (const Edge& e : star_edges(s))
        if (edge_length(s.ctx, e) == s.ctx.k) return true;
    return false;
}

}  // namespace

StarClassification classify_stars(const KTriangulation& t) {
    StarClassification out;
    for (KStar& s : extract_stars(t))
        (is_external(s) ? out.external : out.internal).push_back(std::move(s));
    return out;
}

bool is_positive_ear(const KStar& s, const KTriangulation& t, Edge e) {
    const GonContext& g = t.ctx();
    if (g.n < 2 * g.k + 3) throw std::invalid_argument("is_positive_ear: needs n >= 2k+3");
    if (edge_length(g, e) != g.k + 1)
        throw std::invalid_argument("is_positive_ear: " + to_string(e) + " is not an ear");
    std::vector<Edge> es = star_edges(s);
    if (!std::binary_search(es.begin(), es.end(), e))
        throw std::invalid_argument("is_positive_ear: " + to_string(e) + " is not an edge of " +
                                    to_string(s));
    int u = e.a, v = e.b;
    if (star_side(s, u, v) == Side::Negative) std::swap(u, v);
    return ccw_steps(g, v, u) == g.k + 1;
}

std::vector<Edge> positive_ears(const KStar& s, const KTriangulation& t) {
    std::vector<KStar> stars = extract_stars(t);
    if (!std::binary_search(stars.begin(), stars.end(), s))
        throw std::invalid_argument("positive_ears: " + to_string(s) +
                                    " is not a star of the triangulation");
    std::vector<Edge> out;
    for (const Edge& e : star_edges(s))
        if (edge_length(t.ctx(), e) == t.ctx().k + 1 && is_positive_ear(s, t, e))
            out.push_back(e);
    std::sort(out.begin(), out.end());
    return out;
}

bool is_accordion(const GonContext& g, std::span<const Edge> edges) {
    for (const Edge& e : edges) {
        g.check_vertex(e.a);
        g.check_vertex(e.b);
    }
    std::vector<Edge> sorted(edges.begin(), edges.end());
    std::sort(sorted.begin(), sorted.end());
    sorted.erase(std::unique(sorted.begin(), sorted.end()), sorted.end());
    std::size_t m = static_cast<std::size_t>(g.n - 2 * g.k - 1);
    if (sorted.size() != edges.size() || sorted.size() != m) return false;
    for (const Edge& e : sorted)
        if (classify_edge(g, e) != EdgeKind::Relevant) return false;
    if (m == 0) return true;

    std::vector<bool> used(sorted.size(), false);
    auto take = [&](long long a, long long b) -> int {
        Edge e(static_cast<int>(((a % g.n) + g.n) % g.n), static_cast<int>(((b % g.n) + g.n) % g.n));
        auto it = std::lower_bound(sorted.begin(), sorted.end(), e);
        if (it == sorted.end() || *it != e) return -1;
        int idx = static_cast<int>(it - sorted.begin());
        return used[idx] ? -1 : idx;
    };
    auto grow = [&](auto&& self, long long a, long long b, std::size_t have) -> bool {
        if (have == m) return true;
        for (auto [na, nb] : {std::pair<long long, long long>{a, b + 1}, {a - 1, b}}) {
            int idx = take(na, nb);
            if (idx < 0) continue;
            used[idx] = true;
            if (self(self, na, nb, have + 1)) return true;
            used[idx] = false;
        }
        return false;
    };
    for (std::size_t i = 0; i < sorted.size(); ++i) {
        if (edge_length(g, sorted[i]) != g.k + 1) continue;
        for (int a : {sorted[i].a, sorted[i].b}) {
            if ((a + g.k + 1) % g.n != sorted[i].a && (a + g.k + 1) % g.n != sorted[i].b) continue;
            std::fill(used.begin(), used.end(), false);
            used[i] = true;
            if (grow(grow, a, a + g.k + 1, 1)) return true;
        }
    }
    return false;
}

namespace {

struct WalkTables {
    std::vector<KStar> stars;
    std::map<Edge, std::pair<int, int>> owners;   // relevant edge -> its two stars
    std::vector<std::map<Edge, Edge>> pair_in;    // per star, partner of each unpaired edge
    std::map<Edge, int> positive_star;            // ear -> the star it is positive for
};

WalkTables build_walk_tables(const KTriangulation& t, const std::vector<KStar>& stars) {
    const GonContext& g = t.ctx();
    int m = 2 * g.k + 1;
    WalkTables w;
    w.stars = stars;
    for (int i = 0; i < static_cast<int>(stars.size()); ++i)
        for (const Edge& e : star_edges(stars[i])) {
            if (classify_edge(g, e) != EdgeKind::Relevant) continue;
            auto [it, fresh] = w.owners.try_emplace(e, i, -1);
            if (!fresh) it->second.second = i;
        }
    for (const auto& [e, pr] : w.owners)
        if (pr.second < 0) throw std::logic_error("relevant edge " + to_string(e) + " in one star");

    w.pair_in.resize(stars.size());
    for (int i = 0; i < static_cast<int>(stars.size()); ++i) {
        std::vector<int> ring = star_order(stars[i]);
        std::vector<Edge> cycle;
        std::vector<bool> marked;
        for (int j = 0; j < m; ++j) {
            Edge e(ring[j], ring[(j + 1) % m]);
            int len = edge_length(g, e);
            cycle.push_back(e);
            marked.push_back(len == g.k || (len == g.k + 1 && is_positive_ear(stars[i], t, e)));
        }
        int unmarked = static_cast<int>(std::count(marked.begin(), marked.end(), false));
        if (unmarked == 0) continue;
        // Boundary edges and positive ears alternate along one path of the
        // star cycle, so the rest is a single even run; pair it up in order.
        int start = -1;
        for (int j = 0; j < m; ++j)
            if (!marked[j] && marked[(j + m - 1) % m]) start = j;
        if (start < 0 || unmarked % 2 != 0)
            throw std::logic_error("star " + to_string(stars[i]) + " has no even pairing path");
        for (int off = 0; off < unmarked; ++off)
            if (marked[(start + off) % m])
                throw std::logic_error("star " + to_string(stars[i]) + " pairing path is split");
        for (int off = 0; off + 1 < unmarked; off += 2) {
            Edge x = cycle[(start + off) % m], y = cycle[(start + off + 1) % m];
            w.pair_in[i][x] = y;
            w.pair_in[i][y] = x;
        }
    }

    for (const Edge& e : k_ears(t)) {
        const auto [s1, s2] = w.owners.at(e);
        bool p1 = is_positive_ear(stars[s1], t, e), p2 = is_positive_ear(stars[s2], t, e);
        if (p1 == p2)
            throw std::logic_error("ear " + to_string(e) + " is positive for " +
                                   std::to_string(p1 + p2) + " stars");
        w.positive_star[e] = p1 ? s1 : s2;
    }
    return w;
}

std::vector<Edge> accordion_walk(const KTriangulation& t, const WalkTables& w, Edge start,
                                 std::set<Edge>& used) {
    const GonContext& g = t.ctx();
    const auto [s1, s2] = w.owners.at(start);
    int at = w.positive_star.at(start) == s1 ? s2 : s1;
    std::vector<Edge> acc = {start};
    used.insert(start);
    Edge cur = start;
    while (acc.size() < 2 || edge_length(g, cur) != g.k + 1) {
        auto it = w.pair_in[at].find(cur);
        if (it == w.pair_in[at].end())
            throw std::logic_error("accordion walk stranded at " + to_string(cur));
        cur = it->second;
        if (!used.insert(cur).second)
            throw std::logic_error("accordion walk revisited " + to_string(cur));
        acc.push_back(cur);
        const auto [o1, o2] = w.owners.at(cur);
        at = o1 == at ? o2 : o1;
    }
    return acc;
}

std::optional<std::vector<std::vector<Edge>>> decompose(const KTriangulation& t,
                                                        std::span<const Edge> seed_ears) {
    const GonContext& g = t.ctx();
    if (g.n == 2 * g.k + 1) return std::vector<std::vector<Edge>>(g.k);
    std::vector<KStar> stars = extract_stars(t);
    for (const KStar& s : stars)
        if (!is_external(s)) return std::nullopt;
    if (g.n == 2 * g.k + 2) {
        std::vector<std::vector<Edge>> singles;
        for (const Edge& e : t.relevant()) singles.push_back({e});
        return singles;
    }

    WalkTables w = build_walk_tables(t, stars);
    std::vector<Edge> seeds(seed_ears.begin(), seed_ears.end());
    for (const Edge& e : seeds)
        if (!w.positive_star.count(e))
            throw std::invalid_argument("accordion_decomposition: seed " + to_string(e) +
                                        " is not an ear of the triangulation");
    for (const auto& [e, s] : w.positive_star) seeds.push_back(e);

    std::vector<std::vector<Edge>> accordions;
    std::set<Edge> used;
    for (const Edge& e : seeds) {
        if (used.count(e)) continue;
        accordions.push_back(accordion_walk(t, w, e, used));
    }
    if (static_cast<int>(accordions.size()) != g.k || used.size() != t.relevant().size())
        throw std::logic_error("accordion walks did not partition the relevant edges");
    return accordions;
}

}  // namespace

std::optional<std::vector<std::vector<Edge>>> accordion_decomposition(const KTriangulation& t) {
    return decompose(t, {});
}

std::optional<std::vector<std::vector<Edge>>> accordion_decomposition(
    const KTriangulation& t, std::span<const Edge> seed_ears) {
    return decompose(t, seed_ears);
}

bool is_k_colorable(const KTriangulation& t) {
    if (t.ctx().k == 1) return true;
    return accordion_decomposition(t).has_value();
}

std::optional<Coloring> color(const KTriangulation& t) {
    Coloring c;
    if (t.ctx().k == 1) {
        for (const Edge& e : t.relevant()) c[e] = 0;
        return c;
    }
    auto parts = accordion_decomposition(t);
    if (!parts) return std::nullopt;
    for (std::size_t i = 0; i < parts->size(); ++i)
        for (const Edge& e : (*parts)[i]) c[e] = static_cast<int>(i);
    return c;
}

bool valid_coloring(const KTriangulation& t, const Coloring& c) {
    const GonContext& g = t.ctx();
    const std::vector<Edge>& rel = t.relevant();
    if (c.size() != rel.size()) return false;
    for (const Edge& e : rel) {
        auto it = c.find(e);
        if (it == c.end() || it->second < 0 || it->second >= g.k) return false;
    }
    for (auto i = c.begin(); i != c.end(); ++i)
        for (auto j = std::next(i); j != c.end(); ++j)
            if (i->second == j->second && crosses(g, i->first, j->first)) return false;
    return true;
}

int p_relevant_count(const KTriangulation& t, int p) {
    const GonContext& g = t.ctx();
    if (p < g.k || 2 * p > g.n - 1)
        throw std::invalid_argument("p_relevant_count: needs k <= p <= (n-1)/2");
    int count = 0;
    for (const Edge& e : t.relevant())
        if (edge_length(g, e) > p) ++count;
    return count;
}

}  // namespace multitri
