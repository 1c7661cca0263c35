#include "multitri/analysis.hpp"

#include <algorithm>
#include <bit>
#include <map>
#include <numeric>
#include <optional>
#include <random>
#include <stdexcept>
#include <string>

namespace multitri {

namespace {

// Lee-Streinu pebble game; decides (p,q)-sparsity whenever q < 2p.
bool pebble_game_sparse(int n, std::span<const Edge> edges, int p, int q) {
    std::vector<int> peb(n, p);
    std::vector<std::vector<int>> out(n);

    auto find_pebble = [&](int root, int avoid1, int avoid2) -> bool {
        std::vector<int> parent(n, -2);
        parent[root] = -1;
        std::vector<int> stack = {root};
        while (!stack.empty()) {
            int u = stack.back();
            stack.pop_back();
            if (u != root && u != avoid1 && u != avoid2 && peb[u] > 0) {
                --peb[u];
                for (int cur = u; parent[cur] != -1;) {
                    int par = parent[cur];
                    out[par].erase(std::find(out[par].begin(), out[par].end(), cur));
                    out[cur].push_back(par);
                    cur = par;
                }
                ++peb[root];
                return true;
            }
            for (int w : out[u])
                if (parent[w] == -2) {
                    parent[w] = u;
                    stack.push_back(w);
                }
        }
        return false;
    };

    for (const Edge& e : edges) {
        while (peb[e.a] + peb[e.b] < q + 1)
            if (!find_pebble(e.a, e.a, e.b) && !find_pebble(e.b, e.a, e.b)) return false;
        if (peb[e.a] > 0) {
            --peb[e.a];
            out[e.a].push_back(e.b);
        } else {
            --peb[e.b];
            out[e.b].push_back(e.a);
        }
    }
    return true;
}

// Direct evaluation over induced subgraphs; only subsets spanning at least
// p vertices constrain anything.
bool exact_sparse(int n, std::span<const Edge> edges, int p, int q) {
    if (n > 24)
        throw std::invalid_argument("is_sparse_graph: exact evaluation capped at 24 vertices");
    for (std::uint32_t w = 1; w < (1u << n); ++w) {
        int m = 0;
        std::uint32_t touched = 0;
        for (const Edge& e : edges)
            if ((w >> e.a & 1) && (w >> e.b & 1)) {
                ++m;
                touched |= (1u << e.a) | (1u << e.b);
            }
        if (touched != w) continue;
        int tw = std::popcount(touched);
        if (tw >= p && m > p * tw - q) return false;
    }
    return true;
}

}  // namespace

bool is_sparse_graph(int vertex_count, std::span<const Edge> edges, int p, int q) {
    if (p < 1 || q < 0) throw std::invalid_argument("is_sparse_graph: needs p >= 1, q >= 0");
    if (vertex_count < 1) throw std::invalid_argument("is_sparse_graph: empty vertex set");
    for (const Edge& e : edges)
        if (e.b >= vertex_count)
            throw std::invalid_argument("is_sparse_graph: endpoint out of range in " +
                                        to_string(e));
    if (q < 2 * p) return pebble_game_sparse(vertex_count, edges, p, q);
    return exact_sparse(vertex_count, edges, p, q);
}

bool sparsity_check(const KTriangulation& t, int p, int q) {
    std::vector<Edge> edges = t.all_edges();
    return is_sparse_graph(t.ctx().n, edges, p, q);
}

int rigidity_target_rank(const GonContext& g, int dim) {
    if (dim < 1) throw std::invalid_argument("rigidity_target_rank: needs dim >= 1");
    return dim * g.n - dim * (dim + 1) / 2;
}

namespace {

constexpr std::uint64_t P31 = 2147483647ULL;

std::uint64_t mulmod(std::uint64_t a, std::uint64_t b) { return a * b % P31; }

std::uint64_t powmod(std::uint64_t base, std::uint64_t exp) {
    std::uint64_t acc = 1;
    for (; exp; exp >>= 1, base = mulmod(base, base))
        if (exp & 1) acc = mulmod(acc, base);
    return acc;
}

int rank_mod_p(std::vector<std::vector<std::uint64_t>> m) {
    if (m.empty()) return 0;
    std::size_t cols = m[0].size();
    int rank = 0;
    for (std::size_t col = 0; col < cols && rank < static_cast<int>(m.size()); ++col) {
        std::size_t pivot = rank;
        while (pivot < m.size() && m[pivot][col] == 0) ++pivot;
        if (pivot == m.size()) continue;
        std::swap(m[rank], m[pivot]);
        std::uint64_t inv = powmod(m[rank][col], P31 - 2);
        for (std::size_t c = col; c < cols; ++c) m[rank][c] = mulmod(m[rank][c], inv);
        for (std::size_t r = rank + 1; r < m.size(); ++r) {
            if (m[r][col] == 0) continue;
            std::uint64_t factor = m[r][col];
            for (std::size_t c = col; c < cols; ++c)
                m[r][c] = (m[r][c] + P31 - mulmod(factor, m[rank][c])) % P31;
        }
        ++rank;
    }
    return rank;
}

}  // namespace

int rigidity_rank(const KTriangulation& t, int dim, int trials, std::uint64_t seed) {
    if (dim < 1 || trials < 1)
        throw std::invalid_argument("rigidity_rank: needs dim >= 1 and trials >= 1");
    const GonContext& g = t.ctx();
    std::vector<Edge> edges = t.all_edges();
    int best = 0;
    for (int trial = 0; trial < trials; ++trial) {
        std::mt19937_64 rng(seed + static_cast<std::uint64_t>(trial));
        std::vector<std::uint64_t> coord(static_cast<std::size_t>(g.n) * dim);
        for (auto& c : coord) c = rng() % P31;
        std::vector<std::vector<std::uint64_t>> m(
            edges.size(), std::vector<std::uint64_t>(static_cast<std::size_t>(g.n) * dim, 0));
        for (std::size_t r = 0; r < edges.size(); ++r)
            for (int d = 0; d < dim; ++d) {
                std::uint64_t cu = coord[static_cast<std::size_t>(edges[r].a) * dim + d];
                std::uint64_t cv = coord[static_cast<std::size_t>(edges[r].b) * dim + d];
                std::uint64_t diff = (cu + P31 - cv) % P31;
                m[r][static_cast<std::size_t>(edges[r].a) * dim + d] = diff;
                m[r][static_cast<std::size_t>(edges[r].b) * dim + d] = (P31 - diff) % P31;
            }
        best = std::max(best, rank_mod_p(std::move(m)));
    }
    return best;
}

SurfaceStats surface_stats(const KTriangulation& t) {
    const GonContext& g = t.ctx();
    SurfaceStats s;
    s.v = g.n;
    s.e = g.n + static_cast<int>(t.relevant().size());
    s.f = g.n - 2 * g.k;
    s.chi = s.v - s.e + s.f;

    // Boundary components: the length-k edges chain as v -> v+k, one
    // component per orbit.
    std::vector<bool> seen(g.n, false);
    for (int v = 0; v < g.n; ++v) {
        if (seen[v]) continue;
        ++s.boundary_components;
        for (int w = v; !seen[w]; w = (w + g.k) % g.n) seen[w] = true;
    }
    if (s.boundary_components != std::gcd(g.n, g.k))
        throw std::logic_error("surface_stats: boundary trace disagrees with gcd");

    int twice_genus = 2 - s.chi - s.boundary_components;
    if (twice_genus < 0 || twice_genus % 2 != 0)
        throw std::logic_error("surface_stats: Euler characteristic is inconsistent");
    s.genus = twice_genus / 2;

    // Natural orientation: each star's boundary cycle in star order. The
    // surface is orientable when the two stars of every relevant edge
    // traverse it in opposite directions.
    std::map<Edge, std::vector<std::pair<int, int>>> traversals;
    for (const KStar& star : extract_stars(t)) {
        std::vector<int> ord = star_order(star);
        for (std::size_t i = 0; i < ord.size(); ++i) {
            int x = ord[i], y = ord[(i + 1) % ord.size()];
            traversals[Edge(x, y)].emplace_back(x, y);
        }
    }
    s.orientable = true;
    for (const auto& [e, dirs] : traversals) {
        if (classify_edge(g, e) != EdgeKind::Relevant) continue;
        if (dirs.size() != 2) throw std::logic_error("surface_stats: bad edge multiplicity");
        if (dirs[0] == dirs[1]) s.orientable = false;
    }
    return s;
}

ChirotopeSign chirotope_sign(const KTriangulation& t, const KStar& s, const KStar& s1,
                             const KStar& s2) {
    if (s == s1 || s == s2 || s1 == s2)
        throw std::invalid_argument("chirotope_sign: stars must be distinct");
    std::vector<KStar> stars = extract_stars(t);
    for (const KStar* x : {&s, &s1, &s2})
        if (!std::binary_search(stars.begin(), stars.end(), *x))
            throw std::invalid_argument("chirotope_sign: " + to_string(*x) +
                                        " is not a star of the triangulation");
    CommonBisector b = common_bisector(s, s1);
    int forward = 0, backward = 0;
    for (int x : s2.circle_order) {
        if (in_open_arc(t.ctx(), x, b.first_vertex, b.second_vertex)) ++forward;
        if (in_open_arc(t.ctx(), x, b.second_vertex, b.first_vertex)) ++backward;
    }
    if (forward == backward)
        throw std::logic_error("chirotope_sign: balanced star across the bisector");
    return forward > backward ? ChirotopeSign::Negative : ChirotopeSign::Positive;
}

std::vector<KStar> chirotope_extreme_stars(const KTriangulation& t) {
    std::vector<KStar> stars = extract_stars(t);
    if (stars.size() < 3) return stars;
    std::vector<KStar> extreme;
    for (const KStar& x : stars) {
        bool is_extreme = false;
        for (const KStar& b : stars) {
            if (b == x) continue;
            bool constant = true;
            std::optional<ChirotopeSign> sign;
            for (const KStar& y : stars) {
                if (y == x || y == b) continue;
                ChirotopeSign s = chirotope_sign(t, x, b, y);
                if (sign && *sign != s) {
                    constant = false;
                    break;
                }
                sign = s;
            }
            if (constant) {
                is_extreme = true;
                break;
            }
        }
        if (is_extreme) extreme.push_back(x);
    }
    return extreme;
}

}  // namespace multitri
