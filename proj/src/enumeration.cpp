#include "multitri/enumeration.hpp"

#include <algorithm>
#include <map>
#include <stdexcept>

namespace multitri {

BigCount catalan(int m) {
    if (m < 0) throw std::invalid_argument("catalan: negative index");
    BigCount c = 1;
    for (int i = 0; i < m; ++i) {
        c *= 2 * (2 * i + 1);
        c /= i + 2;
    }
    return c;
}

BigCount catalan_determinant(int n, int k) {
    if (k < 0 || n < 2 * k) throw std::invalid_argument("catalan_determinant: needs n >= 2k, k >= 0");
    if (k == 0) return 1;
    std::vector<std::vector<BigCount>> m(k, std::vector<BigCount>(k));
    for (int i = 0; i < k; ++i)
        for (int j = 0; j < k; ++j) m[i][j] = catalan(n - (i + 1) - (j + 1));
    // Bareiss fraction-free elimination; every division is exact.
    int sign = 1;
    BigCount prev = 1;
    for (int t = 0; t + 1 < k; ++t) {
        if (m[t][t] == 0) {
            int swap_row = -1;
            for (int r = t + 1; r < k; ++r)
                if (m[r][t] != 0) {
                    swap_row = r;
                    break;
                }
            if (swap_row < 0) return 0;
            std::swap(m[t], m[swap_row]);
            sign = -sign;
        }
        for (int r = t + 1; r < k; ++r) {
            for (int c = t + 1; c < k; ++c) m[r][c] = (m[r][c] * m[t][t] - m[r][t] * m[t][c]) / prev;
            m[r][t] = 0;
        }
        prev = m[t][t];
    }
    return sign * m[k - 1][k - 1];
}

BigCount catalan_determinant(const GonContext& g) { return catalan_determinant(g.n, g.k); }

namespace {

// Shared DFS skeleton: include-before-exclude over the sorted relevant
// universe, so complete leaves appear in lexicographic order.
template <typename Leaf>
void backtrack(const GonContext& g, Leaf&& leaf) {
    std::vector<Edge> universe = relevant_edge_universe(g);
    std::size_t needed = static_cast<std::size_t>(g.k) * (g.n - 2 * g.k - 1);
    std::vector<Edge> chosen;
    chosen.reserve(needed);
    auto dfs = [&](auto&& self, std::size_t idx) -> bool {
        if (chosen.size() == needed) return leaf(chosen);
        if (idx == universe.size() || chosen.size() + (universe.size() - idx) < needed) return true;
        if (max_crossing_through(g, chosen, universe[idx]) <= g.k) {
            chosen.push_back(universe[idx]);
            if (!self(self, idx + 1)) return false;
            chosen.pop_back();
        }
        return self(self, idx + 1);
    };
    dfs(dfs, 0);
}

}  // namespace

void enumerate_triangulations(const GonContext& g,
                              const std::function<bool(const KTriangulation&)>& visit) {
    backtrack(g, [&](const std::vector<Edge>& chosen) { return visit(KTriangulation(g, chosen)); });
}

std::vector<KTriangulation> all_triangulations(const GonContext& g) {
    std::vector<KTriangulation> out;
    enumerate_triangulations(g, [&](const KTriangulation& t) {
        out.push_back(t);
        return true;
    });
    return out;
}

std::vector<KTriangulation> first_triangulations(const GonContext& g, int count) {
    std::vector<KTriangulation> out;
    if (count <= 0) return out;
    enumerate_triangulations(g, [&](const KTriangulation& t) {
        out.push_back(t);
        return out.size() < static_cast<std::size_t>(count);
    });
    return out;
}

BigCount count_by_backtracking(const GonContext& g) {
    BigCount total = 0;
    backtrack(g, [&](const std::vector<Edge>&) {
        ++total;
        return true;
    });
    return total;
}

namespace {

// Weakly decreasing k-tuples with entries in [lo, hi].
std::vector<std::vector<int>> decreasing_tuples(int k, int lo, int hi) {
    std::vector<std::vector<int>> out;
    std::vector<int> h;
    auto rec = [&](auto&& self, int cap) -> void {
        if (static_cast<int>(h.size()) == k) {
            out.push_back(h);
            return;
        }
        for (int v = cap; v >= lo; --v) {
            h.push_back(v);
            self(self, v);
            h.pop_back();
        }
    };
    rec(rec, hi);
    return out;
}

}  // namespace

BigCount count_dyck_k_paths(int semilength, int k) {
    if (semilength < 0 || k < 0) throw std::invalid_argument("count_dyck_k_paths: negative argument");
    if (semilength == 0 || k == 0) return 1;
    // Column profile DP: a state at column x is the weakly decreasing tuple of
    // path heights still to be reached, each within [x, semilength]; moving to
    // the next column never lowers a component.
    std::map<std::vector<int>, BigCount> f;
    for (auto& h : decreasing_tuples(k, 1, semilength)) f[std::move(h)] = 1;
    for (int x = 2; x <= semilength; ++x) {
        std::map<std::vector<int>, BigCount> next;
        for (auto& h2 : decreasing_tuples(k, x, semilength)) {
            BigCount sum = 0;
            for (const auto& [h1, ways] : f) {
                bool below = true;
                for (int i = 0; i < k && below; ++i) below = h1[i] <= h2[i];
                if (below) sum += ways;
            }
            next[std::move(h2)] = std::move(sum);
        }
        f = std::move(next);
    }
    BigCount total = 0;
    for (const auto& [h, ways] : f) total += ways;
    return total;
}

long long prefix_crossing_count(const KTriangulation& t) {
    const GonContext& g = t.ctx();
    auto rec = [&](auto&& self, int j, int prev) -> long long {
        if (j == g.k) return 1;
        long long total = 0;
        for (int v = prev + 1; v <= g.n - 1; ++v)
            if (t.contains(Edge(j, v))) total += self(self, j + 1, v);
        return total;
    };
    return rec(rec, 0, g.k - 1);
}

bool Filling::box(int i, int j) const {
    if (i < 0 || j <= i || j >= n) throw std::out_of_range("Filling::box: not a staircase box");
    return rows[i][j - i - 1];
}

Filling to_filling(const KTriangulation& t) {
    int n = t.ctx().n;
    Filling f{n, std::vector<std::vector<bool>>(n)};
    for (int i = 0; i < n; ++i) f.rows[i].assign(n - 1 - i, false);
    for (const Edge& e : t.all_edges()) f.rows[e.a][e.b - e.a - 1] = true;
    return f;
}

KTriangulation from_filling(const GonContext& g, const Filling& f) {
    if (f.n != g.n) throw std::invalid_argument("from_filling: size mismatch");
    std::vector<Edge> relevant;
    for (int i = 0; i < g.n; ++i)
        for (int j = i + 1; j < g.n; ++j) {
            Edge e(i, j);
            if (classify_edge(g, e) == EdgeKind::Relevant) {
                if (f.box(i, j)) relevant.push_back(e);
            } else if (!f.box(i, j)) {
                throw std::invalid_argument("from_filling: box " + to_string(e) +
                                            " must be filled in every triangulation");
            }
        }
    return KTriangulation(g, std::move(relevant));
}

int longest_diagonal(const Filling& f) {
    std::vector<std::pair<int, int>> boxes;
    for (int i = 0; i < f.n; ++i)
        for (int j = i + 1; j < f.n; ++j)
            if (f.box(i, j)) boxes.emplace_back(i, j);
    int best = 0;
    // A diagonal's spanning rectangle fits the staircase exactly when its last
    // row index stays below its first column index, so split on that column.
    for (int t = 1; t <= f.n - 1; ++t) {
        std::vector<std::pair<int, int>> part;
        for (auto [i, j] : boxes)
            if (i < t && t <= j) part.emplace_back(i, j);
        std::sort(part.begin(), part.end(), [](auto x, auto y) {
            if (x.first != y.first) return x.first < y.first;
            return x.second > y.second;
        });
        std::vector<int> tails;
        for (auto [i, j] : part) {
            auto it = std::lower_bound(tails.begin(), tails.end(), j);
            if (it == tails.end())
                tails.push_back(j);
            else
                *it = j;
        }
        best = std::max(best, static_cast<int>(tails.size()));
    }
    return best;
}

bool gale_evenness_check(const GonContext& g) {
    if (g.n != 2 * g.k + 3)
        throw std::invalid_argument("gale_evenness_check: defined for n = 2k+3 only");
    std::map<Edge, int> position;
    for (int j = 0; j < g.n; ++j)
        position[Edge(j * (g.k + 1) % g.n, (j + 1) * (g.k + 1) % g.n)] = j;

    std::vector<std::vector<int>> from_triangulations;
    for (const KTriangulation& t : all_triangulations(g)) {
        std::vector<int> pos;
        for (const Edge& e : t.relevant()) pos.push_back(position.at(e));
        std::sort(pos.begin(), pos.end());
        from_triangulations.push_back(std::move(pos));
    }
    std::sort(from_triangulations.begin(), from_triangulations.end());

    // All 2k-subsets of 0..n-1 where any two non-members enclose an even
    // number of members, read linearly.
    std::vector<std::vector<int>> from_evenness;
    std::vector<int> subset;
    auto rec = [&](auto&& self, int next) -> void {
        if (static_cast<int>(subset.size()) == 2 * g.k) {
            std::vector<bool> member(g.n, false);
            for (int s : subset) member[s] = true;
            for (int p = 0; p < g.n; ++p) {
                if (member[p]) continue;
                int between = 0;
                for (int q = p + 1; q < g.n; ++q) {
                    if (member[q]) {
                        ++between;
                        continue;
                    }
                    if (between % 2 != 0) return;
                    between = 0;
                }
            }
            from_evenness.push_back(subset);
            return;
        }
        for (int v = next; v < g.n; ++v) {
            subset.push_back(v);
            self(self, v + 1);
            subset.pop_back();
        }
    };
    rec(rec, 0);
    std::sort(from_evenness.begin(), from_evenness.end());

    return from_triangulations == from_evenness;
}

}  // namespace multitri
