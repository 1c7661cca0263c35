// Acceptance gate: one line per criterion, exit code = number of failures.
#include <algorithm>
#include <cstdio>
#include <numeric>
#include <optional>
#include <set>
#include <string>
#include <vector>

#include "multitri/analysis.hpp"
#include "multitri/enumeration.hpp"
#include "multitri/flips.hpp"
#include "multitri/stars.hpp"
#include "multitri/structure.hpp"
#include "multitri/transform.hpp"
#include "support/oracles.hpp"

using namespace multitri;

namespace {

struct CountCase {
    int n, k;
    const char* expect;
};

const CountCase kCountTable[] = {
    {5, 2, "1"},   {6, 2, "3"},    {7, 2, "14"},   {8, 2, "84"},  {9, 2, "594"},
    {10, 2, "4719"}, {7, 3, "1"},  {8, 3, "4"},    {9, 3, "30"},  {3, 1, "1"},
    {4, 1, "2"},   {5, 1, "5"},    {6, 1, "14"},   {7, 1, "42"},  {8, 1, "132"},
    {9, 1, "429"}, {10, 1, "1430"}, {11, 1, "4862"}, {12, 1, "16796"},
};

bool counting_agreement(std::string& detail) {
    for (const CountCase& c : kCountTable) {
        GonContext g(c.n, c.k);
        BigCount det = catalan_determinant(g);
        BigCount back = count_by_backtracking(g);
        BigCount bfs = static_cast<long long>(build_flip_graph(g).nodes.size());
        if (det.str() != c.expect || back != det || bfs != det) {
            detail = "mismatch at n=" + std::to_string(c.n) + " k=" + std::to_string(c.k) +
                     ": det=" + det.str() + " backtrack=" + back.str() + " bfs=" + bfs.str() +
                     " expected=" + c.expect;
            return false;
        }
    }
    detail = std::to_string(std::size(kCountTable)) + " cases agree";
    return true;
}

bool structural_counts(std::string& detail) {
    long long checked = 0;
    for (const CountCase& c : kCountTable) {
        GonContext g(c.n, c.k);
        for (const KTriangulation& t : all_triangulations(g)) {
            std::vector<KStar> stars = extract_stars(t);
            if (static_cast<int>(stars.size()) != g.n - 2 * g.k) {
                detail = "star count off at n=" + std::to_string(g.n);
                return false;
            }
            if (static_cast<int>(t.relevant().size()) != g.k * (g.n - 2 * g.k - 1) ||
                static_cast<int>(t.all_edges().size()) != g.k * (2 * g.n - 2 * g.k - 1)) {
                detail = "edge count off at n=" + std::to_string(g.n);
                return false;
            }
            star_incidences(t, stars);  // throws on any multiplicity violation
            for (Edge e : t.all_edges()) {
                if (classify_edge(g, e) == EdgeKind::Irrelevant) continue;
                for (auto [u, v] : {std::pair{e.a, e.b}, std::pair{e.b, e.a}})
                    if (stars_on_positive_side(stars, u, v) != ccw_steps(g, v, u) - g.k) {
                        detail = "side count law fails at n=" + std::to_string(g.n) +
                                 " k=" + std::to_string(g.k) + " edge " + to_string(e);
                        return false;
                    }
            }
            ++checked;
        }
    }
    detail = std::to_string(checked) + " triangulations checked";
    return true;
}

bool flip_laws(std::string& detail) {
    const std::pair<int, int> cases[] = {{6, 2}, {7, 2}, {8, 2}, {9, 2}, {7, 3}, {8, 3}};
    for (auto [n, k] : cases) {
        GonContext g(n, k);
        FlipGraph graph = build_flip_graph(g);
        if (BigCount(static_cast<long long>(graph.nodes.size())) != catalan_determinant(g)) {
            detail = "graph disconnected at n=" + std::to_string(n);
            return false;
        }
        int degree = k * (n - 2 * k - 1);
        for (const KTriangulation& t : graph.nodes) {
            std::vector<Flip> flips = all_flips(t);
            if (static_cast<int>(flips.size()) != degree) {
                detail = "degree off at n=" + std::to_string(n);
                return false;
            }
            for (const Flip& f : flips) {
                FlipResult once = flip(t, f.removed);
                if (once.inserted != f.inserted) {
                    detail = "all_flips disagrees with flip at n=" + std::to_string(n);
                    return false;
                }
                FlipResult back = flip(once.result, once.inserted);
                if (back.inserted != f.removed || back.result != t) {
                    detail = "flip not an involution at n=" + std::to_string(n);
                    return false;
                }
            }
        }
    }
    std::optional<int> d = diameter(build_flip_graph(GonContext(8, 2)));
    if (!d || *d < 6 || *d > 12) {
        detail = "(8,2) diameter " + (d ? std::to_string(*d) : std::string("unavailable")) +
                 " outside [6,12]";
        return false;
    }
    detail = "(8,2) diameter " + std::to_string(*d);
    return true;
}

bool ear_identity(std::string& detail) {
    const std::pair<int, int> cases[] = {{8, 2}, {9, 2}, {9, 3}, {10, 2}};
    for (auto [n, k] : cases) {
        GonContext g(n, k);
        for (const KTriangulation& t : all_triangulations(g))
            if (k_ears(t).size() != classify_stars(t).internal.size() + 2 * std::size_t(k)) {
                detail = "identity fails at n=" + std::to_string(n) + " k=" + std::to_string(k);
                return false;
            }
    }
    int witnesses = 0;
    for (const KTriangulation& t : all_triangulations(GonContext(8, 2))) {
        if (k_ears(t).size() != 5) continue;
        StarClassification cls = classify_stars(t);
        if (cls.internal.size() != 1 || cls.internal.size() + cls.external.size() != 4) {
            detail = "a 5-ear octagon witness lacks the 1-internal/4-star shape";
            return false;
        }
        ++witnesses;
    }
    if (witnesses == 0) {
        detail = "no 5-ear octagon witness found";
        return false;
    }
    detail = std::to_string(witnesses) + " five-ear octagon witnesses, each 1 internal of 4 stars";
    return true;
}

bool colorability_equivalences(std::string& detail) {
    int colorable_count = 0;
    for (const KTriangulation& t : all_triangulations(GonContext(8, 2))) {
        bool colorable = is_k_colorable(t);
        bool brute = oracles::brute_colorable(t);
        bool no_internal = classify_stars(t).internal.empty();
        std::vector<Edge> ears = k_ears(t);
        bool four_ears = ears.size() == 4;
        int len3 = 0, len4 = 0;
        for (Edge e : t.relevant()) (edge_length(t.ctx(), e) == 3 ? len3 : len4)++;
        bool profile = len3 == 4 && len4 == 2;
        std::optional<std::vector<std::vector<Edge>>> dec = accordion_decomposition(t);
        if (colorable != brute || colorable != no_internal || colorable != four_ears ||
            colorable != profile || colorable != dec.has_value()) {
            detail = "equivalence chain breaks";
            return false;
        }
        if (!colorable) continue;
        ++colorable_count;
        std::set<Edge> seen;
        for (const std::vector<Edge>& acc : *dec) {
            if (!is_accordion(t.ctx(), acc)) {
                detail = "decomposition piece is not an accordion";
                return false;
            }
            seen.insert(acc.begin(), acc.end());
        }
        if (dec->size() != 2 || seen.size() != t.relevant().size()) {
            detail = "decomposition is not a 2-part partition";
            return false;
        }
        std::optional<Coloring> c = color(t);
        if (!c || !valid_coloring(t, *c)) {
            detail = "emitted coloring invalid";
            return false;
        }
        std::set<std::set<Edge>> canonical;
        for (const std::vector<Edge>& acc : *dec) canonical.insert({acc.begin(), acc.end()});
        std::vector<Edge> seeds = ears;
        std::sort(seeds.begin(), seeds.end());
        do {
            std::optional<std::vector<std::vector<Edge>>> again =
                accordion_decomposition(t, seeds);
            std::set<std::set<Edge>> got;
            for (const std::vector<Edge>& acc : *again) got.insert({acc.begin(), acc.end()});
            if (got != canonical) {
                detail = "decomposition depends on the seed order";
                return false;
            }
        } while (std::next_permutation(seeds.begin(), seeds.end()));
    }
    detail = std::to_string(colorable_count) + " of 84 colorable, unique decompositions";
    return true;
}

bool transform_round_trips(std::string& detail) {
    for (int n : {6, 7, 8}) {
        GonContext big(n, 2), small(n - 1, 2);
        for (const KTriangulation& t : all_triangulations(big))
            for (Edge e : boundary_edges(big)) {
                FlattenOutcome fo = flatten(t, e);
                if (inflate(fo.result, fo.glued) != t) {
                    detail = "inflate(flatten) misses at n=" + std::to_string(n);
                    return false;
                }
            }
        BigCount total = catalan_determinant(big);
        for (int anchor = 0; anchor < small.n; ++anchor) {
            long long count = 0;
            for (const KTriangulation& t : all_triangulations(small))
                for (const ExternalCrossing& x : external_crossings_at(t, anchor)) {
                    KTriangulation u = inflate(t, x);
                    int v = x.insert_label == small.n ? small.n : x.insert_label;
                    FlattenOutcome fo = flatten(u, Edge(v, (v + 2) % big.n));
                    if (fo.result != t || fo.glued.anchor != x.anchor ||
                        fo.glued.edges != x.edges || fo.glued.insert_label != x.insert_label) {
                        detail = "flatten(inflate) misses at n=" + std::to_string(n - 1);
                        return false;
                    }
                    ++count;
                }
            if (BigCount(count) != total) {
                detail = "inflations at anchor " + std::to_string(anchor) + " of n=" +
                         std::to_string(small.n) + " count " + std::to_string(count) +
                         ", expected " + total.str();
                return false;
            }
        }
    }
    // Order-independence of flattening two distinct length-k edges, swept over
    // every (8,2) triangulation and every unordered pair. The unrestricted law
    // is false; this stays red on purpose, and the detail line carries the
    // verified scope: pairs hosted by distinct k-stars always commute, every
    // disagreement has both edges in one host star.
    GonContext g(8, 2);
    std::vector<Edge> bnd = boundary_edges(g);
    auto host_star_index = [](const std::vector<KStar>& stars, const GonContext& gc, Edge e) {
        int s0 = (e.a + gc.k) % gc.n == e.b ? e.a : e.b;
        for (std::size_t s = 0; s < stars.size(); ++s) {
            bool all = true;
            for (int i = 0; i <= gc.k && all; ++i)
                all = std::count(stars[s].circle_order.begin(), stars[s].circle_order.end(),
                                 (s0 + i) % gc.n) == 1;
            if (all) return s;
        }
        return stars.size();
    };
    long long same_star = 0, distinct_star = 0, disagree = 0, disagree_distinct = 0;
    std::string first_case;
    for (const KTriangulation& t : all_triangulations(g)) {
        std::vector<KStar> stars = extract_stars(t);
        for (std::size_t i = 0; i < bnd.size(); ++i)
            for (std::size_t j = i + 1; j < bnd.size(); ++j) {
                KTriangulation a =
                    flatten(flatten(t, bnd[i]).result, flatten_image(t, bnd[i], bnd[j])).result;
                KTriangulation b =
                    flatten(flatten(t, bnd[j]).result, flatten_image(t, bnd[j], bnd[i])).result;
                bool same = host_star_index(stars, g, bnd[i]) == host_star_index(stars, g, bnd[j]);
                ++(same ? same_star : distinct_star);
                if (a == b) continue;
                ++disagree;
                if (!same) ++disagree_distinct;
                if (first_case.empty()) {
                    first_case = "relevant {";
                    for (const Edge& r : t.relevant()) first_case += to_string(r);
                    first_case += "}, e=" + to_string(bnd[i]) + ", f=" + to_string(bnd[j]);
                }
            }
    }
    if (disagree == 0) {
        detail = "exhaustive on (6,2)<->(5,2), (7,2)<->(6,2), (8,2)<->(7,2); commutation on (8,2)";
        return true;
    }
    std::string expected_first =
        "relevant {[0,3][0,4][0,5][1,6][2,5][2,6]}, e=[1,7], f=[5,7]";
    detail = "round trips pass; unrestricted flatten-order commutation is false: " +
             std::to_string(disagree) + " of " + std::to_string(same_star + distinct_star) +
             " (8,2) pairs disagree, first at " + first_case;
    detail += disagree_distinct == 0
                  ? "; all " + std::to_string(distinct_star) +
                        " distinct-host-star pairs commute, every disagreement is same-star"
                  : "; UNEXPECTED: " + std::to_string(disagree_distinct) +
                        " distinct-star disagreements";
    if (first_case != expected_first) detail += "; UNEXPECTED first case";
    return false;
}

bool prefix_induction(std::string& detail) {
    long long total = 0;
    for (const KTriangulation& t : all_triangulations(GonContext(6, 2)))
        total += prefix_crossing_count(t);
    if (total != 14) {
        detail = "hexagon prefix sum " + std::to_string(total) + ", expected 14";
        return false;
    }
    long long pentagon = prefix_crossing_count(all_triangulations(GonContext(5, 2)).front());
    if (pentagon != 3) {
        detail = "pentagon prefix count " + std::to_string(pentagon) + ", expected 3";
        return false;
    }
    detail = "hexagon sum 14, pentagon 3";
    return true;
}

bool rigidity_and_sparsity(std::string& detail) {
    std::vector<Edge> k6;
    for (int a = 0; a < 6; ++a)
        for (int b = a + 1; b < 6; ++b) k6.emplace_back(a, b);
    if (is_sparse_graph(6, k6, 4, 10) || oracles::brute_is_sparse(6, k6, 4, 10)) {
        detail = "K_6 wrongly judged (4,10)-sparse";
        return false;
    }
    for (int n : {6, 7, 8}) {
        GonContext g(n, 2);
        int target = rigidity_target_rank(g, 4);
        if (target != 4 * n - 10) {
            detail = "target rank formula off";
            return false;
        }
        for (const KTriangulation& t : all_triangulations(g)) {
            if (rigidity_rank(t, 4, 5) != target) {
                detail = "rank below 4n-10 at n=" + std::to_string(n);
                return false;
            }
            bool lib = sparsity_check(t, 4, 10);
            bool brute = oracles::brute_is_sparse(n, t.all_edges(), 4, 10);
            if (!lib || lib != brute) {
                detail = "sparsity disagreement at n=" + std::to_string(n);
                return false;
            }
        }
    }
    detail = "all (6..8,2) ranks hit 4n-10; sparsity matches the subset oracle";
    return true;
}

bool surface_sweep(std::string& detail) {
    int swept = 0;
    for (int k = 1; k <= 4; ++k)
        for (int n = 2 * k + 1; n <= 14; ++n) {
            GonContext g(n, k);
            std::vector<KTriangulation> sample = first_triangulations(g, 3);
            std::optional<SurfaceStats> first;
            for (const KTriangulation& t : sample) {
                SurfaceStats s = surface_stats(t);
                if (s.v != n || s.f != n - 2 * k || s.chi != s.v - s.e + s.f ||
                    s.boundary_components != std::gcd(n, k) ||
                    2 * s.genus != 2 - s.chi - s.boundary_components || !s.orientable) {
                    detail = "stats wrong at n=" + std::to_string(n) + " k=" + std::to_string(k);
                    return false;
                }
                if (!first) first = s;
                if (s.chi != first->chi || s.genus != first->genus ||
                    s.boundary_components != first->boundary_components) {
                    detail = "stats depend on the triangulation at n=" + std::to_string(n) +
                             " k=" + std::to_string(k);
                    return false;
                }
                ++swept;
            }
        }
    SurfaceStats hexagon = surface_stats(all_triangulations(GonContext(6, 2)).front());
    SurfaceStats octagon = surface_stats(all_triangulations(GonContext(8, 2)).front());
    if (hexagon.genus != 0 || hexagon.boundary_components != 2 || octagon.genus != 1 ||
        octagon.boundary_components != 2) {
        detail = "anchor surfaces off: (6,2) wants g=0,b=2; (8,2) wants g=1,b=2";
        return false;
    }
    detail = std::to_string(swept) + " triangulations swept, anchors hold";
    return true;
}

bool dyck_agreement(std::string& detail) {
    if (count_dyck_k_paths(2, 2) != 3 || count_dyck_k_paths(4, 2) != 84) {
        detail = "anchor Dyck counts off";
        return false;
    }
    for (int k = 0; k <= 3; ++k)
        for (int l = 0; l <= 8; ++l)
            if (count_dyck_k_paths(l, k) != catalan_determinant(2 * k + l, k)) {
                detail = "Dyck DP disagrees with the determinant at l=" + std::to_string(l) +
                         " k=" + std::to_string(k);
                return false;
            }
    detail = "all semilengths <= 8, k <= 3";
    return true;
}

bool gale_families(std::string& detail) {
    for (auto [n, k] : {std::pair{5, 1}, {7, 2}, {9, 3}})
        if (!gale_evenness_check(GonContext(n, k))) {
            detail = "families differ at n=" + std::to_string(n) + " k=" + std::to_string(k);
            return false;
        }
    detail = "(5,1), (7,2), (9,3)";
    return true;
}

}  // namespace

int main() {
    struct Criterion {
        const char* name;
        bool (*body)(std::string&);
    };
    const Criterion criteria[] = {
        {"counting agreement (determinant = backtracking = BFS)", counting_agreement},
        {"structural counts and the side-count law", structural_counts},
        {"flip laws and the (8,2) diameter", flip_laws},
        {"ear identity and the five-ear octagon witness", ear_identity},
        {"colorability equivalences on (8,2)", colorability_equivalences},
        {"flatten/inflate round trips and commutation", transform_round_trips},
        {"prefix-crossing induction ratio", prefix_induction},
        {"rigidity rank and (4,10)-sparsity", rigidity_and_sparsity},
        {"surface statistics sweep", surface_sweep},
        {"Dyck k-path count agreement", dyck_agreement},
        {"Gale evenness families", gale_families},
    };
    int failures = 0;
    for (std::size_t i = 0; i < std::size(criteria); ++i) {
        std::string detail;
        bool ok = false;
        try {
            ok = criteria[i].body(detail);
        } catch (const std::exception& e) {
            detail = std::string("exception: ") + e.what();
        }
        std::printf("%s %2zu %s%s%s\n", ok ? "PASS" : "FAIL", i + 1, criteria[i].name,
                    detail.empty() ? "" : ": ", detail.c_str());
        if (!ok) ++failures;
    }
    return failures;
}
