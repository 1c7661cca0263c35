#include "multitri/transform.hpp"

#include <algorithm>
#include <optional>
#include <set>
#include <stdexcept>

#include "multitri/stars.hpp"

namespace multitri {

ExternalCrossing::ExternalCrossing(int anchor, std::vector<Edge> edges)
    : ExternalCrossing(anchor, std::move(edges), anchor) {}

ExternalCrossing::ExternalCrossing(int anchor, std::vector<Edge> edges, int insert_label)
    : anchor(anchor), edges(std::move(edges)), insert_label(insert_label) {
    if (this->anchor < 0 || this->insert_label < 0)
        throw std::invalid_argument("ExternalCrossing: negative label");
    if (this->edges.empty()) throw std::invalid_argument("ExternalCrossing: no edges");
}

namespace {

long long full_edge_count(const GonContext& g) {
    return static_cast<long long>(g.k) * (2 * g.n - 2 * g.k - 1);
}

// Everything needed to rewrite one edge of a flattening: the star vertices
// s_0..s_2k in counterclockwise order from the deleted vertex s_0 (so
// s_0..s_k is the consecutive run), plus both labelings.
struct FlattenFrame {
    GonContext from;
    GonContext to;
    std::vector<int> s;

    int s0() const { return s[0]; }

    // 0..k for run vertices, -1 otherwise
    int run_index(int v) const {
        int d = ccw_steps(from, s[0], v);
        return d <= from.k ? d : -1;
    }

    int relabel(int v) const { return v > s[0] ? v - 1 : v; }

    // Rewritten edge in the old labels; nullopt for the dropped [s_0, s_i].
    std::optional<Edge> image_old(Edge f) const {
        int ia = run_index(f.a), ib = run_index(f.b);
        if (ia > ib) {
            std::swap(ia, ib);
            std::swap(f.a, f.b);
        }
        if (ia >= 0) {
            if (ia == 0) return std::nullopt;  // [s_0, s_i], forgotten
            return f;                          // run-internal, copied
        }
        if (ib < 0) return f;  // no run vertex, copied
        int i = ib, t = f.a;
        int st = ccw_steps(from, s[from.k], t);
        if (i >= 1 && st <= ccw_steps(from, s[from.k], s[from.k + i])) return f;
        if (i <= from.k - 1 && st >= ccw_steps(from, s[from.k], s[from.k + i + 1]))
            return Edge(s[i + 1], t);
        throw std::logic_error("flatten: edge " + to_string(f) + " bisects the star's angle at " +
                               std::to_string(s[i]));
    }

    Edge image_new(Edge f_old) const { return Edge(relabel(f_old.a), relabel(f_old.b)); }
};

FlattenFrame make_frame(const KTriangulation& t, Edge e) {
    const GonContext& g = t.ctx();
    if (g.n < 2 * g.k + 2) throw std::invalid_argument("flatten: needs n >= 2k+2");
    if (classify_edge(g, e) != EdgeKind::Boundary)
        throw std::invalid_argument("flatten: " + to_string(e) + " is not a length-k edge");
    int s0 = (e.a + g.k) % g.n == e.b ? e.a : e.b;

    const KStar* host = nullptr;
    std::vector<KStar> stars = extract_stars(t);
    for (const KStar& s : stars) {
        std::vector<Edge> es = star_edges(s);
        if (std::binary_search(es.begin(), es.end(), e)) {
            if (host) throw std::logic_error("flatten: length-k edge in two stars");
            host = &s;
        }
    }
    if (!host) throw std::logic_error("flatten: length-k edge in no star");

    FlattenFrame fr{g, GonContext(g.n - 1, g.k), host->circle_order};
    auto it = std::find(fr.s.begin(), fr.s.end(), s0);
    std::rotate(fr.s.begin(), it, fr.s.end());
    for (int i = 0; i <= g.k; ++i)
        if (fr.s[i] != (s0 + i) % g.n)
            throw std::logic_error("flatten: star misses the run vertex " +
                                   std::to_string((s0 + i) % g.n));
    return fr;
}

}  // namespace

FlattenOutcome flatten(const KTriangulation& t, Edge e) {
    FlattenFrame fr = make_frame(t, e);
    const GonContext& g = fr.from;

    std::set<Edge> out;
    for (const Edge& f : t.all_edges())
        if (std::optional<Edge> im = fr.image_old(f)) out.insert(fr.image_new(*im));
    if (static_cast<long long>(out.size()) != full_edge_count(fr.to))
        throw std::logic_error("flatten: rewrite produced " + std::to_string(out.size()) +
                               " edges");

    std::vector<Edge> relevant;
    for (const Edge& f : out)
        if (classify_edge(fr.to, f) == EdgeKind::Relevant) relevant.push_back(f);

    std::vector<Edge> glued;
    for (int i = 1; i <= g.k; ++i)
        glued.push_back(fr.image_new(Edge(fr.s[i], fr.s[g.k + i])));
    int anchor = fr.s0() % fr.to.n;
    return {KTriangulation(fr.to, std::move(relevant)),
            ExternalCrossing(anchor, std::move(glued), fr.s0())};
}

Edge flatten_image(const KTriangulation& t, Edge e, Edge g) {
    if (!t.contains(g))
        throw std::invalid_argument("flatten_image: " + to_string(g) + " is not an edge");
    FlattenFrame fr = make_frame(t, e);
    std::optional<Edge> im = fr.image_old(g);
    if (!im)
        throw std::invalid_argument("flatten_image: " + to_string(g) +
                                    " is dropped by the flattening");
    return fr.image_new(*im);
}

KTriangulation inflate(const KTriangulation& t, const ExternalCrossing& x) {
    const GonContext& g = t.ctx();
    if (static_cast<int>(x.edges.size()) != g.k)
        throw std::invalid_argument("inflate: crossing has " + std::to_string(x.edges.size()) +
                                    " edges, expected " + std::to_string(g.k));
    g.check_vertex(x.anchor);
    if (x.insert_label != x.anchor && !(x.anchor == 0 && x.insert_label == g.n))
        throw std::invalid_argument("inflate: insert label " + std::to_string(x.insert_label) +
                                    " does not match anchor " + std::to_string(x.anchor));

    std::vector<int> run(g.k), far(g.k);
    for (int i = 0; i < g.k; ++i) {
        run[i] = (x.anchor + i) % g.n;
        const Edge& e = x.edges[i];
        if (e.a != run[i] && e.b != run[i])
            throw std::invalid_argument("inflate: edge " + to_string(e) +
                                        " misses its run vertex " + std::to_string(run[i]));
        far[i] = e.a == run[i] ? e.b : e.a;
        if (!t.contains(e))
            throw std::invalid_argument("inflate: " + to_string(e) + " is not an edge");
        int pos = ccw_steps(g, x.anchor, far[i]);
        int prev = i ? ccw_steps(g, x.anchor, far[i - 1]) : g.k - 1;
        if (pos < g.k || pos <= prev)
            throw std::invalid_argument("inflate: far endpoints do not advance at " +
                                        to_string(e));
    }

    GonContext to(g.n + 1, g.k);
    int sk = run[g.k - 1];
    auto relabel = [&](int v) { return v >= x.insert_label ? v + 1 : v; };
    auto run_of = [&](int v) {
        int d = ccw_steps(g, x.anchor, v);
        return d < g.k ? d : -1;
    };

    std::set<Edge> out;
    for (const Edge& f : t.all_edges()) {
        int ia = run_of(f.a), ib = run_of(f.b);
        int i = std::max(ia, ib);
        if (i < 0 || (ia >= 0 && ib >= 0)) {
            out.insert(Edge(relabel(f.a), relabel(f.b)));
            continue;
        }
        int tv = ia >= 0 ? f.b : f.a;
        int st = ccw_steps(g, sk, tv);
        int lim = ccw_steps(g, sk, far[i]);
        if (st <= lim) out.insert(Edge(relabel(run[i]), relabel(tv)));
        if (st >= lim)
            out.insert(Edge(i > 0 ? relabel(run[i - 1]) : x.insert_label, relabel(tv)));
    }
    for (int i = 0; i < g.k; ++i) out.insert(Edge(x.insert_label, relabel(run[i])));
    if (static_cast<long long>(out.size()) != full_edge_count(to))
        throw std::logic_error("inflate: rewrite produced " + std::to_string(out.size()) +
                               " edges");

    std::vector<Edge> relevant;
    for (const Edge& f : out)
        if (classify_edge(to, f) == EdgeKind::Relevant) relevant.push_back(f);
    return KTriangulation(to, std::move(relevant));
}

std::vector<ExternalCrossing> external_crossings_at(const KTriangulation& t, int anchor) {
    const GonContext& g = t.ctx();
    g.check_vertex(anchor);
    std::vector<ExternalCrossing> out;
    std::vector<Edge> picked;
    auto rec = [&](auto&& self, int i, int min_pos) -> void {
        if (i == g.k) {
            out.emplace_back(anchor, picked);
            return;
        }
        for (int pos = min_pos; pos <= g.n - 1; ++pos) {
            Edge e((anchor + i) % g.n, (anchor + pos) % g.n);
            if (!t.contains(e)) continue;
            picked.push_back(e);
            self(self, i + 1, pos + 1);
            picked.pop_back();
        }
    };
    rec(rec, 0, g.k);
    return out;
}

std::vector<ExternalCrossing> external_crossings(const KTriangulation& t) {
    std::vector<ExternalCrossing> out;
    for (int a = 0; a < t.ctx().n; ++a)
        for (ExternalCrossing& x : external_crossings_at(t, a)) out.push_back(std::move(x));
    return out;
}

}  // namespace multitri
