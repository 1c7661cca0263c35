#include "multitri/cli.hpp"

#include <algorithm>
#include <fstream>
#include <istream>
#include <ostream>
#include <sstream>

#include <CLI11.hpp>

#include "multitri/analysis.hpp"
#include "multitri/enumeration.hpp"
#include "multitri/flips.hpp"
#include "multitri/io.hpp"
#include "multitri/structure.hpp"
#include "multitri/svg.hpp"
#include "multitri/transform.hpp"

namespace multitri {

namespace {

struct Options {
    int n = 0;
    int k = 0;
    std::string in = "-";
    std::string out = "-";
    std::string format = "json";
    std::string method;
    std::string edge;
    std::string crossing;
    int anchor = 0;
    int insert_label = -1;
    int trials = 5;
    int dim = 0;
    int limit = 0;
    bool stars = false;
};

std::string read_all(std::istream& s) {
    std::ostringstream buf;
    buf << s.rdbuf();
    return buf.str();
}

KTriangulation load_triangulation(const std::string& path, std::istream& stdin_stream) {
    std::string text;
    if (path == "-") {
        text = read_all(stdin_stream);
    } else {
        std::ifstream file(path, std::ios::binary);
        if (!file) throw DocumentError("cannot open input file \"" + path + "\"");
        text = read_all(file);
    }
    return triangulation_from_json(text);
}

class OutputTarget {
  public:
    OutputTarget(const std::string& path, std::ostream& stdout_stream) {
        if (path == "-") {
            os_ = &stdout_stream;
        } else {
            file_.open(path, std::ios::binary);
            if (!file_) throw DocumentError("cannot open output file \"" + path + "\"");
            os_ = &file_;
        }
    }
    std::ostream& stream() { return *os_; }

  private:
    std::ofstream file_;
    std::ostream* os_ = nullptr;
};

Json edges_to_json(std::span<const Edge> edges) {
    Json arr = Json::array();
    for (Edge e : edges) arr.push_back(to_json(e));
    return arr;
}

int cmd_count(const Options& o, std::ostream& stdout_stream) {
    GonContext g(o.n, o.k);
    OutputTarget target(o.out, stdout_stream);
    Json doc{{"n", o.n}, {"k", o.k}};
    if (o.method.empty() || o.method == "det") doc["determinant"] = catalan_determinant(g).str();
    if (o.method.empty() || o.method == "backtrack")
        doc["backtracking"] = count_by_backtracking(g).str();
    if (o.method.empty() || o.method == "bfs")
        doc["bfs"] = std::to_string(build_flip_graph(g).nodes.size());
    target.stream() << doc.dump() << '\n';
    return 0;
}

int cmd_enumerate(const Options& o, std::ostream& stdout_stream) {
    GonContext g(o.n, o.k);
    OutputTarget target(o.out, stdout_stream);
    int emitted = 0;
    enumerate_triangulations(g, [&](const KTriangulation& t) {
        target.stream() << to_json(t).dump() << '\n';
        ++emitted;
        return o.limit == 0 || emitted < o.limit;
    });
    return 0;
}

int cmd_stars(const Options& o, std::istream& in, std::ostream& stdout_stream) {
    KTriangulation t = load_triangulation(o.in, in);
    OutputTarget target(o.out, stdout_stream);
    Json stars = Json::array();
    for (const KStar& s : extract_stars(t)) stars.push_back(to_json(s));
    Json doc{{"n", t.ctx().n}, {"k", t.ctx().k}, {"stars", std::move(stars)}};
    target.stream() << doc.dump() << '\n';
    return 0;
}

int cmd_flip(const Options& o, std::istream& in, std::ostream& stdout_stream) {
    KTriangulation t = load_triangulation(o.in, in);
    Edge f = parse_edge_arg(o.edge);
    FlipResult r = flip(t, f);
    OutputTarget target(o.out, stdout_stream);
    Json doc{{"removed", to_json(f)},
             {"inserted", to_json(r.inserted)},
             {"result", to_json(r.result)}};
    target.stream() << doc.dump() << '\n';
    return 0;
}

int cmd_flip_graph(const Options& o, std::ostream& stdout_stream) {
    FlipGraph fg = build_flip_graph(GonContext(o.n, o.k));
    OutputTarget target(o.out, stdout_stream);
    if (o.format == "dot")
        write_flip_graph_dot(fg, target.stream());
    else
        write_flip_graph_json(fg, target.stream());
    return 0;
}

int cmd_diameter(const Options& o, std::ostream& stdout_stream) {
    GonContext g(o.n, o.k);
    FlipGraph fg = build_flip_graph(g);
    std::optional<int> d = diameter(fg);
    DiameterBounds b = diameter_bounds(g);
    OutputTarget target(o.out, stdout_stream);
    Json doc{{"n", o.n},
             {"k", o.k},
             {"nodes", static_cast<int>(fg.nodes.size())},
             {"diameter", d ? Json(*d) : Json(nullptr)},
             {"lower_bound", b.lower ? Json(*b.lower) : Json(nullptr)},
             {"upper_bound", b.upper},
             {"improved_upper_bound", b.improved_upper ? Json(*b.improved_upper) : Json(nullptr)}};
    target.stream() << doc.dump() << '\n';
    return 0;
}

int cmd_verify(const Options& o, std::istream& in, std::ostream& stdout_stream) {
    KTriangulation t = load_triangulation(o.in, in);
    const GonContext& g = t.ctx();
    OutputTarget target(o.out, stdout_stream);
    std::ostream& os = target.stream();
    int failures = 0;
    auto report = [&](const char* name, bool ok, const std::string& detail) {
        os << (ok ? "PASS " : "FAIL ") << name;
        if (!detail.empty()) os << " (" << detail << ")";
        os << '\n';
        if (!ok) ++failures;
    };

    std::vector<KStar> stars = extract_stars(t);
    report("star-count", static_cast<int>(stars.size()) == g.n - 2 * g.k,
           std::to_string(stars.size()) + " stars");

    bool incidence_ok = true;
    try {
        star_incidences(t, stars);
    } catch (const std::exception&) {
        incidence_ok = false;
    }
    report("edge-star-incidence", incidence_ok, "");

    bool side_ok = true;
    for (Edge e : t.all_edges()) {
        if (classify_edge(g, e) == EdgeKind::Irrelevant) continue;
        for (auto [u, v] : {std::pair{e.a, e.b}, std::pair{e.b, e.a}})
            if (stars_on_positive_side(stars, u, v) != ccw_steps(g, v, u) - g.k) side_ok = false;
    }
    report("side-count", side_ok, "");

    if (g.n >= 2 * g.k + 3) {
        std::vector<Edge> ears = k_ears(t);
        StarClassification cls = classify_stars(t);
        bool ears_ok =
            static_cast<int>(ears.size()) == static_cast<int>(cls.internal.size()) + 2 * g.k;
        report("ear-identity", ears_ok,
               std::to_string(ears.size()) + " ears, " + std::to_string(cls.internal.size()) +
                   " internal " + (cls.internal.size() == 1 ? "star" : "stars"));
    } else {
        os << "SKIP ear-identity (needs n >= 2k+3)\n";
    }

    int p = 2 * g.k, q = g.k * (2 * g.k + 1);
    if (q >= 2 * p && g.n > 24) {
        os << "SKIP sparsity (exact route capped at 24 vertices)\n";
    } else {
        report("sparsity", sparsity_check(t, p, q),
               "(" + std::to_string(p) + "," + std::to_string(q) + ")-sparse");
    }

    SurfaceStats s = surface_stats(t);
    report("surface", s.orientable,
           "chi=" + std::to_string(s.chi) + ", boundary=" + std::to_string(s.boundary_components) +
               ", genus=" + std::to_string(s.genus) +
               (s.orientable ? ", orientable" : ", not orientable"));

    return failures == 0 ? 0 : 1;
}

int cmd_decompose(const Options& o, std::istream& in, std::ostream& stdout_stream,
                  std::ostream& err) {
    KTriangulation t = load_triangulation(o.in, in);
    std::optional<std::vector<std::vector<Edge>>> dec = accordion_decomposition(t);
    if (!dec) {
        err << "error: no accordion decomposition: the triangulation has an internal star\n";
        return 1;
    }
    OutputTarget target(o.out, stdout_stream);
    Json accordions = Json::array();
    for (const std::vector<Edge>& chain : *dec) accordions.push_back(edges_to_json(chain));
    Json doc{{"n", t.ctx().n}, {"k", t.ctx().k}, {"accordions", std::move(accordions)}};
    target.stream() << doc.dump() << '\n';
    return 0;
}

int cmd_flatten(const Options& o, std::istream& in, std::ostream& stdout_stream) {
    KTriangulation t = load_triangulation(o.in, in);
    Edge e = parse_edge_arg(o.edge);
    FlattenOutcome outcome = flatten(t, e);
    OutputTarget target(o.out, stdout_stream);
    Json doc{{"result", to_json(outcome.result)},
             {"glued", Json{{"anchor", outcome.glued.anchor},
                            {"edges", edges_to_json(outcome.glued.edges)},
                            {"insert_label", outcome.glued.insert_label}}}};
    target.stream() << doc.dump() << '\n';
    return 0;
}

int cmd_inflate(const Options& o, std::istream& in, std::ostream& stdout_stream) {
    KTriangulation t = load_triangulation(o.in, in);
    std::vector<Edge> edges = parse_edge_list_arg(o.crossing);
    ExternalCrossing x = o.insert_label >= 0
                             ? ExternalCrossing(o.anchor, std::move(edges), o.insert_label)
                             : ExternalCrossing(o.anchor, std::move(edges));
    KTriangulation r = inflate(t, x);
    OutputTarget target(o.out, stdout_stream);
    target.stream() << to_json(r).dump() << '\n';
    return 0;
}

int cmd_surface(const Options& o, std::istream& in, std::ostream& stdout_stream) {
    KTriangulation t = load_triangulation(o.in, in);
    SurfaceStats s = surface_stats(t);
    OutputTarget target(o.out, stdout_stream);
    Json doc{{"n", t.ctx().n},
             {"k", t.ctx().k},
             {"v", s.v},
             {"e", s.e},
             {"f", s.f},
             {"chi", s.chi},
             {"boundary_components", s.boundary_components},
             {"genus", s.genus},
             {"orientable", s.orientable}};
    target.stream() << doc.dump() << '\n';
    return 0;
}

int cmd_rigidity(const Options& o, std::istream& in, std::ostream& stdout_stream) {
    KTriangulation t = load_triangulation(o.in, in);
    const GonContext& g = t.ctx();
    int dim = o.dim > 0 ? o.dim : 2 * g.k;
    int rank = rigidity_rank(t, dim, o.trials);
    int target_rank = rigidity_target_rank(g, dim);
    OutputTarget target(o.out, stdout_stream);
    Json doc{{"n", g.n},   {"k", g.k},       {"dim", dim},
             {"trials", o.trials}, {"rank", rank}, {"target", target_rank}};
    target.stream() << doc.dump() << '\n';
    bool theorem_case = (g.k == 1 || g.k == 2) && dim == 2 * g.k;
    if (!theorem_case) return 3;
    return rank == target_rank ? 0 : 1;
}

int cmd_render(const Options& o, std::istream& in, std::ostream& stdout_stream) {
    KTriangulation t = load_triangulation(o.in, in);
    OutputTarget target(o.out, stdout_stream);
    target.stream() << render_svg(t, o.stars);
    return 0;
}

}  // namespace

int run_cli(const std::vector<std::string>& args, std::istream& in, std::ostream& out,
            std::ostream& err) {
    CLI::App app{"multi-triangulations of a convex n-gon"};
    app.require_subcommand(1);
    Options o;

    auto add_nk = [&](CLI::App* c) {
        c->add_option("--n", o.n, "polygon vertex count")->required();
        c->add_option("--k", o.k, "crossing parameter")->required();
    };
    auto add_in = [&](CLI::App* c) {
        c->add_option("--in", o.in, "triangulation JSON file, - for stdin");
    };
    auto add_out = [&](CLI::App* c) { c->add_option("--out", o.out, "output file, - for stdout"); };

    CLI::App* count = app.add_subcommand("count", "count k-triangulations three ways");
    add_nk(count);
    add_out(count);
    count->add_option("--method", o.method, "restrict to one counting method")
        ->check(CLI::IsMember({"det", "backtrack", "bfs"}));

    CLI::App* enumerate = app.add_subcommand("enumerate", "list k-triangulations as JSON lines");
    add_nk(enumerate);
    add_out(enumerate);
    enumerate->add_option("--limit", o.limit, "stop after this many")
        ->check(CLI::NonNegativeNumber);

    CLI::App* stars_cmd = app.add_subcommand("stars", "report the k-stars of a triangulation");
    add_in(stars_cmd);
    add_out(stars_cmd);

    CLI::App* flip_cmd = app.add_subcommand("flip", "flip one relevant edge");
    add_in(flip_cmd);
    add_out(flip_cmd);
    flip_cmd->add_option("--edge", o.edge, "edge to remove, as a,b")->required();

    CLI::App* graph_cmd = app.add_subcommand("flip-graph", "emit the whole flip graph");
    add_nk(graph_cmd);
    add_out(graph_cmd);
    graph_cmd->add_option("--format", o.format, "json lines or DOT")
        ->check(CLI::IsMember({"json", "dot"}));

    CLI::App* diameter_cmd = app.add_subcommand("diameter", "flip-graph diameter and bounds");
    add_nk(diameter_cmd);
    add_out(diameter_cmd);

    CLI::App* verify_cmd =
        app.add_subcommand("verify", "run the invariant suite on one triangulation");
    add_in(verify_cmd);
    add_out(verify_cmd);

    CLI::App* decompose_cmd =
        app.add_subcommand("decompose", "split the relevant edges into k accordions");
    add_in(decompose_cmd);
    add_out(decompose_cmd);

    CLI::App* flatten_cmd = app.add_subcommand("flatten", "flatten a length-k edge, n -> n-1");
    add_in(flatten_cmd);
    add_out(flatten_cmd);
    flatten_cmd->add_option("--edge", o.edge, "length-k edge, as a,b")->required();

    CLI::App* inflate_cmd =
        app.add_subcommand("inflate", "inflate an external k-crossing, n -> n+1");
    add_in(inflate_cmd);
    add_out(inflate_cmd);
    inflate_cmd->add_option("--crossing", o.crossing, "crossing edges, as a1,b1;a2,b2;...")
        ->required();
    inflate_cmd->add_option("--anchor", o.anchor, "first vertex of the run")->required();
    inflate_cmd->add_option("--insert-label", o.insert_label,
                            "label for the new vertex (defaults to the anchor)");

    CLI::App* surface_cmd =
        app.add_subcommand("surface", "surface statistics of the star complex");
    add_in(surface_cmd);
    add_out(surface_cmd);

    CLI::App* rigidity_cmd =
        app.add_subcommand("rigidity", "rigidity-matrix rank over a prime field");
    add_in(rigidity_cmd);
    add_out(rigidity_cmd);
    rigidity_cmd->add_option("--dim", o.dim, "embedding dimension, default 2k")
        ->check(CLI::PositiveNumber);
    rigidity_cmd->add_option("--trials", o.trials, "random evaluations to take the max over")
        ->check(CLI::PositiveNumber);

    CLI::App* render_cmd = app.add_subcommand("render", "SVG picture of a triangulation");
    add_in(render_cmd);
    add_out(render_cmd);
    render_cmd->add_flag("--stars", o.stars, "overlay the star polygons");

    try {
        std::vector<std::string> reversed(args.rbegin(), args.rend());
        app.parse(std::move(reversed));
    } catch (const CLI::ParseError& e) {
        int code = app.exit(e, out, err);
        return code == 0 ? 0 : 2;
    }

    try {
        if (app.got_subcommand(count)) return cmd_count(o, out);
        if (app.got_subcommand(enumerate)) return cmd_enumerate(o, out);
        if (app.got_subcommand(stars_cmd)) return cmd_stars(o, in, out);
        if (app.got_subcommand(flip_cmd)) return cmd_flip(o, in, out);
        if (app.got_subcommand(graph_cmd)) return cmd_flip_graph(o, out);
        if (app.got_subcommand(diameter_cmd)) return cmd_diameter(o, out);
        if (app.got_subcommand(verify_cmd)) return cmd_verify(o, in, out);
        if (app.got_subcommand(decompose_cmd)) return cmd_decompose(o, in, out, err);
        if (app.got_subcommand(flatten_cmd)) return cmd_flatten(o, in, out);
        if (app.got_subcommand(inflate_cmd)) return cmd_inflate(o, in, out);
        if (app.got_subcommand(surface_cmd)) return cmd_surface(o, in, out);
        if (app.got_subcommand(rigidity_cmd)) return cmd_rigidity(o, in, out);
        if (app.got_subcommand(render_cmd)) return cmd_render(o, in, out);
    } catch (const DocumentError& e) {
        err << "error: " << e.what() << '\n';
        return 2;
    } catch (const std::exception& e) {
        err << "error: " << e.what() << '\n';
        return 1;
    }
    err << "error: no command\n";
    return 2;
}

}  // namespace multitri
