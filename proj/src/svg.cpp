#include "multitri/svg.hpp"

#include <cmath>
#include <cstdio>
#include <numbers>

#include "multitri/stars.hpp"

namespace multitri {

namespace {

constexpr double kSize = 500.0;
constexpr double kCenter = 250.0;
constexpr double kRadius = 200.0;
constexpr double kLabelRadius = 215.0;

constexpr const char* kStarPalette[] = {"#e4572e", "#17bebb", "#ffc914", "#2e282a",
                                        "#76b041", "#9b5de5", "#f15bb5", "#00bbf9"};

struct Point {
    double x, y;
};

Point vertex_point(int n, int j, double radius) {
    double theta = -std::numbers::pi / 2 - 2 * std::numbers::pi * j / n;
    return {kCenter + radius * std::cos(theta), kCenter + radius * std::sin(theta)};
}

std::string fmt(double v) {
    char buf[32];
    std::snprintf(buf, sizeof buf, "%.2f", v);
    return buf;
}

void append_line(std::string& svg, Point p, Point q, const char* color, double width) {
    svg += "  <line x1=\"" + fmt(p.x) + "\" y1=\"" + fmt(p.y) + "\" x2=\"" + fmt(q.x) +
           "\" y2=\"" + fmt(q.y) + "\" stroke=\"" + color + "\" stroke-width=\"" + fmt(width) +
           "\"/>\n";
}

}  // namespace

std::string render_svg(const KTriangulation& t, bool with_stars) {
    const GonContext& g = t.ctx();
    std::string svg;
    svg += "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"" + fmt(kSize) + "\" height=\"" +
           fmt(kSize) + "\" viewBox=\"0 0 " + fmt(kSize) + " " + fmt(kSize) + "\">\n";
    svg += "  <circle cx=\"" + fmt(kCenter) + "\" cy=\"" + fmt(kCenter) + "\" r=\"" +
           fmt(kRadius) + "\" fill=\"none\" stroke=\"#e5e7eb\" stroke-width=\"1.00\"/>\n";

    auto draw_kind = [&](EdgeKind kind, const char* color, double width) {
        for (Edge e : t.all_edges()) {
            if (classify_edge(g, e) != kind) continue;
            append_line(svg, vertex_point(g.n, e.a, kRadius), vertex_point(g.n, e.b, kRadius),
                        color, width);
        }
    };
    draw_kind(EdgeKind::Irrelevant, "#d1d5db", 1.0);
    draw_kind(EdgeKind::Boundary, "#6b7280", 1.4);
    draw_kind(EdgeKind::Relevant, "#1f2937", 1.8);

    if (with_stars) {
        std::vector<KStar> stars = extract_stars(t);
        for (std::size_t i = 0; i < stars.size(); ++i) {
            const char* color = kStarPalette[i % std::size(kStarPalette)];
            std::vector<int> ord = star_order(stars[i]);
            std::string d;
            for (std::size_t j = 0; j < ord.size(); ++j) {
                Point p = vertex_point(g.n, ord[j], kRadius);
                d += (j == 0 ? "M " : "L ") + fmt(p.x) + " " + fmt(p.y) + " ";
            }
            d += "Z";
            svg += "  <path d=\"" + d + "\" fill=\"none\" stroke=\"" + color +
                   "\" stroke-width=\"2.50\" stroke-opacity=\"0.85\"/>\n";
        }
    }

    for (int j = 0; j < g.n; ++j) {
        Point p = vertex_point(g.n, j, kRadius);
        svg += "  <circle cx=\"" + fmt(p.x) + "\" cy=\"" + fmt(p.y) +
               "\" r=\"3.00\" fill=\"#111827\"/>\n";
        Point l = vertex_point(g.n, j, kLabelRadius);
        svg += "  <text x=\"" + fmt(l.x) + "\" y=\"" + fmt(l.y) +
               "\" font-family=\"sans-serif\" font-size=\"12\" text-anchor=\"middle\" "
               "dominant-baseline=\"middle\">" +
               std::to_string(j) + "</text>\n";
    }
    svg += "</svg>\n";
    return svg;
}

}  // namespace multitri
