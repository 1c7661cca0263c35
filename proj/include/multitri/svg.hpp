#pragma once

#include <string>

#include "multitri/core.hpp"

namespace multitri {

/// SVG picture of the triangulation on a circle, vertex 0 at the top and
/// labels running counterclockwise. Edge shade reflects the edge kind; with
/// with_stars each star's polygon is overlaid in its own color.
std::string render_svg(const KTriangulation& t, bool with_stars);

}  // namespace multitri
