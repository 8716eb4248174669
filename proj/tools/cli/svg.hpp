#pragma once

#include <mrep/linalg.hpp>

#include <string>
#include <vector>

namespace mrep::cli {

/// Orders planar points counter-clockwise around their centroid, starting
/// from the direction of the positive x axis. Exact comparisons.
std::vector<Point> angular_order(std::vector<Point> points);

/// Standalone SVG 1.1 document showing the filled polygon through the given
/// (2-D, hull) vertices plus the coordinate axes. The viewBox is the
/// bounding box padded by 10%. Coordinates become doubles only here.
std::string render_polygon_svg(const std::vector<Point>& hull_vertices);

}  // namespace mrep::cli
