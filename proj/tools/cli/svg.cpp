#include "svg.hpp"

#include <mrep/error.hpp>

#include <algorithm>
#include <cstdio>
#include <sstream>

namespace mrep::cli {

namespace {

constexpr const char* kFill = "#8fb8de";
constexpr const char* kStroke = "#1f4e79";
constexpr const char* kAxis = "#7f7f7f";

std::string num(double x) {
  if (x == 0) x = 0;  // no "-0"
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.6g", x);
  return buf;
}

// 0 for angles in [0, pi), 1 for [pi, 2 pi).
int half_plane(const Point& r) { return (r[1] > 0 || (r[1] == 0 && r[0] > 0)) ? 0 : 1; }

}  // namespace

std::vector<Point> angular_order(std::vector<Point> points) {
  if (points.empty()) return points;
  for (const Point& p : points) {
    if (p.size() != 2) throw Error(ErrorKind::DimensionMismatch, "angular order needs 2-D points");
  }
  Point centroid(2);
  for (const Point& p : points) centroid = centroid + p;
  centroid = Rational(1, static_cast<long>(points.size())) * centroid;

  std::sort(points.begin(), points.end(), [&](const Point& a, const Point& b) {
    const Point ra = a - centroid;
    const Point rb = b - centroid;
    const int ha = half_plane(ra);
    const int hb = half_plane(rb);
    if (ha != hb) return ha < hb;
    const Rational cross = ra[0] * rb[1] - ra[1] * rb[0];
    if (cross != 0) return cross > 0;
    return a < b;
  });
  return points;
}

std::string render_polygon_svg(const std::vector<Point>& hull_vertices) {
  if (hull_vertices.empty()) throw Error(ErrorKind::EmptyInput, "nothing to plot");
  const auto ordered = angular_order(hull_vertices);

  double min_x = to_double(ordered.front()[0]);
  double max_x = min_x;
  double min_y = to_double(ordered.front()[1]);
  double max_y = min_y;
  for (const Point& p : ordered) {
    min_x = std::min(min_x, to_double(p[0]));
    max_x = std::max(max_x, to_double(p[0]));
    min_y = std::min(min_y, to_double(p[1]));
    max_y = std::max(max_y, to_double(p[1]));
  }
  const double width = std::max(max_x - min_x, 1e-9);
  const double height = std::max(max_y - min_y, 1e-9);
  const double pad_x = std::max(0.1 * width, 0.1 * height);
  const double pad_y = std::max(0.1 * height, 0.1 * width);
  const double vx = min_x - pad_x;
  const double vw = width + 2 * pad_x;
  // SVG grows downwards; y is flipped so the plot reads like a textbook.
  const double vy = -(max_y + pad_y);
  const double vh = height + 2 * pad_y;
  const double stroke = 0.005 * std::max(vw, vh);

  std::ostringstream svg;
  svg << "<?xml version=\"1.0\" encoding=\"UTF-8\"?>\n"
      << "<svg xmlns=\"http://www.w3.org/2000/svg\" version=\"1.1\" viewBox=\"" << num(vx) << ' '
      << num(vy) << ' ' << num(vw) << ' ' << num(vh) << "\" width=\"400\" height=\""
      << num(400.0 * vh / vw) << "\">\n";
  svg << "  <line x1=\"" << num(vx) << "\" y1=\"0\" x2=\"" << num(vx + vw) << "\" y2=\"0\" stroke=\""
      << kAxis << "\" stroke-width=\"" << num(stroke) << "\"/>\n";
  svg << "  <line x1=\"0\" y1=\"" << num(vy) << "\" x2=\"0\" y2=\"" << num(vy + vh) << "\" stroke=\""
      << kAxis << "\" stroke-width=\"" << num(stroke) << "\"/>\n";
  svg << "  <polygon points=\"";
  for (std::size_t i = 0; i < ordered.size(); ++i) {
    if (i > 0) svg << ' ';
    svg << num(to_double(ordered[i][0])) << ',' << num(-to_double(ordered[i][1]));
  }
  svg << "\" fill=\"" << kFill << "\" stroke=\"" << kStroke << "\" stroke-width=\""
      << num(2 * stroke) << "\"/>\n";
  svg << "</svg>\n";
  return svg.str();
}

}  // namespace mrep::cli
