#include "mrep/oracle.hpp"

#include "mrep/error.hpp"
#include "mrep/ops.hpp"
#include "simplex.hpp"

#include <algorithm>
#include <string>

namespace mrep {

namespace {

void require_oracle_caps(std::size_t points, std::size_t dim, const Limits& limits) {
  if (points > limits.max_oracle_points) {
    throw Error(ErrorKind::CapExceeded, std::to_string(points) +
                                            " distinct points exceed the oracle cap of " +
                                            std::to_string(limits.max_oracle_points));
  }
  if (dim > limits.max_oracle_dimension) {
    throw Error(ErrorKind::CapExceeded, "dimension " + std::to_string(dim) +
                                            " exceeds the oracle cap of " +
                                            std::to_string(limits.max_oracle_dimension));
  }
}

std::vector<Point> distinct(const VRep& v) {
  auto points = v.points();
  sort_unique(points);
  return points;
}

// Solves the (d+1) x k barycentric system for an affinely independent
// subset; nothing if the subset is dependent or x is off its affine hull.
std::optional<std::vector<Rational>> barycentric(const std::vector<const Point*>& subset,
                                                 const Point& x) {
  const std::size_t d = x.size();
  const std::size_t k = subset.size();
  std::vector<std::vector<Rational>> aug(d + 1, std::vector<Rational>(k + 1));
  for (std::size_t i = 0; i < d; ++i) {
    for (std::size_t j = 0; j < k; ++j) aug[i][j] = (*subset[j])[i];
    aug[i][k] = x[i];
  }
  for (std::size_t j = 0; j < k; ++j) aug[d][j] = 1;
  aug[d][k] = 1;

  std::size_t row = 0;
  std::vector<std::size_t> pivot_col;
  for (std::size_t c = 0; c < k; ++c) {
    std::size_t p = row;
    while (p < aug.size() && aug[p][c] == 0) ++p;
    if (p == aug.size()) return std::nullopt;  // dependent columns
    std::swap(aug[row], aug[p]);
    const Rational inv = 1 / aug[row][c];
    for (auto& v : aug[row]) v *= inv;
    for (std::size_t i = 0; i < aug.size(); ++i) {
      if (i == row || aug[i][c] == 0) continue;
      const Rational f = aug[i][c];
      for (std::size_t j = c; j <= k; ++j) aug[i][j] -= f * aug[row][j];
    }
    ++row;
  }
  for (std::size_t i = row; i < aug.size(); ++i) {
    if (aug[i][k] != 0) return std::nullopt;  // inconsistent
  }
  std::vector<Rational> lambda(k);
  for (std::size_t j = 0; j < k; ++j) lambda[j] = aug[j][k];
  return lambda;
}

}  // namespace

bool contains_point(const VRep& points, const Point& x, const Limits& limits) {
  if (x.size() != points.dim()) {
    throw Error(ErrorKind::DimensionMismatch, "query point of dimension " +
                                                  std::to_string(x.size()) + " against " +
                                                  std::to_string(points.dim()));
  }
  const auto unique = distinct(points);
  require_oracle_caps(unique.size(), points.dim(), limits);
  if (std::binary_search(unique.begin(), unique.end(), x)) return true;
  return detail::convex_combination_exists(unique, x);
}

bool contains_point_caratheodory(const VRep& points, const Point& x) {
  if (x.size() != points.dim()) {
    throw Error(ErrorKind::DimensionMismatch, "query point dimension differs");
  }
  const auto unique = distinct(points);
  const std::size_t n = unique.size();
  const std::size_t max_size = std::min(n, x.size() + 1);
  for (std::size_t size = 1; size <= max_size; ++size) {
    std::vector<bool> choose(n, false);
    std::fill(choose.begin(), choose.begin() + static_cast<std::ptrdiff_t>(size), true);
    do {
      std::vector<const Point*> subset;
      for (std::size_t i = 0; i < n; ++i) {
        if (choose[i]) subset.push_back(&unique[i]);
      }
      if (auto lambda = barycentric(subset, x)) {
        if (std::all_of(lambda->begin(), lambda->end(), [](const Rational& l) { return l >= 0; })) {
          return true;
        }
      }
    } while (std::prev_permutation(choose.begin(), choose.end()));
  }
  return false;
}

HullResult hull_vertices(const VRep& points, const Limits& limits) {
  const auto unique = distinct(points);
  require_oracle_caps(unique.size(), points.dim(), limits);

  HullResult result;
  std::vector<Point> others;
  others.reserve(unique.size());
  for (std::size_t i = 0; i < unique.size(); ++i) {
    others.clear();
    for (std::size_t j = 0; j < unique.size(); ++j) {
      if (j != i) others.push_back(unique[j]);
    }
    if (!detail::convex_combination_exists(others, unique[i])) {
      result.vertices.push_back(unique[i]);
    }
  }
  result.is_vertex.reserve(points.size());
  for (const Point& p : points.points()) {
    result.is_vertex.push_back(
        std::binary_search(result.vertices.begin(), result.vertices.end(), p));
  }
  return result;
}

bool sets_equal(const Representation& a, const Representation& b, const Limits& limits) {
  if (dimension(a) != dimension(b)) {
    throw Error(ErrorKind::DimensionMismatch, "comparing sets in dimensions " +
                                                  std::to_string(dimension(a)) + " and " +
                                                  std::to_string(dimension(b)));
  }
  const auto hull_a = hull_vertices(candidate_vertices(a, limits), limits).vertices;
  const auto hull_b = hull_vertices(candidate_vertices(b, limits), limits).vertices;
  return hull_a == hull_b;
}

std::optional<Point> point_symmetry_center(const VRep& points, const Limits& limits) {
  const auto hull = hull_vertices(points, limits).vertices;
  Point center(points.dim());
  for (const Point& v : hull) center = center + v;
  center = Rational(1, static_cast<long>(hull.size())) * center;
  for (const Point& v : hull) {
    const Point mirrored = Rational(2) * center - v;
    if (!std::binary_search(hull.begin(), hull.end(), mirrored)) return std::nullopt;
  }
  return center;
}

VRep minkowski_oracle(const VRep& a, const VRep& b, const Limits& limits) {
  if (a.dim() != b.dim()) throw Error(ErrorKind::DimensionMismatch, "Minkowski oracle dimensions");
  const auto ha = hull_vertices(a, limits).vertices;
  const auto hb = hull_vertices(b, limits).vertices;
  std::vector<Point> sums;
  sums.reserve(ha.size() * hb.size());
  for (const Point& p : ha) {
    for (const Point& q : hb) sums.push_back(p + q);
  }
  return VRep(hull_vertices(VRep(std::move(sums)), limits).vertices);
}

VRep convex_hull_oracle(const VRep& a, const VRep& b, const Limits& limits) {
  if (a.dim() != b.dim()) throw Error(ErrorKind::DimensionMismatch, "hull oracle dimensions");
  std::vector<Point> all = a.points();
  all.insert(all.end(), b.points().begin(), b.points().end());
  return VRep(hull_vertices(VRep(std::move(all)), limits).vertices);
}

}  // namespace mrep
