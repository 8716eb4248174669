#include "mrep/zonotope.hpp"

#include "mrep/error.hpp"
#include "mrep/ops.hpp"
#include "mrep/oracle.hpp"
#include "simplex.hpp"

#include <algorithm>
#include <limits>
#include <string>

namespace mrep {

namespace {

Rational dot(const Point& a, const Point& b) {
  Rational acc = 0;
  for (std::size_t i = 0; i < a.size(); ++i) acc += a[i] * b[i];
  return acc;
}

// [hull[i], hull[j]] is an edge iff, after projecting along the segment,
// the common image of its endpoints is not in the hull of the other images.
bool is_edge(const std::vector<Point>& hull, std::size_t i, std::size_t j) {
  const Point g = hull[j] - hull[i];
  const Rational gg = dot(g, g);
  auto project = [&](const Point& x) {
    Point out = x;
    axpy(out, -dot(x, g) / gg, g);
    return out;
  };
  std::vector<Point> others;
  for (std::size_t k = 0; k < hull.size(); ++k) {
    if (k != i && k != j) others.push_back(project(hull[k]));
  }
  if (others.empty()) return true;
  return !detail::convex_combination_exists(others, project(hull[i]));
}

// Calls visit(indices) for each k-combination of [0, n) in lexicographic
// order until it returns true.
template <typename Visit>
bool for_each_combination(std::size_t n, std::size_t k, Visit&& visit) {
  if (k > n) return false;
  std::vector<std::size_t> idx(k);
  for (std::size_t i = 0; i < k; ++i) idx[i] = i;
  while (true) {
    if (visit(idx)) return true;
    std::size_t pos = k;
    while (pos > 0 && idx[pos - 1] == n - k + pos - 1) --pos;
    if (pos == 0) return false;
    ++idx[pos - 1];
    for (std::size_t i = pos; i < k; ++i) idx[i] = idx[i - 1] + 1;
  }
}

std::vector<std::size_t> indices_in(const VRep& points, const std::vector<Point>& subset) {
  std::vector<std::size_t> out;
  for (const Point& s : subset) {
    auto it = std::find(points.points().begin(), points.points().end(), s);
    out.push_back(static_cast<std::size_t>(it - points.points().begin()));
  }
  std::sort(out.begin(), out.end());
  return out;
}

bool symmetric_subset(const std::vector<Point>& sorted_subset) {
  Point sum(sorted_subset.front().size());
  for (const Point& p : sorted_subset) sum = sum + p;
  // x -> 2c - x  with  c = sum / n  is  x -> (2 sum - n x) / n
  const Rational n(static_cast<long>(sorted_subset.size()));
  for (const Point& p : sorted_subset) {
    Point mirrored = (Rational(2) / n) * sum - p;
    if (!std::binary_search(sorted_subset.begin(), sorted_subset.end(), mirrored)) return false;
  }
  return true;
}

}  // namespace

MRep zonotope_from_segments(const SegmentList& segments) {
  if (segments.empty()) throw Error(ErrorKind::EmptyInput, "no segments");
  const std::size_t d = segments.dim();
  Point start(d);
  std::vector<Point> directions;
  directions.reserve(segments.size());
  for (const Segment& s : segments.segments()) {
    start = start + s.from;
    directions.push_back(s.to - s.from);
  }
  return MRep(std::move(start), BasisMatrix::from_columns(d, directions),
              ExponentMatrix(Block::identity(segments.size())));
}

std::uint64_t zonotope_vertex_count(std::size_t m, std::size_t h) {
  if (m == 0 || h == 0) {
    throw Error(ErrorKind::InvalidArgument, "zonotope vertex count needs m >= 1 and h >= 1");
  }
  using Integer = boost::multiprecision::mpz_int;
  Integer binomial = 1;  // C(h - 1, 0)
  Integer total = 0;
  const std::size_t terms = std::min(m, h);
  for (std::size_t i = 0; i < terms; ++i) {
    total += binomial;
    binomial = binomial * static_cast<unsigned long>(h - 1 - i) / static_cast<unsigned long>(i + 1);
  }
  total *= 2;
  if (total > std::numeric_limits<std::uint64_t>::max()) {
    throw Error(ErrorKind::InvalidArgument, "zonotope vertex count overflows 64 bits");
  }
  return total.convert_to<std::uint64_t>();
}

std::optional<ZonotopeDecomposition> detect_zonotope(const VRep& points, const Limits& limits) {
  {
    auto unique = points.points();
    sort_unique(unique);
    if (unique.size() > limits.max_zonotope_points) {
      throw Error(ErrorKind::CapExceeded, std::to_string(unique.size()) +
                                              " points exceed the zonotope detection cap of " +
                                              std::to_string(limits.max_zonotope_points));
    }
  }
  const auto hull = hull_vertices(points, limits).vertices;
  const std::size_t n = hull.size();
  if (n < 2 || !symmetric_subset(hull)) return std::nullopt;

  std::vector<Point> candidates;
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = i + 1; j < n; ++j) {
      if (is_edge(hull, i, j)) candidates.push_back(hull[j] - hull[i]);
    }
  }
  sort_unique(candidates);

  const Point& lowest = hull.front();
  const Point span = hull.back() - lowest;
  const std::size_t max_generators = std::min(candidates.size(), n / 2);

  std::optional<std::vector<Point>> generators;
  for (std::size_t k = 1; k <= max_generators && !generators; ++k) {
    if (k > limits.max_factors) {
      throw Error(ErrorKind::CapExceeded, "zonotope detection needs 2^" + std::to_string(k) +
                                              " subset sums");
    }
    Limits local = limits;
    local.max_oracle_points = std::max(limits.max_oracle_points, std::size_t{1} << k);

    for_each_combination(candidates.size(), k, [&](const std::vector<std::size_t>& pick) {
      Point sum(lowest.size());
      for (std::size_t c : pick) sum = sum + candidates[c];
      if (sum != span) return false;

      std::vector<Point> corners;
      corners.reserve(std::size_t{1} << k);
      for (std::size_t mask = 0; mask < (std::size_t{1} << k); ++mask) {
        Point x = lowest;
        for (std::size_t b = 0; b < k; ++b) {
          if (mask & (std::size_t{1} << b)) x = x + candidates[pick[b]];
        }
        corners.push_back(std::move(x));
      }
      sort_unique(corners);
      for (const Point& v : hull) {
        if (!std::binary_search(corners.begin(), corners.end(), v)) return false;
      }
      if (hull_vertices(VRep(corners), local).vertices != hull) return false;

      generators.emplace();
      for (std::size_t c : pick) generators->push_back(candidates[c]);
      return true;
    });
  }
  if (!generators) return std::nullopt;

  std::vector<Segment> segments;
  const Point origin(lowest.size());
  for (std::size_t i = 0; i < generators->size(); ++i) {
    const Point& from = i == 0 ? lowest : origin;
    segments.push_back({from, from + (*generators)[i]});
  }
  return ZonotopeDecomposition{SegmentList(std::move(segments)), lowest,
                               indices_in(points, hull)};
}

std::optional<ZonotopeDecomposition> find_maximal_zonotope_subset(const VRep& points,
                                                                  const Limits& limits) {
  const auto hull = hull_vertices(points, limits).vertices;
  const std::size_t n = hull.size();
  if (n > limits.max_zonotope_points) {
    throw Error(ErrorKind::CapExceeded, std::to_string(n) +
                                            " hull vertices exceed the zonotope subset cap of " +
                                            std::to_string(limits.max_zonotope_points));
  }

  // A point symmetric set of vertices in convex position has even size.
  for (std::size_t size = n - n % 2; size >= 4; size -= 2) {
    std::optional<ZonotopeDecomposition> found;
    for_each_combination(n, size, [&](const std::vector<std::size_t>& pick) {
      std::vector<Point> subset;
      subset.reserve(size);
      for (std::size_t i : pick) subset.push_back(hull[i]);
      if (!symmetric_subset(subset)) return false;
      auto decomposition = detect_zonotope(VRep(subset), limits);
      if (!decomposition) return false;
      decomposition->subset_indices = indices_in(points, subset);
      found = std::move(decomposition);
      return true;
    });
    if (found) return found;
  }
  return std::nullopt;
}

Reduction reduce(const VRep& points, const Limits& limits) {
  const auto hull = hull_vertices(points, limits).vertices;
  auto zonotope = find_maximal_zonotope_subset(points, limits);
  if (!zonotope) return {chain_from_points(VRep(hull)), std::nullopt};

  std::vector<Point> members;
  for (std::size_t i : zonotope->subset_indices) members.push_back(points[i]);
  std::sort(members.begin(), members.end());

  MRep rep = zonotope_from_segments(zonotope->segments);
  for (const Point& v : hull) {
    if (std::binary_search(members.begin(), members.end(), v)) continue;
    rep = convex_hull(rep, MRep(v));
  }
  return {std::move(rep), std::move(zonotope)};
}

}  // namespace mrep
