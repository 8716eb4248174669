#include "test_support.hpp"

#include <algorithm>
#include <set>

namespace mrep::test {

long Rng::integer(long lo, long hi) {
  return std::uniform_int_distribution<long>(lo, hi)(engine_);
}

Rational Rng::rational(long bound, long max_den) {
  return Rational(integer(-bound, bound), integer(1, max_den));
}

Point Rng::point(std::size_t dim, long bound, long max_den) {
  Point p(dim);
  for (auto& x : p) x = rational(bound, max_den);
  return p;
}

std::vector<Point> Rng::distinct_points(std::size_t dim, std::size_t n, long bound) {
  std::set<Point> seen;
  std::vector<Point> out;
  while (out.size() < n) {
    Point p = point(dim, bound);
    if (seen.insert(p).second) out.push_back(std::move(p));
  }
  return out;
}

std::vector<Rational> Rng::alpha(std::size_t p, long lo) {
  std::vector<Rational> a(p);
  for (auto& x : a) {
    switch (integer(0, 3)) {
      case 0: x = 0; break;
      case 1: x = 1; break;
      case 2: x = lo; break;
      default: x = Rational(integer(lo * 6, 6), 6); break;
    }
  }
  return a;
}

MRep Rng::chain(std::size_t dim, std::size_t n) {
  return chain_from_points(VRep(distinct_points(dim, n)));
}

std::vector<Point> Rng::generic_directions(std::size_t dim, std::size_t h) {
  const std::size_t k = std::min(dim, h);
  while (true) {
    std::vector<Point> dirs;
    for (std::size_t i = 0; i < h; ++i) {
      Point g(dim);
      for (auto& x : g) x = integer(-4, 4);
      dirs.push_back(std::move(g));
    }
    bool ok = true;
    for (std::size_t a = 0; ok && a < h; ++a) {
      if (is_zero(dirs[a])) ok = false;
      for (std::size_t b = a + 1; ok && b < h; ++b) {
        if (rank({dirs[a], dirs[b]}) < 2) ok = false;
      }
    }
    std::vector<std::size_t> idx(k);
    for (std::size_t i = 0; i < k; ++i) idx[i] = i;
    while (ok) {
      std::vector<Point> sub;
      for (std::size_t i : idx) sub.push_back(dirs[i]);
      if (rank(sub) != k) ok = false;
      std::size_t pos = k;
      while (pos > 0 && idx[pos - 1] == h - k + pos - 1) --pos;
      if (pos == 0) break;
      ++idx[pos - 1];
      for (std::size_t j = pos; j < k; ++j) idx[j] = idx[j - 1] + 1;
    }
    if (ok) return dirs;
  }
}

Point pt(std::initializer_list<long> coords) {
  Point p;
  for (long c : coords) p.emplace_back(c);
  return p;
}

std::vector<Point> pts(std::initializer_list<std::initializer_list<long>> coords) {
  std::vector<Point> out;
  for (const auto& c : coords) out.push_back(pt(c));
  return out;
}

Rational q(long num, long den) { return Rational(num, den); }

namespace {

Rational cross(const Point& o, const Point& a, const Point& b) {
  return (a[0] - o[0]) * (b[1] - o[1]) - (a[1] - o[1]) * (b[0] - o[0]);
}

template <class Rep>
std::vector<Point> corners(const Rep& rep, const Point& origin, const BasisMatrix& basis,
                           bool symmetric) {
  const BitMatrix e = rep.exponents().materialize();
  const std::size_t p = e.rows;
  const std::vector<Point> cols = basis.columns();
  std::vector<Point> out;
  for (std::uint64_t mask = 0; mask < (std::uint64_t{1} << p); ++mask) {
    Point x = origin;
    for (std::size_t i = 0; i < cols.size(); ++i) {
      Rational coef = 1;
      for (std::size_t k = 0; k < p; ++k) {
        if (!e(k, i)) continue;
        const bool high = (mask >> k) & 1;
        coef *= high ? Rational(1) : Rational(symmetric ? -1 : 0);
      }
      for (std::size_t r = 0; r < x.size(); ++r) x[r] += coef * cols[i][r];
    }
    out.push_back(std::move(x));
  }
  return sorted(std::move(out));
}

}  // namespace

std::vector<Point> planar_hull(std::vector<Point> points) {
  points = sorted(std::move(points));
  if (points.size() < 3) return points;
  std::vector<Point> hull(2 * points.size());
  std::size_t k = 0;
  for (const Point& p : points) {
    while (k >= 2 && cross(hull[k - 2], hull[k - 1], p) <= 0) --k;
    hull[k++] = p;
  }
  for (std::size_t i = points.size() - 1, t = k + 1; i > 0; --i) {
    const Point& p = points[i - 1];
    while (k >= t && cross(hull[k - 2], hull[k - 1], p) <= 0) --k;
    hull[k++] = p;
  }
  hull.resize(k - 1);
  return sorted(std::move(hull));
}

std::vector<Point> brute_corners(const MRep& rep) {
  return corners(rep, rep.start(), rep.basis(), false);
}

std::vector<Point> brute_corners(const ZRep& rep) {
  return corners(rep, rep.center(), rep.generators(), true);
}

std::vector<Point> sorted(std::vector<Point> points) {
  std::sort(points.begin(), points.end());
  points.erase(std::unique(points.begin(), points.end()), points.end());
  return points;
}

}  // namespace mrep::test
