#pragma once

#include "mrep/basis_matrix.hpp"
#include "mrep/exponent_matrix.hpp"
#include "mrep/linalg.hpp"

#include <string_view>
#include <utility>
#include <variant>
#include <vector>

namespace mrep {

/// Point list whose convex hull is the polytope. Points need not be hull
/// vertices and may repeat.
class VRep {
 public:
  /// Throws EmptyInput for an empty list, DimensionMismatch for ragged points.
  explicit VRep(std::vector<Point> points);

  std::size_t dim() const noexcept { return dim_; }
  std::size_t size() const noexcept { return points_.size(); }
  const std::vector<Point>& points() const noexcept { return points_; }
  const Point& operator[](std::size_t i) const { return points_[i]; }

  friend bool operator==(const VRep&, const VRep&) = default;

 private:
  std::size_t dim_ = 0;
  std::vector<Point> points_;
};

/// <s, B, E>_M: { s + sum_i (prod_k a_k^E(k,i)) B(:,i) | a in [0,1]^p }.
class MRep {
 public:
  /// Single point <s, [], []>_M.
  explicit MRep(Point start);
  MRep(Point start, BasisMatrix basis, ExponentMatrix exponents);

  std::size_t dim() const noexcept { return start_.size(); }
  std::size_t basis_count() const noexcept { return basis_.cols(); }
  std::size_t factor_count() const noexcept { return exponents_.rows(); }

  const Point& start() const noexcept { return start_; }
  const BasisMatrix& basis() const noexcept { return basis_; }
  const ExponentMatrix& exponents() const noexcept { return exponents_; }

  /// Exponents are a single LowerTriOnes(h) tile.
  bool is_chain_form() const noexcept { return exponents_.is_lower_triangular(); }

  friend bool operator==(const MRep&, const MRep&) = default;

 private:
  Point start_;
  BasisMatrix basis_;
  ExponentMatrix exponents_;
};

/// <s, B, e>_C: a chain form with implied exponents L_h. The end point is
/// always the all-ones evaluation s + sum_i B(:,i).
class CRep {
 public:
  /// Computes the end point from start and basis.
  CRep(Point start, BasisMatrix basis);
  /// Throws InvalidArgument when end != start + sum of basis columns.
  CRep(Point start, BasisMatrix basis, Point end);

  std::size_t dim() const noexcept { return start_.size(); }
  std::size_t basis_count() const noexcept { return basis_.cols(); }

  const Point& start() const noexcept { return start_; }
  const BasisMatrix& basis() const noexcept { return basis_; }
  const Point& end() const noexcept { return end_; }

  friend bool operator==(const CRep&, const CRep&) = default;

 private:
  struct Trusted {};
  // End point supplied by an operation that already knows it; skips the
  // O(hd) column sum.
  CRep(Point start, BasisMatrix basis, Point end, Trusted)
      : start_(std::move(start)), basis_(std::move(basis)), end_(std::move(end)) {}
  friend CRep convex_hull(const CRep& a, const CRep& b);

  Point start_;
  BasisMatrix basis_;
  Point end_;
};

/// <c, G, E>_Z: same algebra as MRep with factors ranging over [-1,1].
class ZRep {
 public:
  explicit ZRep(Point center);
  ZRep(Point center, BasisMatrix generators, ExponentMatrix exponents);

  std::size_t dim() const noexcept { return center_.size(); }
  std::size_t generator_count() const noexcept { return generators_.cols(); }
  std::size_t factor_count() const noexcept { return exponents_.rows(); }

  const Point& center() const noexcept { return center_; }
  const BasisMatrix& generators() const noexcept { return generators_; }
  const ExponentMatrix& exponents() const noexcept { return exponents_; }

  /// Exponents expand to the identity I_h.
  bool is_zonotope() const;

  friend bool operator==(const ZRep&, const ZRep&) = default;

 private:
  Point center_;
  BasisMatrix generators_;
  ExponentMatrix exponents_;
};

struct Segment {
  Point from;
  Point to;

  friend bool operator==(const Segment&, const Segment&) = default;
};

/// Non-degenerate line segments of a common dimension.
class SegmentList {
 public:
  SegmentList() = default;
  explicit SegmentList(std::vector<Segment> segments);

  bool empty() const noexcept { return segments_.empty(); }
  std::size_t size() const noexcept { return segments_.size(); }
  std::size_t dim() const noexcept { return segments_.empty() ? 0 : segments_.front().from.size(); }
  const std::vector<Segment>& segments() const noexcept { return segments_; }
  const Segment& operator[](std::size_t i) const { return segments_[i]; }

  friend bool operator==(const SegmentList&, const SegmentList&) = default;

 private:
  std::vector<Segment> segments_;
};

using Representation = std::variant<VRep, MRep, CRep, ZRep>;

/// "vrep", "mrep", "crep" or "zrep".
std::string_view kind_name(const Representation& rep);

std::size_t dimension(const Representation& rep);

}  // namespace mrep
