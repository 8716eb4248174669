#pragma once

#include "mrep/limits.hpp"
#include "mrep/representations.hpp"

#include <optional>
#include <vector>

namespace mrep {

/// Brute-force, exact convex geometry at desk scale. Everything here is
/// exponential in the worst case and guarded by Limits.

struct HullResult {
  /// Distinct hull vertices in lexicographic order.
  std::vector<Point> vertices;
  /// One flag per input point: true iff the point is a hull vertex.
  std::vector<bool> is_vertex;
};

/// Is x a convex combination of the points? Decided by an exact phase-1
/// simplex with Bland's rule.
bool contains_point(const VRep& points, const Point& x, const Limits& limits = {});

/// Same question answered by Caratheodory enumeration over affinely
/// independent subsets of at most d + 1 points. Intended as a cross-check
/// for n <= 10.
bool contains_point_caratheodory(const VRep& points, const Point& x);

/// v is a vertex iff it is not a convex combination of the other distinct
/// points.
HullResult hull_vertices(const VRep& points, const Limits& limits = {});

/// Compares sorted hull vertices of the candidate vertex sets.
bool sets_equal(const Representation& a, const Representation& b, const Limits& limits = {});

/// Centroid of the hull vertices if the vertex set is invariant under
/// x -> 2c - x, nothing otherwise.
std::optional<Point> point_symmetry_center(const VRep& points, const Limits& limits = {});

/// Hull vertices of all pairwise sums.
VRep minkowski_oracle(const VRep& a, const VRep& b, const Limits& limits = {});

/// Hull vertices of the union.
VRep convex_hull_oracle(const VRep& a, const VRep& b, const Limits& limits = {});

}  // namespace mrep
