#pragma once

#include "mrep/limits.hpp"
#include "mrep/representations.hpp"

#include <cstdint>
#include <optional>
#include <vector>

namespace mrep {

/// Segments whose Minkowski sum is the convex hull of a point subset.
struct ZonotopeDecomposition {
  SegmentList segments;
  Point start_sum;                          // sum of the segment start points
  std::vector<std::size_t> subset_indices;  // into the input point list, ascending
};

/// <sum_i l_i1, [l_12 - l_11, ..., l_h2 - l_h1], I_h>_M.
/// Throws EmptyInput for an empty list.
MRep zonotope_from_segments(const SegmentList& segments);

/// 2 * sum_{i < min(m, h)} C(h - 1, i): the vertex count of an
/// m-dimensional zonotope with h generators in general position. Throws
/// InvalidArgument for m = 0, h = 0 or overflow.
std::uint64_t zonotope_vertex_count(std::size_t m, std::size_t h);

/// Exhaustive zonotope recognition for small point sets. The hull vertices
/// must be point symmetric; generator candidates are the distinct edge
/// vectors (oriented lexicographically positive) and subsets of them are
/// tried in increasing size until the subset sums from the lexicographic
/// minimum vertex reproduce the hull exactly. Throws CapExceeded when there
/// are more than limits.max_zonotope_points distinct points.
std::optional<ZonotopeDecomposition> detect_zonotope(const VRep& points,
                                                     const Limits& limits = {});

/// Largest subset (|S| > 2) of the hull vertices that spans a zonotope.
/// Sizes are tried in decreasing order and, within a size, subsets of the
/// sorted hull vertices in lexicographic index order; only point
/// symmetric subsets are handed to detect_zonotope.
std::optional<ZonotopeDecomposition> find_maximal_zonotope_subset(const VRep& points,
                                                                  const Limits& limits = {});

struct Reduction {
  MRep rep;
  /// Set when the zonotope branch fired.
  std::optional<ZonotopeDecomposition> zonotope;
};

/// Builds an M-representation with at most n - 1 basis vectors: the maximal
/// zonotope subset becomes <.., .., I_h>_M and the remaining hull vertices
/// are folded in one at a time (lexicographic order) with convex_hull, each
/// adding a single basis vector. Without such a subset the hull vertices
/// are chained.
Reduction reduce(const VRep& points, const Limits& limits = {});

}  // namespace mrep
