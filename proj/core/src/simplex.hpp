#pragma once

#include "mrep/linalg.hpp"

#include <vector>

namespace mrep::detail {

/// Phase-1 feasibility of { lambda >= 0 : sum lambda_j p_j = x, sum lambda_j = 1 }
/// over exact rationals. Bland's rule guarantees termination on degenerate
/// systems.
bool convex_combination_exists(const std::vector<Point>& points, const Point& x);

}  // namespace mrep::detail
