#pragma once

#include "test_support.hpp"

namespace mrep::test {

/// <(0,0), [(1,0), (-1,-1)], I_2>_Z
inline ZRep parallelogram_p1() {
  return ZRep(pt({0, 0}), BasisMatrix::from_columns(2, {pt({1, 0}), pt({-1, -1})}),
              ExponentMatrix(Block::identity(2)));
}

/// Five-generator Z-rep with a dense exponent pattern. With the default
/// third generator (1/2, 0) it spans a narrower parallelogram than
/// parallelogram_p1; with (1, 0) it spans the same one.
inline ZRep parallelogram_p2(Point third = Point{q(1, 2), q(0)}) {
  const Point h = Point{q(-1, 2), q(-1, 2)};
  return ZRep(pt({0, 0}),
              BasisMatrix::from_columns(2, {h, h, third, h, Point{q(1, 2), q(1, 2)}}),
              ExponentMatrix::from_bits(BitMatrix(3, 5, {1, 0, 0, 1, 0,  //
                                                         0, 1, 0, 0, 1,  //
                                                         0, 0, 1, 1, 1})));
}

inline ZRep parallelogram_p2_fixed() { return parallelogram_p2(pt({1, 0})); }

inline std::vector<Point> parallelogram_vertices() {
  return pts({{-2, -1}, {0, -1}, {0, 1}, {2, 1}});
}

inline std::vector<Point> square_with_apex() {
  return pts({{0, 0}, {0, 2}, {2, 2}, {2, 0}, {1, 3}});
}

/// <(1,2), [(-2,0), (1,-2)], L_2>_M over (0,0), (2,0), (1,2).
inline MRep triangle_chain() { return chain_from_points(VRep(pts({{0, 0}, {2, 0}, {1, 2}}))); }

inline MRep segment(const Point& from, const Point& to) {
  return chain_from_points(VRep({to, from}));
}

}  // namespace mrep::test
