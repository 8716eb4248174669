#include "support/fixtures.hpp"

#include <mrep/error.hpp>
#include <mrep/oracle.hpp>
#include <mrep/zonotope.hpp>

#include <gtest/gtest.h>

namespace mrep {
namespace {

using namespace mrep::test;

std::vector<Point> regenerated_hull(const ZonotopeDecomposition& z) {
  return hull_vertices(candidate_vertices(zonotope_from_segments(z.segments))).vertices;
}

TEST(ZonotopeFromSegments, Square) {
  const SegmentList s({{pt({0, 0}), pt({0, 2})}, {pt({0, 0}), pt({2, 0})}});
  const MRep z = zonotope_from_segments(s);
  EXPECT_EQ(z.start(), pt({0, 0}));
  EXPECT_EQ(z.basis().columns(), (std::vector<Point>{pt({0, 2}), pt({2, 0})}));
  EXPECT_EQ(z.exponents().materialize(), BitMatrix::identity(2));
  EXPECT_EQ(candidate_vertices(z).points(), pts({{0, 0}, {0, 2}, {2, 0}, {2, 2}}));
}

TEST(ZonotopeFromSegments, SegmentAndCube) {
  const MRep one = zonotope_from_segments(SegmentList({{pt({1, 1}), pt({3, 2})}}));
  EXPECT_EQ(one.basis_count(), 1u);
  EXPECT_EQ(candidate_vertices(one).points(), pts({{1, 1}, {3, 2}}));

  const MRep cube = zonotope_from_segments(SegmentList({{pt({0, 0, 0}), pt({1, 0, 0})},
                                                        {pt({0, 0, 0}), pt({0, 1, 0})},
                                                        {pt({0, 0, 0}), pt({0, 0, 1})}}));
  EXPECT_EQ(candidate_vertices(cube).size(), 8u);
  EXPECT_EQ(hull_vertices(candidate_vertices(cube)).vertices.size(), 8u);

  EXPECT_THROW(zonotope_from_segments(SegmentList()), Error);
}

TEST(ZonotopeVertexCount, ClosedForm) {
  EXPECT_EQ(zonotope_vertex_count(3, 3), 8u);
  for (std::size_t h = 1; h <= 10; ++h) EXPECT_EQ(zonotope_vertex_count(2, h), 2 * h);
  EXPECT_EQ(zonotope_vertex_count(1, 1), 2u);
  EXPECT_EQ(zonotope_vertex_count(3, 4), 14u);
  EXPECT_EQ(zonotope_vertex_count(5, 3), 8u);
  EXPECT_THROW(zonotope_vertex_count(0, 3), Error);
  EXPECT_THROW(zonotope_vertex_count(2, 0), Error);
  EXPECT_THROW(zonotope_vertex_count(100, 100), Error);
}

TEST(DetectZonotope, Square) {
  const auto z = detect_zonotope(VRep(pts({{0, 0}, {0, 2}, {2, 2}, {2, 0}})));
  ASSERT_TRUE(z.has_value());
  ASSERT_EQ(z->segments.size(), 2u);
  std::vector<Point> dirs;
  for (const Segment& s : z->segments.segments()) dirs.push_back(s.to - s.from);
  EXPECT_EQ(sorted(dirs), pts({{0, 2}, {2, 0}}));
  EXPECT_EQ(z->start_sum, pt({0, 0}));
  EXPECT_EQ(regenerated_hull(*z), pts({{0, 0}, {0, 2}, {2, 0}, {2, 2}}));
}

TEST(DetectZonotope, RejectsTriangleAndAsymmetricSets) {
  EXPECT_FALSE(detect_zonotope(VRep(pts({{0, 0}, {2, 0}, {1, 2}}))).has_value());
  EXPECT_FALSE(detect_zonotope(VRep(square_with_apex())).has_value());
}

TEST(DetectZonotope, HexagonFromThreeSegments) {
  const SegmentList s(
      {{pt({0, 0}), pt({2, 0})}, {pt({0, 0}), pt({1, 2})}, {pt({0, 0}), pt({-1, 1})}});
  const auto hull = hull_vertices(candidate_vertices(zonotope_from_segments(s))).vertices;
  ASSERT_EQ(hull.size(), 6u);
  const auto z = detect_zonotope(VRep(hull));
  ASSERT_TRUE(z.has_value());
  ASSERT_EQ(z->segments.size(), 3u);
  std::vector<Point> dirs;
  for (const Segment& seg : z->segments.segments()) dirs.push_back(seg.to - seg.from);
  // Recovered up to sign, oriented lexicographically positive.
  EXPECT_EQ(sorted(dirs), pts({{1, -1}, {1, 2}, {2, 0}}));
  EXPECT_EQ(regenerated_hull(*z), hull);
}

TEST(DetectZonotope, InteriorPointsAreIgnored) {
  const auto z = detect_zonotope(VRep(pts({{0, 0}, {0, 2}, {2, 2}, {2, 0}, {1, 1}})));
  ASSERT_TRUE(z.has_value());
  EXPECT_EQ(z->segments.size(), 2u);
}

TEST(DetectZonotope, RespectsCap) {
  Limits tight;
  tight.max_zonotope_points = 3;
  try {
    detect_zonotope(VRep(pts({{0, 0}, {0, 2}, {2, 2}, {2, 0}})), tight);
    ADD_FAILURE() << "cap not enforced";
  } catch (const Error& e) {
    EXPECT_EQ(e.kind(), ErrorKind::CapExceeded);
  }
}

TEST(MaximalSubset, SquareWithApex) {
  const auto z = find_maximal_zonotope_subset(VRep(square_with_apex()));
  ASSERT_TRUE(z.has_value());
  EXPECT_EQ(z->segments.size(), 2u);
  EXPECT_EQ(regenerated_hull(*z), pts({{0, 0}, {0, 2}, {2, 0}, {2, 2}}));
  EXPECT_FALSE(find_maximal_zonotope_subset(VRep(pts({{0, 0}, {2, 0}, {1, 2}}))).has_value());
}

TEST(MaximalSubset, StackedSquaresPickTheLargerOne) {
  // Large square plus a small square stacked on its top edge, offset so the
  // union of the eight corners has no point symmetry.
  const auto points = pts({{0, 0}, {4, 0}, {4, 4}, {0, 4}, {1, 5}, {2, 5}, {1, 6}, {2, 6}});
  const auto hull = hull_vertices(VRep(points)).vertices;
  ASSERT_FALSE(point_symmetry_center(VRep(hull)).has_value());
  const auto z = find_maximal_zonotope_subset(VRep(points));
  ASSERT_TRUE(z.has_value());
  EXPECT_EQ(regenerated_hull(*z), pts({{0, 0}, {0, 4}, {4, 0}, {4, 4}}));
}

TEST(Reduce, SquareWithApexUsesThreeBasisVectors) {
  const Reduction r = reduce(VRep(square_with_apex()));
  ASSERT_TRUE(r.zonotope.has_value());
  EXPECT_EQ(r.rep.basis_count(), 3u);
  EXPECT_EQ(r.rep.start(), pt({1, 3}));
  EXPECT_EQ(sorted(r.rep.basis().columns()), pts({{-1, -3}, {0, 2}, {2, 0}}));
  EXPECT_EQ(hull_vertices(candidate_vertices(r.rep)).vertices, sorted(square_with_apex()));
}

TEST(Reduce, ParallelogramGivesTwoGenerators) {
  const Reduction r = reduce(VRep(parallelogram_vertices()));
  ASSERT_TRUE(r.zonotope.has_value());
  EXPECT_EQ(r.rep.start(), pt({-2, -1}));
  EXPECT_EQ(sorted(r.rep.basis().columns()), pts({{2, 0}, {2, 2}}));
  EXPECT_EQ(r.rep.exponents().materialize(), BitMatrix::identity(2));
}

TEST(Reduce, TriangleFallsBackToChain) {
  const Reduction r = reduce(VRep(pts({{0, 0}, {2, 0}, {1, 2}})));
  EXPECT_FALSE(r.zonotope.has_value());
  EXPECT_EQ(r.rep.basis_count(), 2u);
  EXPECT_TRUE(r.rep.is_chain_form());
}

TEST(Reduce, SinglePointAndSegment) {
  EXPECT_EQ(reduce(VRep(pts({{1, 1}}))).rep.basis_count(), 0u);
  EXPECT_EQ(reduce(VRep(pts({{1, 1}, {2, 3}}))).rep.basis_count(), 1u);
}

}  // namespace
}  // namespace mrep
