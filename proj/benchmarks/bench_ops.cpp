#include <mrep/ops.hpp>
#include <mrep/oracle.hpp>
#include <mrep/zonotope.hpp>

#include <benchmark/benchmark.h>

#include <random>

namespace {

using namespace mrep;

std::vector<Point> random_points(std::size_t n, std::size_t dim, std::uint64_t seed) {
  std::mt19937_64 rng(seed);
  std::uniform_int_distribution<long> num(-1000, 1000);
  std::uniform_int_distribution<long> den(1, 7);
  std::vector<Point> points(n, Point(dim));
  for (auto& p : points) {
    for (auto& x : p) x = Rational(num(rng), den(rng));
  }
  return points;
}

MRep random_chain(std::size_t n, std::size_t dim, std::uint64_t seed) {
  return chain_from_points(VRep(random_points(n, dim, seed)));
}

void BM_ChainFromPoints(benchmark::State& state) {
  const VRep v(random_points(static_cast<std::size_t>(state.range(0)), 3, 1));
  for (auto _ : state) benchmark::DoNotOptimize(chain_from_points(v));
  state.SetComplexityN(state.range(0));
}
BENCHMARK(BM_ChainFromPoints)->RangeMultiplier(4)->Range(16, 4096)->Complexity();

void BM_MinkowskiSum(benchmark::State& state) {
  const auto n = static_cast<std::size_t>(state.range(0));
  const MRep a = random_chain(n, 3, 2);
  const MRep b = random_chain(n, 3, 3);
  for (auto _ : state) benchmark::DoNotOptimize(minkowski_sum(a, b));
  state.SetComplexityN(state.range(0));
}
BENCHMARK(BM_MinkowskiSum)->RangeMultiplier(4)->Range(16, 4096)->Complexity();

void BM_ConvexHullM(benchmark::State& state) {
  const auto n = static_cast<std::size_t>(state.range(0));
  const MRep a = random_chain(n, 3, 4);
  const MRep b = random_chain(n, 3, 5);
  for (auto _ : state) benchmark::DoNotOptimize(convex_hull(a, b));
  state.SetComplexityN(state.range(0));
}
BENCHMARK(BM_ConvexHullM)->RangeMultiplier(4)->Range(16, 4096)->Complexity();

void BM_ConvexHullC(benchmark::State& state) {
  const auto n = static_cast<std::size_t>(state.range(0));
  const CRep a = to_crep(random_chain(n, 3, 6));
  const CRep b = to_crep(random_chain(n, 3, 7));
  for (auto _ : state) benchmark::DoNotOptimize(convex_hull(a, b));
  state.SetComplexityN(state.range(0));
}
BENCHMARK(BM_ConvexHullC)->RangeMultiplier(4)->Range(16, 4096)->Complexity();

void BM_LinearMap(benchmark::State& state) {
  const auto n = static_cast<std::size_t>(state.range(0));
  const MRep a = random_chain(n, 3, 8);
  const Matrix m = Matrix::from_rows(random_points(2, 3, 9), 3);
  for (auto _ : state) benchmark::DoNotOptimize(linear_map(m, a));
  state.SetComplexityN(state.range(0));
}
BENCHMARK(BM_LinearMap)->RangeMultiplier(4)->Range(16, 4096)->Complexity();

void BM_CandidateVerticesChain(benchmark::State& state) {
  const MRep a = random_chain(static_cast<std::size_t>(state.range(0)), 3, 10);
  for (auto _ : state) benchmark::DoNotOptimize(candidate_vertices(a));
  state.SetComplexityN(state.range(0));
}
BENCHMARK(BM_CandidateVerticesChain)->RangeMultiplier(4)->Range(16, 4096)->Complexity();

void BM_CandidateVerticesZonotope(benchmark::State& state) {
  const auto h = static_cast<std::size_t>(state.range(0));
  std::vector<Segment> segs;
  for (const Point& g : random_points(h, 3, 11)) segs.push_back({Point(3), g});
  const MRep z = zonotope_from_segments(SegmentList(segs));
  for (auto _ : state) benchmark::DoNotOptimize(candidate_vertices(z));
}
BENCHMARK(BM_CandidateVerticesZonotope)->DenseRange(2, 12, 2);

void BM_HullVertices(benchmark::State& state) {
  const VRep v(random_points(static_cast<std::size_t>(state.range(0)), 3, 12));
  for (auto _ : state) benchmark::DoNotOptimize(hull_vertices(v));
}
BENCHMARK(BM_HullVertices)->RangeMultiplier(2)->Range(8, 64);

void BM_Reduce(benchmark::State& state) {
  const VRep v(random_points(static_cast<std::size_t>(state.range(0)), 2, 13));
  for (auto _ : state) benchmark::DoNotOptimize(reduce(v));
}
BENCHMARK(BM_Reduce)->DenseRange(4, 10, 2);

}  // namespace

BENCHMARK_MAIN();
