#include <benchmark/benchmark.h>

#include "hut/continuous.hpp"
#include "hut/discrete.hpp"
#include "hut/envelope.hpp"
#include "hut/range_tree.hpp"
#include "hut_tools/generators.hpp"

using namespace hut;
using namespace hut::tools;

namespace {

void BM_Envelope1d(benchmark::State& state) {
  Rng rng(1);
  const auto n = static_cast<std::size_t>(state.range(0));
  auto [P, Q] = related_sets(rng, n, n, 1, 1000, 4);
  for (auto _ : state) benchmark::DoNotOptimize(solve_1d_opt(P, Q, Variant::Directed));
}
BENCHMARK(BM_Envelope1d)->RangeMultiplier(2)->Range(8, 256);

void BM_Sweep2d(benchmark::State& state) {
  Rng rng(2);
  const auto n = static_cast<std::size_t>(state.range(0));
  auto [P, Q] = related_sets(rng, n, n, 2, 100, 4);
  for (auto _ : state) benchmark::DoNotOptimize(decide_2d(P, Q, Scalar(2), Variant::Directed));
}
BENCHMARK(BM_Sweep2d)->RangeMultiplier(2)->Range(8, 128);

// Fixed n = 3, growing m.
void BM_Lopsided3d(benchmark::State& state) {
  Rng rng(3);
  const auto m = static_cast<std::size_t>(state.range(0));
  auto [P, Q] = related_sets(rng, 3, m, 3, 100, 4);
  for (auto _ : state) benchmark::DoNotOptimize(decide_3d_lopsided(P, Q, Scalar(2)));
}
BENCHMARK(BM_Lopsided3d)->RangeMultiplier(2)->Range(50, 400);

void BM_RangeTreeDiscrete(benchmark::State& state) {
  Rng rng(4);
  const auto n = static_cast<std::size_t>(state.range(0));
  auto [P, Q] = related_sets(rng, n, n, 2, 1000, 1);
  PointSet T = random_set(rng, n, 2, -500, 500, 1);
  for (auto _ : state) benchmark::DoNotOptimize(solve_discrete(T, P, Q, Scalar(40), Variant::Directed));
}
BENCHMARK(BM_RangeTreeDiscrete)->RangeMultiplier(2)->Range(16, 256);

void BM_RangeTreeQuery(benchmark::State& state) {
  Rng rng(5);
  PointSet ps = random_set(rng, static_cast<std::size_t>(state.range(0)), 3, -1000, 1000, 1);
  RangeTree rt = rt_build(ps);
  const Box b({-10, -10, -10}, {10, 10, 10});
  for (auto _ : state) benchmark::DoNotOptimize(rt_query_witness(rt, b));
}
BENCHMARK(BM_RangeTreeQuery)->RangeMultiplier(4)->Range(64, 16384);

}  // namespace

BENCHMARK_MAIN();
