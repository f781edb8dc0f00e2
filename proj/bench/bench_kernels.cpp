// Serial reference oracles against their OpenMP counterparts, plus the sweep.

#include "octcover/duality.hpp"
#include "octcover/special_cases.hpp"
#include "octcover/staircase.hpp"
#include "octcover/verify.hpp"
#include "support.hpp"

#include <benchmark/benchmark.h>

using namespace octcover;

namespace {

PointSet3 points(std::size_t n) {
  std::mt19937_64 rng(n);
  return testing::uniform_cube(rng, n);
}

void BM_ColorPoints(benchmark::State &state) {
  const auto ps = points(static_cast<std::size_t>(state.range(0)));
  for (auto _ : state)
    benchmark::DoNotOptimize(color_points(ps, ColorOptions{false}));
  state.SetComplexityN(state.range(0));
}

template <bool Parallel> void BM_VerifyColoring(benchmark::State &state) {
  const auto ps = points(static_cast<std::size_t>(state.range(0)));
  const auto colors = color_points(ps, ColorOptions{false}).colors;
  for (auto _ : state) {
    if constexpr (Parallel)
      benchmark::DoNotOptimize(verify_coloring(ps, colors, kOctantThreshold));
    else
      benchmark::DoNotOptimize(reference::verify_coloring(ps, colors, kOctantThreshold));
  }
}

template <bool Parallel> void BM_EnumerateTraces(benchmark::State &state) {
  const auto ps = points(static_cast<std::size_t>(state.range(0)));
  for (auto _ : state) {
    if constexpr (Parallel)
      benchmark::DoNotOptimize(enumerate_traces(ps));
    else
      benchmark::DoNotOptimize(reference::enumerate_traces(ps));
  }
}

template <bool Parallel> void BM_VerifyDecomposition(benchmark::State &state) {
  std::mt19937_64 rng(7);
  const auto f = testing::random_octants(rng, static_cast<std::size_t>(state.range(0)));
  const auto d = decompose_cover(f);
  for (auto _ : state) {
    if constexpr (Parallel)
      benchmark::DoNotOptimize(verify_decomposition(f, d, kOctantThreshold));
    else
      benchmark::DoNotOptimize(reference::verify_decomposition(f, d, kOctantThreshold));
  }
}

template <bool Parallel> void BM_VerifyTriangles(benchmark::State &state) {
  std::mt19937_64 rng(8);
  const auto f = testing::random_homothets(rng, static_cast<std::size_t>(state.range(0)));
  const auto d = decompose_triangle_cover(f);
  for (auto _ : state) {
    if constexpr (Parallel)
      benchmark::DoNotOptimize(verify_triangle_decomposition(f, d, kOctantThreshold));
    else
      benchmark::DoNotOptimize(reference::verify_triangle_decomposition(f, d, kOctantThreshold));
  }
}

template <bool Parallel> void BM_ExhaustColorings(benchmark::State &state) {
  const auto h = lower_bound_hypergraph();
  for (auto _ : state) {
    if constexpr (Parallel)
      benchmark::DoNotOptimize(exhaust_colorings(h));
    else
      benchmark::DoNotOptimize(reference::exhaust_colorings(h));
  }
}

template <bool Parallel> void BM_IncomparablePrefixes(benchmark::State &state) {
  std::mt19937_64 rng(9);
  const auto seq = testing::random_antichain(rng, static_cast<std::size_t>(state.range(0)));
  const auto c = color_incomparable(seq);
  for (auto _ : state) {
    if constexpr (Parallel)
      benchmark::DoNotOptimize(verify_incomparable_prefixes(seq, c.history, kAntichainThreshold));
    else
      benchmark::DoNotOptimize(reference::verify_incomparable_prefixes(seq, c.history, kAntichainThreshold));
  }
}

} // namespace

BENCHMARK(BM_ColorPoints)->RangeMultiplier(2)->Range(32, 1024)->Complexity();
BENCHMARK(BM_VerifyColoring<false>)->Name("VerifyColoring/serial")->Arg(50)->Arg(100);
BENCHMARK(BM_VerifyColoring<true>)->Name("VerifyColoring/omp")->Arg(50)->Arg(100)->Arg(400);
BENCHMARK(BM_EnumerateTraces<false>)->Name("EnumerateTraces/serial")->Arg(50)->Arg(100);
BENCHMARK(BM_EnumerateTraces<true>)->Name("EnumerateTraces/omp")->Arg(50)->Arg(100);
BENCHMARK(BM_VerifyDecomposition<false>)->Name("VerifyDecomposition/serial")->Arg(50)->Arg(100);
BENCHMARK(BM_VerifyDecomposition<true>)->Name("VerifyDecomposition/omp")->Arg(50)->Arg(100)->Arg(300);
BENCHMARK(BM_VerifyTriangles<false>)->Name("VerifyTriangles/serial")->Arg(50)->Arg(100);
BENCHMARK(BM_VerifyTriangles<true>)->Name("VerifyTriangles/omp")->Arg(50)->Arg(100);
BENCHMARK(BM_ExhaustColorings<false>)->Name("ExhaustColorings/serial");
BENCHMARK(BM_ExhaustColorings<true>)->Name("ExhaustColorings/omp");
BENCHMARK(BM_IncomparablePrefixes<false>)->Name("IncomparablePrefixes/serial")->Arg(50)->Arg(100);
BENCHMARK(BM_IncomparablePrefixes<true>)->Name("IncomparablePrefixes/omp")->Arg(50)->Arg(100);

BENCHMARK_MAIN();
