#include <benchmark/benchmark.h>

#include "hcurve/classify.hpp"
#include "hcurve/frames.hpp"
#include "hcurve/geodesics.hpp"
#include "hcurve/kernels.hpp"
#include "hcurve/stencil.hpp"

using namespace hcurve;

namespace {

// A generic order-n curve: geodesics are degenerate for n ≥ 2, so use a twisted polynomial lift.
SampledCurve test_curve(int n, std::size_t samples) {
  const auto t = uniform_grid(0.0, 1.0, samples);
  Eigen::MatrixXd coords = Eigen::MatrixXd::Zero(static_cast<Eigen::Index>(samples), 2 * n + 1);
  for (std::size_t i = 0; i < samples; ++i) {
    double p = t[i];
    for (int j = 0; j < n; ++j) {
      coords(static_cast<Eigen::Index>(i), j) = p / (j + 1);
      coords(static_cast<Eigen::Index>(i), n + j) = std::sin((j + 1) * t[i]);
      p *= t[i];
    }
    coords(static_cast<Eigen::Index>(i), 2 * n) = 0.1 * t[i];
  }
  return {n, t, coords, false};
}

Execution policy(const benchmark::State& state) { return state.range(1) ? Execution::parallel : Execution::serial; }

void BM_frames(benchmark::State& state) {
  const int n = static_cast<int>(state.range(0));
  const SampledCurve c = test_curve(n, 4001);
  const std::size_t stride = invariant_stride(c, n);
  for (auto _ : state) benchmark::DoNotOptimize(kernels::frames(c, n, stride, kRankTol, policy(state)));
  state.SetItemsProcessed(state.iterations() * static_cast<int64_t>(c.size()));
}

void BM_wronskian(benchmark::State& state) {
  const int n = static_cast<int>(state.range(0));
  const SampledCurve c = test_curve(n, 4001);
  const std::size_t stride = rank_stride(c, n, kRankTol);
  for (auto _ : state) benchmark::DoNotOptimize(kernels::wronskian_margins(c, n, stride, policy(state)));
  state.SetItemsProcessed(state.iterations() * static_cast<int64_t>(c.size()));
}

void BM_geodesic(benchmark::State& state) {
  const int n = static_cast<int>(state.range(0));
  const auto grid = uniform_grid(0.0, 10.0, 100001);
  const GeodesicSpec spec = GeodesicSpec::canonical(n, 0.7);
  for (auto _ : state) benchmark::DoNotOptimize(geodesic_curve(spec, grid, policy(state)));
  state.SetItemsProcessed(state.iterations() * static_cast<int64_t>(grid.size()));
}

}  // namespace

// second argument: 0 = serial reference, 1 = OpenMP
BENCHMARK(BM_frames)->ArgsProduct({{1, 2, 3}, {0, 1}})->ArgNames({"n", "parallel"})->Unit(benchmark::kMillisecond);
BENCHMARK(BM_wronskian)->ArgsProduct({{1, 2, 3}, {0, 1}})->ArgNames({"n", "parallel"})->Unit(benchmark::kMillisecond);
BENCHMARK(BM_geodesic)->ArgsProduct({{1, 3}, {0, 1}})->ArgNames({"n", "parallel"})->Unit(benchmark::kMillisecond);

BENCHMARK_MAIN();
