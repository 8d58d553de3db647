/*
 * SPDX-License-Identifier: Apache-2.0
 */
// Serial reference paths against their OpenMP counterparts.

#include <benchmark/benchmark.h>

#include <vector>

#include "tmss/oracle.hpp"
#include "tmss/sweeps.hpp"
#include "tmss/verify.hpp"

using namespace tmss;

namespace {

Execution mode(const benchmark::State& state) {
  return state.range(0) == 0 ? Execution::Serial : Execution::Parallel;
}

ScenarioParams fig5() {
  ScenarioParams p;
  p.scenario = Scenario::TMSTDF;
  p.r = 0.4;
  p.n_i = p.n_s = 0.1;
  p.kappa_i = p.kappa_s = 0.1;
  p.filter_i = {FilterFamily::Step, 1.0, 0.2};
  p.filter_s = {FilterFamily::Step, 1.01, 0.205};
  return p;
}

void BM_GridBellMax(benchmark::State& state) {
  const auto v = assemble(fig5(), 1.0);
  for (auto _ : state) benchmark::DoNotOptimize(oracle::grid_bell_max(v, 0.4, 7, mode(state)));
}

void BM_CrossCheck(benchmark::State& state) {
  for (auto _ : state) benchmark::DoNotOptimize(oracle::cross_check(100, 42, 1e-6, {}, mode(state)).pass());
}

void BM_BellMax(benchmark::State& state) {
  const auto v = assemble(fig5(), 1.0);
  BellOptimizerConfig cfg;
  cfg.execution = mode(state);
  for (auto _ : state) benchmark::DoNotOptimize(bell_max(v, cfg).b_max);
}

void BM_EnTimeSeries(benchmark::State& state) {
  std::vector<double> Ts;
  for (int k = 0; k < 256; ++k) Ts.push_back(0.95 * k / 255.0);
  MeasureOptions opts;
  opts.execution = mode(state);
  for (auto _ : state) benchmark::DoNotOptimize(time_series(fig5(), Measure::EN, Ts, opts).points.back().value);
}

}  // namespace

// Argument 0 runs the serial reference, 1 the parallel path.
BENCHMARK(BM_GridBellMax)->Arg(0)->Arg(1)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_CrossCheck)->Arg(0)->Arg(1)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_BellMax)->Arg(0)->Arg(1)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_EnTimeSeries)->Arg(0)->Arg(1)->Unit(benchmark::kMillisecond);

BENCHMARK_MAIN();
