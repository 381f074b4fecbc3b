#include <benchmark/benchmark.h>

#include "irsopt/baselines.hpp"
#include "irsopt/circle_manifold.hpp"
#include "irsopt/fixed_point.hpp"
#include "irsopt/harness.hpp"
#include "irsopt/initialization.hpp"

using namespace irsopt;

namespace {

QcqpData instance(int nt, int m, std::uint64_t seed) {
  SystemConfig cfg;
  cfg.num_tx_antennas = nt;
  cfg.num_irs_elements = m;
  Rng rng(seed);
  return build_qcqp(sample_channels(cfg, rng));
}

void BM_GridOracleSerial(benchmark::State& state) {
  const QcqpData q = instance(4, 3, 1);
  for (auto _ : state) benchmark::DoNotOptimize(grid_oracle_serial(q, static_cast<int>(state.range(0))));
}
BENCHMARK(BM_GridOracleSerial)->Arg(36)->Arg(72)->Unit(benchmark::kMillisecond);

void BM_GridOracleParallel(benchmark::State& state) {
  const QcqpData q = instance(4, 3, 1);
  for (auto _ : state) benchmark::DoNotOptimize(grid_oracle(q, static_cast<int>(state.range(0))));
}
BENCHMARK(BM_GridOracleParallel)->Arg(36)->Arg(72)->Unit(benchmark::kMillisecond);

void BM_FixedPoint(benchmark::State& state) {
  const int m = static_cast<int>(state.range(0));
  const QcqpData q = instance(5, m, 2);
  const UnitModulusVector v0 = initial_point(q);
  for (auto _ : state) benchmark::DoNotOptimize(solve_fixed_point(q, v0));
}
BENCHMARK(BM_FixedPoint)->RangeMultiplier(2)->Range(10, 160)->Unit(benchmark::kMicrosecond);

void BM_Rcg(benchmark::State& state) {
  const int m = static_cast<int>(state.range(0));
  const QcqpData q = instance(5, m, 2);
  const UnitModulusVector x0 = initial_point(q).head(m);
  for (auto _ : state) benchmark::DoNotOptimize(rcg_solve(q, x0));
}
BENCHMARK(BM_Rcg)->RangeMultiplier(2)->Range(10, 160)->Unit(benchmark::kMicrosecond);

void BM_InitialPoint(benchmark::State& state) {
  const QcqpData q = instance(5, static_cast<int>(state.range(0)), 3);
  for (auto _ : state) benchmark::DoNotOptimize(initial_point(q));
}
BENCHMARK(BM_InitialPoint)->RangeMultiplier(2)->Range(10, 160)->Unit(benchmark::kMicrosecond);

ScenarioSpec small_sweep() {
  ScenarioSpec spec = fig1_spec(20, 5);
  spec.algorithms = {Algorithm::FixedPoint, Algorithm::Rcg};
  return spec;
}

void BM_ScenarioSerial(benchmark::State& state) {
  const ScenarioSpec spec = small_sweep();
  for (auto _ : state) benchmark::DoNotOptimize(run_scenario_serial(spec));
}
BENCHMARK(BM_ScenarioSerial)->Unit(benchmark::kMillisecond);

void BM_ScenarioParallel(benchmark::State& state) {
  const ScenarioSpec spec = small_sweep();
  for (auto _ : state) benchmark::DoNotOptimize(run_scenario(spec));
}
BENCHMARK(BM_ScenarioParallel)->Unit(benchmark::kMillisecond);

}  // namespace

BENCHMARK_MAIN();
