// Serial reference vs OpenMP kernels, and the general vs symmetrized Floquet eigensolver.
#include <benchmark/benchmark.h>

#include "floqlat/floquet.hpp"
#include "floqlat/scaling.hpp"

using namespace floqlat;

namespace {

Execution execution_of(const benchmark::State& state) {
  return state.range(0) == 0 ? Execution::kSerial : Execution::kParallel;
}

void BM_PhaseScan(benchmark::State& state) {
  const Execution ex = execution_of(state);
  for (auto _ : state) {
    benchmark::DoNotOptimize(scan_phase_diagram(8, 64, 0.05, kPi / 2 - 0.05, ex));
  }
}
BENCHMARK(BM_PhaseScan)->Arg(0)->Arg(1)->ArgName("parallel")->Unit(benchmark::kMillisecond);

void BM_ScalingSweep(benchmark::State& state) {
  const Execution ex = execution_of(state);
  const std::vector<int> sizes{100, 200, 300, 400};
  for (auto _ : state) {
    benchmark::DoNotOptimize(run_scaling(ScalingConfig::kOpen, kPi / 8, StaticModel::kSSH, sizes, ex));
  }
}
BENCHMARK(BM_ScalingSweep)->Arg(0)->Arg(1)->ArgName("parallel")->Unit(benchmark::kMillisecond);

void BM_SpectrumGeneral(benchmark::State& state) {
  const DriveParams p{kPi / 4, 3 * kPi / 8, static_cast<int>(state.range(0)), BoundaryCondition::kOpen};
  for (auto _ : state) benchmark::DoNotOptimize(quasienergies(build_floquet(p)));
}
BENCHMARK(BM_SpectrumGeneral)->Arg(50)->Arg(100)->Arg(200)->Unit(benchmark::kMillisecond);

void BM_SpectrumSymmetrized(benchmark::State& state) {
  const DriveParams p{kPi / 4, 3 * kPi / 8, static_cast<int>(state.range(0)), BoundaryCondition::kOpen};
  for (auto _ : state) benchmark::DoNotOptimize(floquet_spectrum(p));
}
BENCHMARK(BM_SpectrumSymmetrized)->Arg(50)->Arg(100)->Arg(200)->Unit(benchmark::kMillisecond);

}  // namespace

BENCHMARK_MAIN();
