#include <benchmark/benchmark.h>

#include "starkcp/fitting.hpp"
#include "starkcp/oracle.hpp"
#include "starkcp/potentials.hpp"
#include "starkcp/report.hpp"

using namespace starkcp;

static void BM_OnePhotonTensor(benchmark::State& state) {
  for (auto _ : state) benchmark::DoNotOptimize(oracle::one_photon_tensor({0.0, 0.0, 1e-6}));
}
BENCHMARK(BM_OnePhotonTensor)->Unit(benchmark::kMillisecond);

static void BM_CoefficientOracles(benchmark::State& state) {
  for (auto _ : state) {
    benchmark::DoNotOptimize(oracle::m_coefficients());
    benchmark::DoNotOptimize(oracle::d_coefficients());
  }
}
BENCHMARK(BM_CoefficientOracles)->Unit(benchmark::kMillisecond);

static void BM_CpFullIntegral(benchmark::State& state) {
  const ConstantsSet k = default_constants();
  const double a = alpha33_closed_form(0.0, k);
  const double kA = std::abs(level_energy(2, k) - level_energy(1, k)) / k.hbar_c();
  const double r = static_cast<double>(state.range(0)) / kA;
  for (auto _ : state) benchmark::DoNotOptimize(cp_full_integral(a, a, kA, kA, r, k));
}
BENCHMARK(BM_CpFullIntegral)->Arg(3)->Arg(30)->Arg(300)->Unit(benchmark::kMicrosecond);

static void BM_Sweep(benchmark::State& state) {
  const HydrogenContext ctx;
  const auto radii = fit::logspace(1e-7, 1e-5, static_cast<int>(state.range(0)));
  for (auto _ : state) benchmark::DoNotOptimize(report::sweep(ctx, 1e8, 1e8, radii, 1e-25));
  state.SetItemsProcessed(state.iterations() * state.range(0));
}
BENCHMARK(BM_Sweep)->Arg(50)->Arg(1000)->Unit(benchmark::kMicrosecond);

static void BM_HydrogenTensors(benchmark::State& state) {
  for (auto _ : state) {
    benchmark::DoNotOptimize(hydrogen_polarizability(1e8));
    benchmark::DoNotOptimize(hydrogen_hyperpolarizability(1e8));
  }
}
BENCHMARK(BM_HydrogenTensors)->Unit(benchmark::kMicrosecond);

BENCHMARK_MAIN();
