#include <benchmark/benchmark.h>

#include <complex>

#include "latlab/arith.hpp"
#include "latlab/errterm.hpp"
#include "latlab/special.hpp"
#include "latlab/zeta.hpp"

using namespace latlab;

static void BM_Sieve(benchmark::State& state) {
  const auto limit = static_cast<std::uint64_t>(state.range(0));
  for (auto _ : state) benchmark::DoNotOptimize(arith::build_sieve(limit));
  state.SetItemsProcessed(state.iterations() * state.range(0));
}
BENCHMARK(BM_Sieve)->RangeMultiplier(10)->Range(10'000, 1'000'000)->Unit(benchmark::kMillisecond);

// Covers the series, Hankel and intermediate branches.
static void BM_BesselJ1(benchmark::State& state) {
  const double x = static_cast<double>(state.range(0)) / 10.0;
  for (auto _ : state) benchmark::DoNotOptimize(special::bessel_j1(x));
}
BENCHMARK(BM_BesselJ1)->Arg(5)->Arg(150)->Arg(10'000);

static void BM_ZetaRS(benchmark::State& state) {
  const double t = static_cast<double>(state.range(0));
  for (auto _ : state) benchmark::DoNotOptimize(zeta::hardy_z(t));
}
BENCHMARK(BM_ZetaRS)->RangeMultiplier(10)->Range(100, 100'000);

static void BM_ZetaEM(benchmark::State& state) {
  const std::complex<double> s(0.5, static_cast<double>(state.range(0)));
  for (auto _ : state) benchmark::DoNotOptimize(zeta::zeta_em(s));
}
BENCHMARK(BM_ZetaEM)->Arg(10)->Arg(49)->Arg(200);

static void BM_HardySeries(benchmark::State& state) {
  const auto n = static_cast<std::uint64_t>(state.range(0));
  const auto table = arith::build_sieve(n);
  for (auto _ : state) {
    benchmark::DoNotOptimize(errterm::P_hardy(999.5, n, errterm::Smoothing::smoothed, table));
  }
}
BENCHMARK(BM_HardySeries)->Arg(10'000)->Arg(100'000)->Unit(benchmark::kMicrosecond);

BENCHMARK_MAIN();
