#include <bandlim/bandlim.hpp>

#include <benchmark/benchmark.h>

#include <complex>
#include <functional>

namespace {

using namespace bandlim;

const double kOmega = 5.0 * kPi / 6.0;

void BM_BuildSplice(benchmark::State& state) {
  const int d = static_cast<int>(state.range(0));
  for (auto _ : state) benchmark::DoNotOptimize(build_splice(6.29, d, 6));
}
BENCHMARK(BM_BuildSplice)->DenseRange(1, 6);

void BM_D1Window(benchmark::State& state) {
  const BandConfig cfg = BandConfig::make(kOmega);
  const int L = static_cast<int>(state.range(0));
  for (auto _ : state) benchmark::DoNotOptimize(kernel_window(Method::d1, -1.71, L, cfg));
  state.SetItemsProcessed(state.iterations() * (2 * L + 1));
}
BENCHMARK(BM_D1Window)->Arg(50)->Arg(500)->Arg(5000);

void BM_GeneralWindow(benchmark::State& state) {
  const BandConfig cfg = BandConfig::make(kOmega, 1.0);
  const int L = static_cast<int>(state.range(0));
  for (auto _ : state) benchmark::DoNotOptimize(coefficient_window_general(-1.71, L, cfg));
  state.SetItemsProcessed(state.iterations() * (2 * L + 1));
}
BENCHMARK(BM_GeneralWindow)->Arg(50)->Arg(500)->Unit(benchmark::kMillisecond);

void BM_Oracle(benchmark::State& state) {
  const GridPosition pos = locate(-1.71, 6);
  const SplicePolynomials s = build_splice(pos.t_reduced, 2, 6);
  const std::function<std::complex<double>(double)> E = [&](double w) { return eval_extension(s, pos.m, w); };
  QuadratureSpec fine;
  fine.panels = 64;
  for (auto _ : state) benchmark::DoNotOptimize(oracle_coefficient(pos.m + 17, E, pos.g, fine));
}
BENCHMARK(BM_Oracle);

void BM_Sweep(benchmark::State& state) {
  const BandConfig cfg = BandConfig::make(kOmega, 1.0);
  const SignalSpec x = make_linear_growth(kOmega);
  const int Ls[] = {50, 100, 500};
  const Method methods[] = {Method::classical, Method::d1, Method::general};
  for (auto _ : state) benchmark::DoNotOptimize(truncation_sweep(x, -1.71, Ls, methods, cfg));
}
BENCHMARK(BM_Sweep)->Unit(benchmark::kMillisecond);

}  // namespace

BENCHMARK_MAIN();
