#include <benchmark/benchmark.h>

#include "stokes/correlation_spectra.hpp"
#include "stokes/numeric_oracle.hpp"
#include "stokes/phase_optimizer.hpp"
#include "stokes/sweep.hpp"

namespace {

using namespace stokes;

const MediumParams medium{1.0, 1e-6, 4e-6, 5e-7};
const PulseParams pulse1{1e6, Envelope::constant(), LinearPhase(0.0)};
const PulseParams pulse2{3e6, Envelope::constant(), LinearPhase(0.0)};

void BM_SpectrumS2(benchmark::State& state) {
  double om = 0.0;
  for (auto _ : state) {
    benchmark::DoNotOptimize(spectrum_s2(pulse1, pulse2, medium, 0.0, om));
    om += 1e-3;
  }
}
BENCHMARK(BM_SpectrumS2);

void BM_OptimalPhase(benchmark::State& state) {
  for (auto _ : state) benchmark::DoNotOptimize(optimal_phase(pulse1, pulse2, medium, 0.0, 1.0));
}
BENCHMARK(BM_OptimalPhase);

void BM_NumericMinimum(benchmark::State& state) {
  for (auto _ : state) benchmark::DoNotOptimize(numeric_minimum(pulse1, pulse2, medium, 0.0, 1.0));
}
BENCHMARK(BM_NumericMinimum)->Unit(benchmark::kMillisecond);

void BM_WienerKhintchine(benchmark::State& state) {
  const CorrelationSample corr = correlation_s2(pulse1, pulse2, medium, 0.0);
  const double om = static_cast<double>(state.range(0));
  for (auto _ : state) benchmark::DoNotOptimize(wiener_khintchine(corr, om));
}
BENCHMARK(BM_WienerKhintchine)->Arg(0)->Arg(1)->Arg(5)->Unit(benchmark::kMicrosecond);

void BM_Preset(benchmark::State& state) {
  const auto& presets = sweep::presets();
  const sweep::RunConfig cfg = presets[static_cast<std::size_t>(state.range(0))].to_run_config();
  for (auto _ : state) benchmark::DoNotOptimize(sweep::csv_text(cfg, sweep::run_study(cfg)));
}
BENCHMARK(BM_Preset)->DenseRange(0, 4)->Unit(benchmark::kMicrosecond);

}  // namespace
BENCHMARK_MAIN();
