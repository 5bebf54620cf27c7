#include <benchmark/benchmark.h>

#include <cmath>

#include "se2frame/se2frame.hpp"

namespace {

using namespace se2frame;

const Lattice2D kZ2 = make_lattice(Mat2::Identity());

SamplingSpec spec_for(double p, double sigma, double rho, int n) {
  return SamplingSpec::make(WaveletParams::make(p, sigma), kZ2, rho, equally_spaced_angles(n),
                            draw_shifts(0, 0, n));
}

// (ρ, N) pairs spanning the experiment sizes: |V| ≈ 12, 32, 319.
const SamplingSpec& spec_by_index(int i) {
  static const SamplingSpec specs[] = {spec_for(0.7, 2.0 / 7.0, 1.618, 14),
                                       spec_for(1.4, 0.225, 3.0, 100),
                                       spec_for(1.0, 0.1, 10.0, 400)};
  return specs[i];
}

const Vec2 kOmega(0.137, -0.291);

void BM_GramianClosedForm(benchmark::State& state) {
  const SamplingSpec& spec = spec_by_index(static_cast<int>(state.range(0)));
  for (auto _ : state) benchmark::DoNotOptimize(build_gramian(kOmega, spec));
  state.counters["dim"] = static_cast<double>(build_gramian(kOmega, spec).dim());
}
BENCHMARK(BM_GramianClosedForm)->DenseRange(0, 2)->Unit(benchmark::kMicrosecond);

void BM_GramianProductForm(benchmark::State& state) {
  const SamplingSpec& spec = spec_by_index(static_cast<int>(state.range(0)));
  for (auto _ : state) benchmark::DoNotOptimize(build_gramian_direct(kOmega, spec));
}
BENCHMARK(BM_GramianProductForm)->DenseRange(0, 2)->Unit(benchmark::kMicrosecond);

void BM_SpectrumWithResidualCheck(benchmark::State& state) {
  const DualGramian g = build_gramian(kOmega, spec_by_index(static_cast<int>(state.range(0))));
  for (auto _ : state) benchmark::DoNotOptimize(spectrum(g));
}
BENCHMARK(BM_SpectrumWithResidualCheck)->DenseRange(0, 2)->Unit(benchmark::kMicrosecond);

void BM_EigenvaluesOnly(benchmark::State& state) {
  const DualGramian g = build_gramian(kOmega, spec_by_index(static_cast<int>(state.range(0))));
  for (auto _ : state) benchmark::DoNotOptimize(eigenvalues(g.entries));
}
BENCHMARK(BM_EigenvaluesOnly)->DenseRange(0, 2)->Unit(benchmark::kMicrosecond);

void BM_EnumerateV(benchmark::State& state) {
  const double rho = static_cast<double>(state.range(0));
  for (auto _ : state) benchmark::DoNotOptimize(enumerate_V(kOmega, rho, kZ2));
}
BENCHMARK(BM_EnumerateV)->Arg(2)->Arg(10)->Arg(30)->Unit(benchmark::kMicrosecond);

void BM_SweepSmallBall(benchmark::State& state) {
  const SamplingSpec spec = SamplingSpec::make(WaveletParams::make(0.5, 2 / kPi), kZ2,
                                               1 / std::sqrt(2.0), equally_spaced_angles(4));
  for (auto _ : state) benchmark::DoNotOptimize(sweep(spec, SweepConfig{64, 1, 0, 1}));
}
BENCHMARK(BM_SweepSmallBall)->Unit(benchmark::kMillisecond);

void BM_BesselI0Scaled(benchmark::State& state) {
  double x = 0.0;
  for (auto _ : state) {
    benchmark::DoNotOptimize(bessel_i0_scaled(x));
    x = x < 100.0 ? x + 0.37 : 0.0;
  }
}
BENCHMARK(BM_BesselI0Scaled);

}  // namespace

BENCHMARK_MAIN();
