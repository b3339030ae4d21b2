#include <benchmark/benchmark.h>

#include "decoy_lm05/combined_bounds.hpp"
#include "decoy_lm05/finite_bounds.hpp"
#include "decoy_lm05/key_rates.hpp"
#include "decoy_lm05/optimizer.hpp"
#include "decoy_lm05/sampler.hpp"

using namespace decoy_lm05;

namespace {

ChannelParams gys(double distance_km) {
  ChannelParams p;
  p.distance_km = distance_km;
  return p;
}

const IntensitySet kSet{0.45, 0.05, 0.0};

void BM_TotalGainQber(benchmark::State& state) {
  const ChannelParams p = gys(20.0);
  for (auto _ : state) {
    benchmark::DoNotOptimize(total_gain_and_qber(p, 0.45));
  }
}
BENCHMARK(BM_TotalGainQber);

void BM_Observe(benchmark::State& state) {
  const ChannelParams p = gys(20.0);
  for (auto _ : state) {
    benchmark::DoNotOptimize(observe(p, kSet));
  }
}
BENCHMARK(BM_Observe);

void BM_EstimateFinite(benchmark::State& state) {
  const ChannelParams p = gys(20.0);
  const Observables obs = observe(p, kSet);
  for (auto _ : state) {
    benchmark::DoNotOptimize(
        estimate_finite(obs, kSet, Y1UpperMode::Genuine, p));
  }
}
BENCHMARK(BM_EstimateFinite);

void BM_EstimateCombined(benchmark::State& state) {
  const ChannelParams p = gys(20.0);
  const Observables obs = observe(p, kSet);
  for (auto _ : state) {
    benchmark::DoNotOptimize(estimate_combined(obs, kSet, p.e0));
  }
}
BENCHMARK(BM_EstimateCombined);

void BM_RateFiniteA(benchmark::State& state) {
  const ChannelParams p = gys(20.0);
  const Observables obs = observe(p, kSet);
  for (auto _ : state) {
    benchmark::DoNotOptimize(
        rate_finite_a(obs, kSet, Y1UpperMode::Genuine, p));
  }
}
BENCHMARK(BM_RateFiniteA);

void BM_OptimizeMu(benchmark::State& state) {
  const ChannelParams p = gys(static_cast<double>(state.range(0)));
  OptimizeSpec spec;
  spec.formula = RateFormula::FiniteAGenuine;
  for (auto _ : state) {
    benchmark::DoNotOptimize(optimize_mu(p, spec));
  }
}
BENCHMARK(BM_OptimizeMu)->Arg(10)->Arg(40);

void BM_CutoffDistance(benchmark::State& state) {
  const ChannelParams p = gys(0.0);
  OptimizeSpec spec;
  spec.formula = RateFormula::Infinite;
  for (auto _ : state) {
    benchmark::DoNotOptimize(cutoff_distance(p, spec, 150.0));
  }
}
BENCHMARK(BM_CutoffDistance);

void BM_SampleObservables(benchmark::State& state) {
  const ChannelParams p = gys(10.0);
  const SampleSpec spec{static_cast<std::uint64_t>(state.range(0)), 1};
  for (auto _ : state) {
    benchmark::DoNotOptimize(sample_observables(p, kSet, spec));
  }
  state.SetItemsProcessed(state.iterations() * state.range(0) * 3);
}
BENCHMARK(BM_SampleObservables)->Arg(10000)->Arg(100000);

}  // namespace

BENCHMARK_MAIN();
