#include <benchmark/benchmark.h>

#include <random>

#include "ijt/prox.hpp"

using namespace ijt;

namespace {

Vector random_inputs(int n) {
  std::mt19937_64 rng(42);
  std::uniform_real_distribution<double> uz(-5.0, 5.0);
  Vector v(n);
  for (int i = 0; i < n; ++i) v[i] = uz(rng);
  return v;
}

void BM_ProxScalarPower(benchmark::State& state) {
  const PenaltySpec p{PenaltyFamily::Power, 0.5};
  const ThresholdPair t = thresholds(p, 1e-3, 0.2);
  const Vector zs = random_inputs(1024);
  std::size_t i = 0;
  for (auto _ : state) {
    benchmark::DoNotOptimize(prox_scalar(p, t, zs[i++ & 1023]));
  }
}
BENCHMARK(BM_ProxScalarPower);

void BM_ProxScalarLogPower(benchmark::State& state) {
  const PenaltySpec p{PenaltyFamily::LogPower, 0.5};
  const ThresholdPair t = thresholds(p, 1e-3, 0.2);
  const Vector zs = random_inputs(1024);
  std::size_t i = 0;
  for (auto _ : state) {
    benchmark::DoNotOptimize(prox_scalar(p, t, zs[i++ & 1023]));
  }
}
BENCHMARK(BM_ProxScalarLogPower);

void BM_ProxVector(benchmark::State& state) {
  const PenaltySpec p{PenaltyFamily::Power, 0.5};
  const Vector zs = random_inputs(static_cast<int>(state.range(0)));
  for (auto _ : state) {
    benchmark::DoNotOptimize(prox_vector(p, 1e-3, 0.2, zs));
  }
  state.SetItemsProcessed(state.iterations() * state.range(0));
}
BENCHMARK(BM_ProxVector)->Arg(500)->Arg(1500);

void BM_Thresholds(benchmark::State& state) {
  const PenaltySpec p{PenaltyFamily::LogPower, 0.5};
  for (auto _ : state) {
    benchmark::DoNotOptimize(thresholds(p, 1e-3, 0.2));
  }
}
BENCHMARK(BM_Thresholds);

}  // namespace
