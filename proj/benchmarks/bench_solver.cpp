#include <benchmark/benchmark.h>

#include "ijt/linalg.hpp"
#include "ijt/probgen.hpp"
#include "ijt/solver.hpp"

using namespace ijt;

namespace {

void BM_IjtStep(benchmark::State& state) {
  const int n = static_cast<int>(state.range(0));
  const Instance inst = gen_instance({.N = n, .M = n / 2, .k = n / 30,
                                      .variance = 2.0 / n,
                                      .amplitude_model = AmplitudeModel::StdNormal,
                                      .seed = 3});
  const Problem prob = Problem::least_squares(inst.A, inst.y);
  SolverConfig cfg;
  cfg.lambda = 1e-3;
  cfg.mu = 0.99 / prob.lipschitz();
  const PenaltySpec p{PenaltyFamily::Power, 0.5};
  Vector x = Vector::Zero(n);
  for (auto _ : state) {
    x = ijt_step(prob, p, cfg, x);
    benchmark::DoNotOptimize(x.data());
  }
}
BENCHMARK(BM_IjtStep)->Arg(500)->Arg(1500);

void BM_FullSolve(benchmark::State& state) {
  const Instance inst = gen_instance({.N = 250, .M = 50, .k = 5,
                                      .variance = 1.0 / 50.0,
                                      .amplitude_model = AmplitudeModel::StdNormal,
                                      .seed = 4});
  const Problem prob = Problem::least_squares(inst.A, inst.y);
  SolverConfig cfg;
  cfg.lambda = 1e-3;
  cfg.mu_frac = 0.99;
  cfg.trace = TraceLevel::Light;
  cfg.tol_rel_change = 1e-8;
  const PenaltySpec p{PenaltyFamily::Power, 0.5};
  for (auto _ : state) {
    benchmark::DoNotOptimize(ijt_solve(prob, p, cfg));
  }
}
BENCHMARK(BM_FullSolve);

void BM_SpectralNorm(benchmark::State& state) {
  const int n = static_cast<int>(state.range(0));
  const Instance inst = gen_instance({.N = n, .M = n / 5, .k = 5,
                                      .variance = 5.0 / n,
                                      .amplitude_model = AmplitudeModel::StdNormal,
                                      .seed = 5});
  for (auto _ : state) {
    benchmark::DoNotOptimize(spectral_norm_sq(inst.A));
  }
}
BENCHMARK(BM_SpectralNorm)->Arg(500)->Arg(1500);

}  // namespace
