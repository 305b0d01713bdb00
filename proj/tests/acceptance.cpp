// Acceptance suite: every criterion prints one PASS/FAIL line; the process
// exits nonzero if any criterion fails. Heavier end-to-end runs live here
// rather than in the unit suites.

#include <chrono>
#include <cmath>
#include <cstdio>
#include <mutex>
#include <optional>
#include <random>
#include <thread>
#include <vector>

#include "ijt/baselines.hpp"
#include "ijt/diagnostics.hpp"
#include "ijt/linalg.hpp"
#include "ijt/probgen.hpp"
#include "ijt/solver.hpp"
#include "ijt/testkit.hpp"
#include "test_oracles.hpp"

using namespace ijt;
using clock_type = std::chrono::steady_clock;

namespace {

int g_failures = 0;

void report(int id, bool pass, const std::string& what, const std::string& detail) {
  std::printf("[%2d] %s  %s (%s)\n", id, pass ? "PASS" : "FAIL", what.c_str(),
              detail.c_str());
  std::fflush(stdout);
  if (!pass) ++g_failures;
}

std::string fmt(double v) {
  char buf[64];
  std::snprintf(buf, sizeof(buf), "%.3g", v);
  return buf;
}

int hw_jobs() {
  return std::max(1u, std::thread::hardware_concurrency());
}

// ---------------------------------------------------------------------------
// Criterion 1 recovery runs, shared by criteria 2, 3, 7 and 9.

struct RecoveryRun {
  int q_idx = 0, init_idx = 0, seed = 0;
  SolveStatus status = SolveStatus::MaxIters;
  int iterations = 0;
  double mse = 0.0;
  double wall = 0.0;
  double eta = 0.0;
  double min_nonzero = std::numeric_limits<double>::infinity();
  std::optional<int> support_freeze, sign_freeze;
  std::optional<double> rho_star;
  std::vector<Vector> tail;  // iterates T-|tail|+1 .. T
  Vector x_final;

  int tail_base() const {  // iterate index of tail[0]
    return iterations - (static_cast<int>(tail.size()) - 1);
  }
};

std::vector<RecoveryRun> run_recovery_suite() {
  const double qs[] = {0.5, 2.0 / 3.0};
  const int n_seeds = 10;
  std::vector<RecoveryRun> runs(2 * 2 * n_seeds);

  parallel_for(hw_jobs(), static_cast<int>(runs.size()), [&](int idx) {
    RecoveryRun out;
    out.q_idx = idx % 2;
    out.init_idx = (idx / 2) % 2;
    out.seed = idx / 4 + 1;

    const Instance inst = gen_instance(
        {.N = 500, .M = 250, .k = 15, .variance = 1.0 / 250.0,
         .amplitude_model = AmplitudeModel::StdNormal,
         .seed = static_cast<std::uint64_t>(out.seed)});
    const Problem prob = Problem::least_squares(inst.A, inst.y);
    const PenaltySpec p{PenaltyFamily::Power, qs[out.q_idx]};

    SolverConfig cfg;
    cfg.lambda = 0.001;
    cfg.mu_frac = 0.99;
    cfg.tol_rel_change = 1e-10;
    cfg.max_iters = 100000;
    cfg.keep_tail = 256;
    cfg.init = out.init_idx == 0 ? InitKind::Zero : InitKind::L1Solution;

    StepObserver track_min = [&out](int, const Vector&, const Vector&,
                                    const Vector& x_next) {
      for (int i = 0; i < x_next.size(); ++i)
        if (x_next[i] != 0.0)
          out.min_nonzero = std::min(out.min_nonzero, std::abs(x_next[i]));
    };

    const auto t0 = clock_type::now();
    const SolveResult res = ijt_solve(prob, p, cfg, track_min);
    out.wall = std::chrono::duration<double>(clock_type::now() - t0).count();

    out.status = res.status;
    out.iterations = res.iterations;
    out.mse = (res.x_final - inst.x_true).squaredNorm() / 500.0;
    out.eta = thresholds(p, cfg.lambda, res.mu_resolved).eta;
    out.support_freeze = res.support_freeze_iter;
    out.sign_freeze = res.sign_freeze_iter;
    out.tail = res.tail_iterates;
    out.x_final = res.x_final;
    if (!support_of(res.x_final).empty())
      out.rho_star = contraction_factor(res.x_final, prob, p, cfg.lambda,
                                        res.mu_resolved);
    runs[static_cast<std::size_t>(idx)] = std::move(out);
  });
  return runs;
}

void criterion_1(const std::vector<RecoveryRun>& runs) {
  int cell_ok[2][2] = {{0, 0}, {0, 0}};
  double worst_wall = 0.0;
  for (const auto& r : runs) {
    if (r.status == SolveStatus::Converged && r.mse <= 1e-4)
      ++cell_ok[r.q_idx][r.init_idx];
    worst_wall = std::max(worst_wall, r.wall);
  }
  bool pass = worst_wall <= 60.0;
  for (int q = 0; q < 2; ++q)
    for (int i = 0; i < 2; ++i) pass = pass && cell_ok[q][i] >= 8;
  report(1, pass, "recovery at N=500, M=250, k=15 over 10 seeds x 4 cells",
         "cells ok: " + std::to_string(cell_ok[0][0]) + "/" +
             std::to_string(cell_ok[0][1]) + "/" + std::to_string(cell_ok[1][0]) +
             "/" + std::to_string(cell_ok[1][1]) + " of 10, max wall " +
             fmt(worst_wall) + "s");
}

void criterion_2(const std::vector<RecoveryRun>& runs) {
  bool pass = true;
  double worst_r2 = 1.0, worst_slope = -1e9;
  int fitted = 0;
  for (const auto& r : runs) {
    if (r.status != SolveStatus::Converged) continue;
    const int k = static_cast<int>(r.tail.size());
    const int end = k - 1 - 10;          // drop the last 10 iterations
    int start = std::max(0, end - 200);
    // The linear rate is asymptotic: it kicks in only once the support has
    // frozen, so a window reaching into the support-churn phase would
    // measure a different regime. Clip the fit to the frozen segment.
    if (r.support_freeze)
      start = std::max(start, *r.support_freeze + 10 - r.tail_base());
    if (end - start < 50) continue;
    std::vector<double> xs, ys;
    for (int j = start; j < end; ++j) {
      const double err = (r.tail[static_cast<std::size_t>(j)] - r.x_final).norm();
      if (err <= 0.0) continue;
      xs.push_back(j);
      ys.push_back(std::log(err));
    }
    const auto [slope, r2] = testor::linear_fit(xs, ys);
    ++fitted;
    worst_r2 = std::min(worst_r2, r2);
    worst_slope = std::max(worst_slope, slope);
    if (!(slope < 0.0 && r2 >= 0.95)) pass = false;
  }
  pass = pass && fitted > 0;
  report(2, pass, "asymptotically linear error decay on converged runs",
         std::to_string(fitted) + " fits, min R2 " + fmt(worst_r2) +
             ", max slope " + fmt(worst_slope));
}

void criterion_3(const std::vector<RecoveryRun>& runs) {
  bool pass = true;
  int applicable = 0;
  double worst_violation = 0.0;
  for (const auto& r : runs) {
    if (r.status != SolveStatus::Converged || !r.rho_star) continue;
    const double rho = *r.rho_star;
    ++applicable;
    const int k = static_cast<int>(r.tail.size());
    const int start = std::max(0, k - 1 - 100);
    for (int j = start; j + 1 < k; ++j) {
      // the step into an iterate bounds that iterate's distance to the limit
      const double dist = (r.tail[static_cast<std::size_t>(j + 1)] - r.x_final).norm();
      const double bound = rho / (1.0 - rho) *
                           (r.tail[static_cast<std::size_t>(j + 1)] -
                            r.tail[static_cast<std::size_t>(j)])
                               .norm();
      worst_violation = std::max(worst_violation, dist - bound);
      if (dist > bound + 1e-8) pass = false;
    }
  }
  report(3, pass, "posteriori bound on runs with a certified rho*",
         std::to_string(applicable) + " runs applicable, worst slack " +
             fmt(worst_violation));
}

void criterion_4() {
  const Instance inst = gen_instance(
      {.N = 500, .M = 250, .k = 15, .variance = 1.0 / 250.0,
       .amplitude_model = AmplitudeModel::StdNormal, .seed = 1});
  const Problem prob = Problem::least_squares(inst.A, inst.y);
  const PenaltySpec p{PenaltyFamily::Power, 0.5};
  const double lip = prob.lipschitz();

  const double l1_lambda =
      0.01 * (prob.matrix().transpose() * prob.rhs()).cwiseAbs().maxCoeff();
  const Vector x0 = fista_l1(prob, l1_lambda, 1e-8, 20000).x;

  const int grid = 100;
  std::vector<double> mus(grid), iters(grid), mses(grid);
  parallel_for(hw_jobs(), grid, [&](int j) {
    SolverConfig cfg;
    cfg.lambda = 0.001;
    cfg.mu = (j + 0.5) / grid / lip;
    cfg.tol_rel_change = 1e-10;
    cfg.max_iters = 300000;
    cfg.init = InitKind::Vector;
    cfg.init_vector = x0;
    cfg.trace = TraceLevel::Light;
    const SolveResult r = ijt_solve(prob, p, cfg);
    mus[static_cast<std::size_t>(j)] = *cfg.mu;
    iters[static_cast<std::size_t>(j)] = r.iterations;
    mses[static_cast<std::size_t>(j)] =
        (r.x_final - inst.x_true).squaredNorm() / 500.0;
  });

  const double corr = testor::spearman(mus, iters);
  double mse_min = mses[0], mse_max = mses[0];
  for (double m : mses) {
    mse_min = std::min(mse_min, m);
    mse_max = std::max(mse_max, m);
  }
  const double ratio = mse_max / mse_min;
  report(4, corr <= -0.9 && ratio <= 10.0, "mu sweep: iterations fall, mse stays put",
         "spearman " + fmt(corr) + ", mse ratio " + fmt(ratio));
}

void criterion_5() {
  std::mt19937_64 rng(2024);
  std::uniform_real_distribution<double> uz(-10.0, 10.0), ul(std::log(1e-3), std::log(10.0));
  const double qs[] = {0.3, 0.5, 2.0 / 3.0, 0.9};
  double worst = 0.0;
  const auto t0 = clock_type::now();
  for (int i = 0; i < 1000; ++i) {
    const PenaltySpec p{i % 2 ? PenaltyFamily::Power : PenaltyFamily::LogPower,
                        qs[(i / 2) % 4]};
    const double lm = std::exp(ul(rng));
    const double z = uz(rng);
    worst = std::max(worst, std::abs(prox_scalar(p, lm, 1.0, z) -
                                     prox_oracle(p, lm, 1.0, z, 2.0, 20000)));
  }
  const double wall = std::chrono::duration<double>(clock_type::now() - t0).count();
  report(5, worst <= 1e-6 && wall <= 10.0, "prox matches the grid oracle on 1000 draws",
         "max dev " + fmt(worst) + ", " + fmt(wall) + "s");
}

void criterion_6() {
  std::mt19937_64 rng(55);
  std::uniform_real_distribution<double> uq(0.05, 0.95), ul(-3.0, 1.0);
  double worst_closed = 0.0, worst_tau = 0.0;
  for (int i = 0; i < 100; ++i) {
    const double q = uq(rng);
    const double lambda = std::pow(10.0, ul(rng));
    const double mu = std::pow(10.0, ul(rng));

    const PenaltySpec pw{PenaltyFamily::Power, q};
    const auto closed = thresholds(pw, lambda, mu);
    const auto generic = thresholds_by_inversion(pw, lambda, mu);
    worst_closed = std::max({worst_closed,
                             std::abs(closed.eta - generic.eta) / closed.eta,
                             std::abs(closed.tau - generic.tau) / closed.tau});

    for (auto fam : {PenaltyFamily::Power, PenaltyFamily::LogPower}) {
      const PenaltySpec p{fam, q};
      const auto t = thresholds(p, lambda, mu);
      worst_tau = std::max(worst_tau,
                           std::abs(t.tau - rho(p, lambda * mu, t.eta)) / t.tau);
    }
  }
  report(6, worst_closed <= 1e-8 && worst_tau <= 1e-10,
         "closed-form thresholds equal psi inversion; tau = rho(eta)",
         "closed-form dev " + fmt(worst_closed) + ", tau dev " + fmt(worst_tau));
}

void criterion_7(const std::vector<RecoveryRun>& runs) {
  bool range_ok = true;
  for (const auto& r : runs)
    if (std::isfinite(r.min_nonzero) && r.min_nonzero < r.eta - 1e-10)
      range_ok = false;

  bool jump_ok = true;
  const double qs[] = {0.3, 0.5, 2.0 / 3.0, 0.9};
  const double lms[] = {1e-3, 0.1, 1.0, 10.0};
  for (auto fam : {PenaltyFamily::Power, PenaltyFamily::LogPower})
    for (double q : qs)
      for (double lm : lms) {
        const PenaltySpec p{fam, q};
        const auto t = thresholds(p, lm, 1.0);
        const double jump = prox_scalar(p, t, t.tau * (1.0 + 1e-9)) -
                            prox_scalar(p, t, t.tau * (1.0 - 1e-9));
        if (jump < 0.99 * t.eta) jump_ok = false;
      }
  report(7, range_ok && jump_ok, "jump height ~eta and iterate magnitudes >= eta",
         std::string("range ") + (range_ok ? "ok" : "violated") + ", jump " +
             (jump_ok ? "ok" : "violated"));
}

void criterion_8() {
  std::mt19937_64 rng(808);
  std::normal_distribution<double> normal(0.0, 1.0);
  bool pass = true;
  double worst_decrease = 0.0, worst_identity = 0.0;

  for (int trial = 0; trial < 20; ++trial) {
    const int m = 10 + static_cast<int>(rng() % 30);
    const int n = 8 + static_cast<int>(rng() % 40);
    Matrix a(m, n);
    for (int i = 0; i < m; ++i)
      for (int j = 0; j < n; ++j) a(i, j) = normal(rng) / std::sqrt(m);

    const bool logistic = trial >= 12;
    Vector y(m);
    if (logistic) {
      for (int i = 0; i < m; ++i) y[i] = (rng() & 1) ? 1.0 : -1.0;
    } else {
      for (int i = 0; i < m; ++i) y[i] = normal(rng);
    }
    const Problem prob(logistic ? LossKind::Logistic : LossKind::LeastSquares, a, y);

    const PenaltySpec p{trial % 2 ? PenaltyFamily::Power : PenaltyFamily::LogPower,
                        trial % 3 ? 0.5 : 2.0 / 3.0};
    SolverConfig cfg;
    cfg.lambda = trial % 2 ? 1e-3 : 1e-2;
    const double fracs[] = {0.5, 0.9, 0.99};
    cfg.mu_frac = fracs[trial % 3];
    cfg.max_iters = 20000;
    cfg.trace = TraceLevel::Light;

    const double lip = prob.lipschitz();
    const double mu = resolve_mu(cfg, lip);
    const auto t = thresholds(p, cfg.lambda, mu);
    auto objective = [&](const Vector& x) {
      return prob.value(x) + cfg.lambda * phi_sum(p, x);
    };

    StepObserver obs = [&](int, const Vector& x_prev, const Vector& grad_step,
                           const Vector& x_next) {
      const double drop = objective(x_prev) - objective(x_next);
      const double need = 0.5 * (1.0 / mu - lip) * (x_next - x_prev).squaredNorm();
      worst_decrease = std::max(worst_decrease, need - drop);
      if (drop < need - 1e-9) pass = false;
      for (int i = 0; i < x_next.size(); ++i) {
        if (x_next[i] != 0.0) {
          const double s = x_next[i] > 0.0 ? 1.0 : -1.0;
          const double lhs = x_next[i] + cfg.lambda * mu * s *
                                             phi_deriv1(p, std::abs(x_next[i]));
          const double gap = std::abs(lhs - grad_step[i]);
          worst_identity = std::max(worst_identity, gap);
          if (gap > 1e-8) pass = false;
        } else if (std::abs(grad_step[i]) > t.tau + 1e-8) {
          pass = false;
          worst_identity = std::max(worst_identity,
                                    std::abs(grad_step[i]) - t.tau);
        }
      }
    };
    ijt_solve(prob, p, cfg, obs);
  }
  report(8, pass, "sufficient decrease and the prox step identity, 20 problems",
         "worst decrease slack " + fmt(worst_decrease) + ", worst identity gap " +
             fmt(worst_identity));
}

void criterion_9(const std::vector<RecoveryRun>& runs) {
  bool pass = true;
  int checked = 0;
  for (const auto& r : runs) {
    if (r.status != SolveStatus::Converged) continue;
    ++checked;
    if (!r.support_freeze || !r.sign_freeze) {
      pass = false;
      continue;
    }
    if (*r.support_freeze > r.iterations - 50 || *r.sign_freeze > r.iterations - 50)
      pass = false;
  }
  pass = pass && checked > 0;
  report(9, pass, "support and sign freeze at least 50 iterations before the end",
         std::to_string(checked) + " converged runs checked");
}

void criterion_10() {
  std::mt19937_64 rng(1010);
  std::normal_distribution<double> normal(0.0, 1.0);
  bool implication_ok = true;
  int a_held = 0;
  for (int trial = 0; trial < 60; ++trial) {
    const int m = 20 + static_cast<int>(rng() % 60);
    const int cols = 8 + static_cast<int>(rng() % 12);
    Matrix a(m, cols);
    for (int i = 0; i < m; ++i)
      for (int j = 0; j < cols; ++j) a(i, j) = normal(rng) / std::sqrt(m);
    // a few nearly orthonormal designs so condition (a) actually fires
    if (trial % 3 == 0) a = Matrix::Identity(m, cols) + 0.01 * a;

    IndexSet I;
    for (int j = 0; j < cols && static_cast<int>(I.size()) < 5; ++j)
      if (rng() % 2) I.push_back(j);
    if (I.empty()) I.push_back(0);
    const double q = 0.1 + 0.8 * (trial / 60.0);
    const auto c = check_concentration(a, I, q, 0.5 / spectral_norm_sq(a));
    if (c.a_holds) {
      ++a_held;
      if (!(c.gram_cond < 2.0 / q)) implication_ok = false;
    }
  }

  const auto [dk, d2k] = rip_sufficient_bounds(0.5, 100, 300);
  const bool rip_ok = std::abs(dk - 0.3) <= 1e-12 && std::abs(d2k - 3.0 / 7.0) <= 1e-12;
  report(10, implication_ok && rip_ok && a_held > 0,
         "condition (a) implies Cond < 2/q; RIP bounds hit the worked numbers",
         "(a) held " + std::to_string(a_held) + "x, dk " + fmt(dk) + ", d2k " + fmt(d2k));
}

void criterion_11() {
  Matrix a(1, 1);
  a << 1.0;
  Vector y(1);
  y << 3.0;
  const Problem prob = Problem::least_squares(a, y);
  const double root = testor::stationary_point_1d(1.0, 3.0, 0.001, 0.5);

  SolverConfig scfg;
  scfg.lambda = 0.001;
  scfg.mu = 0.99;
  const double x_ijt = ijt_solve(prob, PenaltySpec{PenaltyFamily::Power, 0.5}, scfg)
                           .x_final[0];
  BaselineConfig bcfg;
  bcfg.lambda = 0.001;
  bcfg.q = 0.5;
  const double x_irls = irls_solve(prob, bcfg).x_final[0];
  const double x_irl1 = irl1_solve(prob, bcfg).x_final[0];

  const double dev = std::max({std::abs(x_ijt - root), std::abs(x_irls - root),
                               std::abs(x_irl1 - root)});
  const bool root_ok = std::abs(root - 2.99971131) <= 1e-7;
  report(11, dev <= 1e-3 && root_ok, "ijt, irls and irl1 share the 1-D fixed point",
         "root " + fmt(root) + ", max dev " + fmt(dev));
}

void criterion_12() {
  const std::vector<int> sizes = {250, 500, 1000, 1500};
  const int n_seeds = 3;
  std::vector<double> ijt_wall(sizes.size(), 0.0);
  std::vector<double> irl1_wall(sizes.size(), 0.0);

  for (std::size_t si = 0; si < sizes.size(); ++si) {
    const int n = sizes[si];
    std::vector<double> ijt_runs, irl1_runs;
    for (int s = 0; s < n_seeds; ++s) {
      const Instance inst = gen_instance(
          {.N = n, .M = n / 5, .k = 5, .variance = 5.0 / n,
           .amplitude_model = AmplitudeModel::StdNormal,
           .seed = 100 + static_cast<std::uint64_t>(10 * si + s)});
      const Problem prob = Problem::least_squares(inst.A, inst.y);

      SolverConfig cfg;
      cfg.lambda = 0.001;
      cfg.mu_frac = 0.99;
      cfg.tol_rel_change = 1e-10;
      cfg.trace = TraceLevel::Light;
      ijt_runs.push_back(
          ijt_solve(prob, PenaltySpec{PenaltyFamily::Power, 0.5}, cfg)
              .wall_time_total);

      BaselineConfig bcfg;
      bcfg.lambda = 0.001;
      bcfg.q = 0.5;
      irl1_runs.push_back(irl1_solve(prob, bcfg).wall_time_total);
    }
    std::sort(ijt_runs.begin(), ijt_runs.end());
    std::sort(irl1_runs.begin(), irl1_runs.end());
    ijt_wall[si] = ijt_runs[n_seeds / 2];  // medians tame seed noise
    irl1_wall[si] = irl1_runs[n_seeds / 2];
  }

  std::vector<double> logn, logt;
  for (std::size_t si = 0; si < sizes.size(); ++si) {
    logn.push_back(std::log(sizes[si]));
    logt.push_back(std::log(std::max(ijt_wall[si], 1e-6)));
  }
  const auto [slope, r2] = testor::linear_fit(logn, logt);
  (void)r2;
  const double ratio = irl1_wall.back() / ijt_wall.back();
  const double irl1_growth = irl1_wall.back() / irl1_wall.front();
  const double ijt_growth = ijt_wall.back() / ijt_wall.front();
  report(12, slope <= 2.2 && ratio >= 2.0,
         "ijt wall time grows at most ~quadratically; irl1 lags at N=1500",
         "growth exponent " + fmt(slope) + ", irl1/ijt ratio " + fmt(ratio) +
             ", growth irl1 " + fmt(irl1_growth) + "x vs ijt " + fmt(ijt_growth) +
             "x");
}

void criterion_13() {
  const NonKLFixture fix;
  const double e4 = std::exp(-4.0);
  const auto& p = fix.penalty();

  const double v_half = std::abs((fix.a1() * (0.5 - fix.b1()) * (0.5 - fix.b1()) +
                                  fix.c1()) -
                                 (e4 - phi_value(p, 0.5) + fix.C()));
  const double v_3half = std::abs((fix.a2() * (1.5 - fix.b2()) * (1.5 - fix.b2()) +
                                   fix.c2()) -
                                  (e4 - phi_value(p, 1.5) + fix.C()));
  const double d_half = std::abs(2.0 * fix.a1() * (0.5 - fix.b1()) -
                                 (-16.0 * e4 - phi_deriv1(p, 0.5)));
  const double d_3half = std::abs(2.0 * fix.a2() * (1.5 - fix.b2()) -
                                  (16.0 * e4 - phi_deriv1(p, 1.5)));
  const double worst_join = std::max({v_half, v_3half, d_half, d_3half});

  const NonKLLoss loss(fix);
  const double lip = loss.lipschitz();
  SolverConfig cfg;
  cfg.lambda = 1.0;
  cfg.mu = 0.9 / lip;
  cfg.max_iters = 3000;
  cfg.tol_rel_change = 1e-12;
  cfg.init = InitKind::Vector;
  cfg.init_vector = Vector::Constant(1, 3.0);

  bool descent_ok = true;
  double worst_slack = 0.0;
  auto objective = [&](const Vector& x) { return loss.value(x) + phi_sum(p, x); };
  StepObserver obs = [&](int, const Vector& x_prev, const Vector&, const Vector& x_next) {
    const double drop = objective(x_prev) - objective(x_next);
    const double need = 0.5 * (1.0 / *cfg.mu - lip) * (x_next - x_prev).squaredNorm();
    worst_slack = std::max(worst_slack, need - drop);
    if (drop < need - 1e-9) descent_ok = false;
  };
  ijt_solve(loss, p, cfg, obs);

  report(13, worst_join <= 1e-8 && descent_ok,
         "non-KL fixture joins smoothly and still admits sufficient decrease",
         "worst join gap " + fmt(worst_join) + ", worst decrease slack " +
             fmt(worst_slack));
}

}  // namespace

int main() {
  std::printf("acceptance suite\n");
  const auto t0 = clock_type::now();

  const std::vector<RecoveryRun> runs = run_recovery_suite();
  criterion_1(runs);
  criterion_2(runs);
  criterion_3(runs);
  criterion_4();
  criterion_5();
  criterion_6();
  criterion_7(runs);
  criterion_8();
  criterion_9(runs);
  criterion_10();
  criterion_11();
  criterion_12();
  criterion_13();

  const double wall = std::chrono::duration<double>(clock_type::now() - t0).count();
  std::printf("%d of 13 criteria failed (%.1fs)\n", g_failures, wall);
  return g_failures == 0 ? 0 : 1;
}
