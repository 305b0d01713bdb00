#pragma once

#include <functional>

#include "ijt/loss.hpp"
#include "ijt/solver.hpp"
#include "ijt/types.hpp"

namespace ijt {

/// Settings shared by the reweighting baselines. The smoothing parameter
/// epsilon starts at epsilon0 and decays by epsilon_decay whenever the outer
/// relative change stalls, down to epsilon_floor.
struct BaselineConfig {
  double lambda = 1e-3;
  double q = 0.5;
  double epsilon0 = 1.0;
  double epsilon_decay = 0.1;
  double epsilon_floor = 1e-8;
  int outer_max = 100;
  double inner_tol = 1e-8;
  int inner_max = 5000;
};

struct FistaResult {
  Vector x;
  bool converged = false;
  int iterations = 0;
};

// Accelerated proximal gradient for 1/2 ||Ax-y||^2 + lambda ||x||_1 with
// function-value restart. Least-squares problems only.
FistaResult fista_l1(const Problem& prob, double lambda, double tol, int max_iters);

// Weighted variant: penalty lambda sum_i w_i |x_i|, warm-started from x0.
FistaResult fista_weighted_l1(const Problem& prob, const Vector& weights,
                              double lambda, const Vector& x0, double tol,
                              int max_iters);

/// Observer over outer reweighting rounds: (round, iterate, epsilon).
using OuterObserver = std::function<void(int, const Vector&, double)>;

// Iteratively reweighted least squares for the smoothed lq objective:
// each round solves (A^T A + lambda q diag(w)) x = A^T y by conjugate
// gradient with w_i = (x_i^2 + eps)^{q/2-1}.
SolveResult irls_solve(const Problem& prob, const BaselineConfig& cfg,
                       const OuterObserver& observer = {});

// Iteratively reweighted l1: each round runs weighted-l1 FISTA with
// w_i = q (|x_i| + eps)^{q-1}, warm-started from the previous round.
SolveResult irl1_solve(const Problem& prob, const BaselineConfig& cfg,
                       const OuterObserver& observer = {});

}  // namespace ijt
