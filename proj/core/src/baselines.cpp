#include "ijt/baselines.hpp"

#include <chrono>
#include <cmath>
#include <limits>
#include <stdexcept>

#include "ijt/linalg.hpp"
#include "ijt/penalty.hpp"
#include "ijt/prox.hpp"

namespace ijt {

namespace {

void require_least_squares(const Problem& prob, const char* who) {
  if (prob.kind() != LossKind::LeastSquares)
    throw std::invalid_argument(std::string(who) + ": least-squares problems only");
}

// Outer stall rule shared by the reweighting loops.
constexpr double kStallTol = 1e-6;

double lq_objective(const Problem& prob, double lambda, double q, const Vector& x) {
  double pen = 0.0;
  for (int i = 0; i < x.size(); ++i) pen += std::pow(std::abs(x[i]), q);
  return prob.value(x) + lambda * pen;
}

void push_trace_row(IterTrace& trace, double obj, double step, double wall,
                    const Vector& x) {
  trace.objective.push_back(obj);
  trace.step_norm.push_back(step);
  trace.wall_time.push_back(wall);
  IndexSet supp = support_of(x);
  std::vector<std::int8_t> sg = sign_of(x);
  const bool changed_supp = trace.support.empty() || trace.support.back() != supp;
  const bool changed_sign = trace.sign.empty() || trace.sign.back() != sg;
  trace.support_changed.push_back(changed_supp ? 1 : 0);
  trace.sign_changed.push_back(changed_sign ? 1 : 0);
  trace.support.push_back(std::move(supp));
  trace.sign.push_back(std::move(sg));
}

}  // namespace

FistaResult fista_weighted_l1(const Problem& prob, const Vector& weights,
                              double lambda, const Vector& x0, double tol,
                              int max_iters) {
  require_least_squares(prob, "fista_weighted_l1");
  if (weights.size() != prob.dim())
    throw std::invalid_argument("fista_weighted_l1: weight vector has wrong size");

  const double lip = prob.lipschitz();
  if (!(lip > 0.0)) return {x0, true, 0};
  const double step = 1.0 / lip;

  Vector x = x0, x_prev = x0, yv = x0, grad(x0.size());
  double t = 1.0;
  double obj_prev = std::numeric_limits<double>::infinity();

  auto objective = [&](const Vector& v) {
    double pen = 0.0;
    for (int i = 0; i < v.size(); ++i) pen += weights[i] * std::abs(v[i]);
    return prob.value(v) + lambda * pen;
  };

  FistaResult out;
  for (int k = 0; k < max_iters; ++k) {
    prob.gradient(yv, grad);
    x_prev.swap(x);
    for (int i = 0; i < x.size(); ++i) {
      const double z = yv[i] - step * grad[i];
      const double thr = lambda * step * weights[i];
      x[i] = thr > 0.0 ? prox_soft(thr, z) : z;
    }

    const double obj = objective(x);
    if (obj > obj_prev) {  // function restart keeps the objective monotone
      t = 1.0;
      yv = x;
    } else {
      const double t_next = 0.5 * (1.0 + std::sqrt(1.0 + 4.0 * t * t));
      yv = x + ((t - 1.0) / t_next) * (x - x_prev);
      t = t_next;
    }
    obj_prev = std::min(obj_prev, obj);

    out.iterations = k + 1;
    const double rel = (x - x_prev).norm() / std::max(1.0, x.norm());
    if (rel <= tol) {
      out.converged = true;
      break;
    }
  }
  out.x = std::move(x);
  return out;
}

FistaResult fista_l1(const Problem& prob, double lambda, double tol, int max_iters) {
  return fista_weighted_l1(prob, Vector::Ones(prob.dim()), lambda,
                           Vector::Zero(prob.dim()), tol, max_iters);
}

SolveResult irls_solve(const Problem& prob, const BaselineConfig& cfg,
                       const OuterObserver& observer) {
  require_least_squares(prob, "irls_solve");
  if (!(cfg.epsilon_decay > 0.0 && cfg.epsilon_decay < 1.0))
    throw std::invalid_argument("irls_solve: epsilon_decay must lie in (0,1)");
  if (!(cfg.epsilon_floor > 0.0))
    throw std::invalid_argument("irls_solve: epsilon_floor must be positive");

  using clock = std::chrono::steady_clock;
  const auto t0 = clock::now();

  const Matrix& a = prob.matrix();
  const Vector aty = a.transpose() * prob.rhs();
  const int n = prob.dim();

  SolveResult res;
  res.status = SolveStatus::MaxIters;
  Vector x = Vector::Zero(n);
  Vector w(n);
  double eps = cfg.epsilon0;

  for (int outer = 0; outer < cfg.outer_max; ++outer) {
    const auto it0 = clock::now();
    for (int i = 0; i < n; ++i)
      w[i] = std::pow(x[i] * x[i] + eps, cfg.q / 2.0 - 1.0);

    auto apply = [&](const Vector& v, Vector& out) {
      out.noalias() = a.transpose() * (a * v);
      out += cfg.lambda * cfg.q * w.cwiseProduct(v);
    };
    Vector x_next = conjugate_gradient(apply, aty, x, cfg.inner_tol, cfg.inner_max);

    const double step = (x_next - x).norm();
    const double rel = step / std::max(1.0, x_next.norm());
    x = std::move(x_next);

    push_trace_row(res.trace, lq_objective(prob, cfg.lambda, cfg.q, x), step,
                   std::chrono::duration<double>(clock::now() - it0).count(), x);
    if (observer) observer(outer, x, eps);
    res.iterations = outer + 1;

    if (rel < kStallTol) {
      if (eps <= cfg.epsilon_floor) {
        res.status = SolveStatus::Converged;
        break;
      }
      eps = std::max(eps * cfg.epsilon_decay, cfg.epsilon_floor);
    }
  }

  res.x_final = std::move(x);
  res.wall_time_total = std::chrono::duration<double>(clock::now() - t0).count();
  return res;
}

SolveResult irl1_solve(const Problem& prob, const BaselineConfig& cfg,
                       const OuterObserver& observer) {
  require_least_squares(prob, "irl1_solve");
  if (!(cfg.epsilon_decay > 0.0 && cfg.epsilon_decay < 1.0))
    throw std::invalid_argument("irl1_solve: epsilon_decay must lie in (0,1)");
  if (!(cfg.epsilon_floor > 0.0))
    throw std::invalid_argument("irl1_solve: epsilon_floor must be positive");

  using clock = std::chrono::steady_clock;
  const auto t0 = clock::now();

  const int n = prob.dim();
  SolveResult res;
  res.status = SolveStatus::MaxIters;
  Vector x = Vector::Zero(n);
  Vector w(n);
  double eps = cfg.epsilon0;
  bool inner_ok = true;

  for (int outer = 0; outer < cfg.outer_max; ++outer) {
    const auto it0 = clock::now();
    for (int i = 0; i < n; ++i)
      w[i] = cfg.q * std::pow(std::abs(x[i]) + eps, cfg.q - 1.0);

    FistaResult inner =
        fista_weighted_l1(prob, w, cfg.lambda, x, cfg.inner_tol, cfg.inner_max);
    inner_ok = inner_ok && inner.converged;

    const double step = (inner.x - x).norm();
    const double rel = step / std::max(1.0, inner.x.norm());
    x = std::move(inner.x);

    push_trace_row(res.trace, lq_objective(prob, cfg.lambda, cfg.q, x), step,
                   std::chrono::duration<double>(clock::now() - it0).count(), x);
    if (observer) observer(outer, x, eps);
    res.iterations = outer + 1;

    if (rel < kStallTol) {
      if (eps <= cfg.epsilon_floor) {
        res.status = SolveStatus::Converged;
        break;
      }
      eps = std::max(eps * cfg.epsilon_decay, cfg.epsilon_floor);
    }
  }

  if (!inner_ok)
    res.warnings.push_back("irl1: an inner weighted-l1 solve hit its iteration cap");
  res.x_final = std::move(x);
  res.wall_time_total = std::chrono::duration<double>(clock::now() - t0).count();
  return res;
}

}  // namespace ijt
