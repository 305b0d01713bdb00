#include "ijt/solver.hpp"

#include <chrono>
#include <cmath>
#include <deque>
#include <limits>
#include <stdexcept>

#include "ijt/baselines.hpp"

namespace ijt {

double posteriori_error_bound(double rho, double last_step_norm) {
  if (!(rho > 0.0 && rho < 1.0))
    throw std::domain_error("posteriori_error_bound: rho must lie in (0,1)");
  if (!(last_step_norm >= 0.0))
    throw std::domain_error("posteriori_error_bound: step norm must be nonnegative");
  return rho / (1.0 - rho) * last_step_norm;
}

double resolve_mu(const SolverConfig& cfg, double lipschitz,
                  std::vector<std::string>* warnings) {
  if (cfg.mu.has_value() == cfg.mu_frac.has_value())
    throw std::invalid_argument("SolverConfig: set exactly one of mu, mu_frac");
  double mu;
  if (cfg.mu) {
    mu = *cfg.mu;
    if (!(mu > 0.0)) throw std::invalid_argument("SolverConfig: mu must be positive");
  } else {
    if (!(*cfg.mu_frac > 0.0 && *cfg.mu_frac < 1.0))
      throw std::invalid_argument("SolverConfig: mu_frac must lie in (0,1)");
    if (!(lipschitz > 0.0))
      throw std::invalid_argument("resolve_mu: nonpositive Lipschitz constant");
    mu = *cfg.mu_frac / lipschitz;
  }
  if (warnings && lipschitz > 0.0 && mu >= 1.0 / lipschitz)
    warnings->push_back("step size mu >= 1/L: descent is not guaranteed");
  return mu;
}

Vector ijt_step(const SmoothLoss& loss, const PenaltySpec& p,
                const SolverConfig& cfg, const Vector& x) {
  const double mu = resolve_mu(cfg, loss.lipschitz());
  Vector grad(x.size());
  loss.gradient(x, grad);
  return prox_vector(p, cfg.lambda, mu, x - mu * grad);
}

namespace {

Vector resolve_init_basic(const SmoothLoss& loss, const SolverConfig& cfg) {
  switch (cfg.init) {
    case InitKind::Zero:
      return Vector::Zero(loss.dim());
    case InitKind::Vector:
      if (cfg.init_vector.size() != loss.dim())
        throw std::invalid_argument("init vector has wrong dimension");
      if (!cfg.init_vector.allFinite())
        throw std::invalid_argument("init vector must be finite");
      return cfg.init_vector;
    case InitKind::L1Solution:
      throw std::invalid_argument(
          "InitKind::L1Solution requires the Problem overload of ijt_solve");
  }
  throw std::logic_error("unreachable");
}

void detect_freeze(SolveResult& res) {
  if (res.trace.support_changed.empty()) return;
  int last_supp = 0, last_sign = 0;
  const int n = static_cast<int>(res.trace.support_changed.size());
  for (int i = 0; i < n; ++i) {
    if (res.trace.support_changed[static_cast<std::size_t>(i)]) last_supp = i + 1;
    if (res.trace.sign_changed[static_cast<std::size_t>(i)]) last_sign = i + 1;
  }
  res.support_freeze_iter = last_supp;
  res.sign_freeze_iter = last_sign;
}

}  // namespace

SolveResult solve_with_rule(const SmoothLoss& loss, const ThresholdingRule& rule,
                            const SolverConfig& cfg, const Vector& x0,
                            const StepObserver& observer) {
  using clock = std::chrono::steady_clock;
  const auto t0 = clock::now();

  SolveResult res;
  const double lip = loss.lipschitz();
  const double mu = resolve_mu(cfg, lip, &res.warnings);
  res.mu_resolved = mu;

  Vector x = x0;
  Vector grad(x.size()), grad_next(x.size()), grad_step(x.size()), x_next(x.size());
  const double f0 = loss.value_and_gradient(x, grad);
  const double obj0 = f0 + rule.penalty_value(x);
  const double diverge_at =
      obj0 > 0.0 ? 1e12 * obj0 : std::numeric_limits<double>::infinity();

  const bool full = cfg.trace == TraceLevel::Full;
  IndexSet supp_prev = support_of(x);
  std::vector<std::int8_t> sign_prev = sign_of(x);

  std::deque<Vector> tail;
  if (cfg.keep_tail > 0) tail.push_back(x);

  res.status = SolveStatus::MaxIters;
  for (int n = 0; n < cfg.max_iters; ++n) {
    const auto it0 = clock::now();
    grad_step = x - mu * grad;
    rule.apply(grad_step, x_next);

    const double step = (x_next - x).norm();
    // one fused evaluation per iteration: the value at x_next feeds the
    // trace, the gradient feeds the next step
    const double f_next = loss.value_and_gradient(x_next, grad_next);
    const double obj = f_next + rule.penalty_value(x_next);

    res.trace.objective.push_back(obj);
    res.trace.step_norm.push_back(step);
    res.trace.wall_time.push_back(
        std::chrono::duration<double>(clock::now() - it0).count());
    if (full) {
      IndexSet supp = support_of(x_next);
      std::vector<std::int8_t> sg = sign_of(x_next);
      res.trace.support_changed.push_back(supp != supp_prev ? 1 : 0);
      res.trace.sign_changed.push_back(sg != sign_prev ? 1 : 0);
      supp_prev = std::move(supp);
      sign_prev = std::move(sg);
      res.trace.support.push_back(supp_prev);
      res.trace.sign.push_back(sign_prev);
    }
    if (observer) observer(n, x, grad_step, x_next);

    if (cfg.keep_tail > 0) {
      tail.push_back(x_next);
      if (static_cast<int>(tail.size()) > cfg.keep_tail) tail.pop_front();
    }
    x.swap(x_next);
    grad.swap(grad_next);
    res.iterations = n + 1;

    if (!std::isfinite(obj) || obj > diverge_at) {
      res.status = SolveStatus::Diverged;
      break;
    }
    const double xnorm = x.norm();
    const double rel = xnorm > 0.0
                           ? step / xnorm
                           : (step == 0.0 ? 0.0
                                          : std::numeric_limits<double>::infinity());
    if (rel < cfg.tol_rel_change) {
      res.status = SolveStatus::Converged;
      break;
    }
    if (cfg.posteriori_rho && cfg.stop_on_posteriori &&
        posteriori_error_bound(*cfg.posteriori_rho, step) <= *cfg.stop_on_posteriori) {
      res.status = SolveStatus::Converged;
      break;
    }
  }

  res.x_final = std::move(x);
  res.tail_iterates.assign(tail.begin(), tail.end());
  detect_freeze(res);
  res.wall_time_total = std::chrono::duration<double>(clock::now() - t0).count();
  return res;
}

SolveResult ijt_solve(const SmoothLoss& loss, const PenaltySpec& p,
                      const SolverConfig& cfg, const StepObserver& observer) {
  validate(p);
  const double mu = resolve_mu(cfg, loss.lipschitz());
  const ThresholdPair t = thresholds(p, cfg.lambda, mu);
  ThresholdingRule rule{
      [&p, t](const Vector& in, Vector& out) {
        out.resize(in.size());
        for (int i = 0; i < in.size(); ++i) out[i] = prox_scalar(p, t, in[i]);
      },
      [&p, lambda = cfg.lambda](const Vector& x) { return lambda * phi_sum(p, x); }};
  return solve_with_rule(loss, rule, cfg, resolve_init_basic(loss, cfg), observer);
}

SolveResult ijt_solve(const Problem& prob, const PenaltySpec& p,
                      const SolverConfig& cfg, const StepObserver& observer) {
  if (cfg.init != InitKind::L1Solution)
    return ijt_solve(static_cast<const SmoothLoss&>(prob), p, cfg, observer);

  if (prob.kind() != LossKind::LeastSquares)
    throw std::invalid_argument("L1Solution init requires a least-squares problem");
  const double lambda_init =
      0.01 * (prob.matrix().transpose() * prob.rhs()).cwiseAbs().maxCoeff();
  const FistaResult init = fista_l1(prob, lambda_init, 1e-8, 20000);

  SolverConfig inner = cfg;
  inner.init = InitKind::Vector;
  inner.init_vector = init.x;
  return ijt_solve(static_cast<const SmoothLoss&>(prob), p, inner, observer);
}

SolveResult soft_solve(const Problem& prob, const SolverConfig& cfg,
                       const StepObserver& observer) {
  const double mu = resolve_mu(cfg, prob.lipschitz());
  const double threshold = cfg.lambda * mu;
  ThresholdingRule rule{
      [threshold](const Vector& in, Vector& out) {
        out.resize(in.size());
        for (int i = 0; i < in.size(); ++i) out[i] = prox_soft(threshold, in[i]);
      },
      [lambda = cfg.lambda](const Vector& x) {
        return lambda * x.cwiseAbs().sum();
      }};
  return solve_with_rule(prob, rule, cfg, resolve_init_basic(prob, cfg), observer);
}

SolveResult hard_solve(const Problem& prob, const SolverConfig& cfg,
                       const StepObserver& observer) {
  const double mu = resolve_mu(cfg, prob.lipschitz());
  const double lambda_mu = cfg.lambda * mu;
  ThresholdingRule rule{
      [lambda_mu](const Vector& in, Vector& out) {
        out.resize(in.size());
        for (int i = 0; i < in.size(); ++i) out[i] = prox_hard(lambda_mu, in[i]);
      },
      [lambda = cfg.lambda](const Vector& x) {
        return lambda * static_cast<double>(support_of(x).size());
      }};
  return solve_with_rule(prob, rule, cfg, resolve_init_basic(prob, cfg), observer);
}

}  // namespace ijt
