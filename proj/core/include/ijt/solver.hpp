#pragma once

#include <functional>
#include <optional>
#include <string>
#include <vector>

#include "ijt/loss.hpp"
#include "ijt/penalty.hpp"
#include "ijt/prox.hpp"
#include "ijt/types.hpp"

namespace ijt {

enum class InitKind { Zero, Vector, L1Solution };
enum class TraceLevel { Light, Full };
enum class SolveStatus { Converged, MaxIters, Diverged };

struct SolverConfig {
  double lambda = 1e-3;
  std::optional<double> mu;       // absolute step size
  std::optional<double> mu_frac;  // mu = mu_frac / L, mu_frac in (0,1)
  InitKind init = InitKind::Zero;
  Vector init_vector;             // used when init == Vector
  double tol_rel_change = 1e-10;  // stop when ||x+ - x|| / ||x+|| < tol
  int max_iters = 100000;
  // Optional terminal rule: stop once rho/(1-rho) * step_norm <= target.
  std::optional<double> posteriori_rho;
  std::optional<double> stop_on_posteriori;
  TraceLevel trace = TraceLevel::Full;
  int keep_tail = 0;              // retain this many final iterates
};

struct IterTrace {
  std::vector<double> objective;   // T_lambda(x^{n+1})
  std::vector<double> step_norm;   // ||x^{n+1} - x^n||
  std::vector<double> wall_time;   // seconds spent in iteration n
  // Full traces only:
  std::vector<IndexSet> support;               // Supp(x^{n+1})
  std::vector<std::vector<std::int8_t>> sign;  // sign(x^{n+1})
  std::vector<std::uint8_t> support_changed;   // vs the previous iterate
  std::vector<std::uint8_t> sign_changed;
  std::size_t size() const { return objective.size(); }
};

struct SolveResult {
  Vector x_final;
  SolveStatus status = SolveStatus::MaxIters;
  int iterations = 0;
  IterTrace trace;
  std::optional<int> support_freeze_iter;  // first n with I^m = I^n for all m >= n
  std::optional<int> sign_freeze_iter;
  std::vector<Vector> tail_iterates;       // last keep_tail iterates, oldest first
  double mu_resolved = 0.0;
  double wall_time_total = 0.0;
  std::vector<std::string> warnings;
};

/// Called once per iteration with (n, x^n, x^n - mu grad F(x^n), x^{n+1});
/// used by tests and diagnostics to verify per-iteration identities.
using StepObserver =
    std::function<void(int, const Vector&, const Vector&, const Vector&)>;

/// A thresholding rule driving the generic iteration, paired with the
/// penalty term it minimizes (for objective tracing).
struct ThresholdingRule {
  std::function<void(const Vector&, Vector&)> apply;
  std::function<double(const Vector&)> penalty_value;
};

// One IJT step: prox_vector(p, lambda, mu, x - mu grad F(x)).
Vector ijt_step(const SmoothLoss& loss, const PenaltySpec& p,
                const SolverConfig& cfg, const Vector& x);

// Full IJT solve. The SmoothLoss overload accepts Zero/Vector inits only;
// the Problem overload also resolves InitKind::L1Solution via the FISTA
// l1 solver with lambda = 0.01 ||A^T y||_inf and tol 1e-8.
SolveResult ijt_solve(const SmoothLoss& loss, const PenaltySpec& p,
                      const SolverConfig& cfg, const StepObserver& observer = {});
SolveResult ijt_solve(const Problem& prob, const PenaltySpec& p,
                      const SolverConfig& cfg, const StepObserver& observer = {});

// Iterative soft / hard thresholding baselines sharing the same engine.
// soft uses threshold lambda*mu (penalty lambda ||x||_1); hard keeps entries
// above sqrt(2 lambda mu) (penalty lambda ||x||_0).
SolveResult soft_solve(const Problem& prob, const SolverConfig& cfg,
                       const StepObserver& observer = {});
SolveResult hard_solve(const Problem& prob, const SolverConfig& cfg,
                       const StepObserver& observer = {});

// Generic engine: iterate x <- rule.apply(x - mu grad F(x)) from x0.
SolveResult solve_with_rule(const SmoothLoss& loss, const ThresholdingRule& rule,
                            const SolverConfig& cfg, const Vector& x0,
                            const StepObserver& observer = {});

// rho/(1-rho) * last_step_norm; throws std::domain_error unless rho in (0,1).
double posteriori_error_bound(double rho, double last_step_norm);

// Resolves the configured step size against the Lipschitz constant L.
// Returns the concrete mu; appends a warning if mu >= 1/L.
double resolve_mu(const SolverConfig& cfg, double lipschitz,
                  std::vector<std::string>* warnings = nullptr);

}  // namespace ijt
