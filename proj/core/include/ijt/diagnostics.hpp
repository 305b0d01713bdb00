#pragma once

#include <optional>
#include <span>
#include <string>
#include <utility>

#include "ijt/loss.hpp"
#include "ijt/penalty.hpp"
#include "ijt/types.hpp"

namespace ijt {

/// Outcome of the concentration-condition checks on a support set I:
///   (a) lambda_min(A_I^T A_I) / ||A||_2^2 > q/2
///   (b) q / (2 lambda_min) < mu < 1 / ||A||_2^2
/// plus the implied bound Cond(A_I^T A_I) < 2/q.
struct ConcentrationCheck {
  double gram_min_eig = 0.0;
  double gram_max_eig = 0.0;
  double gram_cond = 0.0;
  double spectral_norm_sq = 0.0;
  bool a_holds = false;
  bool b_holds = false;
  bool cond_bound_holds = false;
  double margin_a = 0.0;  // lambda_min/||A||^2 - q/2
  double mu_lo = 0.0;     // q / (2 lambda_min)
  double mu_hi = 0.0;     // 1 / ||A||^2
};

struct DiagnosticsReport {
  double eta = 0.0;
  double tau = 0.0;
  double L = 0.0;
  double spectral_norm_sq = 0.0;
  IndexSet support;
  std::optional<double> e_min;                     // min_{i in I} |x_i|
  std::optional<double> gram_min_eig;
  std::optional<double> gram_cond;
  std::optional<bool> thm6_a_holds;
  std::optional<bool> thm6_b_holds;
  std::optional<double> restricted_hessian_min_eig;
  std::optional<double> lambda_bound;              // -lambda_min(H_F) / phi''(e)
  std::optional<double> rho_star;                  // asymptotic contraction factor
  std::optional<double> posteriori_bound;
  double optimality_residual_support = 0.0;
  double optimality_residual_offsupport = 0.0;
};

// Stationarity residuals of x: on the support, the max violation of
// [grad F]_i + lambda sign(x_i) phi'(|x_i|) = 0; off the support, the max
// excess of |[grad F]_i| over tau/mu. Both ~0 iff x is a stationary point.
std::pair<double, double> optimality_residual(const Vector& x, const Problem& prob,
                                              const PenaltySpec& p, double lambda,
                                              double mu);

// Smallest eigenvalue of A_I^T A_I via the dense Jacobi solver.
// Throws std::invalid_argument on empty I and on |I| > 200.
double restricted_gram_min_eig(const Matrix& a, const IndexSet& I);

ConcentrationCheck check_concentration(const Matrix& a, const IndexSet& I, double q,
                                  double mu);

// lambda_min of  grad^2_II F(x) + lambda diag(phi''(|x_i|)), i in Supp(x).
// At lambda = 0 this is the restricted Hessian of the data-fit term alone.
double restricted_hessian_min_eig(const Vector& x_star, const Problem& prob,
                                  const PenaltySpec& p, double lambda);

// Asymptotic contraction factor
//   rho* = sqrt(max(0, 1 - 2 mu a_F + mu^2 L^2)) / (1 + lambda mu phi''(e)),
// a_F = lambda_min(grad^2_II F(x*)), e = min_{i in I} |x_i*|. Absent unless
// the denominator is positive and the value lands in (0,1).
std::optional<double> contraction_factor(const Vector& x_star, const Problem& prob,
                                         const PenaltySpec& p, double lambda,
                                         double mu);

// Max over consecutive iterate pairs (support frozen across the window) of
//   ||[grad F(x+)]_I + lambda phi1(x+_I)||  -  (1/mu + L) ||x+ - x||.
// Nonpositive (up to roundoff) when the relative-error condition holds.
double relative_error_check(std::span<const Vector> window, const Problem& prob,
                            const PenaltySpec& p, double lambda, double mu);

// Sufficient RIP thresholds ((2-q)/(2+2qN/K), (2-q)/(2+qN/K)) for the
// concentration condition; requires K < N/2.
std::pair<double, double> rip_sufficient_bounds(double q, int K, int N);

DiagnosticsReport make_report(const Problem& prob, const PenaltySpec& p,
                              double lambda, double mu, const Vector& x,
                              std::optional<double> last_step_norm = std::nullopt);

// Flat JSON object with the DiagnosticsReport field names; absent optional
// fields are omitted.
std::string to_json(const DiagnosticsReport& r);

}  // namespace ijt
