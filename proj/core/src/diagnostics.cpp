#include "ijt/diagnostics.hpp"

#include <cmath>
#include <limits>
#include <stdexcept>

#include <nlohmann/json.hpp>

#include "ijt/linalg.hpp"
#include "ijt/prox.hpp"

namespace ijt {

namespace {

constexpr int kMaxSupportSize = 200;

Matrix restricted_columns(const Matrix& a, const IndexSet& I) {
  Matrix sub(a.rows(), static_cast<Eigen::Index>(I.size()));
  for (std::size_t j = 0; j < I.size(); ++j) {
    const int col = I[j];
    if (col < 0 || col >= a.cols())
      throw std::invalid_argument("support index out of range");
    sub.col(static_cast<Eigen::Index>(j)) = a.col(col);
  }
  return sub;
}

// grad^2_II F(x) for the two problem kinds.
Matrix restricted_loss_hessian(const Vector& x, const Problem& prob,
                               const IndexSet& I) {
  const Matrix sub = restricted_columns(prob.matrix(), I);
  if (prob.kind() == LossKind::LeastSquares) {
    return Matrix(sub.transpose() * sub);
  }
  const int m = prob.rows();
  Vector margins = prob.matrix() * x;
  Vector w(m);
  for (int i = 0; i < m; ++i) {
    const double t = -prob.rhs()[i] * margins[i];
    const double sig = 1.0 / (1.0 + std::exp(-t));
    w[i] = sig * (1.0 - sig) / m;
  }
  return Matrix(sub.transpose() * w.asDiagonal() * sub);
}

}  // namespace

std::pair<double, double> optimality_residual(const Vector& x, const Problem& prob,
                                              const PenaltySpec& p, double lambda,
                                              double mu) {
  if (!x.allFinite())
    throw std::invalid_argument("optimality_residual: x must be finite");
  const ThresholdPair t = thresholds(p, lambda, mu);
  const Vector grad = loss_grad(prob, x);

  double on_support = 0.0, off_support = 0.0;
  for (int i = 0; i < x.size(); ++i) {
    if (x[i] != 0.0) {
      const double s = x[i] > 0.0 ? 1.0 : -1.0;
      on_support = std::max(
          on_support, std::abs(grad[i] + lambda * s * phi_deriv1(p, std::abs(x[i]))));
    } else {
      off_support = std::max(off_support, std::abs(grad[i]) - t.tau / mu);
    }
  }
  return {on_support, std::max(0.0, off_support)};
}

double restricted_gram_min_eig(const Matrix& a, const IndexSet& I) {
  if (I.empty())
    throw std::invalid_argument("restricted_gram_min_eig: empty support");
  if (static_cast<int>(I.size()) > kMaxSupportSize)
    throw std::invalid_argument("restricted_gram_min_eig: support larger than 200");
  const Matrix sub = restricted_columns(a, I);
  const Matrix gram = sub.transpose() * sub;
  return jacobi_eigenvalues(gram)[0];
}

ConcentrationCheck check_concentration(const Matrix& a, const IndexSet& I, double q,
                                  double mu) {
  if (!(q > 0.0 && q < 1.0))
    throw std::invalid_argument("check_concentration: q must lie in (0,1)");
  if (!(mu > 0.0)) throw std::invalid_argument("check_concentration: mu must be positive");
  if (I.empty())
    throw std::invalid_argument("check_concentration: empty support");
  if (static_cast<int>(I.size()) > kMaxSupportSize)
    throw std::invalid_argument("check_concentration: support larger than 200");

  const Matrix sub = restricted_columns(a, I);
  const Matrix gram = sub.transpose() * sub;
  const Vector eig = jacobi_eigenvalues(gram);

  ConcentrationCheck c;
  c.gram_min_eig = eig[0];
  c.gram_max_eig = eig[eig.size() - 1];
  c.gram_cond = c.gram_min_eig > 0.0
                    ? c.gram_max_eig / c.gram_min_eig
                    : std::numeric_limits<double>::infinity();
  c.spectral_norm_sq = spectral_norm_sq(a);
  c.margin_a = c.gram_min_eig / c.spectral_norm_sq - q / 2.0;
  c.a_holds = c.margin_a > 0.0;
  c.mu_lo = c.gram_min_eig > 0.0 ? q / (2.0 * c.gram_min_eig)
                                 : std::numeric_limits<double>::infinity();
  c.mu_hi = 1.0 / c.spectral_norm_sq;
  c.b_holds = c.mu_lo < mu && mu < c.mu_hi;
  c.cond_bound_holds = c.gram_cond < 2.0 / q;
  return c;
}

double restricted_hessian_min_eig(const Vector& x_star, const Problem& prob,
                                  const PenaltySpec& p, double lambda) {
  const IndexSet I = support_of(x_star);
  if (I.empty())
    throw std::invalid_argument("restricted_hessian_min_eig: empty support");
  if (static_cast<int>(I.size()) > kMaxSupportSize)
    throw std::invalid_argument("restricted_hessian_min_eig: support larger than 200");

  Matrix h = restricted_loss_hessian(x_star, prob, I);
  for (std::size_t j = 0; j < I.size(); ++j) {
    const auto jj = static_cast<Eigen::Index>(j);
    h(jj, jj) += lambda * phi_deriv2(p, std::abs(x_star[I[j]]));
  }
  return jacobi_eigenvalues(h)[0];
}

std::optional<double> contraction_factor(const Vector& x_star, const Problem& prob,
                                         const PenaltySpec& p, double lambda,
                                         double mu) {
  const IndexSet I = support_of(x_star);
  if (I.empty())
    throw std::invalid_argument("contraction_factor: empty support");

  const double alpha_f = restricted_hessian_min_eig(x_star, prob, p, 0.0);
  double e = std::numeric_limits<double>::infinity();
  for (int i : I) e = std::min(e, std::abs(x_star[i]));

  const double lip = prob.lipschitz();
  const double denom = 1.0 + lambda * mu * phi_deriv2(p, e);
  if (!(denom > 0.0)) return std::nullopt;
  const double num =
      std::sqrt(std::max(0.0, 1.0 - 2.0 * mu * alpha_f + mu * mu * lip * lip));
  const double rho = num / denom;
  if (rho < 1.0) return rho;  // rho = 0 is the perfect-contraction limit
  return std::nullopt;
}

double relative_error_check(std::span<const Vector> window, const Problem& prob,
                            const PenaltySpec& p, double lambda, double mu) {
  if (window.size() < 2)
    throw std::invalid_argument("relative_error_check: need at least two iterates");
  const IndexSet I = support_of(window[0]);
  for (const Vector& x : window)
    if (support_of(x) != I)
      throw std::invalid_argument("relative_error_check: support changes in window");

  const double lip = prob.lipschitz();
  double worst = -std::numeric_limits<double>::infinity();
  for (std::size_t n = 0; n + 1 < window.size(); ++n) {
    const Vector& cur = window[n + 1];
    const Vector grad = loss_grad(prob, cur);
    double norm_sq = 0.0;
    for (int i : I) {
      const double s = cur[i] > 0.0 ? 1.0 : -1.0;
      const double g = grad[i] + lambda * s * phi_deriv1(p, std::abs(cur[i]));
      norm_sq += g * g;
    }
    const double lhs = std::sqrt(norm_sq);
    const double rhs = (1.0 / mu + lip) * (cur - window[n]).norm();
    worst = std::max(worst, lhs - rhs);
  }
  return worst;
}

std::pair<double, double> rip_sufficient_bounds(double q, int K, int N) {
  if (!(q > 0.0 && q < 1.0))
    throw std::domain_error("rip_sufficient_bounds: q must lie in (0,1)");
  if (K < 1 || N < 1 || 2 * K >= N)
    throw std::domain_error("rip_sufficient_bounds: need 1 <= K < N/2");
  const double ratio = static_cast<double>(N) / static_cast<double>(K);
  return {(2.0 - q) / (2.0 + 2.0 * q * ratio), (2.0 - q) / (2.0 + q * ratio)};
}

DiagnosticsReport make_report(const Problem& prob, const PenaltySpec& p,
                              double lambda, double mu, const Vector& x,
                              std::optional<double> last_step_norm) {
  DiagnosticsReport r;
  const ThresholdPair t = thresholds(p, lambda, mu);
  r.eta = t.eta;
  r.tau = t.tau;
  r.L = prob.lipschitz();
  r.spectral_norm_sq = prob.spectral_norm_sq();
  r.support = support_of(x);

  const auto res = optimality_residual(x, prob, p, lambda, mu);
  r.optimality_residual_support = res.first;
  r.optimality_residual_offsupport = res.second;

  if (!r.support.empty() && static_cast<int>(r.support.size()) <= kMaxSupportSize) {
    double e = std::numeric_limits<double>::infinity();
    for (int i : r.support) e = std::min(e, std::abs(x[i]));
    r.e_min = e;

    const ConcentrationCheck c = check_concentration(prob.matrix(), r.support, p.q, mu);
    r.gram_min_eig = c.gram_min_eig;
    r.gram_cond = c.gram_cond;
    r.thm6_a_holds = c.a_holds;
    r.thm6_b_holds = c.b_holds;

    r.restricted_hessian_min_eig = restricted_hessian_min_eig(x, prob, p, lambda);
    const double hf_min = restricted_hessian_min_eig(x, prob, p, 0.0);
    r.lambda_bound = -hf_min / phi_deriv2(p, e);

    const auto rho = contraction_factor(x, prob, p, lambda, mu);
    if (rho && *rho > 0.0) {  // reported only strictly inside (0,1)
      r.rho_star = rho;
      if (last_step_norm)
        r.posteriori_bound = *rho / (1.0 - *rho) * *last_step_norm;
    }
  }
  return r;
}

std::string to_json(const DiagnosticsReport& r) {
  nlohmann::ordered_json j;
  j["eta"] = r.eta;
  j["tau"] = r.tau;
  j["L"] = r.L;
  j["spectral_norm_sq"] = r.spectral_norm_sq;
  j["support"] = r.support;
  if (r.e_min) j["e_min"] = *r.e_min;
  if (r.gram_min_eig) j["gram_min_eig"] = *r.gram_min_eig;
  if (r.gram_cond) j["gram_cond"] = *r.gram_cond;
  if (r.thm6_a_holds) j["thm6_a_holds"] = *r.thm6_a_holds;
  if (r.thm6_b_holds) j["thm6_b_holds"] = *r.thm6_b_holds;
  if (r.restricted_hessian_min_eig)
    j["restricted_hessian_min_eig"] = *r.restricted_hessian_min_eig;
  if (r.lambda_bound) j["lambda_bound"] = *r.lambda_bound;
  if (r.rho_star) {
    j["rho_star"] = *r.rho_star;
    j["rho_star_note"] = "asymptotic estimate (neighborhood corrections dropped)";
  }
  if (r.posteriori_bound) j["posteriori_bound"] = *r.posteriori_bound;
  j["optimality_residual_support"] = r.optimality_residual_support;
  j["optimality_residual_offsupport"] = r.optimality_residual_offsupport;
  return j.dump(2);
}

}  // namespace ijt
