#include "ijt/prox.hpp"

#include <cmath>
#include <stdexcept>
#include <string>

namespace ijt {

namespace {

constexpr int kMaxRootIters = 200;

void require_positive(double v, const char* who) {
  if (!(v > 0.0) || !std::isfinite(v))
    throw std::domain_error(std::string(who) + ": argument must be positive and finite");
}

}  // namespace

double rho(const PenaltySpec& p, double lambda_mu, double v) {
  require_positive(lambda_mu, "rho(lambda_mu)");
  require_positive(v, "rho(v)");
  return v + lambda_mu * phi_deriv1(p, v);
}

double psi(const PenaltySpec& p, double z) {
  require_positive(z, "psi");
  return 2.0 * (phi_value(p, z) - z * phi_deriv1(p, z)) / (z * z);
}

ThresholdPair thresholds_by_inversion(const PenaltySpec& p, double lambda, double mu) {
  require_positive(lambda, "thresholds(lambda)");
  require_positive(mu, "thresholds(mu)");
  const double lm = lambda * mu;
  const double target = 1.0 / lm;

  // psi is strictly decreasing on (0,inf) onto (0,inf): bracket the root of
  // psi(z) = target by doubling/halving from z = 1.
  double lo = 1.0, hi = 1.0;
  int steps = 0;
  while (psi(p, lo) < target) {
    lo *= 0.5;
    if (++steps > kMaxRootIters)
      throw std::runtime_error("thresholds: failed to bracket psi from below (lambda*mu too small?)");
  }
  steps = 0;
  while (psi(p, hi) > target) {
    hi *= 2.0;
    if (++steps > kMaxRootIters)
      throw std::runtime_error("thresholds: failed to bracket psi from above (lambda*mu too large?)");
  }
  for (int it = 0; it < kMaxRootIters && (hi - lo) > 1e-15 * hi; ++it) {
    const double mid = 0.5 * (lo + hi);
    (psi(p, mid) >= target ? lo : hi) = mid;
  }
  const double eta = 0.5 * (lo + hi);
  return ThresholdPair{eta, rho(p, lm, eta), lm};
}

ThresholdPair thresholds(const PenaltySpec& p, double lambda, double mu) {
  if (p.family == PenaltyFamily::LogPower) return thresholds_by_inversion(p, lambda, mu);
  require_positive(lambda, "thresholds(lambda)");
  require_positive(mu, "thresholds(mu)");
  const double q = p.q;
  const double lm = lambda * mu;
  const double eta = std::pow(2.0 * lm * (1.0 - q), 1.0 / (2.0 - q));
  const double tau = (2.0 - q) / (2.0 - 2.0 * q) * eta;
  return ThresholdPair{eta, tau, lm};
}

double prox_scalar(const PenaltySpec& p, const ThresholdPair& t, double z) {
  if (!std::isfinite(z)) throw std::domain_error("prox_scalar: z must be finite");
  const double az = std::abs(z);
  if (az <= t.tau) return 0.0;

  // Invert rho on its increasing branch: rho(eta) = tau < |z| and
  // rho(v) >= v, so the root lies in [eta, |z|]. rho is strictly convex and
  // increasing there, so Newton from v = |z| descends monotonically; the
  // bracket is kept as a safeguard.
  double lo = t.eta, hi = az;
  double v = az;
  const double tol = 1e-12;
  int it = 0;
  for (;; ++it) {
    if (it >= kMaxRootIters)
      throw std::runtime_error("prox_scalar: root iteration exceeded " +
                               std::to_string(kMaxRootIters) + " steps");
    const double f = v + t.lambda_mu * phi_deriv1(p, v) - az;
    if (std::abs(f) <= tol * std::max(1.0, az)) break;
    if (f > 0.0) hi = v; else lo = v;
    if (hi - lo <= tol * std::max(1.0, hi)) { v = 0.5 * (lo + hi); break; }
    const double fp = 1.0 + t.lambda_mu * phi_deriv2(p, v);
    double next = (fp > 0.0) ? v - f / fp : 0.5 * (lo + hi);
    if (!(next > lo && next < hi)) next = 0.5 * (lo + hi);
    v = next;
  }
  return z >= 0.0 ? v : -v;
}

double prox_scalar(const PenaltySpec& p, double lambda, double mu, double z) {
  return prox_scalar(p, thresholds(p, lambda, mu), z);
}

Vector prox_vector(const PenaltySpec& p, double lambda, double mu, const Vector& x) {
  const ThresholdPair t = thresholds(p, lambda, mu);
  Vector out(x.size());
  for (int i = 0; i < x.size(); ++i) {
    try {
      out[i] = prox_scalar(p, t, x[i]);
    } catch (const std::exception& e) {
      throw std::domain_error("prox_vector: component " + std::to_string(i) +
                              ": " + e.what());
    }
  }
  return out;
}

double prox_soft(double threshold, double z) {
  if (!(threshold > 0.0)) throw std::domain_error("prox_soft: threshold must be positive");
  const double m = std::abs(z) - threshold;
  return m > 0.0 ? (z > 0.0 ? m : -m) : 0.0;
}

double prox_hard(double lambda_mu, double z) {
  if (!(lambda_mu > 0.0)) throw std::domain_error("prox_hard: lambda_mu must be positive");
  return std::abs(z) > std::sqrt(2.0 * lambda_mu) ? z : 0.0;
}

}  // namespace ijt
