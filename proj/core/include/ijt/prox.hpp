#pragma once

#include "ijt/penalty.hpp"
#include "ijt/types.hpp"

namespace ijt {

/// The pair (eta, tau) characterizing the jumping thresholding operator:
/// inputs with |z| <= tau map to 0, and every nonzero output has
/// magnitude >= eta. tau = rho(eta) and eta = psi^{-1}(1/(lambda*mu)).
struct ThresholdPair {
  double eta = 0.0;
  double tau = 0.0;
  double lambda_mu = 0.0;
};

// rho_mu(v) = v + lambda_mu * phi'(v), v > 0. Strictly convex with an
// interior minimum; its increasing branch is inverted by prox_scalar.
double rho(const PenaltySpec& p, double lambda_mu, double v);

// psi(z) = 2 (phi(z) - z phi'(z)) / z^2, strictly decreasing and positive.
double psi(const PenaltySpec& p, double z);

// Threshold pair for given lambda, mu. Power family uses the closed forms
//   eta = (2 lambda mu (1-q))^{1/(2-q)},  tau = (2-q)/(2-2q) * eta;
// LogPower inverts psi by bracketing bisection.
ThresholdPair thresholds(const PenaltySpec& p, double lambda, double mu);

// Generic psi-inversion route, valid for both families. Kept public so the
// Power closed forms can be cross-checked against it.
ThresholdPair thresholds_by_inversion(const PenaltySpec& p, double lambda, double mu);

// Scalar jumping thresholding operator:
//   |z| <= tau  -> 0            (ties at tau resolve to 0)
//   |z| >  tau  -> sign(z) * v, rho(v) = |z| on the increasing branch,
// solved by safeguarded Newton/bisection on [eta, |z|] to 1e-12.
double prox_scalar(const PenaltySpec& p, double lambda, double mu, double z);
// Same with precomputed thresholds (one pair per (lambda, mu) suffices).
double prox_scalar(const PenaltySpec& p, const ThresholdPair& t, double z);

// Componentwise application; reports the offending index on error.
Vector prox_vector(const PenaltySpec& p, double lambda, double mu, const Vector& x);

// Baseline shrinkage rules.
double prox_soft(double threshold, double z);    // sign(z) max(|z|-threshold, 0)
double prox_hard(double lambda_mu, double z);    // z iff |z| > sqrt(2 lambda_mu)

}  // namespace ijt
