#pragma once

#include <utility>

#include "ijt/loss.hpp"
#include "ijt/penalty.hpp"
#include "ijt/types.hpp"

namespace ijt {

// Brute-force scalar prox: minimizes |z-v|^2/(2 mu) + lambda phi(|v|) over a
// coarse linear grid plus a sign-aligned log-spaced grid (which resolves the
// tiny basins near the jump), refines both candidates by golden section, and
// compares explicitly with v = 0. Accuracy ~1e-8; independent of the
// analytic prox path so it can arbitrate it.
double prox_oracle(const PenaltySpec& p, double lambda, double mu, double z,
                   double halfwidth = 2.0, int coarse_points = 100000);

/// One-dimensional smooth objective built from two quadratic wings and an
/// exp(-1/(z-1)^2) bump so that g = f + phi is flat at z = 1: a smooth loss
/// whose descent machinery still works even though sharpness-based
/// convergence arguments fail there. Constants are derived at construction
/// from phi'(1/2), phi''(1/2), phi'(3/2), phi''(3/2).
class NonKLFixture {
 public:
  explicit NonKLFixture(PenaltySpec p = PenaltySpec{PenaltyFamily::Power, 0.5});

  double f_value(double z) const;   // the smooth part
  double f_deriv(double z) const;
  double g_value(double z) const;   // g = f + phi(|z|); g(1) = C
  double f_lipschitz() const;       // sampled bound on |f''|

  const PenaltySpec& penalty() const { return penalty_; }
  double a1() const { return a1_; }
  double b1() const { return b1_; }
  double c1() const { return c1_; }
  double a2() const { return a2_; }
  double b2() const { return b2_; }
  double c2() const { return c2_; }
  double C() const { return C_; }

 private:
  PenaltySpec penalty_;
  double a1_, b1_, c1_, a2_, b2_, c2_, C_;
  double lipschitz_;
};

double nonkl_value(const NonKLFixture& fix, double z);  // = fix.g_value(z)

/// The fixture's smooth part as a 1-D loss, so the solver can run on it.
class NonKLLoss final : public SmoothLoss {
 public:
  explicit NonKLLoss(NonKLFixture fix) : fix_(std::move(fix)) {}
  int dim() const override { return 1; }
  double value(const Vector& x) const override { return fix_.f_value(x[0]); }
  void gradient(const Vector& x, Vector& out) const override {
    out.resize(1);
    out[0] = fix_.f_deriv(x[0]);
  }
  double lipschitz() const override { return fix_.f_lipschitz(); }

 private:
  NonKLFixture fix_;
};

// Central finite differences, the derivative oracle for the property tests.
template <typename F>
double finite_diff(F&& f, double x, double h) {
  return (f(x + h) - f(x - h)) / (2.0 * h);
}

template <typename F>
Vector finite_diff_grad(F&& f, const Vector& x, double h) {
  Vector g(x.size());
  Vector xp = x;
  for (int i = 0; i < x.size(); ++i) {
    const double orig = xp[i];
    xp[i] = orig + h;
    const double fp = f(xp);
    xp[i] = orig - h;
    const double fm = f(xp);
    xp[i] = orig;
    g[i] = (fp - fm) / (2.0 * h);
  }
  return g;
}

}  // namespace ijt
