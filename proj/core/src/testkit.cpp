#include "ijt/testkit.hpp"

#include <algorithm>
#include <cmath>
#include <functional>
#include <stdexcept>

namespace ijt {

namespace {

double golden_min(const std::function<double(double)>& h, double a, double b) {
  constexpr double inv_phi = 0.6180339887498949;
  double x1 = b - inv_phi * (b - a);
  double x2 = a + inv_phi * (b - a);
  double f1 = h(x1), f2 = h(x2);
  while (b - a > 1e-12 * std::max(1.0, std::abs(b))) {
    if (f1 < f2) {
      b = x2; x2 = x1; f2 = f1;
      x1 = b - inv_phi * (b - a);
      f1 = h(x1);
    } else {
      a = x1; x1 = x2; f1 = f2;
      x2 = a + inv_phi * (b - a);
      f2 = h(x2);
    }
  }
  return 0.5 * (a + b);
}

}  // namespace

double prox_oracle(const PenaltySpec& p, double lambda, double mu, double z,
                   double halfwidth, int coarse_points) {
  if (coarse_points < 1000)
    throw std::invalid_argument("prox_oracle: need at least 1000 grid points");
  if (!(halfwidth > 0.0))
    throw std::invalid_argument("prox_oracle: halfwidth must be positive");

  const auto h = [&](double v) {
    const double d = z - v;
    return d * d / (2.0 * mu) + lambda * phi_value(p, std::abs(v));
  };

  const double az = std::abs(z);
  const double hi = az + halfwidth;
  const double lo = -hi;

  // Linear scan over the whole interval.
  double best_v = 0.0, best_h = h(0.0);
  const double cell = (hi - lo) / coarse_points;
  for (int i = 0; i <= coarse_points; ++i) {
    const double v = lo + cell * i;
    const double hv = h(v);
    if (hv < best_h) { best_h = hv; best_v = v; }
  }
  double cand1 = golden_min(h, std::max(lo, best_v - cell), std::min(hi, best_v + cell));

  // Log-spaced scan on the side of z, catching minima far below the linear
  // cell size (the nonzero branch starts at eta, which can be tiny).
  double cand2 = cand1;
  if (z != 0.0) {
    const double sgn = z > 0.0 ? 1.0 : -1.0;
    const double vmin = 1e-12, vmax = hi;
    const int logn = std::min(coarse_points, 20000);
    const double ratio = std::log(vmax / vmin) / logn;
    double lbest_v = vmin, lbest_h = h(sgn * vmin);
    for (int i = 1; i <= logn; ++i) {
      const double v = vmin * std::exp(ratio * i);
      const double hv = h(sgn * v);
      if (hv < lbest_h) { lbest_h = hv; lbest_v = v; }
    }
    const double lo2 = lbest_v * std::exp(-ratio), hi2 = std::min(vmax, lbest_v * std::exp(ratio));
    cand2 = sgn * golden_min([&](double v) { return h(sgn * v); }, lo2, hi2);
  }

  double out = 0.0;
  double out_h = h(0.0);
  for (double cand : {cand1, cand2}) {
    const double ch = h(cand);
    if (ch < out_h) { out_h = ch; out = cand; }
  }
  return out;
}

NonKLFixture::NonKLFixture(PenaltySpec p) : penalty_(p) {
  validate(p);
  const double e4 = std::exp(-4.0);
  const double p_half = phi_value(p, 0.5), d1_half = phi_deriv1(p, 0.5),
               d2_half = phi_deriv2(p, 0.5);
  const double p_3half = phi_value(p, 1.5), d1_3half = phi_deriv1(p, 1.5),
               d2_3half = phi_deriv2(p, 1.5);

  a1_ = 80.0 * e4 - 0.5 * d2_half;
  b1_ = 0.5 + (16.0 * e4 + d1_half) / (160.0 * e4 - d2_half);
  a2_ = 80.0 * e4 - 0.5 * d2_3half;
  b2_ = 1.5 - (16.0 * e4 - d1_3half) / (160.0 * e4 - d2_3half);
  const double q1 = a1_ * (0.5 - b1_) * (0.5 - b1_);
  const double q2 = a2_ * (1.5 - b2_) * (1.5 - b2_);
  C_ = p_3half + std::max(p_half + q1, p_3half + q2);
  c1_ = C_ + e4 - p_half - q1;
  c2_ = C_ + e4 - p_3half - q2;

  // Sampled bound on |f''|; the wings are quadratics, the middle piece is
  // scanned densely.
  double mid_max = 0.0;
  const int samples = 200000;
  for (int i = 1; i < samples; ++i) {
    const double zl = 0.5 + i / static_cast<double>(samples);
    const double d = zl - 1.0;
    const double d2 = d * d;
    // (exp(-1/d^2))'' = exp(-1/d^2) (4/d^6 - 6/d^4)
    const double hpp = d2 > 0.0 ? std::exp(-1.0 / d2) * (4.0 / (d2 * d2 * d2) - 6.0 / (d2 * d2))
                                : 0.0;
    const double fpp = hpp - phi_deriv2(penalty_, zl);
    mid_max = std::max(mid_max, std::abs(fpp));
  }
  lipschitz_ = 1.05 * std::max({2.0 * a1_, 2.0 * a2_, mid_max});
}

double NonKLFixture::f_value(double z) const {
  const double e_term = (z > 0.5 && z < 1.5 && z != 1.0)
                            ? std::exp(-1.0 / ((z - 1.0) * (z - 1.0)))
                            : 0.0;
  if (z <= 0.5) return a1_ * (z - b1_) * (z - b1_) + c1_;
  if (z < 1.0) return e_term - phi_value(penalty_, z) + C_;
  if (z == 1.0) return C_ - phi_value(penalty_, 1.0);
  if (z < 1.5) return e_term - phi_value(penalty_, z) + C_;
  return a2_ * (z - b2_) * (z - b2_) + c2_;
}

double NonKLFixture::f_deriv(double z) const {
  if (z <= 0.5) return 2.0 * a1_ * (z - b1_);
  if (z >= 1.5) return 2.0 * a2_ * (z - b2_);
  if (z == 1.0) return 0.0 - phi_deriv1(penalty_, 1.0);
  const double d = z - 1.0;
  const double hp = std::exp(-1.0 / (d * d)) * 2.0 / (d * d * d);
  return hp - phi_deriv1(penalty_, z);
}

double NonKLFixture::g_value(double z) const {
  return f_value(z) + phi_value(penalty_, std::abs(z));
}

double NonKLFixture::f_lipschitz() const { return lipschitz_; }

double nonkl_value(const NonKLFixture& fix, double z) { return fix.g_value(z); }

}  // namespace ijt
