#include "ijt/loss.hpp"

#include <cmath>
#include <limits>
#include <stdexcept>

#include "ijt/linalg.hpp"

namespace ijt {

namespace {

// log(1 + exp(t)) without overflow.
double softplus(double t) {
  return t > 0.0 ? t + std::log1p(std::exp(-t)) : std::log1p(std::exp(t));
}

constexpr double kUncached = -1.0;

}  // namespace

Problem::Problem(LossKind kind, Matrix a, Vector y)
    : kind_(kind), a_(std::move(a)), y_(std::move(y)), spectral_cache_(kUncached) {
  if (a_.rows() < 1 || a_.cols() < 1)
    throw std::invalid_argument("Problem: matrix must be at least 1x1");
  if (y_.size() != a_.rows())
    throw std::invalid_argument("Problem: y length must equal the row count");
  if (!a_.allFinite() || !y_.allFinite())
    throw std::invalid_argument("Problem: entries must be finite");
  if (kind_ == LossKind::Logistic) {
    for (int i = 0; i < y_.size(); ++i)
      if (y_[i] != 1.0 && y_[i] != -1.0)
        throw std::invalid_argument("Problem: logistic labels must be -1 or +1");
  }
}

Problem Problem::least_squares(Matrix a, Vector y) {
  return Problem(LossKind::LeastSquares, std::move(a), std::move(y));
}

Problem Problem::logistic(Matrix u, Vector labels) {
  return Problem(LossKind::Logistic, std::move(u), std::move(labels));
}

Problem::Problem(const Problem& other)
    : kind_(other.kind_), a_(other.a_), y_(other.y_),
      spectral_cache_(other.spectral_cache_.load()) {}

Problem::Problem(Problem&& other) noexcept
    : kind_(other.kind_), a_(std::move(other.a_)), y_(std::move(other.y_)),
      spectral_cache_(other.spectral_cache_.load()) {}

double Problem::value(const Vector& x) const {
  if (x.size() != a_.cols())
    throw std::invalid_argument("loss_value: x has wrong dimension");
  if (kind_ == LossKind::LeastSquares) {
    return 0.5 * (a_ * x - y_).squaredNorm();
  }
  const int m = rows();
  double s = 0.0;
  const Vector margins = a_ * x;
  for (int i = 0; i < m; ++i) s += softplus(-y_[i] * margins[i]);
  return s / m;
}

void Problem::gradient(const Vector& x, Vector& out) const {
  if (x.size() != a_.cols())
    throw std::invalid_argument("loss_grad: x has wrong dimension");
  if (kind_ == LossKind::LeastSquares) {
    out.noalias() = a_.transpose() * (a_ * x - y_);
    return;
  }
  const int m = rows();
  Vector coeff = a_ * x;
  for (int i = 0; i < m; ++i) {
    // -y_i * sigma(-y_i m_i) / M
    const double t = -y_[i] * coeff[i];
    const double sig = 1.0 / (1.0 + std::exp(-t));
    coeff[i] = -y_[i] * sig / m;
  }
  out.noalias() = a_.transpose() * coeff;
}

double Problem::value_and_gradient(const Vector& x, Vector& grad) const {
  if (x.size() != a_.cols())
    throw std::invalid_argument("value_and_gradient: x has wrong dimension");
  if (kind_ == LossKind::LeastSquares) {
    const Vector r = a_ * x - y_;
    grad.noalias() = a_.transpose() * r;
    return 0.5 * r.squaredNorm();
  }
  const int m = rows();
  Vector coeff = a_ * x;
  double val = 0.0;
  for (int i = 0; i < m; ++i) {
    const double t = -y_[i] * coeff[i];
    val += softplus(t);
    coeff[i] = -y_[i] / ((1.0 + std::exp(-t)) * m);
  }
  grad.noalias() = a_.transpose() * coeff;
  return val / m;
}

double Problem::spectral_norm_sq() const {
  double cached = spectral_cache_.load(std::memory_order_acquire);
  if (cached != kUncached) return cached;
  const double val = ijt::spectral_norm_sq(a_);
  spectral_cache_.store(val, std::memory_order_release);
  return val;
}

double Problem::lipschitz() const {
  const double s = spectral_norm_sq();
  return kind_ == LossKind::LeastSquares ? s : s / (4.0 * rows());
}

double loss_value(const Problem& prob, const Vector& x) { return prob.value(x); }

Vector loss_grad(const Problem& prob, const Vector& x) {
  Vector g(prob.dim());
  prob.gradient(x, g);
  return g;
}

double lipschitz_constant(const Problem& prob) { return prob.lipschitz(); }

}  // namespace ijt
