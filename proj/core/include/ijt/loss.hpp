#pragma once

#include <atomic>
#include <cstdint>

#include "ijt/types.hpp"

namespace ijt {

enum class LossKind { LeastSquares, Logistic };

/// Smooth data-fit term with Lipschitz-continuous gradient. The solver only
/// sees this interface, so test fixtures can supply their own losses.
class SmoothLoss {
 public:
  virtual ~SmoothLoss() = default;
  virtual int dim() const = 0;
  virtual double value(const Vector& x) const = 0;
  virtual void gradient(const Vector& x, Vector& out) const = 0;
  virtual double lipschitz() const = 0;
  // Both at once; implementations that share work (residuals, margins)
  // should override.
  virtual double value_and_gradient(const Vector& x, Vector& grad) const {
    gradient(x, grad);
    return value(x);
  }
};

/// A concrete data-fit problem over a dense matrix:
///   LeastSquares: F(x) = 1/2 ||A x - y||^2            (L = ||A||_2^2)
///   Logistic:     F(x) = 1/M sum log(1+exp(-y_i u_i^T x)), y_i in {-1,+1}
///                                                      (L = ||U||_2^2 / (4M))
class Problem final : public SmoothLoss {
 public:
  Problem(LossKind kind, Matrix a, Vector y);
  static Problem least_squares(Matrix a, Vector y);
  static Problem logistic(Matrix u, Vector labels);

  Problem(const Problem& other);
  Problem& operator=(const Problem&) = delete;
  Problem(Problem&& other) noexcept;

  int dim() const override { return static_cast<int>(a_.cols()); }
  int rows() const { return static_cast<int>(a_.rows()); }
  double value(const Vector& x) const override;
  void gradient(const Vector& x, Vector& out) const override;
  double value_and_gradient(const Vector& x, Vector& grad) const override;
  double lipschitz() const override;

  LossKind kind() const { return kind_; }
  const Matrix& matrix() const { return a_; }
  const Vector& rhs() const { return y_; }

  /// ||A||_2^2, computed lazily by power iteration and cached.
  double spectral_norm_sq() const;

 private:
  LossKind kind_;
  Matrix a_;
  Vector y_;
  mutable std::atomic<double> spectral_cache_;
};

// Free-function spellings of the Problem operations.
double loss_value(const Problem& prob, const Vector& x);
Vector loss_grad(const Problem& prob, const Vector& x);
double lipschitz_constant(const Problem& prob);

}  // namespace ijt
