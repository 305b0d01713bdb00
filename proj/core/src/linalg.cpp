#include "ijt/linalg.hpp"

#include <algorithm>
#include <atomic>
#include <cmath>
#include <mutex>
#include <random>
#include <stdexcept>
#include <thread>
#include <vector>

namespace ijt {

double spectral_norm_sq(const Matrix& a, std::uint64_t seed) {
  if (a.rows() == 0 || a.cols() == 0)
    throw std::invalid_argument("spectral_norm_sq: empty matrix");

  // Block power iteration. A plain single-vector iteration stalls whenever
  // the top eigenvalues of A^T A nearly coincide (Gaussian designs produce
  // such draws routinely), so iterate a small orthonormal block and read the
  // top Ritz value off the projected matrix.
  const auto n = a.cols();
  const int block = static_cast<int>(std::min<Eigen::Index>(4, n));

  std::mt19937_64 rng(seed);
  std::uniform_real_distribution<double> unif(-1.0, 1.0);
  Matrix v(n, block);
  for (int j = 0; j < block; ++j)
    for (Eigen::Index i = 0; i < n; ++i) v(i, j) = unif(rng);

  auto orthonormalize = [&](Matrix& m) {
    for (int j = 0; j < block; ++j) {
      for (int k = 0; k < j; ++k) m.col(j) -= m.col(k).dot(m.col(j)) * m.col(k);
      const double norm = m.col(j).norm();
      if (norm <= 1e-300) {
        for (Eigen::Index i = 0; i < n; ++i) m(i, j) = unif(rng);
        for (int k = 0; k < j; ++k) m.col(j) -= m.col(k).dot(m.col(j)) * m.col(k);
        m.col(j).normalize();
      } else {
        m.col(j) /= norm;
      }
    }
  };
  orthonormalize(v);

  const double tol = 1e-10;
  const int cap = 5000;
  double lambda = 0.0;
  Matrix av(a.rows(), block), w(n, block);
  for (int it = 0; it < cap; ++it) {
    av.noalias() = a * v;
    w.noalias() = a.transpose() * av;
    const Matrix h = v.transpose() * w;  // block x block projection
    const Vector ritz = jacobi_eigenvalues(h);
    const double next = ritz[ritz.size() - 1];
    if (next == 0.0) return 0.0;  // the block fell into the null space of A
    if (it > 0 && std::abs(next - lambda) <= tol * std::max(1.0, std::abs(next)))
      return next;
    lambda = next;
    v = w;
    orthonormalize(v);
  }
  throw std::runtime_error(
      "spectral_norm_sq: block power iteration did not reach tolerance in "
      "5000 iterations; retry with another seed");
}

Vector jacobi_eigenvalues(const Matrix& sym) {
  const int n = static_cast<int>(sym.rows());
  if (sym.cols() != n) throw std::invalid_argument("jacobi_eigenvalues: matrix not square");
  Matrix a = sym;

  auto offdiag = [&]() {
    double s = 0.0;
    for (int i = 0; i < n; ++i)
      for (int j = i + 1; j < n; ++j) s += a(i, j) * a(i, j);
    return std::sqrt(2.0 * s);
  };

  const double scale = std::max(1.0, a.norm());
  for (int sweep = 0; sweep < 100 && offdiag() > 1e-15 * scale; ++sweep) {
    for (int p = 0; p < n - 1; ++p) {
      for (int q = p + 1; q < n; ++q) {
        const double apq = a(p, q);
        if (std::abs(apq) <= 1e-300) continue;
        const double theta = (a(q, q) - a(p, p)) / (2.0 * apq);
        double t = 1.0 / (std::abs(theta) + std::sqrt(1.0 + theta * theta));
        if (theta < 0.0) t = -t;
        const double c = 1.0 / std::sqrt(1.0 + t * t);
        const double s = t * c;

        for (int k = 0; k < n; ++k) {
          const double akp = a(k, p), akq = a(k, q);
          a(k, p) = c * akp - s * akq;
          a(k, q) = s * akp + c * akq;
        }
        for (int k = 0; k < n; ++k) {
          const double apk = a(p, k), aqk = a(q, k);
          a(p, k) = c * apk - s * aqk;
          a(q, k) = s * apk + c * aqk;
        }
      }
    }
  }

  Vector eig(n);
  for (int i = 0; i < n; ++i) eig[i] = a(i, i);
  std::sort(eig.data(), eig.data() + n);
  return eig;
}

Vector conjugate_gradient(const std::function<void(const Vector&, Vector&)>& apply,
                          const Vector& b, const Vector& x0, double tol,
                          int max_iters) {
  Vector x = x0;
  Vector ax(b.size());
  apply(x, ax);
  Vector r = b - ax;
  Vector d = r;
  double rr = r.squaredNorm();
  const double bnorm = std::max(b.norm(), 1e-300);
  Vector ad(b.size());
  for (int it = 0; it < max_iters && std::sqrt(rr) > tol * bnorm; ++it) {
    apply(d, ad);
    const double dad = d.dot(ad);
    if (dad <= 0.0) break;  // numerical loss of definiteness
    const double alpha = rr / dad;
    x += alpha * d;
    r -= alpha * ad;
    const double rr_next = r.squaredNorm();
    d = r + (rr_next / rr) * d;
    rr = rr_next;
  }
  return x;
}

void parallel_for(int jobs, int n, const std::function<void(int)>& fn) {
  if (jobs <= 1 || n <= 1) {
    for (int i = 0; i < n; ++i) fn(i);
    return;
  }
  std::atomic<int> next{0};
  std::exception_ptr error;
  std::mutex error_mutex;
  auto worker = [&]() {
    try {
      for (int i = next.fetch_add(1); i < n; i = next.fetch_add(1)) fn(i);
    } catch (...) {
      const std::lock_guard<std::mutex> lock(error_mutex);
      if (!error) error = std::current_exception();
      next.store(n);  // drain remaining work
    }
  };
  std::vector<std::thread> pool;
  const int nthreads = std::min(jobs, n);
  pool.reserve(static_cast<std::size_t>(nthreads));
  for (int t = 0; t < nthreads; ++t) pool.emplace_back(worker);
  for (auto& th : pool) th.join();
  if (error) std::rethrow_exception(error);
}

}  // namespace ijt
