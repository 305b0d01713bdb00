#pragma once

#include <cstdint>
#include <functional>

#include "ijt/types.hpp"

namespace ijt {

// Largest eigenvalue of A^T A (= squared spectral norm of A) by power
// iteration with a seeded start vector. Relative tolerance 1e-10 on the
// Rayleigh quotient, cap 5000 iterations; throws std::runtime_error if the
// tolerance is not reached (near-equal top eigenvalues) -- retry with
// another seed in that case.
double spectral_norm_sq(const Matrix& a, std::uint64_t seed = 12345);

// All eigenvalues of a symmetric matrix, ascending, by cyclic Jacobi
// rotations. Intended for the small Gram/Hessian minors (n <= ~200).
Vector jacobi_eigenvalues(const Matrix& sym);

// Conjugate gradient for symmetric positive definite systems given as a
// matvec callback. Returns the iterate when the relative residual drops
// below tol, or after max_iters sweeps.
Vector conjugate_gradient(const std::function<void(const Vector&, Vector&)>& apply,
                          const Vector& b, const Vector& x0, double tol,
                          int max_iters);

// Runs fn(i) for i in [0, n) on `jobs` threads. Results must only depend on
// i, so scheduling cannot change them; jobs <= 1 degrades to a plain loop.
void parallel_for(int jobs, int n, const std::function<void(int)>& fn);

}  // namespace ijt
