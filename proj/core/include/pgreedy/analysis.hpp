#pragma once

#include <cstddef>
#include <span>
#include <vector>

#include "pgreedy/matrix.hpp"

namespace pgreedy {

// Half-open index range [begin, end) into a trace.
struct IndexWindow {
  std::size_t begin = 0;
  std::size_t end = 0;

  [[nodiscard]] std::size_t size() const noexcept { return end > begin ? end - begin : 0; }
};

// Second half of a trace of length n.
[[nodiscard]] IndexWindow default_rate_window(std::size_t n);

// Indices whose xs fall in [lo, hi].
[[nodiscard]] IndexWindow window_by_value(std::span<const double> xs, double lo, double hi);

// Least-squares slope of log ys against log xs over the window.
// Throws std::invalid_argument for windows shorter than 5 or out of range,
// std::domain_error for a nonpositive value inside the window.
[[nodiscard]] double fit_rate(std::span<const double> xs, std::span<const double> ys,
                              IndexWindow window);

// 1-norm condition estimate ||C||_1 * est(||C^{-1}||_1) of a lower-triangular
// matrix. The inverse norm is estimated with Hager's method (as refined by
// Higham), using only triangular solves. The estimate never exceeds the true
// condition number. Throws std::domain_error on a zero diagonal entry.
[[nodiscard]] double condition_estimate(const LowerTriangular& c);

// The ||C^{-1}||_1 estimate alone; a lower bound of the true value.
[[nodiscard]] double inverse_norm1_estimate(const LowerTriangular& c);

[[nodiscard]] double norm1(const LowerTriangular& c);

// Singular values, descending, from a cyclic Jacobi eigen-solve of the smaller
// of A A^T and A^T A.
[[nodiscard]] std::vector<double> singular_values(const Matrix& a);

// Eigenvalues of a symmetric matrix by cyclic Jacobi rotations, descending.
// Sweeps continue until every off-diagonal entry satisfies
// |a_pq| <= tol * sqrt(|a_pp a_qq|) (or it is exactly zero).
[[nodiscard]] std::vector<double> symmetric_eigenvalues(Matrix a, double tol = 1e-12);

}  // namespace pgreedy
