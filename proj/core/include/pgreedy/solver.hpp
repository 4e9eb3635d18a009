#pragma once

#include <cstddef>
#include <span>
#include <vector>

#include "pgreedy/functional.hpp"
#include "pgreedy/greedy.hpp"
#include "pgreedy/kernel.hpp"
#include "pgreedy/matrix.hpp"
#include "pgreedy/parallel.hpp"

namespace pgreedy {

// What is needed to reuse a greedy result: the selected functionals in
// selection order and the triangular matrix C. This is what cmd_build
// persists and cmd_solve reloads.
struct ReducedBasis {
  KernelSpec spec;
  std::vector<Functional> functionals;
  LowerTriangular c;

  [[nodiscard]] std::size_t size() const noexcept { return functionals.size(); }
};

[[nodiscard]] ReducedBasis reduced_basis(const GreedyState& state, const FunctionalSet& set,
                                         const KernelSpec& spec);

// Values v_{mu_j}(x_p) of the orthonormal basis, one row per basis function.
class BasisEvaluation {
 public:
  BasisEvaluation() = default;
  explicit BasisEvaluation(std::vector<Point> points)
      : points_(std::move(points)), values_(Matrix::with_cols(points_.size())) {}

  [[nodiscard]] std::span<const Point> points() const noexcept { return points_; }
  [[nodiscard]] std::size_t point_count() const noexcept { return points_.size(); }
  [[nodiscard]] std::size_t rank() const noexcept { return values_.rows(); }
  [[nodiscard]] std::span<const double> row(std::size_t j) const noexcept { return values_.row(j); }
  [[nodiscard]] const Matrix& values() const noexcept { return values_; }

 private:
  friend void extend_basis(BasisEvaluation&, const LowerTriangular&, std::span<const Functional>,
                           const KernelSpec&, const Workers&);

  std::vector<Point> points_;
  Matrix values_;
};

// v_{mu_k} = sum_j c_kj v_{lambda_j}, evaluated by the recursion
// v_{mu_k} = c_kk v_{lambda_k} + sum_{j<k} b_kj v_{mu_j} (one kernel call per row).
[[nodiscard]] BasisEvaluation evaluate_basis(const LowerTriangular& c,
                                             std::span<const Functional> selected,
                                             const KernelSpec& spec, std::vector<Point> points,
                                             const Workers& workers = Workers::single());
[[nodiscard]] BasisEvaluation evaluate_basis(const ReducedBasis& basis, std::vector<Point> points,
                                             const Workers& workers = Workers::single());
[[nodiscard]] BasisEvaluation evaluate_basis(const GreedyState& state, const FunctionalSet& set,
                                             const KernelSpec& spec, std::vector<Point> points,
                                             const Workers& workers = Workers::single());

// Adds the rows eval.rank() .. c.size() - 1.
void extend_basis(BasisEvaluation& eval, const LowerTriangular& c,
                  std::span<const Functional> selected, const KernelSpec& spec,
                  const Workers& workers = Workers::single());

// P^2(delta_x) = K(x, x) - sum_{j < rows} v_{mu_j}(x)^2 clamped at 0, over the
// evaluation points. `rows` defaults to all rows.
[[nodiscard]] std::vector<double> power_on_deltas(const BasisEvaluation& eval,
                                                  const KernelSpec& spec);
[[nodiscard]] std::vector<double> power_on_deltas(const BasisEvaluation& eval,
                                                  const KernelSpec& spec, std::size_t rows);

// Keeps P^2(delta_x) on a fixed point set in step with a growing greedy state.
class DeltaPowerTracker {
 public:
  DeltaPowerTracker(std::vector<Point> points, const KernelSpec& spec);

  void catch_up(const LowerTriangular& c, std::span<const Functional> selected,
                const KernelSpec& spec, const Workers& workers = Workers::single());

  [[nodiscard]] std::span<const double> power() const noexcept { return power_; }
  [[nodiscard]] const BasisEvaluation& basis() const noexcept { return eval_; }
  [[nodiscard]] double max_power() const noexcept;
  [[nodiscard]] double max_power(std::size_t begin, std::size_t end) const noexcept;

 private:
  BasisEvaluation eval_;
  std::vector<double> power_;
};

// mu(u) = C lambda(u), for the first data.size() functionals.
[[nodiscard]] std::vector<double> data_to_newton(const LowerTriangular& c,
                                                 std::span<const double> data);

// Inverse of data_to_newton: lambda(u) = C^{-1} mu(u).
[[nodiscard]] std::vector<double> newton_to_data(const LowerTriangular& c,
                                                 std::span<const double> newton);

// u~_N(x) = sum_j mu_j(u) v_{mu_j}(x), using the first `newton.size()` rows.
[[nodiscard]] std::vector<double> approximate(std::span<const double> newton,
                                              const BasisEvaluation& eval);

// max_p |target_p - u~_n(x_p)| for every prefix n = 1..newton.size().
[[nodiscard]] std::vector<double> prefix_max_errors(std::span<const double> newton,
                                                    const BasisEvaluation& eval,
                                                    std::span<const double> target);

// lambda_j(u) for each functional.
[[nodiscard]] std::vector<double> functional_data(std::span<const Functional> functionals,
                                                  const TestSolution& u);

// Projection of a test solution onto a precomputed basis. The data are scaled
// by `scale` so that the one-term max error over the evaluation points is 1;
// all fields below refer to the scaled solution.
struct BasisSolve {
  double scale = 1.0;
  std::vector<double> newton;             // mu_j(u)
  std::vector<double> cumulative_energy;  // sum_{j<=n} mu_j(u)^2
  std::vector<double> max_errors;         // per prefix n = 1..N
  std::vector<double> u_true;             // at the evaluation points
  std::vector<double> u_approx;           // u~_N at the evaluation points
};

// Throws std::invalid_argument when the basis has no rows or `selected` is
// shorter than C.
[[nodiscard]] BasisSolve solve_with_basis(const LowerTriangular& c,
                                          std::span<const Functional> selected,
                                          const BasisEvaluation& eval, const TestSolution& u);

// Symmetric collocation by a dense Cholesky solve of the Gram system
// sum_j alpha_j (lambda_k, lambda_j) = lambda_k(u), evaluated at `points`.
// Throws IllConditioned if the factorization fails or the reciprocal
// condition estimate is below 1e-15.
struct CollocationSolution {
  std::vector<double> coefficients;  // alpha
  std::vector<double> values;        // at the requested points
};

[[nodiscard]] CollocationSolution direct_collocation_solve(const FunctionalSet& set,
                                                           std::span<const std::size_t> selected,
                                                           std::span<const double> data,
                                                           const KernelSpec& spec,
                                                           std::span<const Point> points);

}  // namespace pgreedy
