#include "pgreedy/solver.hpp"

#include <algorithm>
#include <cmath>
#include <sstream>
#include <stdexcept>

#include <Eigen/Cholesky>
#include <Eigen/Core>

#include "pgreedy/errors.hpp"

namespace pgreedy {

ReducedBasis reduced_basis(const GreedyState& state, const FunctionalSet& set,
                           const KernelSpec& spec) {
  ReducedBasis basis{spec, {}, state.c()};
  basis.functionals.reserve(state.size());
  for (std::size_t idx : state.selected()) basis.functionals.push_back(set[idx]);
  return basis;
}

void extend_basis(BasisEvaluation& eval, const LowerTriangular& c,
                  std::span<const Functional> selected, const KernelSpec& spec,
                  const Workers& workers) {
  if (selected.size() < c.size()) {
    throw std::invalid_argument("extend_basis: fewer functionals than rows of C");
  }
  const std::size_t points = eval.point_count();
  eval.values_.reserve_rows(c.size());
  for (std::size_t k = eval.rank(); k < c.size(); ++k) {
    // mu_k = c_kk lambda_k + sum_{j<k} b_j mu_j with C_k^T b = (c_k1..c_k,k-1),
    // C_k the leading block.
    const auto row = c.row(k);
    const double ckk = row[k];
    const std::vector<double> b = c.solve_transposed(row.first(k));
    std::span<double> out = eval.values_.append_row();
    const Functional& f = selected[k];
    const Matrix& values = eval.values_;
    parallel_for(workers, points, [&](std::size_t begin, std::size_t end) {
      for (std::size_t p = begin; p < end; ++p) {
        double v = ckk * riesz_value(f, eval.points_[p], spec);
        for (std::size_t j = 0; j < k; ++j) v += b[j] * values(j, p);
        out[p] = v;
      }
    });
  }
}

BasisEvaluation evaluate_basis(const LowerTriangular& c, std::span<const Functional> selected,
                               const KernelSpec& spec, std::vector<Point> points,
                               const Workers& workers) {
  BasisEvaluation eval(std::move(points));
  extend_basis(eval, c, selected, spec, workers);
  return eval;
}

BasisEvaluation evaluate_basis(const ReducedBasis& basis, std::vector<Point> points,
                               const Workers& workers) {
  return evaluate_basis(basis.c, basis.functionals, basis.spec, std::move(points), workers);
}

BasisEvaluation evaluate_basis(const GreedyState& state, const FunctionalSet& set,
                               const KernelSpec& spec, std::vector<Point> points,
                               const Workers& workers) {
  const ReducedBasis basis = reduced_basis(state, set, spec);
  return evaluate_basis(basis, std::move(points), workers);
}

std::vector<double> power_on_deltas(const BasisEvaluation& eval, const KernelSpec& spec,
                                    std::size_t rows) {
  rows = std::min(rows, eval.rank());
  const double k0 = radial_limit(spec.order());
  std::vector<double> power(eval.point_count(), k0);
  for (std::size_t j = 0; j < rows; ++j) {
    const auto r = eval.row(j);
    for (std::size_t p = 0; p < power.size(); ++p) power[p] -= r[p] * r[p];
  }
  for (double& v : power) v = std::max(v, 0.0);
  return power;
}

std::vector<double> power_on_deltas(const BasisEvaluation& eval, const KernelSpec& spec) {
  return power_on_deltas(eval, spec, eval.rank());
}

DeltaPowerTracker::DeltaPowerTracker(std::vector<Point> points, const KernelSpec& spec)
    : eval_(std::move(points)), power_(eval_.point_count(), radial_limit(spec.order())) {}

void DeltaPowerTracker::catch_up(const LowerTriangular& c, std::span<const Functional> selected,
                                 const KernelSpec& spec, const Workers& workers) {
  const std::size_t first = eval_.rank();
  extend_basis(eval_, c, selected, spec, workers);
  for (std::size_t j = first; j < eval_.rank(); ++j) {
    const auto r = eval_.row(j);
    for (std::size_t p = 0; p < power_.size(); ++p) {
      power_[p] = std::max(power_[p] - r[p] * r[p], 0.0);
    }
  }
}

double DeltaPowerTracker::max_power(std::size_t begin, std::size_t end) const noexcept {
  double best = 0.0;
  for (std::size_t p = begin; p < std::min(end, power_.size()); ++p) best = std::max(best, power_[p]);
  return best;
}

double DeltaPowerTracker::max_power() const noexcept { return max_power(0, power_.size()); }

std::vector<double> data_to_newton(const LowerTriangular& c, std::span<const double> data) {
  if (data.size() > c.size()) {
    throw std::invalid_argument("data_to_newton: more data than basis functions");
  }
  return c.multiply(data);
}

std::vector<double> newton_to_data(const LowerTriangular& c, std::span<const double> newton) {
  if (newton.size() > c.size()) {
    throw std::invalid_argument("newton_to_data: more coefficients than basis functions");
  }
  return c.solve(newton);
}

std::vector<double> approximate(std::span<const double> newton, const BasisEvaluation& eval) {
  if (newton.size() > eval.rank()) {
    throw std::invalid_argument("approximate: more coefficients than evaluated basis rows");
  }
  std::vector<double> values(eval.point_count(), 0.0);
  for (std::size_t j = 0; j < newton.size(); ++j) {
    const auto r = eval.row(j);
    for (std::size_t p = 0; p < values.size(); ++p) values[p] += newton[j] * r[p];
  }
  return values;
}

std::vector<double> prefix_max_errors(std::span<const double> newton, const BasisEvaluation& eval,
                                      std::span<const double> target) {
  if (target.size() != eval.point_count() || newton.size() > eval.rank()) {
    throw std::invalid_argument("prefix_max_errors: size mismatch");
  }
  std::vector<double> residual(target.begin(), target.end());
  std::vector<double> errors;
  errors.reserve(newton.size());
  for (std::size_t j = 0; j < newton.size(); ++j) {
    const auto r = eval.row(j);
    double worst = 0.0;
    for (std::size_t p = 0; p < residual.size(); ++p) {
      residual[p] -= newton[j] * r[p];
      worst = std::max(worst, std::abs(residual[p]));
    }
    errors.push_back(worst);
  }
  return errors;
}

std::vector<double> functional_data(std::span<const Functional> functionals, const TestSolution& u) {
  std::vector<double> data;
  data.reserve(functionals.size());
  for (const auto& f : functionals) data.push_back(apply_to_solution(f, u));
  return data;
}

BasisSolve solve_with_basis(const LowerTriangular& c, std::span<const Functional> selected,
                            const BasisEvaluation& eval, const TestSolution& u) {
  const std::size_t n = c.size();
  if (n == 0 || selected.size() < n || eval.rank() < n) {
    throw std::invalid_argument("solve_with_basis: empty basis or size mismatch");
  }
  BasisSolve out;
  out.u_true.reserve(eval.point_count());
  for (const Point& p : eval.points()) out.u_true.push_back(u.value(p));
  std::vector<double> newton = data_to_newton(c, functional_data(selected.first(n), u));

  const std::vector<double> raw_first = prefix_max_errors(std::span(newton).first(1), eval, out.u_true);
  if (raw_first[0] > 0.0) out.scale = 1.0 / raw_first[0];
  for (double& v : out.u_true) v *= out.scale;
  for (double& v : newton) v *= out.scale;

  out.max_errors = prefix_max_errors(newton, eval, out.u_true);
  out.u_approx = approximate(newton, eval);
  double acc = 0.0;
  out.cumulative_energy.reserve(n);
  for (double v : newton) out.cumulative_energy.push_back(acc += v * v);
  out.newton = std::move(newton);
  return out;
}

CollocationSolution direct_collocation_solve(const FunctionalSet& set,
                                             std::span<const std::size_t> selected,
                                             std::span<const double> data,
                                             const KernelSpec& spec,
                                             std::span<const Point> points) {
  const auto n = static_cast<Eigen::Index>(selected.size());
  if (data.size() != selected.size()) {
    throw std::invalid_argument("direct_collocation_solve: data size mismatch");
  }
  Eigen::MatrixXd gram(n, n);
  for (Eigen::Index i = 0; i < n; ++i) {
    for (Eigen::Index j = 0; j <= i; ++j) {
      const double g = dual_inner(set[selected[i]], set[selected[j]], spec);
      gram(i, j) = g;
      gram(j, i) = g;
    }
  }
  Eigen::LLT<Eigen::MatrixXd> llt(gram);
  const double rcond = llt.info() == Eigen::Success ? llt.rcond() : 0.0;
  if (llt.info() != Eigen::Success || !(rcond >= 1e-15)) {
    std::ostringstream os;
    os << "direct_collocation_solve: Gram system of size " << n
       << " is not reliably positive definite (rcond " << rcond << ")";
    throw IllConditioned(os.str());
  }
  const Eigen::VectorXd rhs = Eigen::Map<const Eigen::VectorXd>(data.data(), n);
  const Eigen::VectorXd alpha = llt.solve(rhs);

  CollocationSolution sol;
  sol.coefficients.assign(alpha.data(), alpha.data() + n);
  sol.values.resize(points.size());
  for (std::size_t p = 0; p < points.size(); ++p) {
    double v = 0.0;
    for (Eigen::Index j = 0; j < n; ++j) {
      v += alpha[j] * riesz_value(set[selected[static_cast<std::size_t>(j)]], points[p], spec);
    }
    sol.values[p] = v;
  }
  return sol;
}

}  // namespace pgreedy
