#include "pgreedy/run.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>
#include <string>

#include "pgreedy/analysis.hpp"

namespace pgreedy {

std::size_t RunTrace::boundary_picks() const noexcept {
  return static_cast<std::size_t>(std::count_if(rows.begin(), rows.end(), [](const TraceRow& r) {
    return r.kind == FunctionalKind::BoundaryDelta;
  }));
}

std::vector<double> RunTrace::steps() const {
  std::vector<double> v;
  v.reserve(rows.size());
  for (const auto& r : rows) v.push_back(static_cast<double>(r.n));
  return v;
}

std::vector<double> RunTrace::sigmas() const {
  std::vector<double> v;
  v.reserve(rows.size());
  for (const auto& r : rows) v.push_back(r.sigma);
  return v;
}

std::vector<double> RunTrace::rho_steps() const {
  std::vector<double> v;
  for (const auto& r : rows) {
    if (r.rho) v.push_back(static_cast<double>(r.n));
  }
  return v;
}

std::vector<double> RunTrace::rhos() const {
  std::vector<double> v;
  for (const auto& r : rows) {
    if (r.rho) v.push_back(*r.rho);
  }
  return v;
}

std::vector<double> RunTrace::conditions() const {
  std::vector<double> v;
  v.reserve(rows.size());
  for (const auto& r : rows) v.push_back(r.cond_c);
  return v;
}

std::vector<Point> interior_subset(const EvaluationGrid& grid, std::size_t count) {
  const std::size_t n = grid.interior_count;
  std::vector<Point> out;
  if (count >= n) {
    out.assign(grid.points.begin(), grid.points.begin() + static_cast<std::ptrdiff_t>(n));
    return out;
  }
  out.reserve(count);
  for (std::size_t i = 0; i < count; ++i) out.push_back(grid.points[i * n / count]);
  return out;
}

namespace {

double boundary_power_max(const GreedyState& state, const FunctionalSet& set) {
  double best = 0.0;
  const auto residual = state.residual_power();
  for (std::size_t i = 0; i < set.size(); ++i) {
    const auto& f = set[i];
    if (f.is_boundary()) best = std::max(best, residual[i] / (f.weight * f.weight));
  }
  return best;
}

}  // namespace

RunResult run(const FunctionalSet& set, const KernelSpec& spec, const EvaluationGrid& grid,
              const RunOptions& options) {
  if (options.n_max > set.size()) {
    throw std::invalid_argument("run: n_max (" + std::to_string(options.n_max) +
                                ") exceeds the number of candidates (" +
                                std::to_string(set.size()) + ")");
  }
  const Workers& workers = options.workers;

  RunResult result{init(set, spec, workers), {}, std::nullopt, false};
  GreedyState& state = result.state;
  const double stop_tol = options.relative_stop_tolerance * state.max_diag();

  std::vector<Point> domain_ref;
  std::vector<Point> boundary_ref;
  for (const auto& f : set) (f.is_boundary() ? boundary_ref : domain_ref).push_back(f.point);
  FillDistanceTracker h_domain(std::move(domain_ref));
  FillDistanceTracker h_boundary(std::move(boundary_ref));

  const bool track_rho = options.rho_every > 0 && !grid.points.empty();
  if (track_rho) result.grid.emplace(grid.points, spec);

  std::optional<DeltaPowerTracker> monitor;
  if (options.mode == SelectionMode::Extended) {
    monitor.emplace(interior_subset(grid, options.y_size), spec);
  }

  std::vector<Functional> chosen_functionals;
  chosen_functionals.reserve(options.n_max);

  result.trace.initial_sigma = std::sqrt(state.max_residual());
  result.trace.initial_boundary_power_max = boundary_power_max(state, set);
  result.trace.rows.reserve(options.n_max);

  for (std::size_t step = 0; step < options.n_max; ++step) {
    std::optional<std::size_t> pick;
    if (monitor) {
      monitor->catch_up(state.c(), chosen_functionals, spec, workers);
      const DeltaPowerMax m = delta_power_max(state, set, monitor->max_power());
      pick = select_extended(state, m, stop_tol);
    } else {
      pick = select_standard(state, stop_tol);
    }
    if (!pick) {
      result.converged = true;
      break;
    }

    extend(state, *pick, set, spec, workers);
    const Functional& f = set[*pick];
    chosen_functionals.push_back(f);
    (f.is_boundary() ? h_boundary : h_domain).add(f.point);

    TraceRow row;
    row.n = state.size();
    row.sigma = std::sqrt(state.max_residual());
    row.kind = f.kind;
    row.selected_index = *pick;
    row.h_domain = h_domain.value();
    row.h_boundary = h_boundary.value();
    row.cond_c = options.track_condition ? condition_estimate(state.c()) : 1.0;
    row.boundary_power_max = boundary_power_max(state, set);

    const bool last = step + 1 == options.n_max;
    if (track_rho && (row.n % options.rho_every == 0 || last)) {
      result.grid->catch_up(state.c(), chosen_functionals, spec, workers);
      row.rho = std::sqrt(result.grid->max_power());
    }
    result.trace.rows.push_back(row);
  }

  if (track_rho) result.grid->catch_up(state.c(), chosen_functionals, spec, workers);
  if (result.converged && track_rho && !result.trace.rows.empty() && !result.trace.rows.back().rho) {
    result.trace.rows.back().rho = std::sqrt(result.grid->max_power());
  }
  return result;
}

}  // namespace pgreedy
