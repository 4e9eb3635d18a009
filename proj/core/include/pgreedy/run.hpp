#pragma once

#include <cstddef>
#include <optional>
#include <vector>

#include "pgreedy/functional.hpp"
#include "pgreedy/geometry.hpp"
#include "pgreedy/greedy.hpp"
#include "pgreedy/kernel.hpp"
#include "pgreedy/parallel.hpp"
#include "pgreedy/solver.hpp"

namespace pgreedy {

enum class SelectionMode { Standard, Extended };

struct RunOptions {
  SelectionMode mode = SelectionMode::Standard;
  std::size_t n_max = 200;
  // sigma^2 <= relative_stop_tolerance * max diag stops the run early.
  double relative_stop_tolerance = kDefaultRelativeStopTolerance;
  // rho is recorded every rho_every steps (and always at the last step);
  // 0 disables it.
  std::size_t rho_every = 1;
  // |Y| for the extended method, drawn evenly from the interior grid points.
  std::size_t y_size = 500;
  bool track_condition = true;
  Workers workers;
};

// One greedy step. sigma and rho are power-function values P (not P^2).
struct TraceRow {
  std::size_t n = 0;  // number of selected functionals after this step
  double sigma = 0.0;
  std::optional<double> rho;
  FunctionalKind kind = FunctionalKind::DomainOpDelta;
  double h_domain = 0.0;
  double h_boundary = 0.0;
  double cond_c = 1.0;
  std::size_t selected_index = 0;
  // max over Lambda_2 of P^2(delta_z), after this step.
  double boundary_power_max = 0.0;
};

struct RunTrace {
  std::vector<TraceRow> rows;
  double initial_sigma = 0.0;
  double initial_boundary_power_max = 0.0;

  [[nodiscard]] std::size_t boundary_picks() const noexcept;
  [[nodiscard]] std::vector<double> steps() const;
  [[nodiscard]] std::vector<double> sigmas() const;
  // Rows without a rho value are skipped in both returned vectors.
  [[nodiscard]] std::vector<double> rho_steps() const;
  [[nodiscard]] std::vector<double> rhos() const;
  [[nodiscard]] std::vector<double> conditions() const;
};

struct RunResult {
  GreedyState state;
  RunTrace trace;
  // P^2(delta_x) and basis values on the evaluation grid, current at the
  // final step when rho tracking is on.
  std::optional<DeltaPowerTracker> grid;
  bool converged = false;  // stopped by the tolerance before n_max
};

// Runs select/extend up to options.n_max steps over `set`. `grid` supplies the
// points for rho and, in extended mode, the interior points Y.
// Throws std::invalid_argument when n_max exceeds |set|.
[[nodiscard]] RunResult run(const FunctionalSet& set, const KernelSpec& spec,
                            const EvaluationGrid& grid, const RunOptions& options);

// Evenly strided subset of the interior grid points.
[[nodiscard]] std::vector<Point> interior_subset(const EvaluationGrid& grid, std::size_t count);

}  // namespace pgreedy
