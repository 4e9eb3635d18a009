#pragma once

#include <filesystem>
#include <iosfwd>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include "pgreedy/io.hpp"
#include "pgreedy/run.hpp"
#include "pgreedy_cli/config.hpp"

namespace pgreedy::cli {

// Stored basis built with different kernel parameters; exit code 2.
class KernelMismatch : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// Fitted slopes of one trace. Missing values (too few points, nonpositive
// data) are NaN.
struct RateSummary {
  std::size_t steps = 0;
  std::size_t boundary_picks = 0;
  double sigma_rate = 0.0;       // second half of the trace
  double rho_rate = 0.0;
  double cond_rate = 0.0;
  double sigma_rate_full = 0.0;  // N in [1, N_last]
  double rho_rate_full = 0.0;
  double cond_rate_full = 0.0;
  double singular_value_rate = 0.0;  // over all singular values
  double expected_sigma_rate = 0.0;  // -(m - 3) / 2 for d = 2
};

[[nodiscard]] RateSummary summarize(const RunTrace& trace, const std::vector<double>& singular_values,
                                    int m);
[[nodiscard]] io::KeyValues report_values(const RateSummary& s, const RunConfig& config);
[[nodiscard]] io::CsvTable rates_table(const RateSummary& s);

// Geometry, functionals and evaluation grid of a configuration.
struct Setup {
  DiskGeometry geometry;
  FunctionalSet set;
  EvaluationGrid grid;
};
[[nodiscard]] Setup make_setup(const RunConfig& config);

// Writes trace.csv, selected.txt, cmatrix.csv, kernel.txt, powergrid.csv,
// singular_values.csv, rates.csv, report.txt and plot scripts into `out`.
// Files are written to a sibling staging directory that is renamed into
// place only on success. An existing `out` is replaced only if it holds
// a previous build (kernel.txt).
RunResult cmd_build(const RunConfig& config, const std::filesystem::path& out);

// Projects the configured test problem onto the basis stored in `basis`.
// Writes errors.csv, coeffs.csv and solution.csv into `out`.
BasisSolve cmd_solve(const RunConfig& config, const std::filesystem::path& basis,
                     const std::filesystem::path& out);

// Recomputes the rate summary from `dir`/trace.csv (and singular_values.csv
// when present) and prints it as key=value lines.
RateSummary cmd_report(const RunConfig& config, const std::filesystem::path& dir, std::ostream& os);

// Full command line; returns the process exit code.
int run_cli(int argc, const char* const* argv, std::ostream& out, std::ostream& err);

}  // namespace pgreedy::cli
