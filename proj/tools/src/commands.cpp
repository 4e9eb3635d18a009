#include "pgreedy_cli/commands.hpp"

#include <cmath>
#include <fstream>
#include <limits>
#include <numbers>
#include <ostream>
#include <sstream>
#include <system_error>

#include "pgreedy/analysis.hpp"
#include "pgreedy/errors.hpp"
#include "pgreedy/geometry.hpp"
#include "pgreedy/solver.hpp"

namespace pgreedy::cli {

namespace fs = std::filesystem;

namespace {

constexpr double kNaN = std::numeric_limits<double>::quiet_NaN();

double try_rate(std::span<const double> xs, std::span<const double> ys, IndexWindow w) {
  try {
    return fit_rate(xs, ys, w);
  } catch (const std::invalid_argument&) {
    return kNaN;
  } catch (const std::domain_error&) {
    return kNaN;
  }
}

// Steps N in [N_last / 2 + 1, N_last], the second half of the trace.
IndexWindow second_half(std::span<const double> xs, double last) {
  return window_by_value(xs, std::floor(last / 2) + 1, last);
}

std::string text_of(const io::KeyValues& kv) {
  std::ostringstream os;
  io::write_key_values(os, kv);
  return os.str();
}

template <class Write>
void write_file(const fs::path& path, Write&& write) {
  std::ofstream os(path);
  if (!os) throw std::runtime_error("cannot write '" + path.string() + "'");
  write(os);
  if (!os) throw std::runtime_error("write failed for '" + path.string() + "'");
}

// Staging directory next to the target, removed unless committed.
class StagedDirectory {
 public:
  explicit StagedDirectory(fs::path target) : target_(std::move(target)) {
    if (fs::exists(target_) && !fs::exists(target_ / "kernel.txt") && !fs::is_empty(target_)) {
      throw ConfigError("out", "'" + target_.string() + "' exists and does not hold a previous build");
    }
    if (target_.has_parent_path()) fs::create_directories(target_.parent_path());
    staging_ = target_;
    staging_ += ".partial";
    fs::remove_all(staging_);
    fs::create_directory(staging_);
  }
  StagedDirectory(const StagedDirectory&) = delete;
  StagedDirectory& operator=(const StagedDirectory&) = delete;
  ~StagedDirectory() {
    if (!committed_) {
      std::error_code ec;
      fs::remove_all(staging_, ec);
    }
  }

  [[nodiscard]] const fs::path& path() const noexcept { return staging_; }

  void commit() {
    fs::remove_all(target_);
    fs::rename(staging_, target_);
    committed_ = true;
  }

 private:
  fs::path target_;
  fs::path staging_;
  bool committed_ = false;
};

io::CsvTable single_column_table(const std::string& x, const std::string& y, std::span<const double> ys) {
  io::CsvTable t{{x, y}, {}};
  for (std::size_t i = 0; i < ys.size(); ++i) t.rows.push_back({std::to_string(i + 1), io::format_double(ys[i])});
  return t;
}

}  // namespace

RateSummary summarize(const RunTrace& trace, const std::vector<double>& singular_values, int m) {
  RateSummary s;
  s.steps = trace.rows.size();
  s.boundary_picks = trace.boundary_picks();
  s.expected_sigma_rate = -(m - 3) / 2.0;
  const auto xs = trace.steps();
  const auto rxs = trace.rho_steps();
  const auto rhos = trace.rhos();
  const double last = xs.empty() ? 0.0 : xs.back();
  s.sigma_rate = try_rate(xs, trace.sigmas(), second_half(xs, last));
  s.rho_rate = try_rate(rxs, rhos, second_half(rxs, last));
  s.cond_rate = try_rate(xs, trace.conditions(), second_half(xs, last));
  s.sigma_rate_full = try_rate(xs, trace.sigmas(), {0, xs.size()});
  s.rho_rate_full = try_rate(rxs, rhos, {0, rxs.size()});
  s.cond_rate_full = try_rate(xs, trace.conditions(), {0, xs.size()});
  std::vector<double> ks;
  for (std::size_t k = 0; k < singular_values.size(); ++k) ks.push_back(static_cast<double>(k + 1));
  s.singular_value_rate = try_rate(ks, singular_values, {0, ks.size()});
  return s;
}

io::KeyValues report_values(const RateSummary& s, const RunConfig& c) {
  io::KeyValues kv = kernel_key_values(c);
  kv["mode"] = mode_name(c.mode);
  kv["steps"] = std::to_string(s.steps);
  kv["boundary_picks"] = std::to_string(s.boundary_picks);
  kv["sigma_rate"] = io::format_double(s.sigma_rate);
  kv["rho_rate"] = io::format_double(s.rho_rate);
  kv["cond_rate"] = io::format_double(s.cond_rate);
  kv["sigma_rate_full"] = io::format_double(s.sigma_rate_full);
  kv["rho_rate_full"] = io::format_double(s.rho_rate_full);
  kv["cond_rate_full"] = io::format_double(s.cond_rate_full);
  kv["singular_value_rate"] = io::format_double(s.singular_value_rate);
  kv["expected_sigma_rate"] = io::format_double(s.expected_sigma_rate);
  return kv;
}

io::CsvTable rates_table(const RateSummary& s) {
  io::CsvTable t{{"quantity", "window", "slope"}, {}};
  const auto add = [&](const char* q, const char* w, double v) { t.rows.push_back({q, w, io::format_double(v)}); };
  add("sigma", "second_half", s.sigma_rate);
  add("rho", "second_half", s.rho_rate);
  add("cond_C", "second_half", s.cond_rate);
  add("sigma", "full", s.sigma_rate_full);
  add("rho", "full", s.rho_rate_full);
  add("cond_C", "full", s.cond_rate_full);
  add("singular_values", "full", s.singular_value_rate);
  return t;
}

Setup make_setup(const RunConfig& c) {
  Setup s;
  s.geometry = disk_candidates(c.domain_count, c.boundary_count);
  s.set = disk_functional_set(s.geometry, c.weights());
  if (c.n_max > s.set.size()) {
    throw ConfigError("n_max", "exceeds the " + std::to_string(s.set.size()) + " candidate functionals");
  }
  // Boundary sample with the same spacing as the interior grid.
  const auto samples = static_cast<std::size_t>(std::ceil(2 * std::numbers::pi / c.eval_spacing));
  s.grid = evaluation_grid(c.eval_spacing, circle_points(std::max<std::size_t>(samples, 8)));
  return s;
}

RunResult cmd_build(const RunConfig& config, const fs::path& out) {
  const KernelSpec spec = config.kernel();
  const Setup setup = make_setup(config);
  const RunOptions options = config.run_options();
  RunResult result = run(setup.set, spec, setup.grid, options);

  // Final P^2(delta) and basis values on the grid.
  DeltaPowerTracker grid = result.grid ? *result.grid : DeltaPowerTracker(setup.grid.points, spec);
  if (!result.grid) {
    std::vector<Functional> chosen;
    for (std::size_t i : result.state.selected()) chosen.push_back(setup.set[i]);
    grid.catch_up(result.state.c(), chosen, spec, options.workers);
  }
  const std::vector<double> sv = singular_values(grid.basis().values());
  const RateSummary summary = summarize(result.trace, sv, config.m);

  StagedDirectory staged(out);
  const fs::path& dir = staged.path();
  io::write_csv_file(dir / "trace.csv", io::trace_table(result.trace));
  write_file(dir / "selected.txt", [&](std::ostream& os) {
    os << "# selected functionals in selection order: kind x y\n";
    std::vector<Functional> chosen;
    for (std::size_t i : result.state.selected()) chosen.push_back(setup.set[i]);
    io::write_functionals(os, chosen);
  });
  io::write_csv_file(dir / "cmatrix.csv", io::lower_triangular_table(result.state.c()));
  io::KeyValues kernel = kernel_key_values(config);
  kernel["mode"] = mode_name(config.mode);
  kernel["size"] = std::to_string(result.state.size());
  io::write_text_file(dir / "kernel.txt", text_of(kernel));

  io::CsvTable power{{"x1", "x2", "on_boundary", "power2"}, {}};
  const auto pts = grid.basis().points();
  for (std::size_t p = 0; p < pts.size(); ++p) {
    power.rows.push_back({io::format_double(pts[p][0]), io::format_double(pts[p][1]),
                          p >= setup.grid.interior_count ? "1" : "0", io::format_double(grid.power()[p])});
  }
  io::write_csv_file(dir / "powergrid.csv", power);
  io::write_csv_file(dir / "singular_values.csv", single_column_table("k", "singular_value", sv));
  const auto rates = rates_table(summary);
  io::write_csv_file(dir / "rates.csv", rates);

  io::KeyValues report = report_values(summary, config);
  report["converged"] = result.converged ? "1" : "0";
  report["reorthogonalizations"] = std::to_string(result.state.reorthogonalizations());
  if (!result.trace.rows.empty()) report["sigma_final"] = io::format_double(result.trace.rows.back().sigma);
  io::write_text_file(dir / "report.txt", text_of(report));
  io::write_text_file(dir / "config.txt", text_of(to_key_values(config)));

  const auto trace_header = io::trace_table(result.trace).header;
  io::write_text_file(dir / "trace.plt", io::plot_script("trace.csv", "sigma and rho", "N", {"sigma", "rho"},
                                                         trace_header, true));
  io::write_text_file(dir / "fill.plt", io::plot_script("trace.csv", "fill distances", "N",
                                                        {"h_domain", "h_boundary"}, trace_header, true));
  io::write_text_file(dir / "cond.plt",
                      io::plot_script("trace.csv", "condition of C", "N", {"cond_C"}, trace_header, true));
  io::write_text_file(dir / "singular_values.plt",
                      io::plot_script("singular_values.csv", "singular values", "k", {"singular_value"},
                                      {"k", "singular_value"}, true));
  staged.commit();
  return result;
}

BasisSolve cmd_solve(const RunConfig& config, const fs::path& basis, const fs::path& out) {
  const TestSolution u = config.test_solution();
  io::KeyValues stored;
  {
    std::ifstream in(basis / "kernel.txt");
    if (!in) throw std::runtime_error("no kernel.txt in basis directory '" + basis.string() + "'");
    stored = io::read_key_values(in);
  }
  const io::KeyValues wanted = kernel_key_values(config);
  for (const auto& [key, value] : wanted) {
    const auto it = stored.find(key);
    const bool same = it != stored.end() && (key == "m" || key == "d" ? it->second == value
                                                                        : io::parse_double(it->second) ==
                                                                              io::parse_double(value));
    if (!same) {
      std::ostringstream os;
      os << "basis kernel parameters do not match the configuration\n  basis: ";
      for (const auto& [k, v] : stored) os << k << '=' << v << ' ';
      os << "\n  config: ";
      for (const auto& [k, v] : wanted) os << k << '=' << v << ' ';
      throw KernelMismatch(os.str());
    }
  }

  std::vector<Functional> chosen;
  {
    std::ifstream in(basis / "selected.txt");
    if (!in) throw std::runtime_error("no selected.txt in basis directory '" + basis.string() + "'");
    chosen = io::read_functionals(in, config.weights());
  }
  const LowerTriangular c = io::lower_triangular_from_table(io::read_csv_file(basis / "cmatrix.csv"));
  if (c.size() != chosen.size()) {
    throw FormatError("cmatrix.csv has " + std::to_string(c.size()) + " rows but selected.txt lists " +
                      std::to_string(chosen.size()) + " functionals");
  }

  const Setup setup = make_setup(config);
  const KernelSpec spec = config.kernel();
  const auto eval = evaluate_basis(c, chosen, spec, setup.grid.points, Workers(config.workers));
  const BasisSolve r = solve_with_basis(c, chosen, eval, u);
  const auto power = power_on_deltas(eval, spec);

  fs::create_directories(out);
  io::CsvTable errors{{"N", "max_error"}, {}};
  io::CsvTable coeffs{{"N", "mu", "cumulative_energy"}, {}};
  for (std::size_t n = 0; n < r.max_errors.size(); ++n) {
    errors.rows.push_back({std::to_string(n + 1), io::format_double(r.max_errors[n])});
    coeffs.rows.push_back(
        {std::to_string(n + 1), io::format_double(r.newton[n]), io::format_double(r.cumulative_energy[n])});
  }
  io::CsvTable solution{{"x1", "x2", "u_true", "u_approx", "abs_error", "power_delta"}, {}};
  const auto pts = eval.points();
  for (std::size_t p = 0; p < pts.size(); ++p) {
    solution.rows.push_back({io::format_double(pts[p][0]), io::format_double(pts[p][1]),
                             io::format_double(r.u_true[p]), io::format_double(r.u_approx[p]),
                             io::format_double(std::abs(r.u_true[p] - r.u_approx[p])),
                             io::format_double(power[p])});
  }
  io::write_csv_file(out / "errors.csv", errors);
  io::write_csv_file(out / "coeffs.csv", coeffs);
  io::write_csv_file(out / "solution.csv", solution);
  io::write_text_file(out / "errors.plt", io::plot_script("errors.csv", "max error", "N", {"max_error"},
                                                          errors.header, true));
  return r;
}

RateSummary cmd_report(const RunConfig& config, const fs::path& dir, std::ostream& os) {
  const RunTrace trace = io::trace_from_table(io::read_csv_file(dir / "trace.csv"));
  std::vector<double> sv;
  if (fs::exists(dir / "singular_values.csv")) {
    sv = io::read_csv_file(dir / "singular_values.csv").numeric_column("singular_value");
  }
  const RateSummary s = summarize(trace, sv, config.m);
  io::write_key_values(os, report_values(s, config));
  return s;
}

}  // namespace pgreedy::cli
