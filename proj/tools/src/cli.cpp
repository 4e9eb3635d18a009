#include <CLI11.hpp>

#include <ostream>

#include "pgreedy/errors.hpp"
#include "pgreedy_cli/commands.hpp"

namespace pgreedy::cli {

namespace {

constexpr int kExitUsage = 2;
constexpr int kExitNumerical = 3;

struct Flags {
  std::string config;
  std::string out;
  std::string basis;
  int workers = -1;
};

RunConfig resolve(const Flags& f) {
  RunConfig c = load_config(f.config);
  if (!f.out.empty()) c.out = f.out;
  if (f.workers >= 0) c.workers = static_cast<unsigned>(f.workers);
  return c;
}

}  // namespace

int run_cli(int argc, const char* const* argv, std::ostream& out, std::ostream& err) {
  CLI::App app{"Dual-space greedy kernel collocation on the unit disk"};
  app.require_subcommand(1);
  Flags flags;
  const auto common = [&](CLI::App* sub) {
    sub->add_option("--config", flags.config, "key=value configuration file")->required();
    sub->add_option("--out", flags.out, "output directory (overrides the out key)");
    sub->add_option("--workers", flags.workers, "worker threads, 0 for all cores")->check(CLI::NonNegativeNumber);
  };
  CLI::App* build = app.add_subcommand("build", "run the greedy selection and store the basis");
  common(build);
  CLI::App* solve = app.add_subcommand("solve", "project a test problem onto a stored basis");
  common(solve);
  solve->add_option("--basis", flags.basis, "directory written by build")->required();
  CLI::App* report = app.add_subcommand("report", "fit rates of an existing trace");
  common(report);

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? 0 : kExitUsage;
  }

  try {
    const RunConfig config = resolve(flags);
    if (build->parsed()) {
      const RunResult r = cmd_build(config, config.out);
      out << "built " << r.state.size() << " functionals (" << r.trace.boundary_picks()
          << " boundary) into " << config.out.string() << '\n';
    } else if (solve->parsed()) {
      const BasisSolve r = cmd_solve(config, flags.basis, config.out);
      out << "solved " << problem_name(config.problem) << " with " << r.max_errors.size()
          << " basis functions, final max error " << io::format_double(r.max_errors.back()) << '\n';
    } else {
      const std::string dir = flags.out.empty() ? config.out.string() : flags.out;
      (void)cmd_report(config, dir, out);
    }
    return 0;
  } catch (const ConfigError& e) {
    err << "configuration error: " << e.what() << '\n';
    return kExitUsage;
  } catch (const KernelMismatch& e) {
    err << "refusing to solve: " << e.what() << '\n';
    return kExitUsage;
  } catch (const NumericalError& e) {
    err << "numerical failure: " << e.what() << '\n';
    return kExitNumerical;
  } catch (const std::exception& e) {
    err << "error: " << e.what() << '\n';
    return kExitUsage;
  }
}

}  // namespace pgreedy::cli
