#pragma once

#include <filesystem>
#include <stdexcept>
#include <string>

#include "pgreedy/functional.hpp"
#include "pgreedy/io.hpp"
#include "pgreedy/kernel.hpp"
#include "pgreedy/run.hpp"

namespace pgreedy::cli {

// Bad configuration or command line; maps to exit code 2.
class ConfigError : public std::invalid_argument {
 public:
  ConfigError(std::string field, const std::string& message)
      : std::invalid_argument(field + ": " + message), field_(std::move(field)) {}

  [[nodiscard]] const std::string& field() const noexcept { return field_; }

 private:
  std::string field_;
};

enum class Problem { None, Gaussian, PowerCusp };

// One experiment. Defaults give the desk-scale disk setup.
struct RunConfig {
  int m = 4;
  int d = 2;
  double scale = 1.0;
  std::size_t domain_count = 2000;
  std::size_t boundary_count = 120;
  std::size_t n_max = 200;
  double stop_tol = kDefaultRelativeStopTolerance;
  SelectionMode mode = SelectionMode::Standard;
  double eval_spacing = 0.025;
  std::size_t y_size = 500;
  std::size_t rho_every = 1;
  double weight_domain = 1.0;
  double weight_boundary = 1.0;
  unsigned workers = 0;
  std::filesystem::path out = "pgreedy_out";
  Problem problem = Problem::None;
  Point center{-0.31415926535897931, 0.0};  // -pi/10
  double shape = 1.0;
  double exponent = 2.5;

  [[nodiscard]] KernelSpec kernel() const { return KernelSpec(m, d, scale); }
  [[nodiscard]] FunctionalWeights weights() const { return {weight_domain, weight_boundary}; }
  [[nodiscard]] RunOptions run_options() const;
  // Throws ConfigError for test problem None.
  [[nodiscard]] TestSolution test_solution() const;
};

// Unknown keys and malformed or out-of-range values throw ConfigError naming
// the key. Missing keys keep their defaults.
[[nodiscard]] RunConfig parse_config(const io::KeyValues& values);
[[nodiscard]] RunConfig load_config(const std::filesystem::path& path);
[[nodiscard]] io::KeyValues to_key_values(const RunConfig& config);

// The kernel parameters that a stored basis depends on.
[[nodiscard]] io::KeyValues kernel_key_values(const RunConfig& config);

[[nodiscard]] std::string mode_name(SelectionMode mode);
[[nodiscard]] std::string problem_name(Problem problem);

}  // namespace pgreedy::cli
