#include "pgreedy_cli/config.hpp"

#include <charconv>
#include <fstream>
#include <functional>
#include <map>
#include <sstream>

#include "pgreedy/errors.hpp"

namespace pgreedy::cli {

namespace {

std::size_t parse_count(const std::string& key, const std::string& text) {
  std::size_t v = 0;
  const char* end = text.data() + text.size();
  const auto [ptr, ec] = std::from_chars(text.data(), end, v);
  if (ec != std::errc() || ptr != end) throw ConfigError(key, "expected a nonnegative integer, got '" + text + "'");
  return v;
}

int parse_int(const std::string& key, const std::string& text) {
  int v = 0;
  const char* end = text.data() + text.size();
  const auto [ptr, ec] = std::from_chars(text.data(), end, v);
  if (ec != std::errc() || ptr != end) throw ConfigError(key, "expected an integer, got '" + text + "'");
  return v;
}

double parse_real(const std::string& key, const std::string& text) {
  try {
    const double v = io::parse_double(text);
    if (!std::isfinite(v)) throw ConfigError(key, "expected a finite number, got '" + text + "'");
    return v;
  } catch (const FormatError&) {
    throw ConfigError(key, "expected a number, got '" + text + "'");
  }
}

double parse_positive(const std::string& key, const std::string& text) {
  const double v = parse_real(key, text);
  if (!(v > 0.0)) throw ConfigError(key, "must be > 0, got '" + text + "'");
  return v;
}

Point parse_point(const std::string& key, const std::string& text) {
  std::vector<double> coords;
  std::istringstream ss(text);
  std::string part;
  while (std::getline(ss, part, ',')) coords.push_back(parse_real(key, part));
  if (coords.size() != 2) throw ConfigError(key, "expected 'x,y', got '" + text + "'");
  return Point{coords[0], coords[1]};
}

}  // namespace

std::string mode_name(SelectionMode mode) {
  return mode == SelectionMode::Extended ? "extended" : "standard";
}

std::string problem_name(Problem problem) {
  switch (problem) {
    case Problem::Gaussian: return "gaussian";
    case Problem::PowerCusp: return "powercusp";
    case Problem::None: break;
  }
  return "none";
}

RunOptions RunConfig::run_options() const {
  RunOptions o;
  o.mode = mode;
  o.n_max = n_max;
  o.relative_stop_tolerance = stop_tol;
  o.rho_every = rho_every;
  o.y_size = y_size;
  o.workers = Workers(workers);
  return o;
}

TestSolution RunConfig::test_solution() const {
  switch (problem) {
    case Problem::Gaussian: return GaussianBump{center, shape};
    case Problem::PowerCusp: return PowerCusp{center, exponent};
    case Problem::None: break;
  }
  throw ConfigError("problem", "a test problem (gaussian or powercusp) is required");
}

RunConfig parse_config(const io::KeyValues& values) {
  RunConfig c;
  using Setter = std::function<void(const std::string&, const std::string&)>;
  const std::map<std::string, Setter> setters = {
      {"m", [&](auto& k, auto& v) { c.m = parse_int(k, v); }},
      {"d", [&](auto& k, auto& v) { c.d = parse_int(k, v); }},
      {"scale", [&](auto& k, auto& v) { c.scale = parse_positive(k, v); }},
      {"domain_count", [&](auto& k, auto& v) { c.domain_count = parse_count(k, v); }},
      {"boundary_count", [&](auto& k, auto& v) { c.boundary_count = parse_count(k, v); }},
      {"n_max", [&](auto& k, auto& v) { c.n_max = parse_count(k, v); }},
      {"stop_tol", [&](auto& k, auto& v) {
         c.stop_tol = parse_real(k, v);
         if (c.stop_tol < 0.0) throw ConfigError(k, "must be >= 0");
       }},
      {"mode", [&](auto& k, auto& v) {
         if (v == "standard") c.mode = SelectionMode::Standard;
         else if (v == "extended") c.mode = SelectionMode::Extended;
         else throw ConfigError(k, "expected standard or extended, got '" + v + "'");
       }},
      {"eval_spacing", [&](auto& k, auto& v) { c.eval_spacing = parse_positive(k, v); }},
      {"y_size", [&](auto& k, auto& v) { c.y_size = parse_count(k, v); }},
      {"rho_every", [&](auto& k, auto& v) { c.rho_every = parse_count(k, v); }},
      {"weight_domain", [&](auto& k, auto& v) { c.weight_domain = parse_positive(k, v); }},
      {"weight_boundary", [&](auto& k, auto& v) { c.weight_boundary = parse_positive(k, v); }},
      {"workers", [&](auto& k, auto& v) { c.workers = static_cast<unsigned>(parse_count(k, v)); }},
      {"out", [&](auto&, auto& v) { c.out = v; }},
      {"problem", [&](auto& k, auto& v) {
         if (v == "none") c.problem = Problem::None;
         else if (v == "gaussian") c.problem = Problem::Gaussian;
         else if (v == "powercusp") c.problem = Problem::PowerCusp;
         else throw ConfigError(k, "expected gaussian, powercusp or none, got '" + v + "'");
       }},
      {"center", [&](auto& k, auto& v) { c.center = parse_point(k, v); }},
      {"shape", [&](auto& k, auto& v) { c.shape = parse_positive(k, v); }},
      {"exponent", [&](auto& k, auto& v) { c.exponent = parse_positive(k, v); }},
  };
  for (const auto& [key, value] : values) {
    const auto it = setters.find(key);
    if (it == setters.end()) throw ConfigError(key, "unknown configuration key");
    it->second(key, value);
  }

  if (c.d != 2) throw ConfigError("d", "only the disk geometry (d = 2) is available");
  if (!(2 * c.m > 4 + c.d)) {
    throw ConfigError("m", "smoothness must satisfy m > 3 for d = 2, got m = " + std::to_string(c.m));
  }
  (void)c.kernel();
  if (c.domain_count < 1) throw ConfigError("domain_count", "must be >= 1");
  if (c.boundary_count < 1) throw ConfigError("boundary_count", "must be >= 1");
  if (c.n_max < 1) throw ConfigError("n_max", "must be >= 1");
  if (c.mode == SelectionMode::Extended && c.y_size < 1) throw ConfigError("y_size", "must be >= 1 in extended mode");
  if (c.problem == Problem::PowerCusp && c.exponent < 2.0) {
    throw ConfigError("exponent", "the Laplacian data need exponent >= 2");
  }
  return c;
}

RunConfig load_config(const std::filesystem::path& path) {
  std::ifstream in(path);
  if (!in) throw ConfigError("config", "cannot open '" + path.string() + "'");
  try {
    return parse_config(io::read_key_values(in));
  } catch (const FormatError& e) {
    throw ConfigError("config", e.what());
  }
}

io::KeyValues to_key_values(const RunConfig& c) {
  io::KeyValues kv = kernel_key_values(c);
  kv["domain_count"] = std::to_string(c.domain_count);
  kv["boundary_count"] = std::to_string(c.boundary_count);
  kv["n_max"] = std::to_string(c.n_max);
  kv["stop_tol"] = io::format_double(c.stop_tol);
  kv["mode"] = mode_name(c.mode);
  kv["eval_spacing"] = io::format_double(c.eval_spacing);
  kv["y_size"] = std::to_string(c.y_size);
  kv["rho_every"] = std::to_string(c.rho_every);
  kv["workers"] = std::to_string(c.workers);
  kv["out"] = c.out.string();
  kv["problem"] = problem_name(c.problem);
  kv["center"] = io::format_double(c.center[0]) + "," + io::format_double(c.center[1]);
  kv["shape"] = io::format_double(c.shape);
  kv["exponent"] = io::format_double(c.exponent);
  return kv;
}

io::KeyValues kernel_key_values(const RunConfig& c) {
  return {{"m", std::to_string(c.m)},
          {"d", std::to_string(c.d)},
          {"scale", io::format_double(c.scale)},
          {"weight_domain", io::format_double(c.weight_domain)},
          {"weight_boundary", io::format_double(c.weight_boundary)}};
}

}  // namespace pgreedy::cli
