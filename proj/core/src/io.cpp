#include "pgreedy/io.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <istream>
#include <limits>
#include <ostream>
#include <sstream>

#include "pgreedy/errors.hpp"

namespace pgreedy::io {

namespace {

std::string trim(const std::string& s) {
  const auto first = s.find_first_not_of(" \t\r\n");
  if (first == std::string::npos) return {};
  const auto last = s.find_last_not_of(" \t\r\n");
  return s.substr(first, last - first + 1);
}

std::vector<std::string> split_commas(const std::string& line) {
  std::vector<std::string> out;
  std::string field;
  std::istringstream ss(line);
  while (std::getline(ss, field, ',')) out.push_back(trim(field));
  if (!line.empty() && line.back() == ',') out.emplace_back();
  return out;
}

}  // namespace

std::string format_double(double v) {
  if (std::isnan(v)) return "nan";
  if (std::isinf(v)) return v > 0 ? "inf" : "-inf";
  char buf[32];
  std::snprintf(buf, sizeof(buf), "%.17g", v);
  return buf;
}

double parse_double(const std::string& token) {
  const std::string t = trim(token);
  if (t.empty()) throw FormatError("expected a number, got an empty field");
  char* end = nullptr;
  const double v = std::strtod(t.c_str(), &end);
  if (end != t.c_str() + t.size()) throw FormatError("malformed number '" + t + "'");
  return v;
}

void write_functionals(std::ostream& os, std::span<const Functional> functionals) {
  for (const auto& f : functionals) {
    os << kind_tag(f.kind);
    for (double c : f.point.coords()) os << ' ' << format_double(c);
    os << '\n';
  }
}

std::vector<Functional> read_functionals(std::istream& is, FunctionalWeights weights) {
  std::vector<Functional> out;
  std::string line;
  std::size_t line_no = 0;
  while (std::getline(is, line)) {
    ++line_no;
    const std::string t = trim(line);
    if (t.empty() || t.front() == '#') continue;
    std::istringstream ss(t);
    std::string tag;
    ss >> tag;
    Functional f;
    if (tag == "B") {
      f.kind = FunctionalKind::BoundaryDelta;
    } else if (tag == "D") {
      f.kind = FunctionalKind::DomainOpDelta;
    } else {
      throw FormatError("functional list line " + std::to_string(line_no) +
                        ": unknown kind tag '" + tag + "'");
    }
    std::vector<double> coords;
    std::string tok;
    while (ss >> tok) coords.push_back(parse_double(tok));
    if (coords.empty() || coords.size() > kMaxDimension) {
      throw FormatError("functional list line " + std::to_string(line_no) +
                        ": expected 1 to 3 coordinates");
    }
    f.point = Point(std::span<const double>(coords));
    f.weight = weights.for_kind(f.kind);
    f.index = out.size();
    out.push_back(f);
  }
  return out;
}

std::size_t CsvTable::column(const std::string& name) const {
  const auto it = std::find(header.begin(), header.end(), name);
  if (it == header.end()) throw FormatError("CSV: missing column '" + name + "'");
  return static_cast<std::size_t>(it - header.begin());
}

std::vector<double> CsvTable::numeric_column(const std::string& name) const {
  const std::size_t c = column(name);
  std::vector<double> out;
  out.reserve(rows.size());
  for (const auto& r : rows) out.push_back(parse_double(r.at(c)));
  return out;
}

void write_csv(std::ostream& os, const CsvTable& table) {
  auto write_row = [&os](const std::vector<std::string>& row) {
    for (std::size_t i = 0; i < row.size(); ++i) {
      if (i) os << ',';
      os << row[i];
    }
    os << '\n';
  };
  write_row(table.header);
  for (const auto& r : table.rows) write_row(r);
}

CsvTable read_csv(std::istream& is) {
  CsvTable table;
  std::string line;
  bool have_header = false;
  std::size_t line_no = 0;
  while (std::getline(is, line)) {
    ++line_no;
    if (trim(line).empty()) continue;
    auto fields = split_commas(line);
    if (!have_header) {
      table.header = std::move(fields);
      have_header = true;
      continue;
    }
    if (fields.size() != table.header.size()) {
      throw FormatError("CSV line " + std::to_string(line_no) + ": expected " +
                        std::to_string(table.header.size()) + " fields, got " +
                        std::to_string(fields.size()));
    }
    table.rows.push_back(std::move(fields));
  }
  if (!have_header) throw FormatError("CSV: missing header row");
  return table;
}

CsvTable trace_table(const RunTrace& trace) {
  CsvTable t;
  t.header = {"N", "sigma", "rho", "kind", "h_domain", "h_boundary", "cond_C"};
  for (const auto& r : trace.rows) {
    t.rows.push_back({std::to_string(r.n), format_double(r.sigma),
                      r.rho ? format_double(*r.rho) : std::string(), std::string(1, kind_tag(r.kind)),
                      format_double(r.h_domain), format_double(r.h_boundary),
                      format_double(r.cond_c)});
  }
  return t;
}

RunTrace trace_from_table(const CsvTable& table) {
  const std::size_t cn = table.column("N");
  const std::size_t cs = table.column("sigma");
  const std::size_t cr = table.column("rho");
  const std::size_t ck = table.column("kind");
  const std::size_t chd = table.column("h_domain");
  const std::size_t chb = table.column("h_boundary");
  const std::size_t cc = table.column("cond_C");
  RunTrace trace;
  for (const auto& r : table.rows) {
    TraceRow row;
    const double n = parse_double(r[cn]);
    if (!(n >= 0.0) || n != std::floor(n)) throw FormatError("trace: N must be a count");
    row.n = static_cast<std::size_t>(n);
    row.sigma = parse_double(r[cs]);
    if (!r[cr].empty()) row.rho = parse_double(r[cr]);
    if (r[ck] == "B") {
      row.kind = FunctionalKind::BoundaryDelta;
    } else if (r[ck] == "D") {
      row.kind = FunctionalKind::DomainOpDelta;
    } else {
      throw FormatError("trace: kind must be B or D, got '" + r[ck] + "'");
    }
    row.h_domain = parse_double(r[chd]);
    row.h_boundary = parse_double(r[chb]);
    row.cond_c = parse_double(r[cc]);
    trace.rows.push_back(row);
  }
  return trace;
}

CsvTable lower_triangular_table(const LowerTriangular& c) {
  CsvTable t;
  const std::size_t n = c.size();
  t.header.reserve(n);
  for (std::size_t j = 0; j < n; ++j) t.header.push_back("c" + std::to_string(j + 1));
  for (std::size_t i = 0; i < n; ++i) {
    std::vector<std::string> row(n);
    for (std::size_t j = 0; j < n; ++j) row[j] = format_double(c(i, j));
    t.rows.push_back(std::move(row));
  }
  return t;
}

LowerTriangular lower_triangular_from_table(const CsvTable& table) {
  const std::size_t n = table.header.size();
  if (table.rows.size() != n) throw FormatError("C matrix: table is not square");
  LowerTriangular c;
  std::vector<double> row;
  for (std::size_t i = 0; i < n; ++i) {
    row.assign(i + 1, 0.0);
    for (std::size_t j = 0; j < n; ++j) {
      const double v = parse_double(table.rows[i][j]);
      if (j <= i) {
        row[j] = v;
      } else if (v != 0.0) {
        throw FormatError("C matrix: nonzero entry above the diagonal at row " +
                          std::to_string(i + 1));
      }
    }
    if (row[i] == 0.0) throw FormatError("C matrix: zero diagonal at row " + std::to_string(i + 1));
    c.append_row(row);
  }
  return c;
}

KeyValues read_key_values(std::istream& is) {
  KeyValues kv;
  std::string line;
  std::size_t line_no = 0;
  while (std::getline(is, line)) {
    ++line_no;
    const auto hash = line.find('#');
    if (hash != std::string::npos) line.erase(hash);
    const std::string t = trim(line);
    if (t.empty()) continue;
    const auto eq = t.find('=');
    if (eq == std::string::npos) {
      throw FormatError("line " + std::to_string(line_no) + ": expected key=value");
    }
    const std::string key = trim(t.substr(0, eq));
    if (key.empty()) throw FormatError("line " + std::to_string(line_no) + ": empty key");
    if (kv.count(key)) throw FormatError("line " + std::to_string(line_no) + ": duplicate key '" + key + "'");
    kv[key] = trim(t.substr(eq + 1));
  }
  return kv;
}

void write_key_values(std::ostream& os, const KeyValues& values) {
  for (const auto& [k, v] : values) os << k << '=' << v << '\n';
}

std::string plot_script(const std::string& csv_name, const std::string& title,
                        const std::string& x_column, const std::vector<std::string>& y_columns,
                        const std::vector<std::string>& header, bool loglog) {
  auto col = [&header](const std::string& name) {
    const auto it = std::find(header.begin(), header.end(), name);
    return std::to_string(it - header.begin() + 1);
  };
  std::ostringstream os;
  os << "# data: " << csv_name << "\n"
     << "set datafile separator ','\n"
     << "set key autotitle columnhead\n"
     << "set title '" << title << "'\n"
     << "set xlabel '" << x_column << "'\n";
  if (loglog) os << "set logscale xy\n";
  os << "plot ";
  for (std::size_t i = 0; i < y_columns.size(); ++i) {
    if (i) os << ", \\\n     ";
    os << "'" << csv_name << "' using " << col(x_column) << ":" << col(y_columns[i])
       << " with lines title '" << y_columns[i] << "'";
  }
  os << "\n";
  return os.str();
}

void write_text_file(const std::filesystem::path& path, const std::string& contents) {
  std::ofstream os(path, std::ios::binary);
  if (!os) throw std::runtime_error("cannot write " + path.string());
  os << contents;
  if (!os) throw std::runtime_error("write failed for " + path.string());
}

std::string read_text_file(const std::filesystem::path& path) {
  std::ifstream is(path, std::ios::binary);
  if (!is) throw std::runtime_error("cannot read " + path.string());
  std::ostringstream ss;
  ss << is.rdbuf();
  return ss.str();
}

void write_csv_file(const std::filesystem::path& path, const CsvTable& table) {
  std::ostringstream os;
  write_csv(os, table);
  write_text_file(path, os.str());
}

CsvTable read_csv_file(const std::filesystem::path& path) {
  std::istringstream is(read_text_file(path));
  return read_csv(is);
}

}  // namespace pgreedy::io
