#pragma once

#include <filesystem>
#include <iosfwd>
#include <map>
#include <span>
#include <string>
#include <vector>

#include "pgreedy/functional.hpp"
#include "pgreedy/matrix.hpp"
#include "pgreedy/run.hpp"

namespace pgreedy::io {

// Shortest decimal text that reads back to the same double ("%.17g").
[[nodiscard]] std::string format_double(double v);
// Strict: the whole token must parse. Throws FormatError.
[[nodiscard]] double parse_double(const std::string& token);

// Functional / point lists: one record per line, "B" or "D" followed by the
// coordinates, whitespace separated. Blank lines and '#' comments are ignored.
void write_functionals(std::ostream& os, std::span<const Functional> functionals);
[[nodiscard]] std::vector<Functional> read_functionals(std::istream& is,
                                                       FunctionalWeights weights = {});

// Comma-separated table with a header row.
struct CsvTable {
  std::vector<std::string> header;
  std::vector<std::vector<std::string>> rows;

  // Throws FormatError if the column is missing.
  [[nodiscard]] std::size_t column(const std::string& name) const;
  [[nodiscard]] std::vector<double> numeric_column(const std::string& name) const;
};

void write_csv(std::ostream& os, const CsvTable& table);
[[nodiscard]] CsvTable read_csv(std::istream& is);

// RunTrace CSV: N,sigma,rho,kind,h_domain,h_boundary,cond_C. A missing rho
// is written as an empty field.
[[nodiscard]] CsvTable trace_table(const RunTrace& trace);
// Restores the persisted columns; fields not in the CSV stay default.
[[nodiscard]] RunTrace trace_from_table(const CsvTable& table);

// Dense N x N text with zeros above the diagonal.
[[nodiscard]] CsvTable lower_triangular_table(const LowerTriangular& c);
// Throws FormatError unless the table is square and lower-triangular.
[[nodiscard]] LowerTriangular lower_triangular_from_table(const CsvTable& table);

// key=value lines with '#' comments.
using KeyValues = std::map<std::string, std::string>;
[[nodiscard]] KeyValues read_key_values(std::istream& is);
void write_key_values(std::ostream& os, const KeyValues& values);

// Generic gnuplot-style script plotting `columns` of `csv_name` against
// `x_column`, on log-log axes when `loglog`.
[[nodiscard]] std::string plot_script(const std::string& csv_name, const std::string& title,
                                      const std::string& x_column,
                                      const std::vector<std::string>& y_columns,
                                      const std::vector<std::string>& header, bool loglog);

// File helpers; throw std::runtime_error when a file cannot be opened.
void write_text_file(const std::filesystem::path& path, const std::string& contents);
[[nodiscard]] std::string read_text_file(const std::filesystem::path& path);
void write_csv_file(const std::filesystem::path& path, const CsvTable& table);
[[nodiscard]] CsvTable read_csv_file(const std::filesystem::path& path);

}  // namespace pgreedy::io
