#include "pgreedy/matrix.hpp"

#include <stdexcept>
#include <string>

namespace pgreedy {

std::span<double> Matrix::append_row() {
  data_.resize(data_.size() + cols_, 0.0);
  ++rows_;
  return row(rows_ - 1);
}

Matrix Matrix::transposed() const {
  Matrix t(cols_, rows_);
  for (std::size_t i = 0; i < rows_; ++i) {
    for (std::size_t j = 0; j < cols_; ++j) t(j, i) = (*this)(i, j);
  }
  return t;
}

void LowerTriangular::append_row(std::span<const double> row) {
  if (row.size() != n_ + 1) {
    throw std::invalid_argument("LowerTriangular::append_row: expected " +
                                std::to_string(n_ + 1) + " entries");
  }
  data_.insert(data_.end(), row.begin(), row.end());
  ++n_;
}

namespace {

void check_prefix(std::size_t k, std::size_t n, const char* what) {
  if (k > n) {
    throw std::invalid_argument(std::string("LowerTriangular::") + what + ": vector of size " +
                                std::to_string(k) + " exceeds matrix size " + std::to_string(n));
  }
}

}  // namespace

std::vector<double> LowerTriangular::solve(std::span<const double> b) const {
  check_prefix(b.size(), n_, "solve");
  std::vector<double> x(b.begin(), b.end());
  for (std::size_t i = 0; i < x.size(); ++i) {
    const auto r = row(i);
    double s = x[i];
    for (std::size_t j = 0; j < i; ++j) s -= r[j] * x[j];
    x[i] = s / r[i];
  }
  return x;
}

std::vector<double> LowerTriangular::solve_transposed(std::span<const double> b) const {
  check_prefix(b.size(), n_, "solve_transposed");
  std::vector<double> x(b.begin(), b.end());
  for (std::size_t ii = x.size(); ii-- > 0;) {
    x[ii] /= diagonal(ii);
    const auto r = row(ii);
    for (std::size_t j = 0; j < ii; ++j) x[j] -= r[j] * x[ii];
  }
  return x;
}

std::vector<double> LowerTriangular::multiply(std::span<const double> x) const {
  check_prefix(x.size(), n_, "multiply");
  std::vector<double> y(x.size(), 0.0);
  for (std::size_t i = 0; i < x.size(); ++i) {
    const auto r = row(i);
    double s = 0.0;
    for (std::size_t j = 0; j <= i; ++j) s += r[j] * x[j];
    y[i] = s;
  }
  return y;
}

std::vector<double> LowerTriangular::multiply_transposed(std::span<const double> x) const {
  check_prefix(x.size(), n_, "multiply_transposed");
  std::vector<double> y(x.size(), 0.0);
  for (std::size_t i = 0; i < x.size(); ++i) {
    const auto r = row(i);
    for (std::size_t j = 0; j <= i; ++j) y[j] += r[j] * x[i];
  }
  return y;
}

Matrix LowerTriangular::dense() const {
  Matrix m(n_, n_);
  for (std::size_t i = 0; i < n_; ++i) {
    const auto r = row(i);
    for (std::size_t j = 0; j <= i; ++j) m(i, j) = r[j];
  }
  return m;
}

}  // namespace pgreedy
