#pragma once

#include <cstddef>
#include <span>
#include <vector>

namespace pgreedy {

// Row-major dense matrix. Rows can be appended, which is how basis value
// tables grow one greedy step at a time.
class Matrix {
 public:
  Matrix() = default;
  Matrix(std::size_t rows, std::size_t cols, double fill = 0.0)
      : rows_(rows), cols_(cols), data_(rows * cols, fill) {}

  [[nodiscard]] std::size_t rows() const noexcept { return rows_; }
  [[nodiscard]] std::size_t cols() const noexcept { return cols_; }

  [[nodiscard]] double operator()(std::size_t i, std::size_t j) const noexcept {
    return data_[i * cols_ + j];
  }
  [[nodiscard]] double& operator()(std::size_t i, std::size_t j) noexcept {
    return data_[i * cols_ + j];
  }

  [[nodiscard]] std::span<const double> row(std::size_t i) const noexcept {
    return {data_.data() + i * cols_, cols_};
  }
  [[nodiscard]] std::span<double> row(std::size_t i) noexcept {
    return {data_.data() + i * cols_, cols_};
  }

  // Appends a zero row and returns it. Only valid once cols() is fixed.
  std::span<double> append_row();

  void reserve_rows(std::size_t rows) { data_.reserve(rows * cols_); }

  [[nodiscard]] Matrix transposed() const;

  // Empty matrix with a fixed column count.
  static Matrix with_cols(std::size_t cols) { return Matrix(0, cols); }

 private:
  std::size_t rows_ = 0;
  std::size_t cols_ = 0;
  std::vector<double> data_;
};

// Packed lower-triangular square matrix; row k holds entries (k, 0..k).
class LowerTriangular {
 public:
  LowerTriangular() = default;

  [[nodiscard]] std::size_t size() const noexcept { return n_; }

  [[nodiscard]] double operator()(std::size_t i, std::size_t j) const noexcept {
    return j > i ? 0.0 : data_[offset(i) + j];
  }

  [[nodiscard]] std::span<const double> row(std::size_t i) const noexcept {
    return {data_.data() + offset(i), i + 1};
  }

  [[nodiscard]] double diagonal(std::size_t i) const noexcept {
    return data_[offset(i) + i];
  }

  // Appends row size() with entries (size(), 0..size()); `row` must hold
  // size() + 1 values.
  void append_row(std::span<const double> row);

  [[nodiscard]] std::size_t stored_values() const noexcept { return data_.size(); }

  // The solves and products act on the leading k x k block, k = input size
  // (k > size() throws std::invalid_argument).
  // Forward substitution: solves L x = b.
  [[nodiscard]] std::vector<double> solve(std::span<const double> b) const;
  // Back substitution with the transpose: solves L^T x = b.
  [[nodiscard]] std::vector<double> solve_transposed(std::span<const double> b) const;
  // y = L x.
  [[nodiscard]] std::vector<double> multiply(std::span<const double> x) const;
  // y = L^T x.
  [[nodiscard]] std::vector<double> multiply_transposed(std::span<const double> x) const;

  [[nodiscard]] Matrix dense() const;

 private:
  static std::size_t offset(std::size_t i) noexcept { return i * (i + 1) / 2; }

  std::size_t n_ = 0;
  std::vector<double> data_;
};

}  // namespace pgreedy
