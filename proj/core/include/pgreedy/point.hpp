#pragma once

#include <array>
#include <cmath>
#include <cstddef>
#include <cstdint>
#include <initializer_list>
#include <span>
#include <stdexcept>

namespace pgreedy {

inline constexpr std::size_t kMaxDimension = 3;

// A point of R^d with d <= kMaxDimension, stored inline.
class Point {
 public:
  Point() = default;

  Point(std::initializer_list<double> coords) {
    if (coords.size() == 0 || coords.size() > kMaxDimension) {
      throw std::invalid_argument("Point: dimension must be in [1, 3]");
    }
    std::size_t i = 0;
    for (double c : coords) coords_[i++] = c;
    dim_ = static_cast<std::uint8_t>(coords.size());
  }

  explicit Point(std::span<const double> coords) {
    if (coords.empty() || coords.size() > kMaxDimension) {
      throw std::invalid_argument("Point: dimension must be in [1, 3]");
    }
    for (std::size_t i = 0; i < coords.size(); ++i) coords_[i] = coords[i];
    dim_ = static_cast<std::uint8_t>(coords.size());
  }

  [[nodiscard]] std::size_t dim() const noexcept { return dim_; }
  [[nodiscard]] double operator[](std::size_t i) const noexcept { return coords_[i]; }
  [[nodiscard]] double& operator[](std::size_t i) noexcept { return coords_[i]; }
  [[nodiscard]] std::span<const double> coords() const noexcept {
    return {coords_.data(), dim_};
  }

  friend bool operator==(const Point& a, const Point& b) noexcept {
    if (a.dim_ != b.dim_) return false;
    for (std::size_t i = 0; i < a.dim_; ++i) {
      if (a.coords_[i] != b.coords_[i]) return false;
    }
    return true;
  }

 private:
  std::array<double, kMaxDimension> coords_{};
  std::uint8_t dim_ = 0;
};

[[nodiscard]] inline double squared_distance(const Point& a, const Point& b) noexcept {
  double s = 0.0;
  for (std::size_t i = 0; i < a.dim(); ++i) {
    const double t = a[i] - b[i];
    s += t * t;
  }
  return s;
}

[[nodiscard]] inline double distance(const Point& a, const Point& b) noexcept {
  return std::sqrt(squared_distance(a, b));
}

[[nodiscard]] inline double norm(const Point& a) noexcept {
  double s = 0.0;
  for (std::size_t i = 0; i < a.dim(); ++i) s += a[i] * a[i];
  return std::sqrt(s);
}

}  // namespace pgreedy
