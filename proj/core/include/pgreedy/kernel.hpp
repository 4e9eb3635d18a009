#pragma once

#include <array>
#include <string>

#include "pgreedy/point.hpp"

namespace pgreedy {

// Whittle-Matern kernel parameters: the kernel of W_2^m(R^d) is
//   K(x, y) = phi_nu(|x - y| / scale),  phi_mu(r) = r^mu K_mu(r),  nu = m - d/2.
// Dual inner products of delta-Laplacian functionals need nu > 2, i.e.
// m > 2 + d/2.
class KernelSpec {
 public:
  // Throws std::invalid_argument if the constraints above (or scale > 0,
  // 1 <= d <= 3) are violated.
  KernelSpec(int smoothness, int dimension, double scale = 1.0);

  [[nodiscard]] int smoothness() const noexcept { return m_; }
  [[nodiscard]] int dimension() const noexcept { return d_; }
  [[nodiscard]] double scale() const noexcept { return scale_; }
  // nu = m - d/2; an integer for even d, a half-integer for odd d.
  [[nodiscard]] double order() const noexcept { return m_ - 0.5 * d_; }

  [[nodiscard]] std::string describe() const;

  friend bool operator==(const KernelSpec&, const KernelSpec&) = default;

 private:
  int m_;
  int d_;
  double scale_;
};

// phi_{nu - k}(r~) for k = 0..4 at the scaled radius r~ = r / scale.
struct RadialStack {
  static constexpr std::size_t kDepth = 5;

  double r = 0.0;  // scaled radius
  std::array<double, kDepth> values{};
  // True for entries with index nu - k <= 0 at r~ below the limit threshold.
  // Those are unbounded at 0 and only ever enter multiplied by r~^2 or r~^4,
  // so their contribution is taken as 0.
  std::array<bool, kDepth> singular{};

  // phi_{nu - k}
  [[nodiscard]] double phi(std::size_t k) const noexcept { return values[k]; }
};

// Below this scaled radius the analytic limits replace r^mu K_mu(r).
inline constexpr double kLimitThreshold = 1e-8;

// lim_{r -> 0} r^mu K_mu(r) = 2^{mu - 1} Gamma(mu) for mu > 0.
[[nodiscard]] double radial_limit(double mu);

[[nodiscard]] RadialStack radial_stack(const KernelSpec& spec, double r);

[[nodiscard]] double kernel_value(const KernelSpec& spec, const Point& x, const Point& y);

// Delta_y K(x, y) (= Delta_x K(x, y)).
[[nodiscard]] double laplacian_y(const KernelSpec& spec, const Point& x, const Point& y);

// Delta_x Delta_y K(x, y).
[[nodiscard]] double bilaplacian(const KernelSpec& spec, const Point& x, const Point& y);

// The same three quantities from a precomputed stack; `r` in `stack` is the
// scaled radius.
[[nodiscard]] double kernel_value(const KernelSpec& spec, const RadialStack& stack);
[[nodiscard]] double laplacian_y(const KernelSpec& spec, const RadialStack& stack);
[[nodiscard]] double bilaplacian(const KernelSpec& spec, const RadialStack& stack);

}  // namespace pgreedy
