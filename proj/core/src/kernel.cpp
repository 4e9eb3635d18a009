#include "pgreedy/kernel.hpp"

#include <cmath>
#include <sstream>
#include <stdexcept>

#include "pgreedy/bessel.hpp"

namespace pgreedy {

KernelSpec::KernelSpec(int smoothness, int dimension, double scale)
    : m_(smoothness), d_(dimension), scale_(scale) {
  if (d_ < 1 || d_ > static_cast<int>(kMaxDimension)) {
    throw std::invalid_argument("KernelSpec: dimension d must be in [1, 3], got " +
                                std::to_string(d_));
  }
  if (!(2 * m_ > 4 + d_)) {
    std::ostringstream os;
    os << "KernelSpec: smoothness must satisfy m > 2 + d/2 = " << 2.0 + 0.5 * d_
       << " (got m = " << m_ << ", d = " << d_ << ")";
    throw std::invalid_argument(os.str());
  }
  if (m_ > 30) {
    throw std::invalid_argument("KernelSpec: smoothness m > 30 is not supported");
  }
  if (!(scale_ > 0.0) || !std::isfinite(scale_)) {
    throw std::invalid_argument("KernelSpec: scale must be positive and finite");
  }
}

std::string KernelSpec::describe() const {
  std::ostringstream os;
  os.precision(17);
  os << "m=" << m_ << " d=" << d_ << " scale=" << scale_;
  return os.str();
}

double radial_limit(double mu) {
  return std::exp2(mu - 1.0) * std::tgamma(mu);
}

RadialStack radial_stack(const KernelSpec& spec, double r) {
  RadialStack stack;
  const double rt = r / spec.scale();
  stack.r = rt;
  const double nu = spec.order();

  if (rt < kLimitThreshold) {
    for (std::size_t k = 0; k < RadialStack::kDepth; ++k) {
      const double mu = nu - static_cast<double>(k);
      if (mu > 0.0) {
        stack.values[k] = radial_limit(mu);
      } else {
        stack.values[k] = 0.0;
        stack.singular[k] = true;
      }
    }
    return stack;
  }

  // Orders |nu - k| for k = 0..4 all lie on one ladder base + j.
  const bool half = spec.dimension() % 2 != 0;
  const double base = half ? 0.5 : 0.0;
  const auto top = static_cast<std::size_t>(nu - base);
  std::array<double, 32> ladder{};
  bessel_k_ladder(base, rt, std::span<double>(ladder.data(), top + 1));

  for (std::size_t k = 0; k < RadialStack::kDepth; ++k) {
    const double mu = nu - static_cast<double>(k);
    const auto j = static_cast<std::size_t>(std::abs(mu) - base);
    // K_{-mu} = K_mu
    stack.values[k] = std::pow(rt, mu) * ladder[j];
  }
  return stack;
}

double kernel_value(const KernelSpec&, const RadialStack& s) { return s.phi(0); }

double laplacian_y(const KernelSpec& spec, const RadialStack& s) {
  // Delta f = d (1/r) f' + r^2 ((1/r) d/dr)^2 f and (1/r) d/dr phi_mu = -phi_{mu-1}.
  const double d = spec.dimension();
  const double r2 = s.r * s.r;
  const double scale2 = spec.scale() * spec.scale();
  return (r2 * s.phi(2) - d * s.phi(1)) / scale2;
}

double bilaplacian(const KernelSpec& spec, const RadialStack& s) {
  // Delta^2 phi_nu = (d^2 + 2d) phi_{nu-2} - (2d + 4) r^2 phi_{nu-3} + r^4 phi_{nu-4}.
  const double d = spec.dimension();
  const double r2 = s.r * s.r;
  const double scale4 = std::pow(spec.scale(), 4);
  double value = (d * d + 2.0 * d) * s.phi(2);
  if (!s.singular[3]) value -= (2.0 * d + 4.0) * r2 * s.phi(3);
  if (!s.singular[4]) value += r2 * r2 * s.phi(4);
  return value / scale4;
}

double kernel_value(const KernelSpec& spec, const Point& x, const Point& y) {
  return kernel_value(spec, radial_stack(spec, distance(x, y)));
}

double laplacian_y(const KernelSpec& spec, const Point& x, const Point& y) {
  return laplacian_y(spec, radial_stack(spec, distance(x, y)));
}

double bilaplacian(const KernelSpec& spec, const Point& x, const Point& y) {
  return bilaplacian(spec, radial_stack(spec, distance(x, y)));
}

}  // namespace pgreedy
