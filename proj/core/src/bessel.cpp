#include "pgreedy/bessel.hpp"

#include <cmath>
#include <limits>
#include <numbers>
#include <stdexcept>
#include <string>
#include <vector>

namespace pgreedy {

namespace {

constexpr double kSeriesCutoff = 2.0;
constexpr int kMaxIterations = 10000;

struct K01 {
  double k0;
  double k1;
};

// Ascending series (Abramowitz-Stegun 9.6.11 with n = 0, 1).
K01 series_k01(double x) {
  const double t = 0.25 * x * x;
  const double log_half = std::log(0.5 * x);
  constexpr double gamma = std::numbers::egamma;

  // term_k = t^k / (k!)^2, harmonic = H_k
  double term = 1.0;
  double harmonic = 0.0;
  double i0 = 1.0;
  double k0_sum = 0.0;

  // K_1 uses t^k / (k! (k+1)!) with weights psi(k+1) + psi(k+2)
  //   = -2 gamma + H_k + H_{k+1}.
  double term1 = 1.0;
  double i1_sum = 1.0;  // I_1(x) = (x/2) sum t^k / (k!(k+1)!)
  double k1_sum = -2.0 * gamma + 1.0;

  constexpr double eps = std::numeric_limits<double>::epsilon() * 0.25;
  for (int k = 1; k < 200; ++k) {
    term *= t / (static_cast<double>(k) * k);
    harmonic += 1.0 / k;
    i0 += term;
    k0_sum += term * harmonic;

    term1 *= t / (static_cast<double>(k) * (k + 1));
    i1_sum += term1;
    k1_sum += term1 * (-2.0 * gamma + 2.0 * harmonic + 1.0 / (k + 1));

    if (term < eps * i0 && term1 < eps * i1_sum) break;
  }

  const double i1 = 0.5 * x * i1_sum;
  K01 out;
  out.k0 = -(log_half + gamma) * i0 + k0_sum;
  out.k1 = 1.0 / x + log_half * i1 - 0.25 * x * k1_sum;
  return out;
}

// Steed's method for the continued fraction CF2 (Temme / Thompson-Barnett),
// evaluated at order 0. Converges quickly for x >= 2.
K01 continued_fraction_k01(double x) {
  constexpr double a1 = 0.25;  // 1/4 - order^2
  double b = 2.0 * (1.0 + x);
  double d = 1.0 / b;
  double h = d;
  double delh = d;
  double q1 = 0.0;
  double q2 = 1.0;
  double q = a1;
  double c = a1;
  double a = -a1;
  double s = 1.0 + q * delh;
  constexpr double eps = std::numeric_limits<double>::epsilon() * 0.25;
  for (int i = 1; i < kMaxIterations; ++i) {
    a -= 2.0 * i;
    c = -a * c / (i + 1.0);
    const double qnew = (q1 - b * q2) / a;
    q1 = q2;
    q2 = qnew;
    q += c * qnew;
    b += 2.0;
    d = 1.0 / (b + a * d);
    delh = (b * d - 1.0) * delh;
    h += delh;
    const double dels = q * delh;
    s += dels;
    if (std::abs(dels / s) < eps) break;
  }
  h *= a1;
  K01 out;
  out.k0 = std::sqrt(std::numbers::pi / (2.0 * x)) * std::exp(-x) / s;
  out.k1 = out.k0 * (x + 0.5 - h) / x;
  return out;
}

K01 k01(double x) {
  return x <= kSeriesCutoff ? series_k01(x) : continued_fraction_k01(x);
}

void check_radius(double r) {
  if (!(r > 0.0)) {
    throw std::domain_error("bessel_k: radius must be positive, got " + std::to_string(r));
  }
}

}  // namespace

void bessel_k_ladder(double base, double r, std::span<double> out) {
  check_radius(r);
  if (out.empty()) return;

  double k_prev;
  double k_cur;
  if (base == 0.0) {
    const K01 k = k01(r);
    k_prev = k.k0;
    k_cur = k.k1;
  } else if (base == 0.5) {
    k_prev = std::sqrt(std::numbers::pi / (2.0 * r)) * std::exp(-r);
    k_cur = k_prev * (1.0 + 1.0 / r);
  } else {
    throw std::invalid_argument("bessel_k_ladder: base order must be 0 or 1/2");
  }

  out[0] = k_prev;
  if (out.size() > 1) out[1] = k_cur;
  for (std::size_t k = 2; k < out.size(); ++k) {
    const double mu = base + static_cast<double>(k - 1);
    const double next = k_prev + (2.0 * mu / r) * k_cur;
    k_prev = k_cur;
    k_cur = next;
    out[k] = next;
  }
}

double bessel_k(double order, double r) {
  check_radius(r);
  const double twice = 2.0 * order;
  if (!(order >= 0.0) || twice != std::floor(twice)) {
    throw std::invalid_argument("bessel_k: order must be a nonnegative multiple of 1/2");
  }
  const bool half = std::fmod(twice, 2.0) != 0.0;
  const double base = half ? 0.5 : 0.0;
  const auto steps = static_cast<std::size_t>(order - base);

  // Orders up to ~20 cover every kernel in use; longer ladders are fine too.
  double stack_buffer[32];
  std::vector<double> heap_buffer;
  std::span<double> ladder;
  if (steps + 1 <= std::size(stack_buffer)) {
    ladder = std::span<double>(stack_buffer, steps + 1);
  } else {
    heap_buffer.resize(steps + 1);
    ladder = heap_buffer;
  }
  bessel_k_ladder(base, r, ladder);
  return ladder[steps];
}

}  // namespace pgreedy
