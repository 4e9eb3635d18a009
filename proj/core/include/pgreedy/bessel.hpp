#pragma once

#include <span>

namespace pgreedy {

// Modified Bessel function of the second kind K_order(r) for integer or
// half-integer order >= 0 and r > 0.
//
// K_0 and K_1 use the ascending series (with the logarithmic term) for
// r <= 2 and Steed's continued fraction for r > 2; K_{1/2} and K_{3/2} are
// closed forms. Higher orders follow by upward recurrence
//   K_{mu+1}(r) = K_{mu-1}(r) + (2 mu / r) K_mu(r),
// which is stable for K because the sequence grows with mu.
//
// Throws std::domain_error for r <= 0 and std::invalid_argument when order is
// negative or not a multiple of 1/2.
[[nodiscard]] double bessel_k(double order, double r);

// Fills out[k] = K_{base + k}(r) for k = 0 .. out.size() - 1 with base 0 or
// 1/2. Same preconditions as bessel_k.
void bessel_k_ladder(double base, double r, std::span<double> out);

}  // namespace pgreedy
