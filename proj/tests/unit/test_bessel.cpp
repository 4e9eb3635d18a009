#include <cmath>
#include <numbers>
#include <stdexcept>
#include <vector>

#include <gtest/gtest.h>

#include "oracles/oracles.hpp"
#include "pgreedy/bessel.hpp"

namespace {

using pgreedy::bessel_k;

double rel_err(double got, double want) { return std::abs(got - want) / std::abs(want); }

struct Frozen {
  double order;
  double r;
  double value;
};

// 20-digit reference values from an arbitrary-precision library.
const Frozen kFrozen[] = {
    {0.0, 1.0, 0.42102443824070833334}, {1.0, 1.0, 0.60190723019723457474},
    {3.0, 1.0, 7.101262824737944506},   {3.0, 2.0, 0.64738539094863415316},
    {2.0, 2.0, 0.25375975456605586294}, {8.0, 0.001, 6.4511997696000037257e+29},
    {8.0, 30.0, 6.0565817824131864255e-14}, {5.0, 0.5, 12097.979476096393394},
    {0.0, 30.0, 2.1324774964630563712e-14}, {1.0, 0.001, 999.99623815608555346},
    {0.5, 1.0, 0.46106850444789455844},  {2.5, 1.5, 0.98945189298915030966},
};

TEST(BesselK, FrozenReferenceValues) {
  for (const auto& f : kFrozen) {
    EXPECT_LT(rel_err(bessel_k(f.order, f.r), f.value), 1e-12) << "K_" << f.order << "(" << f.r << ")";
  }
}

TEST(BesselK, IntegerOrdersMatchIntegralOracle) {
  const std::vector<double> radii = {1e-3, 3e-3, 0.01, 0.1, 0.5, 1.0, 1.9, 2.0, 2.1, 3.0, 5.0, 10.0, 20.0, 30.0};
  for (int n = 0; n <= 8; ++n) {
    for (double r : radii) {
      EXPECT_LT(rel_err(bessel_k(n, r), oracle::bessel_k(n, r)), 1e-10) << "K_" << n << "(" << r << ")";
    }
  }
}

TEST(BesselK, HalfIntegerOrdersMatchIntegralOracle) {
  for (double nu : {0.5, 1.5, 2.5, 3.5, 4.5}) {
    for (double r : {1e-3, 0.2, 1.0, 4.0, 25.0}) {
      EXPECT_LT(rel_err(bessel_k(nu, r), oracle::bessel_k(nu, r)), 1e-10) << "K_" << nu << "(" << r << ")";
    }
  }
}

TEST(BesselK, HalfOrderClosedForm) {
  for (double r : {0.1, 1.0, 7.0}) {
    EXPECT_LT(rel_err(bessel_k(0.5, r), std::sqrt(std::numbers::pi / (2 * r)) * std::exp(-r)), 1e-14);
  }
}

TEST(BesselK, RecurrenceResidual) {
  // |K_{n+1} - K_{n-1} - (2n / r) K_n| <= 1e-12 K_{n+1} on a log grid.
  for (double r = 1e-2; r <= 20.0; r *= 1.5) {
    for (int n = 1; n < 8; ++n) {
      const double lhs = bessel_k(n + 1, r);
      const double rhs = bessel_k(n - 1, r) + 2.0 * n / r * bessel_k(n, r);
      EXPECT_LE(std::abs(lhs - rhs), 1e-12 * lhs) << "n=" << n << " r=" << r;
    }
  }
}

TEST(BesselK, LadderMatchesPointwise) {
  std::vector<double> ladder(9);
  pgreedy::bessel_k_ladder(0.0, 1.3, ladder);
  for (int n = 0; n <= 8; ++n) EXPECT_DOUBLE_EQ(ladder[n], bessel_k(n, 1.3));
}

TEST(BesselK, PositiveAndDecreasingInR) {
  for (int n = 0; n <= 8; ++n) {
    double prev = bessel_k(n, 1e-3);
    for (double r = 0.01; r <= 30.0; r *= 1.3) {
      const double v = bessel_k(n, r);
      EXPECT_GT(v, 0.0);
      EXPECT_LT(v, prev);
      prev = v;
    }
  }
}

TEST(BesselK, RejectsBadArguments) {
  EXPECT_THROW((void)bessel_k(1.0, 0.0), std::domain_error);
  EXPECT_THROW((void)bessel_k(1.0, -2.0), std::domain_error);
  EXPECT_THROW((void)bessel_k(-1.0, 1.0), std::invalid_argument);
  EXPECT_THROW((void)bessel_k(0.3, 1.0), std::invalid_argument);
}

}  // namespace
