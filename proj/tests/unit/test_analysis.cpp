#include <cmath>
#include <random>
#include <stdexcept>
#include <vector>

#include <gtest/gtest.h>

#include <Eigen/Dense>

#include "pgreedy/analysis.hpp"

namespace {

using pgreedy::IndexWindow;
using pgreedy::LowerTriangular;
using pgreedy::Matrix;

std::vector<double> steps(std::size_t n) {
  std::vector<double> xs(n);
  for (std::size_t i = 0; i < n; ++i) xs[i] = static_cast<double>(i + 1);
  return xs;
}

TEST(FitRate, ExactPowerLaw) {
  const auto xs = steps(100);
  std::vector<double> ys;
  for (double x : xs) ys.push_back(1.0 / (x * x));
  EXPECT_NEAR(pgreedy::fit_rate(xs, ys, {0, 100}), -2.0, 1e-12);
  EXPECT_NEAR(pgreedy::fit_rate(xs, ys, pgreedy::default_rate_window(100)), -2.0, 1e-12);
}

TEST(FitRate, NoisyHalfRate) {
  const auto xs = steps(200);
  std::mt19937_64 rng(3);
  std::uniform_real_distribution<double> noise(-0.01, 0.01);
  std::vector<double> ys;
  for (double x : xs) ys.push_back(3.0 * std::pow(x, -0.5) * (1 + noise(rng)));
  EXPECT_NEAR(pgreedy::fit_rate(xs, ys, pgreedy::default_rate_window(200)), -0.5, 0.05);
}

TEST(FitRate, ConstantAndScaleInvariant) {
  const auto xs = steps(20);
  std::vector<double> ys(20, 4.0);
  EXPECT_NEAR(pgreedy::fit_rate(xs, ys, {0, 20}), 0.0, 1e-14);
  std::vector<double> a;
  std::vector<double> b;
  for (double x : xs) {
    a.push_back(std::pow(x, -1.3) * (1 + 0.1 * std::sin(x)));
    b.push_back(a.back() * 17.0);
  }
  EXPECT_NEAR(pgreedy::fit_rate(xs, a, {2, 18}), pgreedy::fit_rate(xs, b, {2, 18}), 1e-12);
}

TEST(FitRate, Errors) {
  const auto xs = steps(10);
  std::vector<double> ys(10, 1.0);
  EXPECT_THROW((void)pgreedy::fit_rate(xs, ys, {0, 4}), std::invalid_argument);
  EXPECT_THROW((void)pgreedy::fit_rate(xs, ys, {0, 11}), std::invalid_argument);
  ys[3] = 0.0;
  EXPECT_THROW((void)pgreedy::fit_rate(xs, ys, {0, 10}), std::domain_error);
}

TEST(RateWindow, ByValue) {
  const auto xs = steps(200);
  const IndexWindow w = pgreedy::window_by_value(xs, 50, 200);
  EXPECT_EQ(w.begin, 49u);
  EXPECT_EQ(w.end, 200u);
  EXPECT_EQ(pgreedy::default_rate_window(200).begin, 100u);
}

LowerTriangular from_rows(const std::vector<std::vector<double>>& rows) {
  LowerTriangular l;
  for (const auto& r : rows) l.append_row(r);
  return l;
}

double exact_condition(const LowerTriangular& l) {
  const auto n = static_cast<Eigen::Index>(l.size());
  Eigen::MatrixXd m = Eigen::MatrixXd::Zero(n, n);
  for (Eigen::Index i = 0; i < n; ++i) {
    for (Eigen::Index j = 0; j <= i; ++j) m(i, j) = l(i, j);
  }
  const double a = m.cwiseAbs().colwise().sum().maxCoeff();
  const double b = m.inverse().cwiseAbs().colwise().sum().maxCoeff();
  return a * b;
}

TEST(ConditionEstimate, IdentityAndDiagonal) {
  EXPECT_DOUBLE_EQ(pgreedy::condition_estimate(from_rows({{1}, {0, 1}, {0, 0, 1}})), 1.0);
  const auto d = from_rows({{1}, {0, 10}});
  EXPECT_DOUBLE_EQ(pgreedy::condition_estimate(d), 10.0);
  EXPECT_DOUBLE_EQ(pgreedy::condition_estimate(d), exact_condition(d));
  EXPECT_THROW((void)pgreedy::condition_estimate(from_rows({{1}, {2, 0}})), std::domain_error);
}

TEST(ConditionEstimate, WithinFactorThreeOfExplicitInverse) {
  std::mt19937_64 rng(8);
  std::uniform_real_distribution<double> off(-1.0, 1.0);
  std::uniform_real_distribution<double> diag(1.0, 3.0);
  for (std::size_t n : {5u, 20u, 30u}) {
    for (int trial = 0; trial < 10; ++trial) {
      LowerTriangular l;
      for (std::size_t i = 0; i < n; ++i) {
        std::vector<double> row(i + 1);
        for (std::size_t j = 0; j < i; ++j) row[j] = off(rng) / static_cast<double>(n);
        row[i] = diag(rng);
        l.append_row(row);
      }
      const double est = pgreedy::condition_estimate(l);
      const double exact = exact_condition(l);
      EXPECT_LE(est, exact * (1 + 1e-12));
      EXPECT_GE(est, exact / 3.0);
    }
  }
}

TEST(ConditionEstimate, IllConditionedTriangular) {
  // Unit lower bidiagonal with -2 off the diagonal: the inverse grows like 2^n.
  LowerTriangular l;
  for (std::size_t i = 0; i < 25; ++i) {
    std::vector<double> row(i + 1, 0.0);
    row[i] = 1.0;
    if (i > 0) row[i - 1] = -2.0;
    l.append_row(row);
  }
  const double exact = exact_condition(l);
  EXPECT_GE(pgreedy::condition_estimate(l), exact / 3.0);
}

TEST(SingularValues, ScaledOrthonormalRows) {
  // Rows of a rotation-like orthonormal 3x4 matrix, scaled by (3, 2, 1).
  const double s = 1.0 / std::sqrt(2.0);
  Matrix a(3, 4);
  const double q[3][4] = {{s, s, 0, 0}, {0, 0, s, -s}, {s, -s, 0, 0}};
  const double scale[3] = {3, 2, 1};
  for (int i = 0; i < 3; ++i) {
    for (int j = 0; j < 4; ++j) a(i, j) = scale[i] * q[i][j];
  }
  const auto sv = pgreedy::singular_values(a);
  ASSERT_EQ(sv.size(), 3u);
  EXPECT_NEAR(sv[0], 3, 1e-8);
  EXPECT_NEAR(sv[1], 2, 1e-8);
  EXPECT_NEAR(sv[2], 1, 1e-8);
}

TEST(SingularValues, RankOne) {
  const std::vector<double> u = {1, 2, 2};
  const std::vector<double> v = {3, 0, 4, 0, 0};
  Matrix a(3, 5);
  for (int i = 0; i < 3; ++i) {
    for (int j = 0; j < 5; ++j) a(i, j) = u[i] * v[j];
  }
  const auto sv = pgreedy::singular_values(a);
  EXPECT_NEAR(sv[0], 15.0, 1e-10);
  for (std::size_t k = 1; k < sv.size(); ++k) EXPECT_NEAR(sv[k], 0.0, 1e-6);
}

TEST(SingularValues, TransposeInvariantAndMatchesEigen) {
  std::mt19937_64 rng(2);
  std::normal_distribution<double> g;
  Matrix a(12, 7);
  Eigen::MatrixXd e(12, 7);
  for (int i = 0; i < 12; ++i) {
    for (int j = 0; j < 7; ++j) e(i, j) = a(i, j) = g(rng);
  }
  const auto sv = pgreedy::singular_values(a);
  const auto svt = pgreedy::singular_values(a.transposed());
  const Eigen::VectorXd ref = Eigen::JacobiSVD<Eigen::MatrixXd>(e).singularValues();
  ASSERT_EQ(sv.size(), 7u);
  ASSERT_EQ(svt.size(), 7u);
  for (int k = 0; k < 7; ++k) {
    EXPECT_NEAR(sv[k], svt[k], 1e-8);
    EXPECT_NEAR(sv[k], ref(k), 1e-8 * ref(0));
  }
}

TEST(SymmetricEigenvalues, DiagonalAndKnown) {
  Matrix a(2, 2);
  a(0, 0) = 2;
  a(0, 1) = a(1, 0) = 1;
  a(1, 1) = 2;
  const auto ev = pgreedy::symmetric_eigenvalues(a);
  EXPECT_NEAR(ev[0], 3.0, 1e-14);
  EXPECT_NEAR(ev[1], 1.0, 1e-14);
}

}  // namespace
