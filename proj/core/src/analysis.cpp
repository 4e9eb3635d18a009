#include "pgreedy/analysis.hpp"

#include <algorithm>
#include <cmath>
#include <functional>
#include <stdexcept>
#include <string>

namespace pgreedy {

IndexWindow default_rate_window(std::size_t n) { return {n / 2, n}; }

IndexWindow window_by_value(std::span<const double> xs, double lo, double hi) {
  IndexWindow w{xs.size(), xs.size()};
  for (std::size_t i = 0; i < xs.size(); ++i) {
    if (xs[i] >= lo && xs[i] <= hi) {
      if (w.begin == xs.size()) w.begin = i;
      w.end = i + 1;
    }
  }
  if (w.begin == xs.size()) w.end = w.begin;
  return w;
}

double fit_rate(std::span<const double> xs, std::span<const double> ys, IndexWindow window) {
  if (xs.size() != ys.size() || window.end > xs.size()) {
    throw std::invalid_argument("fit_rate: window out of range");
  }
  if (window.size() < 5) {
    throw std::invalid_argument("fit_rate: window must hold at least 5 samples, got " +
                                std::to_string(window.size()));
  }
  double mx = 0.0;
  double my = 0.0;
  for (std::size_t i = window.begin; i < window.end; ++i) {
    if (!(xs[i] > 0.0) || !(ys[i] > 0.0)) {
      throw std::domain_error("fit_rate: nonpositive value at index " + std::to_string(i));
    }
    mx += std::log(xs[i]);
    my += std::log(ys[i]);
  }
  const double n = static_cast<double>(window.size());
  mx /= n;
  my /= n;
  double sxy = 0.0;
  double sxx = 0.0;
  for (std::size_t i = window.begin; i < window.end; ++i) {
    const double dx = std::log(xs[i]) - mx;
    sxy += dx * (std::log(ys[i]) - my);
    sxx += dx * dx;
  }
  if (sxx == 0.0) throw std::invalid_argument("fit_rate: xs are constant over the window");
  return sxy / sxx;
}

double norm1(const LowerTriangular& c) {
  const std::size_t n = c.size();
  std::vector<double> col(n, 0.0);
  for (std::size_t i = 0; i < n; ++i) {
    const auto r = c.row(i);
    for (std::size_t j = 0; j <= i; ++j) col[j] += std::abs(r[j]);
  }
  return n == 0 ? 0.0 : *std::max_element(col.begin(), col.end());
}

namespace {

double sum_abs(const std::vector<double>& v) {
  double s = 0.0;
  for (double x : v) s += std::abs(x);
  return s;
}

}  // namespace

double inverse_norm1_estimate(const LowerTriangular& c) {
  const std::size_t n = c.size();
  if (n == 0) return 0.0;
  for (std::size_t i = 0; i < n; ++i) {
    if (c.diagonal(i) == 0.0) {
      throw std::domain_error("condition_estimate: zero diagonal entry at " + std::to_string(i));
    }
  }

  constexpr int kMaxIterations = 5;
  std::vector<double> x(n, 1.0 / static_cast<double>(n));
  std::vector<double> y = c.solve(x);
  double estimate = sum_abs(y);
  std::size_t last_j = n;
  for (int iter = 0; iter < kMaxIterations; ++iter) {
    std::vector<double> sign(n);
    for (std::size_t i = 0; i < n; ++i) sign[i] = y[i] >= 0.0 ? 1.0 : -1.0;
    const std::vector<double> z = c.solve_transposed(sign);
    std::size_t j = 0;
    for (std::size_t i = 1; i < n; ++i) {
      if (std::abs(z[i]) > std::abs(z[j])) j = i;
    }
    double ztx = 0.0;
    for (std::size_t i = 0; i < n; ++i) ztx += z[i] * x[i];
    if (iter > 0 && (std::abs(z[j]) <= ztx || j == last_j)) break;
    std::fill(x.begin(), x.end(), 0.0);
    x[j] = 1.0;
    last_j = j;
    y = c.solve(x);
    const double next = sum_abs(y);
    if (next <= estimate) break;
    estimate = next;
  }

  // Higham's extra probe with alternating, growing entries.
  if (n > 1) {
    for (std::size_t i = 0; i < n; ++i) {
      const double mag = 1.0 + static_cast<double>(i) / static_cast<double>(n - 1);
      x[i] = (i % 2 == 0) ? mag : -mag;
    }
    y = c.solve(x);
    estimate = std::max(estimate, 2.0 * sum_abs(y) / (3.0 * static_cast<double>(n)));
  }
  return estimate;
}

double condition_estimate(const LowerTriangular& c) {
  if (c.size() == 0) return 1.0;
  return norm1(c) * inverse_norm1_estimate(c);
}

std::vector<double> symmetric_eigenvalues(Matrix a, double tol) {
  const std::size_t n = a.rows();
  if (a.cols() != n) throw std::invalid_argument("symmetric_eigenvalues: matrix is not square");
  constexpr int kMaxSweeps = 100;
  for (int sweep = 0; sweep < kMaxSweeps; ++sweep) {
    bool rotated = false;
    for (std::size_t p = 0; p + 1 < n; ++p) {
      for (std::size_t q = p + 1; q < n; ++q) {
        const double apq = a(p, q);
        if (apq == 0.0) continue;
        const double app = a(p, p);
        const double aqq = a(q, q);
        if (std::abs(apq) <= tol * std::sqrt(std::abs(app * aqq))) continue;
        rotated = true;
        const double theta = (aqq - app) / (2.0 * apq);
        const double t = (theta >= 0.0 ? 1.0 : -1.0) /
                         (std::abs(theta) + std::sqrt(theta * theta + 1.0));
        const double cs = 1.0 / std::sqrt(t * t + 1.0);
        const double sn = t * cs;
        for (std::size_t k = 0; k < n; ++k) {
          if (k == p || k == q) continue;
          const double akp = a(k, p);
          const double akq = a(k, q);
          const double np = cs * akp - sn * akq;
          const double nq = sn * akp + cs * akq;
          a(k, p) = np;
          a(p, k) = np;
          a(k, q) = nq;
          a(q, k) = nq;
        }
        a(p, p) = app - t * apq;
        a(q, q) = aqq + t * apq;
        a(p, q) = 0.0;
        a(q, p) = 0.0;
      }
    }
    if (!rotated) break;
  }
  std::vector<double> eig(n);
  for (std::size_t i = 0; i < n; ++i) eig[i] = a(i, i);
  std::sort(eig.begin(), eig.end(), std::greater<>());
  return eig;
}

std::vector<double> singular_values(const Matrix& a) {
  const bool wide = a.rows() <= a.cols();
  const std::size_t n = wide ? a.rows() : a.cols();
  Matrix gram(n, n);
  if (wide) {
    for (std::size_t i = 0; i < n; ++i) {
      const auto ri = a.row(i);
      for (std::size_t j = 0; j <= i; ++j) {
        const auto rj = a.row(j);
        double s = 0.0;
        for (std::size_t k = 0; k < ri.size(); ++k) s += ri[k] * rj[k];
        gram(i, j) = s;
        gram(j, i) = s;
      }
    }
  } else {
    for (std::size_t r = 0; r < a.rows(); ++r) {
      const auto row = a.row(r);
      for (std::size_t i = 0; i < n; ++i) {
        for (std::size_t j = 0; j <= i; ++j) gram(i, j) += row[i] * row[j];
      }
    }
    for (std::size_t i = 0; i < n; ++i) {
      for (std::size_t j = 0; j < i; ++j) gram(j, i) = gram(i, j);
    }
  }
  std::vector<double> eig = symmetric_eigenvalues(std::move(gram));
  for (double& v : eig) v = std::sqrt(std::max(v, 0.0));
  return eig;
}

}  // namespace pgreedy
