#include "pgreedy/geometry.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numbers>
#include <stdexcept>

namespace pgreedy {

bool DiskGeometry::on_boundary(const Point& p, double tol) noexcept {
  return std::abs(norm(p) - 1.0) <= tol;
}

bool DiskGeometry::in_closed_disk(const Point& p, double tol) noexcept {
  return norm(p) <= 1.0 + tol;
}

namespace {

std::size_t disk_grid_count(double h) {
  const auto n = static_cast<long>(std::floor(1.0 / h));
  std::size_t count = 0;
  for (long i = -n; i <= n; ++i) {
    const double x = static_cast<double>(i) * h;
    for (long j = -n; j <= n; ++j) {
      const double y = static_cast<double>(j) * h;
      if (x * x + y * y <= 1.0) ++count;
    }
  }
  return count;
}

}  // namespace

std::vector<Point> disk_grid(double spacing) {
  if (!(spacing > 0.0)) throw std::invalid_argument("disk_grid: spacing must be positive");
  const auto n = static_cast<long>(std::floor(1.0 / spacing));
  std::vector<Point> pts;
  for (long i = -n; i <= n; ++i) {
    const double x = static_cast<double>(i) * spacing;
    for (long j = -n; j <= n; ++j) {
      const double y = static_cast<double>(j) * spacing;
      if (x * x + y * y <= 1.0) pts.push_back(Point{x, y});
    }
  }
  return pts;
}

std::vector<Point> circle_points(std::size_t n) {
  std::vector<Point> pts;
  pts.reserve(n);
  for (std::size_t k = 0; k < n; ++k) {
    const double t = 2.0 * std::numbers::pi * static_cast<double>(k) / static_cast<double>(n);
    pts.push_back(Point{std::cos(t), std::sin(t)});
  }
  return pts;
}

DiskGeometry disk_candidates(std::size_t target_domain_count, std::size_t target_boundary_count) {
  if (target_domain_count == 0 || target_boundary_count == 0) {
    throw std::invalid_argument("disk_candidates: counts must be >= 1");
  }
  // Area estimate, then a deterministic scan of nearby spacings for the
  // closest count. The count is a step function of h, so a scan is simpler
  // than bisection.
  const double h0 = std::sqrt(std::numbers::pi / static_cast<double>(target_domain_count));
  double best_h = h0;
  std::size_t best_err = std::numeric_limits<std::size_t>::max();
  constexpr int kSteps = 400;
  for (int s = -kSteps; s <= kSteps; ++s) {
    const double h = h0 * (1.0 + 0.05 * s / kSteps);
    const std::size_t c = disk_grid_count(h);
    const std::size_t err = c > target_domain_count ? c - target_domain_count
                                                    : target_domain_count - c;
    if (err < best_err) {
      best_err = err;
      best_h = h;
    }
    if (err == 0) break;
  }

  DiskGeometry g;
  g.grid_spacing = best_h;
  g.domain_points = disk_grid(best_h);
  g.boundary_points = circle_points(target_boundary_count);
  return g;
}

FunctionalSet disk_functional_set(const DiskGeometry& geometry, FunctionalWeights weights) {
  for (const auto& p : geometry.boundary_points) {
    if (!DiskGeometry::on_boundary(p)) {
      throw std::invalid_argument("disk_functional_set: boundary point off the unit circle");
    }
  }
  for (const auto& p : geometry.domain_points) {
    if (!DiskGeometry::in_closed_disk(p)) {
      throw std::invalid_argument("disk_functional_set: domain point outside the closed disk");
    }
  }
  return FunctionalSet(geometry.domain_points, geometry.boundary_points, weights);
}

EvaluationGrid evaluation_grid(double spacing, std::span<const Point> boundary_sample) {
  EvaluationGrid grid;
  grid.points = disk_grid(spacing);
  grid.interior_count = grid.points.size();
  grid.points.insert(grid.points.end(), boundary_sample.begin(), boundary_sample.end());
  return grid;
}

double diameter(std::span<const Point> points) {
  double best = 0.0;
  for (std::size_t i = 0; i < points.size(); ++i) {
    for (std::size_t j = i + 1; j < points.size(); ++j) {
      best = std::max(best, squared_distance(points[i], points[j]));
    }
  }
  return std::sqrt(best);
}

double fill_distance(std::span<const Point> selected, std::span<const Point> reference) {
  if (selected.empty()) return diameter(reference);
  double worst = 0.0;
  for (const auto& r : reference) {
    double nearest = std::numeric_limits<double>::infinity();
    for (const auto& s : selected) nearest = std::min(nearest, squared_distance(r, s));
    worst = std::max(worst, nearest);
  }
  return std::sqrt(worst);
}

FillDistanceTracker::FillDistanceTracker(std::vector<Point> reference)
    : reference_(std::move(reference)),
      nearest_(reference_.size(), std::numeric_limits<double>::infinity()),
      empty_value_(diameter(reference_)) {}

void FillDistanceTracker::add(const Point& p) {
  for (std::size_t i = 0; i < reference_.size(); ++i) {
    nearest_[i] = std::min(nearest_[i], squared_distance(reference_[i], p));
  }
  ++selected_;
}

double FillDistanceTracker::value() const noexcept {
  if (selected_ == 0) return empty_value_;
  double worst = 0.0;
  for (double d : nearest_) worst = std::max(worst, d);
  return std::sqrt(worst);
}

}  // namespace pgreedy
