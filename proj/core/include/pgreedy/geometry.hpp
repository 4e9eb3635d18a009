#pragma once

#include <cstddef>
#include <span>
#include <vector>

#include "pgreedy/functional.hpp"
#include "pgreedy/point.hpp"

namespace pgreedy {

inline constexpr double kBoundaryTolerance = 1e-12;

// Candidate points for the unit disk experiment: a square grid clipped to the
// closed disk, and equispaced points on the unit circle.
struct DiskGeometry {
  std::vector<Point> domain_points;
  std::vector<Point> boundary_points;
  double grid_spacing = 0.0;

  [[nodiscard]] static bool on_boundary(const Point& p, double tol = kBoundaryTolerance) noexcept;
  [[nodiscard]] static bool in_closed_disk(const Point& p, double tol = kBoundaryTolerance) noexcept;
};

// Points (i h, j h), i, j integer, with |x| <= 1.
[[nodiscard]] std::vector<Point> disk_grid(double spacing);

// n points at angles 2 pi k / n.
[[nodiscard]] std::vector<Point> circle_points(std::size_t n);

// The grid spacing is searched near sqrt(pi / target) so that the number of
// grid points inside the closed disk is as close to the target as possible.
// Throws std::invalid_argument if a count is zero.
[[nodiscard]] DiskGeometry disk_candidates(std::size_t target_domain_count,
                                           std::size_t target_boundary_count);

// Lambda_1 from the domain points, Lambda_2 from the boundary points.
[[nodiscard]] FunctionalSet disk_functional_set(const DiskGeometry& geometry,
                                                FunctionalWeights weights = {});

// Points where errors and rho are measured: a grid of the given spacing in the
// closed disk followed by the boundary sample.
struct EvaluationGrid {
  std::vector<Point> points;
  std::size_t interior_count = 0;  // points[0, interior_count) are grid points
};

[[nodiscard]] EvaluationGrid evaluation_grid(double spacing, std::span<const Point> boundary_sample);

// Largest distance of a reference point to its nearest selected point. With
// nothing selected, returns the diameter of the reference set.
[[nodiscard]] double fill_distance(std::span<const Point> selected, std::span<const Point> reference);

[[nodiscard]] double diameter(std::span<const Point> points);

// Incremental fill distance against a fixed reference set; add() is
// O(|reference|).
class FillDistanceTracker {
 public:
  explicit FillDistanceTracker(std::vector<Point> reference);

  void add(const Point& p);
  [[nodiscard]] double value() const noexcept;
  [[nodiscard]] std::size_t selected_count() const noexcept { return selected_; }

 private:
  std::vector<Point> reference_;
  std::vector<double> nearest_;  // squared distances
  double empty_value_ = 0.0;
  std::size_t selected_ = 0;
};

}  // namespace pgreedy
