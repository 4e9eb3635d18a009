#include <cmath>
#include <numbers>
#include <stdexcept>

#include <gtest/gtest.h>

#include "pgreedy/geometry.hpp"

namespace {

using pgreedy::DiskGeometry;
using pgreedy::Point;

TEST(DiskCandidates, BoundaryPointsEquispaced) {
  const auto g = pgreedy::disk_candidates(100, 150);
  ASSERT_EQ(g.boundary_points.size(), 150u);
  for (std::size_t k = 0; k < 150; ++k) {
    const double t = 2 * std::numbers::pi * static_cast<double>(k) / 150.0;
    EXPECT_NEAR(g.boundary_points[k][0], std::cos(t), 1e-15);
    EXPECT_NEAR(g.boundary_points[k][1], std::sin(t), 1e-15);
    EXPECT_TRUE(DiskGeometry::on_boundary(g.boundary_points[k]));
  }
}

TEST(DiskCandidates, DomainCountNearTarget) {
  for (std::size_t target : {17570u, 2000u, 500u}) {
    const auto g = pgreedy::disk_candidates(target, 10);
    const double count = static_cast<double>(g.domain_points.size());
    EXPECT_NEAR(count, static_cast<double>(target), 0.01 * target) << target;
    EXPECT_NEAR(g.grid_spacing, std::sqrt(std::numbers::pi / target), 0.05 * g.grid_spacing);
    for (const auto& p : g.domain_points) ASSERT_TRUE(DiskGeometry::in_closed_disk(p));
  }
}

TEST(DiskCandidates, Deterministic) {
  const auto a = pgreedy::disk_candidates(800, 30);
  const auto b = pgreedy::disk_candidates(800, 30);
  EXPECT_EQ(a.domain_points, b.domain_points);
  EXPECT_EQ(a.grid_spacing, b.grid_spacing);
}

TEST(DiskCandidates, RejectsZeroCounts) {
  EXPECT_THROW((void)pgreedy::disk_candidates(0, 10), std::invalid_argument);
  EXPECT_THROW((void)pgreedy::disk_candidates(10, 0), std::invalid_argument);
}

TEST(DiskFunctionalSet, RejectsPointsOffTheGeometry) {
  DiskGeometry g;
  g.domain_points = {Point{0.0, 0.0}};
  g.boundary_points = {Point{0.9, 0.0}};
  EXPECT_THROW((void)pgreedy::disk_functional_set(g), std::invalid_argument);
  g.boundary_points = {Point{1.0, 0.0}};
  g.domain_points = {Point{1.1, 0.0}};
  EXPECT_THROW((void)pgreedy::disk_functional_set(g), std::invalid_argument);
}

TEST(FillDistance, SelectedEqualsReference) {
  const auto pts = pgreedy::disk_grid(0.2);
  EXPECT_EQ(pgreedy::fill_distance(pts, pts), 0.0);
}

TEST(FillDistance, OriginAgainstCircle) {
  const auto circle = pgreedy::circle_points(64);
  const std::vector<Point> origin = {Point{0.0, 0.0}};
  EXPECT_NEAR(pgreedy::fill_distance(origin, circle), 1.0, 1e-15);
}

TEST(FillDistance, EmptySelectionIsDiameter) {
  const auto circle = pgreedy::circle_points(64);
  EXPECT_NEAR(pgreedy::fill_distance({}, circle), 2.0, 1e-12);
}

TEST(FillDistance, EquispacedCircleIsHalfArc) {
  const std::size_t n = 150;
  const auto selected = pgreedy::circle_points(n);
  const auto reference = pgreedy::circle_points(n * 40);
  EXPECT_NEAR(pgreedy::fill_distance(selected, reference), std::numbers::pi / n, 0.01 * std::numbers::pi / n);
}

TEST(FillDistanceTracker, MatchesDirectAndIsMonotone) {
  const auto reference = pgreedy::disk_grid(0.1);
  pgreedy::FillDistanceTracker tracker(reference);
  std::vector<Point> selected;
  double prev = tracker.value();
  EXPECT_DOUBLE_EQ(prev, pgreedy::diameter(reference));
  for (std::size_t i = 0; i < reference.size(); i += 17) {
    tracker.add(reference[i]);
    selected.push_back(reference[i]);
    EXPECT_DOUBLE_EQ(tracker.value(), pgreedy::fill_distance(selected, reference));
    EXPECT_LE(tracker.value(), prev);
    prev = tracker.value();
  }
  EXPECT_EQ(tracker.selected_count(), selected.size());
}

TEST(EvaluationGrid, BoundaryAppendedAfterInterior) {
  const auto circle = pgreedy::circle_points(50);
  const auto grid = pgreedy::evaluation_grid(0.05, circle);
  EXPECT_EQ(grid.points.size(), grid.interior_count + 50);
  EXPECT_EQ(grid.points[grid.interior_count], circle[0]);
}

}  // namespace
