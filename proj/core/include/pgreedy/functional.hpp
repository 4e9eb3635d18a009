#pragma once

#include <cstddef>
#include <span>
#include <variant>
#include <vector>

#include "pgreedy/kernel.hpp"
#include "pgreedy/point.hpp"

namespace pgreedy {

enum class FunctionalKind {
  BoundaryDelta,  // u -> u(z), z on the boundary
  DomainOpDelta,  // u -> (Lu)(x) with L the Laplacian, x in the closed domain
};

[[nodiscard]] constexpr char kind_tag(FunctionalKind k) noexcept {
  return k == FunctionalKind::BoundaryDelta ? 'B' : 'D';
}

// A data functional. `weight` multiplies both the functional and its Riesz
// representer; 1 means unweighted.
struct Functional {
  FunctionalKind kind = FunctionalKind::DomainOpDelta;
  Point point;
  double weight = 1.0;
  std::size_t index = 0;

  [[nodiscard]] bool is_boundary() const noexcept {
    return kind == FunctionalKind::BoundaryDelta;
  }
};

struct FunctionalWeights {
  double domain = 1.0;
  double boundary = 1.0;

  [[nodiscard]] double for_kind(FunctionalKind k) const noexcept {
    return k == FunctionalKind::BoundaryDelta ? boundary : domain;
  }
  friend bool operator==(const FunctionalWeights&, const FunctionalWeights&) = default;
};

// Finite candidate set Lambda = Lambda_1 (domain) followed by Lambda_2
// (boundary). Indices are contiguous from 0 in storage order.
class FunctionalSet {
 public:
  FunctionalSet() = default;

  FunctionalSet(std::span<const Point> domain_points, std::span<const Point> boundary_points,
                FunctionalWeights weights = {});

  // Arbitrary order; indices are reassigned to the storage order. All points
  // must share one dimension.
  explicit FunctionalSet(std::vector<Functional> entries);

  [[nodiscard]] std::size_t size() const noexcept { return entries_.size(); }
  [[nodiscard]] bool empty() const noexcept { return entries_.empty(); }
  [[nodiscard]] const Functional& operator[](std::size_t i) const noexcept { return entries_[i]; }
  [[nodiscard]] std::span<const Functional> entries() const noexcept { return entries_; }
  [[nodiscard]] std::size_t domain_count() const noexcept { return domain_count_; }
  [[nodiscard]] std::size_t boundary_count() const noexcept { return boundary_count_; }
  [[nodiscard]] std::size_t dimension() const noexcept {
    return entries_.empty() ? 0 : entries_.front().point.dim();
  }

  [[nodiscard]] auto begin() const noexcept { return entries_.begin(); }
  [[nodiscard]] auto end() const noexcept { return entries_.end(); }

 private:
  void validate();

  std::vector<Functional> entries_;
  std::size_t domain_count_ = 0;
  std::size_t boundary_count_ = 0;
};

// (a, b)_{H*} = a^x b^y K(x, y).
[[nodiscard]] double dual_inner(const Functional& a, const Functional& b, const KernelSpec& spec);

// v_f(x) = f^y K(y, x), the Riesz representer of f evaluated at x.
[[nodiscard]] double riesz_value(const Functional& f, const Point& x, const KernelSpec& spec);

// Test solutions with closed-form Laplacians.
struct GaussianBump {
  Point center;
  double shape = 1.0;  // u = exp(-shape |x - center|^2)
};

struct PowerCusp {
  Point center;
  double exponent = 2.5;  // u = |x - center|^exponent
};

class TestSolution {
 public:
  TestSolution(GaussianBump g) : form_(g) {}  // NOLINT(google-explicit-constructor)
  TestSolution(PowerCusp p) : form_(p) {}     // NOLINT(google-explicit-constructor)

  [[nodiscard]] double value(const Point& x) const;
  // Throws std::domain_error for a PowerCusp with exponent < 2 at its center.
  [[nodiscard]] double laplacian(const Point& x) const;

  [[nodiscard]] const std::variant<GaussianBump, PowerCusp>& form() const noexcept { return form_; }

 private:
  std::variant<GaussianBump, PowerCusp> form_;
};

// f(u): u(z) for a boundary delta, (Delta u)(x) for a domain functional,
// times the functional's weight.
[[nodiscard]] double apply_to_solution(const Functional& f, const TestSolution& u);

}  // namespace pgreedy
