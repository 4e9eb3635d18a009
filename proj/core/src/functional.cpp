#include "pgreedy/functional.hpp"

#include <cmath>
#include <stdexcept>
#include <string>

namespace pgreedy {

FunctionalSet::FunctionalSet(std::span<const Point> domain_points,
                             std::span<const Point> boundary_points,
                             FunctionalWeights weights) {
  entries_.reserve(domain_points.size() + boundary_points.size());
  for (const auto& p : domain_points) {
    entries_.push_back({FunctionalKind::DomainOpDelta, p, weights.domain, 0});
  }
  for (const auto& p : boundary_points) {
    entries_.push_back({FunctionalKind::BoundaryDelta, p, weights.boundary, 0});
  }
  validate();
}

FunctionalSet::FunctionalSet(std::vector<Functional> entries) : entries_(std::move(entries)) {
  validate();
}

void FunctionalSet::validate() {
  domain_count_ = 0;
  boundary_count_ = 0;
  const std::size_t dim = dimension();
  for (std::size_t i = 0; i < entries_.size(); ++i) {
    auto& f = entries_[i];
    f.index = i;
    if (f.point.dim() != dim || dim == 0) {
      throw std::invalid_argument("FunctionalSet: inconsistent point dimension at entry " +
                                  std::to_string(i));
    }
    for (double c : f.point.coords()) {
      if (!std::isfinite(c)) {
        throw std::invalid_argument("FunctionalSet: non-finite coordinate at entry " +
                                    std::to_string(i));
      }
    }
    if (!(f.weight > 0.0) || !std::isfinite(f.weight)) {
      throw std::invalid_argument("FunctionalSet: weights must be positive");
    }
    if (f.is_boundary()) {
      ++boundary_count_;
    } else {
      ++domain_count_;
    }
  }
}

double dual_inner(const Functional& a, const Functional& b, const KernelSpec& spec) {
  const RadialStack s = radial_stack(spec, distance(a.point, b.point));
  const double w = a.weight * b.weight;
  if (a.is_boundary() && b.is_boundary()) return w * kernel_value(spec, s);
  if (a.is_boundary() != b.is_boundary()) return w * laplacian_y(spec, s);
  return w * bilaplacian(spec, s);
}

double riesz_value(const Functional& f, const Point& x, const KernelSpec& spec) {
  const RadialStack s = radial_stack(spec, distance(f.point, x));
  return f.weight * (f.is_boundary() ? kernel_value(spec, s) : laplacian_y(spec, s));
}

namespace {

struct ValueVisitor {
  const Point& x;
  double operator()(const GaussianBump& g) const {
    return std::exp(-g.shape * squared_distance(x, g.center));
  }
  double operator()(const PowerCusp& p) const {
    return std::pow(distance(x, p.center), p.exponent);
  }
};

struct LaplacianVisitor {
  const Point& x;
  double operator()(const GaussianBump& g) const {
    const double d = static_cast<double>(x.dim());
    const double r2 = squared_distance(x, g.center);
    const double c = g.shape;
    return (4.0 * c * c * r2 - 2.0 * d * c) * std::exp(-c * r2);
  }
  double operator()(const PowerCusp& p) const {
    const double d = static_cast<double>(x.dim());
    const double beta = p.exponent;
    const double r = distance(x, p.center);
    const double factor = beta * (beta + d - 2.0);
    if (r == 0.0) {
      if (beta < 2.0) {
        throw std::domain_error("PowerCusp: Laplacian is singular at the center for exponent < 2");
      }
      return beta == 2.0 ? factor : 0.0;
    }
    return factor * std::pow(r, beta - 2.0);
  }
};

}  // namespace

double TestSolution::value(const Point& x) const { return std::visit(ValueVisitor{x}, form_); }

double TestSolution::laplacian(const Point& x) const {
  return std::visit(LaplacianVisitor{x}, form_);
}

double apply_to_solution(const Functional& f, const TestSolution& u) {
  return f.weight * (f.is_boundary() ? u.value(f.point) : u.laplacian(f.point));
}

}  // namespace pgreedy
