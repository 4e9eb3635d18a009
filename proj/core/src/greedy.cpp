#include "pgreedy/greedy.hpp"

#include <algorithm>
#include <atomic>
#include <cmath>
#include <sstream>
#include <stdexcept>

#include "pgreedy/errors.hpp"

namespace pgreedy {

namespace {
constexpr double kBrokenGramFactor = 1e-6;
}  // namespace

double GreedyState::max_residual() const noexcept {
  double best = 0.0;
  for (double v : residual_) best = std::max(best, v);
  return best;
}

std::size_t GreedyState::bulk_storage() const noexcept {
  std::size_t n = diag_.size();
  for (const auto& col : columns_) n += col.size();
  return n;
}

std::size_t GreedyState::total_storage() const noexcept {
  return bulk_storage() + residual_.size() + c_.stored_values();
}

GreedyState init(const FunctionalSet& set, const KernelSpec& spec, const Workers& workers) {
  if (set.empty()) throw std::invalid_argument("greedy init: empty functional set");
  if (set.dimension() != static_cast<std::size_t>(spec.dimension())) {
    throw std::invalid_argument("greedy init: functional dimension does not match the kernel");
  }
  GreedyState state;
  state.diag_.resize(set.size());
  parallel_for(workers, set.size(), [&](std::size_t begin, std::size_t end) {
    for (std::size_t i = begin; i < end; ++i) state.diag_[i] = dual_inner(set[i], set[i], spec);
  });
  state.residual_ = state.diag_;
  state.max_diag_ = *std::max_element(state.diag_.begin(), state.diag_.end());
  return state;
}

std::optional<std::size_t> select_standard(const GreedyState& state, double stop_tolerance) {
  const auto residual = state.residual_power();
  if (state.size() >= residual.size()) return std::nullopt;
  std::size_t best = 0;
  double best_value = residual[0];
  for (std::size_t i = 1; i < residual.size(); ++i) {
    if (residual[i] > best_value) {
      best_value = residual[i];
      best = i;
    }
  }
  if (!(best_value > stop_tolerance) || !(best_value > 0.0)) return std::nullopt;
  return best;
}

DeltaPowerMax delta_power_max(const GreedyState& state, const FunctionalSet& set,
                              double interior_max) {
  const auto residual = state.residual_power();
  std::optional<std::size_t> best;
  double best_value = -1.0;
  for (std::size_t i = 0; i < set.size(); ++i) {
    const auto& f = set[i];
    if (!f.is_boundary()) continue;
    const double p2 = residual[i] / (f.weight * f.weight);
    if (p2 > best_value) {
      best_value = p2;
      best = i;
    }
  }
  if (best && best_value >= interior_max) return {best_value, best};
  return {interior_max, std::nullopt};
}

std::optional<std::size_t> select_extended(const GreedyState& state,
                                           const DeltaPowerMax& delta_max,
                                           double stop_tolerance) {
  if (delta_max.boundary_functional) {
    const std::size_t i = *delta_max.boundary_functional;
    if (i < state.candidate_count() && state.residual_power()[i] > stop_tolerance) return i;
  }
  return select_standard(state, stop_tolerance);
}

void extend(GreedyState& state, std::size_t chosen, const FunctionalSet& set,
            const KernelSpec& spec, const Workers& workers) {
  const std::size_t count = set.size();
  if (chosen >= count || count != state.candidate_count()) {
    throw std::invalid_argument("greedy extend: index out of range or set mismatch");
  }
  double p2 = state.residual_[chosen];
  if (!(p2 > 0.0) || std::find(state.selected_.begin(), state.selected_.end(), chosen) !=
                         state.selected_.end()) {
    std::ostringstream os;
    os << "greedy extend: functional " << chosen << " has residual power " << p2;
    throw InvalidSelection(os.str());
  }

  const std::size_t n = state.size();
  std::vector<double> a(n);
  for (std::size_t j = 0; j < n; ++j) a[j] = state.columns_[j][chosen];

  // Raw column (lambda, lambda_chosen), turned in place into the unnormalized
  // residual lambda_chosen - sum_j a_j mu_j tested against every lambda.
  std::vector<double> column(count);
  const Functional& pick = set[chosen];
  parallel_for(workers, count, [&](std::size_t begin, std::size_t end) {
    for (std::size_t i = begin; i < end; ++i) {
      double v = dual_inner(set[i], pick, spec);
      for (std::size_t j = 0; j < n; ++j) v -= a[j] * state.columns_[j][i];
      column[i] = v;
    }
  });

  if (n > 0 && p2 < kReorthogonalizeBelow * state.diag_[chosen]) {
    // Defects e_j = (r, mu_j) = sum_k c_jk (r, lambda_k), then a second pass.
    std::vector<double> at_selected(n);
    for (std::size_t k = 0; k < n; ++k) at_selected[k] = column[state.selected_[k]];
    const std::vector<double> defect = state.c_.multiply(at_selected);
    parallel_for(workers, count, [&](std::size_t begin, std::size_t end) {
      for (std::size_t i = begin; i < end; ++i) {
        double v = column[i];
        for (std::size_t j = 0; j < n; ++j) v -= defect[j] * state.columns_[j][i];
        column[i] = v;
      }
    });
    for (std::size_t j = 0; j < n; ++j) a[j] += defect[j];
    p2 = column[chosen];
    ++state.reorth_count_;
    if (!(p2 > 0.0)) {
      std::ostringstream os;
      os << "greedy extend: functional " << chosen
         << " lies in the selected span after re-orthogonalization";
      throw InvalidSelection(os.str());
    }
  }

  // mu_new = cnn (lambda_chosen - sum_j a_j mu_j), and mu_j = sum_k c_jk lambda_k.
  const double cnn = 1.0 / std::sqrt(p2);
  std::vector<double> c_row = state.c_.multiply_transposed(a);
  for (double& v : c_row) v = -v * cnn;
  c_row.push_back(cnn);

  std::vector<double>& residual = state.residual_;
  const std::vector<double>& diag = state.diag_;
  std::atomic<bool> broken{false};
  std::atomic<std::size_t> broken_at{0};
  parallel_for(workers, count, [&](std::size_t begin, std::size_t end) {
    for (std::size_t i = begin; i < end; ++i) {
      const double v = column[i] * cnn;
      column[i] = v;
      double r = residual[i] - v * v;
      if (r < 0.0) {
        if (r < -kBrokenGramFactor * diag[i]) {
          broken.store(true);
          broken_at.store(i);
        }
        r = 0.0;
      }
      residual[i] = r;
    }
  });
  if (broken) {
    std::ostringstream os;
    os << "greedy extend: residual power of functional " << broken_at.load()
       << " became clearly negative at step " << n + 1;
    throw BrokenGram(os.str());
  }

  // Exact zero on the selected functional instead of roundoff.
  residual[chosen] = 0.0;

  state.c_.append_row(c_row);
  state.columns_.push_back(std::move(column));
  state.selected_.push_back(chosen);
}

}  // namespace pgreedy
