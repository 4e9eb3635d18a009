#pragma once

#include <cstddef>
#include <optional>
#include <span>
#include <vector>

#include "pgreedy/functional.hpp"
#include "pgreedy/kernel.hpp"
#include "pgreedy/matrix.hpp"
#include "pgreedy/parallel.hpp"

namespace pgreedy {

// Incremental Newton-basis state over a candidate set Lambda.
//
// After N steps with selected lambda_1..lambda_N the state holds
//   C           lower-triangular, mu_k = sum_{j<=k} c_kj lambda_j, so C A C^T = I
//               for the Gram A of the selected functionals,
//   columns[k]  (lambda, mu_k)_{H*} for every lambda in Lambda,
//   diag        (lambda, lambda)_{H*},
//   residual    P^2_{Lambda_N}(lambda) = diag - sum_k columns[k]^2.
// Bulk storage is (N + 1) |Lambda| for diag + columns, plus one working
// vector for the residual and N (N + 1) / 2 entries of C.
class GreedyState {
 public:
  [[nodiscard]] std::size_t size() const noexcept { return selected_.size(); }
  [[nodiscard]] std::size_t candidate_count() const noexcept { return diag_.size(); }

  [[nodiscard]] std::span<const std::size_t> selected() const noexcept { return selected_; }
  [[nodiscard]] const LowerTriangular& c() const noexcept { return c_; }
  [[nodiscard]] std::span<const double> newton_column(std::size_t k) const noexcept {
    return columns_[k];
  }
  [[nodiscard]] std::span<const double> diag() const noexcept { return diag_; }
  [[nodiscard]] std::span<const double> residual_power() const noexcept { return residual_; }

  [[nodiscard]] double max_diag() const noexcept { return max_diag_; }
  // max_lambda P^2_{Lambda_N}(lambda), i.e. sigma^2.
  [[nodiscard]] double max_residual() const noexcept;

  // Number of doubles held by the (N+1)|Lambda| bulk (diag + Newton columns).
  [[nodiscard]] std::size_t bulk_storage() const noexcept;
  // Everything: bulk + residual vector + packed C.
  [[nodiscard]] std::size_t total_storage() const noexcept;

  // Number of re-orthogonalization passes performed so far.
  [[nodiscard]] std::size_t reorthogonalizations() const noexcept { return reorth_count_; }

 private:
  friend GreedyState init(const FunctionalSet&, const KernelSpec&, const Workers&);
  friend void extend(GreedyState&, std::size_t, const FunctionalSet&, const KernelSpec&,
                     const Workers&);

  std::vector<std::size_t> selected_;
  LowerTriangular c_;
  std::vector<std::vector<double>> columns_;
  std::vector<double> diag_;
  std::vector<double> residual_;
  double max_diag_ = 0.0;
  std::size_t reorth_count_ = 0;
};

// Throws std::invalid_argument for an empty set.
[[nodiscard]] GreedyState init(const FunctionalSet& set, const KernelSpec& spec,
                               const Workers& workers = Workers::single());

// Default stopping rule: sigma^2 <= 1e-12 * max diag.
inline constexpr double kDefaultRelativeStopTolerance = 1e-12;

// Index of the maximal residual power, lowest index on ties. Returns nullopt
// ("converged") when that maximum is <= stop_tolerance (an absolute P^2
// value) or every candidate is already selected.
[[nodiscard]] std::optional<std::size_t> select_standard(const GreedyState& state,
                                                         double stop_tolerance);

// Maximum of P^2(delta_x) over the monitor set M = Y u Z of the extended
// method. `boundary_functional` is the index of the Lambda_2 functional at
// which the maximum is attained, if it is attained on Z.
struct DeltaPowerMax {
  double value = 0.0;
  std::optional<std::size_t> boundary_functional;
};

// Combines max_{y in Y} P^2(delta_y) with the boundary residual powers of
// `state` (converted to unweighted deltas). Ties go to the boundary.
[[nodiscard]] DeltaPowerMax delta_power_max(const GreedyState& state, const FunctionalSet& set,
                                            double interior_max);

// Extended rule: the boundary functional where the delta-power maximum over M
// is attained if that is on Z, otherwise select_standard().
[[nodiscard]] std::optional<std::size_t> select_extended(const GreedyState& state,
                                                         const DeltaPowerMax& delta_max,
                                                         double stop_tolerance);

// Appends `chosen` to the selection: new row of C, new Newton column computed
// in place from the raw column (lambda, lambda_chosen), residual update.
// Throws InvalidSelection when residual_power[chosen] <= 0 and BrokenGram when
// a residual drops below -1e-6 * diag; after BrokenGram the state must be
// discarded.
void extend(GreedyState& state, std::size_t chosen, const FunctionalSet& set,
            const KernelSpec& spec, const Workers& workers = Workers::single());

// Drop factor P^2 / (lambda, lambda) below which one extra
// Gram-Schmidt pass is applied.
inline constexpr double kReorthogonalizeBelow = 1e-6;

}  // namespace pgreedy
