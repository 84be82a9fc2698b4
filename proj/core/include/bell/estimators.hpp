#ifndef BELL_ESTIMATORS_HPP
#define BELL_ESTIMATORS_HPP

#include <array>
#include <cstdint>

#include "bell/probability_space.hpp"
#include "bell/table.hpp"

namespace bell {

enum class CorrelationKind { Absolute, Conditional };

/// 2x2 correlation estimates with per-cell standard errors.
///
/// Absolute entries are means of the zero-padded products over all trials
/// (bounded by the cell's setting frequency); conditional entries are means
/// of x*y restricted to the cell's own trials (bounded by 1).
struct CorrelationTable {
  CorrelationKind kind = CorrelationKind::Conditional;
  Table2x2 values;
  Table2x2 standard_errors;
};

/// Streaming sufficient statistics for one run: per setting pair the trial
/// count and the running sum of x*y, plus the total trial count.
///
/// Counts and sums stay integers until an estimate is requested, which makes
/// the identity C_ij = p_ij * Q_ij exact by construction and the merge of two
/// accumulators (field-wise addition) associative, commutative and bit-stable.
class CorrelationAccumulator {
public:
  void record(const TrialOutcome& t) {
    const auto cell = Table2x2::index(t.settings.a, t.settings.b);
    n_[cell] += 1;
    s_[cell] += t.x * t.y;
    total_ += 1;
  }

  std::int64_t count(int i, int j) const { return n_[Table2x2::index(i, j)]; }
  std::int64_t product_sum(int i, int j) const { return s_[Table2x2::index(i, j)]; }
  std::int64_t total() const { return total_; }
  bool empty() const { return total_ == 0; }

  /// Estimates of <A_i, B_j> over the full trial stream: values s_ij / N.
  /// Throws EmptyAccumulatorError when no trials were recorded.
  CorrelationTable absolute_correlation() const;

  /// Estimates of <a_i, b_j> restricted per cell: values s_ij / n_ij.
  /// Throws UnmeasuredContextError naming the first cell with no trials.
  CorrelationTable conditional_correlation() const;

  /// Empirical setting frequencies n_ij / N.
  Table2x2 setting_frequency() const;

  /// Synthetic accumulator from explicit counts; validates |s_ij| <= n_ij.
  static CorrelationAccumulator from_counts(const std::array<std::int64_t, 4>& counts,
                                            const std::array<std::int64_t, 4>& product_sums);

private:
  std::array<std::int64_t, 4> n_{};  // row-major (1,1), (1,2), (2,1), (2,2)
  std::array<std::int64_t, 4> s_{};
  std::int64_t total_ = 0;

  friend CorrelationAccumulator merge(const CorrelationAccumulator&,
                                      const CorrelationAccumulator&);
};

/// Field-wise sum. Identity element is the default-constructed accumulator;
/// throws std::overflow_error if any 64-bit count would wrap.
CorrelationAccumulator merge(const CorrelationAccumulator& a,
                             const CorrelationAccumulator& b);

/// Max over measured cells of |C_ij - p_ij * Q_ij|. Algebraically this is
/// rounding noise only: (s/N) versus (n/N)*(s/n).
double identity_residual(const CorrelationAccumulator& acc);

/// Same residual from already-computed tables; lets callers cross-check
/// tables of unknown provenance.
double identity_residual(const CorrelationTable& absolute, const Table2x2& frequencies,
                         const CorrelationTable& conditional);

}  // namespace bell

#endif
