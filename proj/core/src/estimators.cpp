#include "bell/estimators.hpp"

#include <algorithm>
#include <cmath>
#include <cstdlib>
#include <limits>
#include <stdexcept>

#include "bell/errors.hpp"

namespace bell {

namespace {

std::int64_t checked_add(std::int64_t a, std::int64_t b) {
  std::int64_t out = 0;
  if (__builtin_add_overflow(a, b, &out)) {
    throw std::overflow_error("trial count overflow while merging accumulators");
  }
  return out;
}

}  // namespace

CorrelationTable CorrelationAccumulator::absolute_correlation() const {
  if (total_ == 0) throw EmptyAccumulatorError();
  CorrelationTable table;
  table.kind = CorrelationKind::Absolute;
  const double N = static_cast<double>(total_);
  for (const SettingPair& cell : kCellOrder) {
    const auto k = Table2x2::index(cell.a, cell.b);
    const double mean = static_cast<double>(s_[k]) / N;
    // Per-trial product is x*y on this cell's trials and 0 elsewhere, so its
    // second moment is n_ij / N exactly.
    const double variance = static_cast<double>(n_[k]) / N - mean * mean;
    table.values(cell.a, cell.b) = mean;
    table.standard_errors(cell.a, cell.b) = std::sqrt(std::max(variance, 0.0) / N);
  }
  return table;
}

CorrelationTable CorrelationAccumulator::conditional_correlation() const {
  for (const SettingPair& cell : kCellOrder) {
    if (n_[Table2x2::index(cell.a, cell.b)] == 0) {
      throw UnmeasuredContextError(cell.a, cell.b);
    }
  }
  CorrelationTable table;
  table.kind = CorrelationKind::Conditional;
  for (const SettingPair& cell : kCellOrder) {
    const auto k = Table2x2::index(cell.a, cell.b);
    const double n = static_cast<double>(n_[k]);
    const double mean = static_cast<double>(s_[k]) / n;
    table.values(cell.a, cell.b) = mean;
    table.standard_errors(cell.a, cell.b) = std::sqrt(std::max(1.0 - mean * mean, 0.0) / n);
  }
  return table;
}

Table2x2 CorrelationAccumulator::setting_frequency() const {
  if (total_ == 0) throw EmptyAccumulatorError();
  Table2x2 freq;
  for (const SettingPair& cell : kCellOrder) {
    freq(cell.a, cell.b) =
        static_cast<double>(n_[Table2x2::index(cell.a, cell.b)]) / static_cast<double>(total_);
  }
  return freq;
}

CorrelationAccumulator CorrelationAccumulator::from_counts(
    const std::array<std::int64_t, 4>& counts, const std::array<std::int64_t, 4>& product_sums) {
  CorrelationAccumulator acc;
  for (std::size_t k = 0; k < 4; ++k) {
    if (counts[k] < 0 || std::abs(product_sums[k]) > counts[k]) {
      throw std::invalid_argument("product sum exceeds trial count");
    }
    acc.n_[k] = counts[k];
    acc.s_[k] = product_sums[k];
    acc.total_ = checked_add(acc.total_, counts[k]);
  }
  return acc;
}

CorrelationAccumulator merge(const CorrelationAccumulator& a, const CorrelationAccumulator& b) {
  CorrelationAccumulator out;
  for (std::size_t k = 0; k < 4; ++k) {
    out.n_[k] = checked_add(a.n_[k], b.n_[k]);
    out.s_[k] = a.s_[k] + b.s_[k];  // |s| <= n, so this cannot wrap first
  }
  out.total_ = checked_add(a.total_, b.total_);
  return out;
}

double identity_residual(const CorrelationAccumulator& acc) {
  if (acc.empty()) throw EmptyAccumulatorError();
  const double N = static_cast<double>(acc.total());
  double worst = 0.0;
  for (const SettingPair& cell : kCellOrder) {
    const double n = static_cast<double>(acc.count(cell.a, cell.b));
    if (n == 0.0) continue;
    const double s = static_cast<double>(acc.product_sum(cell.a, cell.b));
    const double absolute = s / N;
    const double conditional = s / n;
    worst = std::max(worst, std::abs(absolute - (n / N) * conditional));
  }
  return worst;
}

double identity_residual(const CorrelationTable& absolute, const Table2x2& frequencies,
                         const CorrelationTable& conditional) {
  double worst = 0.0;
  for (const SettingPair& cell : kCellOrder) {
    worst = std::max(worst, std::abs(absolute.values(cell.a, cell.b) -
                                     frequencies(cell.a, cell.b) *
                                         conditional.values(cell.a, cell.b)));
  }
  return worst;
}

}  // namespace bell
