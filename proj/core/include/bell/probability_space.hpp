#ifndef BELL_PROBABILITY_SPACE_HPP
#define BELL_PROBABILITY_SPACE_HPP

#include <array>

#include "bell/random.hpp"
#include "bell/table.hpp"

namespace bell {

/// Which detector operates on each side for one trial; indices are 1 or 2.
struct SettingPair {
  int a = 1;  ///< detector index on side A
  int b = 1;  ///< detector index on side B

  friend constexpr bool operator==(const SettingPair&, const SettingPair&) = default;
};

/// Fixed row-major cell order used everywhere a 2x2 table is walked.
/// Sampling, serialization and reduction all share it so that results are
/// reproducible bit for bit.
inline constexpr std::array<SettingPair, 4> kCellOrder = {
    SettingPair{1, 1}, SettingPair{1, 2}, SettingPair{2, 1}, SettingPair{2, 2}};

/// Probability table governing which detector pair operates on a trial.
///
/// Entries must be nonnegative and sum to 1 within 1e-12. Strict positivity
/// of every cell is additionally required by the generalized inequality and
/// is checked there, not here: degenerate point-mass tables are legal inputs
/// for trial generation.
class SettingDistribution {
public:
  explicit SettingDistribution(const Table2x2& p);

  double operator()(int i, int j) const { return p_(i, j); }
  const Table2x2& table() const { return p_; }

  bool strictly_positive() const;

private:
  Table2x2 p_;
};

/// The table with all four entries exactly 1/4.
SettingDistribution uniform_settings();

/// One experimental run: the chosen settings and the two +-1 outcomes.
struct TrialOutcome {
  SettingPair settings;
  int x = +1;  ///< side-A outcome
  int y = +1;  ///< side-B outcome
};

/// Zero-padded per-detector values for one trial: the selected detector on
/// each side carries the outcome, the idle one reports 0. Exactly one of
/// a1, a2 (and of b1, b2) is nonzero, so the cross products a1*a2 and b1*b2
/// vanish identically.
struct SelectedValues {
  int a1, a2, b1, b2;
};

constexpr SelectedValues derive_selected_values(const TrialOutcome& t) {
  return SelectedValues{
      t.settings.a == 1 ? t.x : 0,
      t.settings.a == 2 ? t.x : 0,
      t.settings.b == 1 ? t.y : 0,
      t.settings.b == 2 ? t.y : 0,
  };
}

/// Draw a setting pair with probability p_ij, by inverse CDF over the four
/// cells in the fixed row-major order. Consumes one uniform draw.
inline SettingPair sample_settings(const SettingDistribution& dist, RandomSource& rng) {
  double u = rng.next_unit();
  for (const SettingPair& cell : kCellOrder) {
    const double p = dist(cell.a, cell.b);
    if (u < p) return cell;
    u -= p;
  }
  // Rounding pushed u past the accumulated mass; the last cell absorbs it.
  return kCellOrder.back();
}

}  // namespace bell

#endif
