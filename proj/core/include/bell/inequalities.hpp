#ifndef BELL_INEQUALITIES_HPP
#define BELL_INEQUALITIES_HPP

#include <optional>

#include "bell/estimators.hpp"
#include "bell/table.hpp"

namespace bell {

/// Default width, in standard errors, of the guard band above a bound
/// before a violation is declared.
inline constexpr double kDefaultGuard = 5.0;

/// Per-cell tolerance within which empirical setting frequencies count as
/// uniform; the absolute-correlation bound of 1/2 and the intermediate
/// cross check are only valid in that regime.
inline constexpr double kUniformTolerance = 0.01;

bool is_uniform(const Table2x2& frequencies, double tolerance = kUniformTolerance);

/// The one sign pattern evaluated throughout: cells (1,1), (2,2) and (2,1)
/// enter with +, cell (1,2) with -.
struct SignConvention {
  static constexpr double sign(int i, int j) { return (i == 1 && j == 2) ? -1.0 : +1.0; }
};

/// Signed combination v11 - v12 + v22 + v21 (before taking |.|).
double chsh_combination(const Table2x2& values);

/// One evaluated inequality: |combination| against its bound.
struct BoundCheck {
  double value = 0.0;
  double bound = 0.0;
  bool bound_applicable = true;  ///< false when the bound's derivation does not cover this input
  double std_error = 0.0;        ///< quadrature over the four cell standard errors
  double slack = 0.0;            ///< bound - value
  bool violated = false;         ///< value > bound + guard_k * std_error, applicable bounds only
};

/// Standard conditional form, bound 2.
BoundCheck chsh_conditional(const CorrelationTable& conditional, double guard_k = kDefaultGuard);

/// Tight absolute form, bound 1/2; the bound only applies when the
/// empirical setting frequencies are uniform within kUniformTolerance.
BoundCheck chsh_absolute(const CorrelationTable& absolute, const Table2x2& frequencies,
                         double guard_k = kDefaultGuard);

/// Frequency-weighted form |C11/p11 - C12/p12 + C22/p22 + C21/p21|, bound 2,
/// valid for any strictly positive setting distribution. Equals the
/// conditional value exactly when tables come from one accumulator.
/// Throws ZeroProbabilityError naming the first empty cell.
BoundCheck chsh_generalized(const CorrelationTable& absolute, const Table2x2& frequencies,
                            double guard_k = kDefaultGuard);

/// The historically proposed weak bounds; no source in the zoo violates
/// them, which is what makes them undiscriminating.
struct WeakBoundsReport {
  BoundCheck absolute_vs_2;     ///< absolute combination against bound 2
  BoundCheck conditional_vs_8;  ///< conditional combination against bound 8
  BoundCheck conditional_vs_4;  ///< later variant with the 8 tightened to 4
};

WeakBoundsReport weak_bounds_report(const CorrelationTable& absolute,
                                    const CorrelationTable& conditional,
                                    double guard_k = kDefaultGuard);

/// Two-term cross check under uniform settings:
/// |C11 - C12| <= 1/2 - |Q22 + Q21|/4 (+1e-9). Local sources satisfy it;
/// for quantum data the margin is reported (typically negative) rather
/// than asserted.
struct IntermediateBoundWitness {
  double lhs = 0.0;     ///< |C11 - C12|
  double rhs = 0.0;     ///< 1/2 - |Q22 + Q21| / 4
  double margin = 0.0;  ///< rhs - lhs
  bool holds = false;   ///< margin >= -1e-9
};

/// Throws NotApplicableError when frequencies are not uniform within
/// kUniformTolerance.
IntermediateBoundWitness intermediate_bound_check(const CorrelationTable& conditional,
                                                  const CorrelationTable& absolute,
                                                  const Table2x2& frequencies);

/// Every inequality the runner reports for one run. Members that need the
/// conditional table are absent when some setting pair went unmeasured.
struct CHSHReport {
  BoundCheck absolute;
  BoundCheck weak_absolute;
  std::optional<BoundCheck> conditional;
  std::optional<BoundCheck> generalized;
  std::optional<BoundCheck> weak_bellian_8;
  std::optional<BoundCheck> weak_bellian_4;
  std::optional<IntermediateBoundWitness> intermediate;  ///< uniform settings only
};

CHSHReport evaluate_chsh(const CorrelationTable& absolute,
                         const std::optional<CorrelationTable>& conditional,
                         const Table2x2& frequencies, double guard_k = kDefaultGuard);

}  // namespace bell

#endif
