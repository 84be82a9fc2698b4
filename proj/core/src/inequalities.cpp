#include "bell/inequalities.hpp"

#include <cmath>

#include "bell/errors.hpp"

namespace bell {

namespace {

constexpr double kIntermediateTolerance = 1e-9;

double quadrature_error(const Table2x2& standard_errors) {
  double sum = 0.0;
  for (const SettingPair& cell : kCellOrder) {
    const double se = standard_errors(cell.a, cell.b);
    sum += se * se;
  }
  return std::sqrt(sum);
}

BoundCheck make_check(double value, double bound, double std_error, double guard_k,
                      bool bound_applicable = true) {
  BoundCheck check;
  check.value = value;
  check.bound = bound;
  check.bound_applicable = bound_applicable;
  check.std_error = std_error;
  check.slack = bound - value;
  check.violated = bound_applicable && value > bound + guard_k * std_error;
  return check;
}

}  // namespace

bool is_uniform(const Table2x2& frequencies, double tolerance) {
  for (const SettingPair& cell : kCellOrder) {
    if (std::abs(frequencies(cell.a, cell.b) - 0.25) > tolerance) return false;
  }
  return true;
}

double chsh_combination(const Table2x2& values) {
  double sum = 0.0;
  for (const SettingPair& cell : kCellOrder) {
    sum += SignConvention::sign(cell.a, cell.b) * values(cell.a, cell.b);
  }
  return sum;
}

BoundCheck chsh_conditional(const CorrelationTable& conditional, double guard_k) {
  return make_check(std::abs(chsh_combination(conditional.values)), 2.0,
                    quadrature_error(conditional.standard_errors), guard_k);
}

BoundCheck chsh_absolute(const CorrelationTable& absolute, const Table2x2& frequencies,
                         double guard_k) {
  return make_check(std::abs(chsh_combination(absolute.values)), 0.5,
                    quadrature_error(absolute.standard_errors), guard_k,
                    is_uniform(frequencies));
}

BoundCheck chsh_generalized(const CorrelationTable& absolute, const Table2x2& frequencies,
                            double guard_k) {
  double sum = 0.0;
  double error_sq = 0.0;
  for (const SettingPair& cell : kCellOrder) {
    const double p = frequencies(cell.a, cell.b);
    if (!(p > 0.0)) throw ZeroProbabilityError(cell.a, cell.b);
    sum += SignConvention::sign(cell.a, cell.b) * absolute.values(cell.a, cell.b) / p;
    const double se = absolute.standard_errors(cell.a, cell.b) / p;
    error_sq += se * se;
  }
  return make_check(std::abs(sum), 2.0, std::sqrt(error_sq), guard_k);
}

WeakBoundsReport weak_bounds_report(const CorrelationTable& absolute,
                                    const CorrelationTable& conditional, double guard_k) {
  const double abs_value = std::abs(chsh_combination(absolute.values));
  const double abs_error = quadrature_error(absolute.standard_errors);
  const double cond_value = std::abs(chsh_combination(conditional.values));
  const double cond_error = quadrature_error(conditional.standard_errors);
  WeakBoundsReport report;
  report.absolute_vs_2 = make_check(abs_value, 2.0, abs_error, guard_k);
  report.conditional_vs_8 = make_check(cond_value, 8.0, cond_error, guard_k);
  report.conditional_vs_4 = make_check(cond_value, 4.0, cond_error, guard_k);
  return report;
}

IntermediateBoundWitness intermediate_bound_check(const CorrelationTable& conditional,
                                                  const CorrelationTable& absolute,
                                                  const Table2x2& frequencies) {
  if (!is_uniform(frequencies)) {
    throw NotApplicableError(
        "intermediate bound is derived for uniform settings; frequencies are not uniform");
  }
  IntermediateBoundWitness witness;
  witness.lhs = std::abs(absolute.values(1, 1) - absolute.values(1, 2));
  witness.rhs =
      0.5 - std::abs(conditional.values(2, 2) + conditional.values(2, 1)) / 4.0;
  witness.margin = witness.rhs - witness.lhs;
  witness.holds = witness.margin >= -kIntermediateTolerance;
  return witness;
}

CHSHReport evaluate_chsh(const CorrelationTable& absolute,
                         const std::optional<CorrelationTable>& conditional,
                         const Table2x2& frequencies, double guard_k) {
  CHSHReport report;
  report.absolute = chsh_absolute(absolute, frequencies, guard_k);
  report.weak_absolute =
      make_check(std::abs(chsh_combination(absolute.values)), 2.0,
                 quadrature_error(absolute.standard_errors), guard_k);
  if (conditional) {
    report.conditional = chsh_conditional(*conditional, guard_k);
    const WeakBoundsReport weak = weak_bounds_report(absolute, *conditional, guard_k);
    report.weak_bellian_8 = weak.conditional_vs_8;
    report.weak_bellian_4 = weak.conditional_vs_4;
    if (is_uniform(frequencies)) {
      report.intermediate = intermediate_bound_check(*conditional, absolute, frequencies);
    }
  }
  bool all_positive = true;
  for (const SettingPair& cell : kCellOrder) {
    all_positive = all_positive && frequencies(cell.a, cell.b) > 0.0;
  }
  if (all_positive) {
    report.generalized = chsh_generalized(absolute, frequencies, guard_k);
  }
  return report;
}

}  // namespace bell
