#ifndef BELL_ORACLE_HPP
#define BELL_ORACLE_HPP

#include <array>
#include <vector>

#include "bell/models.hpp"
#include "bell/rational.hpp"
#include "bell/table.hpp"

namespace bell {

/// Exact conditional-correlation table <a_i, b_j> for a source with a
/// hidden-variable representation; entries are exact rationals. For a single
/// deterministic strategy every entry is +-1.
struct ExactCorrelationTable {
  std::array<Rational, 4> cells;  // row-major (1,1), (1,2), (2,1), (2,2)

  Rational& at(int i, int j) { return cells[Table2x2::index(i, j)]; }
  const Rational& at(int i, int j) const { return cells[Table2x2::index(i, j)]; }

  Table2x2 to_table() const;
};

ExactCorrelationTable exact_correlations(const DeterministicStrategy& strategy);

/// Weight-weighted sum over components, exact in rational arithmetic.
ExactCorrelationTable exact_correlations(const MixtureModel& mixture);

/// |q11 - q12 + q22 + q21| as an exact rational.
Rational exact_chsh_value(const ExactCorrelationTable& table);

/// The same combination of the absolute correlations under exactly uniform
/// settings, i.e. exact_chsh_value / 4.
Rational exact_absolute_chsh_value(const ExactCorrelationTable& table);

/// Singlet correlation -cos(delta) for analyzer separation delta.
double exact_quantum_correlation(double delta);

/// Exact conditional table for a singlet sampler: -cos(delta_ij) per cell.
Table2x2 exact_quantum_table(const SingletSampler& sampler);

/// Closed form for the sphere model: -(1 - 2*theta/pi) where theta is the
/// angle between axis a_i and axis b_j. Validated against Monte Carlo
/// integration over the sphere in the test suite before being trusted as
/// ground truth.
double sphere_model_exact(const BellSphereModel& model, int i, int j);
Table2x2 sphere_model_exact_table(const BellSphereModel& model);

/// Exhaustive maximum of the conditional combination over all 16
/// deterministic strategies; establishes the local bound constructively.
struct DeterministicMaximum {
  Rational max_value;                          ///< the local bound, 2
  std::vector<DeterministicStrategy> argmax;   ///< every strategy attaining it
  int visited = 0;                             ///< exhaustiveness witness, 16
};

DeterministicMaximum maximize_chsh_deterministic();

/// Quantum reference point: analyzer angles attaining the combination value
/// 2*sqrt(2), computed from the singlet closed form.
struct TsirelsonOptimum {
  std::array<double, 2> a_angles;  // {0, pi/2}
  std::array<double, 2> b_angles;  // {pi/4, 3*pi/4}
  double value;                    // 2*sqrt(2)
};

TsirelsonOptimum tsirelson_optimum();

/// Coarse grid search over all four analyzer angles on [0, 2*pi); confirms
/// no grid point exceeds the optimum. Ties resolve to the lexicographically
/// smallest angle tuple.
struct GridSearchResult {
  double value = 0.0;
  std::array<double, 4> angles{};  // a1, a2, b1, b2
};

GridSearchResult quantum_chsh_grid_search(int points_per_axis = 37);

}  // namespace bell

#endif
