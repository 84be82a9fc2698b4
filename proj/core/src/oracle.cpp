#include "bell/oracle.hpp"

#include <cmath>
#include <numbers>

#include "bell/inequalities.hpp"

namespace bell {

namespace {

Rational signed_combination(const ExactCorrelationTable& table) {
  Rational sum(0);
  for (const SettingPair& cell : kCellOrder) {
    const Rational term = table.at(cell.a, cell.b);
    sum += SignConvention::sign(cell.a, cell.b) < 0 ? -term : term;
  }
  return sum;
}

}  // namespace

Table2x2 ExactCorrelationTable::to_table() const {
  Table2x2 out;
  for (const SettingPair& cell : kCellOrder) {
    out(cell.a, cell.b) = to_double(at(cell.a, cell.b));
  }
  return out;
}

ExactCorrelationTable exact_correlations(const DeterministicStrategy& strategy) {
  ExactCorrelationTable table;
  for (const SettingPair& cell : kCellOrder) {
    table.at(cell.a, cell.b) =
        Rational(strategy.response(Side::A, cell.a) * strategy.response(Side::B, cell.b));
  }
  return table;
}

ExactCorrelationTable exact_correlations(const MixtureModel& mixture) {
  ExactCorrelationTable table;
  for (const SettingPair& cell : kCellOrder) table.at(cell.a, cell.b) = Rational(0);
  for (const MixtureModel::Component& component : mixture.components()) {
    const ExactCorrelationTable part = exact_correlations(component.strategy);
    for (const SettingPair& cell : kCellOrder) {
      table.at(cell.a, cell.b) += component.weight * part.at(cell.a, cell.b);
    }
  }
  return table;
}

Rational exact_chsh_value(const ExactCorrelationTable& table) {
  return abs(signed_combination(table));
}

Rational exact_absolute_chsh_value(const ExactCorrelationTable& table) {
  return exact_chsh_value(table) / Rational(4);
}

double exact_quantum_correlation(double delta) { return -std::cos(delta); }

Table2x2 exact_quantum_table(const SingletSampler& sampler) {
  Table2x2 out;
  for (const SettingPair& cell : kCellOrder) {
    out(cell.a, cell.b) = exact_quantum_correlation(sampler.delta(cell));
  }
  return out;
}

double sphere_model_exact(const BellSphereModel& model, int i, int j) {
  const Vec3& a = model.axis(Side::A, i);
  const Vec3& b = model.axis(Side::B, j);
  // Angle via atan2 of the cross-product magnitude: stable near 0 and pi.
  const Vec3 cross{a.y * b.z - a.z * b.y, a.z * b.x - a.x * b.z, a.x * b.y - a.y * b.x};
  const double theta = std::atan2(norm(cross), dot(a, b));
  return -(1.0 - 2.0 * theta / std::numbers::pi);
}

Table2x2 sphere_model_exact_table(const BellSphereModel& model) {
  Table2x2 out;
  for (const SettingPair& cell : kCellOrder) {
    out(cell.a, cell.b) = sphere_model_exact(model, cell.a, cell.b);
  }
  return out;
}

DeterministicMaximum maximize_chsh_deterministic() {
  DeterministicMaximum result;
  result.max_value = Rational(0);
  for (const DeterministicStrategy& strategy : enumerate_deterministic()) {
    ++result.visited;
    const Rational value = exact_chsh_value(exact_correlations(strategy));
    if (value > result.max_value) {
      result.max_value = value;
      result.argmax.clear();
    }
    if (value == result.max_value) result.argmax.push_back(strategy);
  }
  return result;
}

TsirelsonOptimum tsirelson_optimum() {
  constexpr double pi = std::numbers::pi;
  TsirelsonOptimum optimum;
  optimum.a_angles = {0.0, pi / 2.0};
  optimum.b_angles = {pi / 4.0, 3.0 * pi / 4.0};
  const SingletSampler sampler(optimum.a_angles[0], optimum.a_angles[1],
                               optimum.b_angles[0], optimum.b_angles[1]);
  optimum.value = std::abs(chsh_combination(exact_quantum_table(sampler)));
  return optimum;
}

GridSearchResult quantum_chsh_grid_search(int points_per_axis) {
  const int n = points_per_axis;
  const double step = 2.0 * std::numbers::pi / n;
  // -cos(theta_a - theta_b) for every grid pair, indexed [a][b].
  std::vector<double> correlation(static_cast<std::size_t>(n) * n);
  for (int a = 0; a < n; ++a) {
    for (int b = 0; b < n; ++b) {
      correlation[static_cast<std::size_t>(a) * n + b] =
          exact_quantum_correlation(a * step - b * step);
    }
  }
  const auto q = [&](int a, int b) { return correlation[static_cast<std::size_t>(a) * n + b]; };

  GridSearchResult best;
  for (int a1 = 0; a1 < n; ++a1) {
    for (int a2 = 0; a2 < n; ++a2) {
      for (int b1 = 0; b1 < n; ++b1) {
        for (int b2 = 0; b2 < n; ++b2) {
          const double value = std::abs(q(a1, b1) - q(a1, b2) + q(a2, b2) + q(a2, b1));
          // Strict > keeps the lexicographically smallest maximizer.
          if (value > best.value) {
            best.value = value;
            best.angles = {a1 * step, a2 * step, b1 * step, b2 * step};
          }
        }
      }
    }
  }
  return best;
}

}  // namespace bell
