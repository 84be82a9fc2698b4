#include "bell/probability_space.hpp"

#include <cmath>
#include <string>

#include "bell/errors.hpp"

namespace bell {

namespace {
constexpr double kNormalizationTolerance = 1e-12;
}

SettingDistribution::SettingDistribution(const Table2x2& p) : p_(p) {
  double sum = 0.0;
  for (const SettingPair& cell : kCellOrder) {
    const double value = p(cell.a, cell.b);
    if (!(value >= 0.0)) {
      throw ConfigError("setting probability p(" + std::to_string(cell.a) + "," +
                        std::to_string(cell.b) + ") is negative or NaN");
    }
    sum += value;
  }
  if (std::abs(sum - 1.0) > kNormalizationTolerance) {
    throw ConfigError("setting probabilities sum to " + std::to_string(sum) +
                      ", expected 1");
  }
}

bool SettingDistribution::strictly_positive() const {
  for (const SettingPair& cell : kCellOrder) {
    if (!(p_(cell.a, cell.b) > 0.0)) return false;
  }
  return true;
}

SettingDistribution uniform_settings() {
  return SettingDistribution(make_table(0.25, 0.25, 0.25, 0.25));
}

}  // namespace bell
