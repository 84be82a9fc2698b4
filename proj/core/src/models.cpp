#include "bell/models.hpp"

#include <cmath>
#include <numbers>
#include <string>

#include "bell/errors.hpp"

namespace bell {

namespace {

constexpr double kWeightTolerance = 1e-12;
constexpr double kUnitNormTolerance = 1e-12;

int validate_sign(int v, const char* name) {
  if (v != 1 && v != -1) {
    throw ConfigError(std::string(name) + " must be +1 or -1, got " + std::to_string(v));
  }
  return v;
}

int sign_or_plus(double v) { return v < 0.0 ? -1 : +1; }

}  // namespace

double norm(const Vec3& v) { return std::sqrt(dot(v, v)); }

Vec3 sample_unit_sphere(RandomSource& rng) {
  for (;;) {
    // Two Box-Muller pairs give four normals; the fourth is discarded.
    const double u1 = 1.0 - rng.next_unit();  // (0, 1], keeps log finite
    const double u2 = rng.next_unit();
    const double u3 = 1.0 - rng.next_unit();
    const double u4 = rng.next_unit();
    const double r1 = std::sqrt(-2.0 * std::log(u1));
    const double r2 = std::sqrt(-2.0 * std::log(u3));
    const Vec3 g{r1 * std::cos(2.0 * std::numbers::pi * u2),
                 r1 * std::sin(2.0 * std::numbers::pi * u2),
                 r2 * std::cos(2.0 * std::numbers::pi * u4)};
    const double n = norm(g);
    if (n > 0.0) return Vec3{g.x / n, g.y / n, g.z / n};
  }
}

DeterministicStrategy::DeterministicStrategy(int a1, int a2, int b1, int b2)
    : a1_(validate_sign(a1, "a1")),
      a2_(validate_sign(a2, "a2")),
      b1_(validate_sign(b1, "b1")),
      b2_(validate_sign(b2, "b2")) {}

std::vector<DeterministicStrategy> enumerate_deterministic() {
  std::vector<DeterministicStrategy> all;
  all.reserve(16);
  for (int k = 0; k < 16; ++k) {
    const auto sign = [k](int bit) { return (k >> bit) & 1 ? -1 : +1; };
    all.emplace_back(sign(3), sign(2), sign(1), sign(0));
  }
  return all;
}

MixtureModel::MixtureModel(std::vector<Component> components)
    : components_(std::move(components)) {
  if (components_.empty()) {
    throw ConfigError("mixture needs at least one component");
  }
  Rational sum(0);
  for (const Component& c : components_) {
    if (c.weight < Rational(0)) {
      throw ConfigError("mixture weights must be nonnegative");
    }
    sum += c.weight;
  }
  if (std::abs(to_double(sum) - 1.0) > kWeightTolerance) {
    throw ConfigError("mixture weights sum to " + std::to_string(to_double(sum)) +
                      ", expected 1");
  }
  if (sum == Rational(0)) {
    throw ConfigError("mixture weights are all zero");
  }
  if (sum != Rational(1)) {
    // Within tolerance but not exact: renormalize in exact arithmetic so the
    // oracle sees weights that sum to 1 precisely.
    for (Component& c : components_) c.weight /= sum;
  }
  weight_cdf_.reserve(components_.size());
  double acc = 0.0;
  for (const Component& c : components_) {
    acc += to_double(c.weight);
    weight_cdf_.push_back(acc);
  }
  weight_cdf_.back() = 1.0;
}

HiddenValue MixtureModel::sample_hidden(RandomSource& rng) const {
  const double u = rng.next_unit();
  for (std::size_t k = 0; k < weight_cdf_.size(); ++k) {
    if (u < weight_cdf_[k]) return k;
  }
  return weight_cdf_.size() - 1;
}

int MixtureModel::respond(Side side, int index, const HiddenValue& hidden) const {
  const std::size_t k = std::get<std::size_t>(hidden);
  return components_[k].strategy.response(side, index);
}

BellSphereModel::BellSphereModel(const Vec3& a1, const Vec3& a2, const Vec3& b1,
                                 const Vec3& b2)
    : axes_{a1, a2, b1, b2} {
  for (const Vec3& axis : axes_) {
    if (std::abs(norm(axis) - 1.0) > kUnitNormTolerance) {
      throw ConfigError("sphere-model axes must be unit vectors");
    }
  }
}

BellSphereModel BellSphereModel::from_planar_angles(double a1, double a2, double b1,
                                                    double b2) {
  const auto planar = [](double theta) { return Vec3{std::cos(theta), std::sin(theta), 0.0}; };
  return BellSphereModel(planar(a1), planar(a2), planar(b1), planar(b2));
}

HiddenValue BellSphereModel::sample_hidden(RandomSource& rng) const {
  return sample_unit_sphere(rng);
}

int BellSphereModel::respond(Side side, int index, const HiddenValue& hidden) const {
  const Vec3& lambda = std::get<Vec3>(hidden);
  const double projection = dot(axis(side, index), lambda);
  return side == Side::A ? sign_or_plus(projection) : -sign_or_plus(projection);
}

const Vec3& BellSphereModel::axis(Side side, int index) const {
  const std::size_t base = side == Side::A ? 0 : 2;
  return axes_[base + static_cast<std::size_t>(index - 1)];
}

SingletSampler::SingletSampler(double a1, double a2, double b1, double b2)
    : a1_(a1), a2_(a2), b1_(b1), b2_(b2) {
  for (const SettingPair& cell : kCellOrder) {
    cos_delta_(cell.a, cell.b) = std::cos(a_angle(cell.a) - b_angle(cell.b));
  }
}

double SingletSampler::delta(const SettingPair& settings) const {
  return a_angle(settings.a) - b_angle(settings.b);
}

double SingletSampler::joint_probability(const SettingPair& settings, int x, int y) const {
  return (1.0 - x * y * cos_delta_(settings.a, settings.b)) / 4.0;
}

std::pair<int, int> SingletSampler::sample_joint(const SettingPair& settings,
                                                 RandomSource& rng) const {
  // Inverse CDF over the four outcomes in fixed order (+,+), (+,-), (-,+), (-,-).
  static constexpr std::array<std::pair<int, int>, 4> kOutcomes = {
      std::pair{+1, +1}, std::pair{+1, -1}, std::pair{-1, +1}, std::pair{-1, -1}};
  double u = rng.next_unit();
  for (const auto& [x, y] : kOutcomes) {
    const double p = joint_probability(settings, x, y);
    if (u < p) return {x, y};
    u -= p;
  }
  return kOutcomes.back();
}

}  // namespace bell
