#ifndef BELL_MODELS_HPP
#define BELL_MODELS_HPP

#include <array>
#include <cstddef>
#include <memory>
#include <utility>
#include <variant>
#include <vector>

#include "bell/probability_space.hpp"
#include "bell/random.hpp"
#include "bell/rational.hpp"

namespace bell {

enum class Side { A, B };

struct Vec3 {
  double x = 0, y = 0, z = 0;

  friend constexpr bool operator==(const Vec3&, const Vec3&) = default;
};

constexpr double dot(const Vec3& u, const Vec3& v) {
  return u.x * v.x + u.y * v.y + u.z * v.z;
}
double norm(const Vec3& v);

/// Uniform point on the unit sphere from normalized 3D standard normal
/// draws (Box-Muller; consumes four uniforms).
Vec3 sample_unit_sphere(RandomSource& rng);

/// Hidden value carried by one particle pair. The concrete content is owned
/// by the model that sampled it: nothing for a fixed strategy, a component
/// index for mixtures, a point on the sphere for the sphere model.
using HiddenValue = std::variant<std::monostate, std::size_t, Vec3>;

/// A local realistic source: a distribution over hidden values plus
/// deterministic +-1 responses per (side, detector index).
///
/// Implementations guarantee that a response depends only on
/// (side, index, hidden value) -- in particular the side-A response never
/// sees the side-B index and repeated evaluation at the same hidden value
/// is constant.
class LocalModel {
public:
  virtual ~LocalModel() = default;

  virtual HiddenValue sample_hidden(RandomSource& rng) const = 0;
  virtual int respond(Side side, int index, const HiddenValue& hidden) const = 0;
};

/// One of the 16 extreme points of the local model class: fixed +-1
/// outcomes for all four detectors. The hidden value is degenerate.
class DeterministicStrategy final : public LocalModel {
public:
  DeterministicStrategy(int a1, int a2, int b1, int b2);

  HiddenValue sample_hidden(RandomSource&) const override { return std::monostate{}; }
  int respond(Side side, int index, const HiddenValue&) const override {
    return response(side, index);
  }

  /// Non-virtual table lookup, independent of any hidden value.
  int response(Side side, int index) const {
    return side == Side::A ? (index == 1 ? a1_ : a2_) : (index == 1 ? b1_ : b2_);
  }

  int a1() const { return a1_; }
  int a2() const { return a2_; }
  int b1() const { return b1_; }
  int b2() const { return b2_; }

  friend bool operator==(const DeterministicStrategy&, const DeterministicStrategy&) = default;

private:
  int a1_, a2_, b1_, b2_;
};

/// All 2^4 sign assignments, each exactly once, in a fixed order:
/// a1 is the slowest bit and b2 the fastest, a set bit meaning -1.
/// The first element is (+1,+1,+1,+1).
std::vector<DeterministicStrategy> enumerate_deterministic();

/// Convex combination of deterministic strategies; the hidden value is the
/// sampled component index. Weights are exact rationals so the oracle can
/// reproduce this model's statistics without rounding.
class MixtureModel final : public LocalModel {
public:
  struct Component {
    DeterministicStrategy strategy;
    Rational weight;

    friend bool operator==(const Component&, const Component&) = default;
  };

  /// Requires at least one component and nonnegative weights whose sum is 1
  /// within 1e-12; an off-by-epsilon sum is renormalized exactly.
  explicit MixtureModel(std::vector<Component> components);

  HiddenValue sample_hidden(RandomSource& rng) const override;
  int respond(Side side, int index, const HiddenValue& hidden) const override;

  const std::vector<Component>& components() const { return components_; }

  friend bool operator==(const MixtureModel& lhs, const MixtureModel& rhs) {
    return lhs.components_ == rhs.components_;
  }

private:
  std::vector<Component> components_;
  std::vector<double> weight_cdf_;
};

/// Classic sign model on the sphere: the hidden value is a uniform unit
/// vector, side A responds sign(a_i . lambda) and side B responds
/// -sign(b_j . lambda). Aligned axes therefore always anti-correlate.
/// sign(0) is +1 by convention (a measure-zero event).
class BellSphereModel final : public LocalModel {
public:
  /// All four axes must have unit Euclidean norm within 1e-12.
  BellSphereModel(const Vec3& a1, const Vec3& a2, const Vec3& b1, const Vec3& b2);

  /// Axes in the x-y plane at the given angles (radians).
  static BellSphereModel from_planar_angles(double a1, double a2, double b1, double b2);

  HiddenValue sample_hidden(RandomSource& rng) const override;
  int respond(Side side, int index, const HiddenValue& hidden) const override;

  const Vec3& axis(Side side, int index) const;

  friend bool operator==(const BellSphereModel& lhs, const BellSphereModel& rhs) {
    return lhs.axes_ == rhs.axes_;
  }

private:
  std::array<Vec3, 4> axes_;  // a1, a2, b1, b2
};

/// Quantum contrast source producing joint +-1 outcomes for planar analyzer
/// angles: P(x, y | i, j) = (1 - x*y*cos(theta_a_i - theta_b_j)) / 4.
///
/// Deliberately not a LocalModel: the pair is drawn jointly given the
/// settings and no hidden value exists.
class SingletSampler {
public:
  SingletSampler(double a1, double a2, double b1, double b2);

  std::pair<int, int> sample_joint(const SettingPair& settings, RandomSource& rng) const;

  /// theta_a_i - theta_b_j for the chosen settings.
  double delta(const SettingPair& settings) const;

  /// The joint law itself; x, y in {-1, +1}.
  double joint_probability(const SettingPair& settings, int x, int y) const;

  double a_angle(int index) const { return index == 1 ? a1_ : a2_; }
  double b_angle(int index) const { return index == 1 ? b1_ : b2_; }

  friend bool operator==(const SingletSampler& lhs, const SingletSampler& rhs) {
    return lhs.a1_ == rhs.a1_ && lhs.a2_ == rhs.a2_ && lhs.b1_ == rhs.b1_ &&
           lhs.b2_ == rhs.b2_;
  }

private:
  double a1_, a2_, b1_, b2_;
  Table2x2 cos_delta_;  // cached cos(delta) per setting pair
};

/// Anything that can produce one trial's (x, y) given the chosen settings.
/// Both local models and the singlet sampler satisfy this role; the trial
/// engine does not care which kind it drives.
class Source {
public:
  virtual ~Source() = default;
  virtual std::pair<int, int> draw(const SettingPair& settings, RandomSource& rng) const = 0;
};

/// Adapts a LocalModel: samples a hidden value, then evaluates both sides.
class LocalModelSource final : public Source {
public:
  explicit LocalModelSource(std::shared_ptr<const LocalModel> model)
      : model_(std::move(model)) {}

  std::pair<int, int> draw(const SettingPair& settings, RandomSource& rng) const override {
    const HiddenValue hidden = model_->sample_hidden(rng);
    return {model_->respond(Side::A, settings.a, hidden),
            model_->respond(Side::B, settings.b, hidden)};
  }

  const LocalModel& model() const { return *model_; }

private:
  std::shared_ptr<const LocalModel> model_;
};

class SingletSource final : public Source {
public:
  explicit SingletSource(SingletSampler sampler) : sampler_(std::move(sampler)) {}

  std::pair<int, int> draw(const SettingPair& settings, RandomSource& rng) const override {
    return sampler_.sample_joint(settings, rng);
  }

  const SingletSampler& sampler() const { return sampler_; }

private:
  SingletSampler sampler_;
};

}  // namespace bell

#endif
