#ifndef BELL_CONFIG_HPP
#define BELL_CONFIG_HPP

#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <variant>

#include "bell/models.hpp"
#include "bell/probability_space.hpp"

namespace bell {

/// A fully constructed source description; parsing validates parameters, so
/// holding the model objects themselves keeps config and model in one place.
using SourceSpec =
    std::variant<DeterministicStrategy, MixtureModel, BellSphereModel, SingletSampler>;

enum class SourceKind { Strategy, Mixture, Sphere, Singlet };

SourceKind kind_of(const SourceSpec& source);
std::string_view kind_name(SourceKind kind);

/// Which singlet analyzer angle a sweep varies.
enum class SweepAngle { A1, A2, B1, B2 };

std::string_view sweep_angle_name(SweepAngle angle);

struct SweepSpec {
  SweepAngle angle = SweepAngle::B1;
  double start = 0.0;
  double stop = 0.0;
  int steps = 0;  ///< number of grid points, inclusive of both ends; >= 1

  friend bool operator==(const SweepSpec&, const SweepSpec&) = default;
};

/// One experiment: what to sample, how often, and where results go.
///
/// `workers`, `report_path` and `trials_path` control execution and output
/// placement only; they never influence the numbers and are therefore not
/// part of the semantic config compared by same_experiment() or echoed into
/// reports.
struct ExperimentConfig {
  SourceSpec source = DeterministicStrategy(+1, +1, +1, +1);
  SettingDistribution settings = uniform_settings();
  std::uint64_t trials = 1;
  std::uint64_t seed = 0;
  double guard_k = 5.0;
  std::optional<SweepSpec> sweep;

  int workers = 1;
  std::string report_path;  ///< empty: stdout
  std::string trials_path;  ///< empty: no per-trial dump
};

/// True when the two configs describe the same experiment (execution and
/// output fields excluded).
bool same_experiment(const ExperimentConfig& a, const ExperimentConfig& b);

/// Parse the flat key-value grammar (see README). Throws ConfigError naming
/// the first offending key. `run.seed` falls back to the BELLLAB_SEED
/// environment variable and then to 0.
ExperimentConfig parse_config(std::string_view text);

/// Parse only a source description (plus optional settings); trial counts
/// and seeds are not required. Used by the oracle CLI subcommand.
ExperimentConfig parse_model_spec(std::string_view text);

/// Canonical text form of the semantic config; parse_config round-trips it.
std::string serialize_config(const ExperimentConfig& config);

/// Weight grammar: "n/d" is an exact rational, a decimal is converted with
/// denominator 10^6.
Rational parse_weight(const std::string& token);

}  // namespace bell

#endif
