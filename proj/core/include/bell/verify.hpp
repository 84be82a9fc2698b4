#ifndef BELL_VERIFY_HPP
#define BELL_VERIFY_HPP

#include <cstdint>
#include <string>
#include <string_view>
#include <vector>

namespace bell {

/// Outcome of one verification property.
struct PropertyResult {
  std::string name;
  bool passed = false;
  double margin = 0.0;  ///< distance to the failure boundary; negative means failed
  std::string detail;
  double elapsed_seconds = 0.0;
};

/// Exact-bound properties: the exhaustive deterministic maximum equals 2,
/// its uniform-settings absolute counterpart equals 1/2, the quantum closed
/// form peaks at 2*sqrt(2), the angle grid never exceeds it, and mixture
/// tables respect convexity.
std::vector<PropertyResult> verify_oracle_suite();

/// Algebraic estimator properties on live runs and synthetic accumulators:
/// identity residual, generalized-equals-conditional, the uniform scaling
/// law, and merge-equals-sequential.
std::vector<PropertyResult> verify_identity_suite();

struct SoundnessOptions {
  int runs = 200;
  std::uint64_t trials_per_run = 100000;
  std::uint64_t seed = 20260809;
  double min_cell_probability = 0.05;
  double guard_k = 5.0;
};

/// Randomized local-model soundness: for random mixtures under random
/// strictly positive setting distributions, the conditional and generalized
/// values stay within guard_k standard errors of the bound 2, and the exact
/// oracle values never exceed 2 at all.
std::vector<PropertyResult> verify_soundness_suite(const SoundnessOptions& options = {});

/// Suite selector: "oracle", "identity", "soundness" or "all".
/// Throws ConfigError for anything else.
std::vector<PropertyResult> verify_suite(std::string_view name);

bool all_passed(const std::vector<PropertyResult>& results);

}  // namespace bell

#endif
