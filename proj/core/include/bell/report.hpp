#ifndef BELL_REPORT_HPP
#define BELL_REPORT_HPP

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "bell/config.hpp"
#include "bell/estimators.hpp"
#include "bell/inequalities.hpp"
#include "bell/table.hpp"

namespace bell {

/// Closed-form reference statistics for sources that admit them.
struct ExactSection {
  Table2x2 conditional;                 ///< exact <a_i, b_j> per cell
  double chsh_conditional = 0.0;        ///< exact combination value
  std::optional<double> chsh_absolute;  ///< exact value / 4; uniform configured settings only
};

/// Everything one run produces. Serialization is byte-stable: fixed key
/// order, every float rendered with 17 significant digits, and no volatile
/// fields (wall-clock time goes to stderr, not into the document).
struct RunReport {
  ExperimentConfig config;  ///< echo of the semantic config
  Table2x2 frequencies;
  CorrelationTable absolute;
  std::optional<CorrelationTable> conditional;  ///< absent when a cell went unmeasured
  std::vector<SettingPair> missing_cells;
  CHSHReport chsh;
  std::optional<ExactSection> exact;
  double identity_residual = 0.0;  ///< max over measured cells of |C_ij - p_ij * Q_ij|
  std::uint64_t trials = 0;
  double elapsed_seconds = 0.0;  ///< not serialized

  bool conditional_available() const { return conditional.has_value(); }
};

/// Top-level keys, in order: "config", "frequencies", "absolute",
/// "conditional", "chsh", "exact" (when present), "identity_residual",
/// "timing".
std::string report_to_json(const RunReport& report);

}  // namespace bell

#endif
