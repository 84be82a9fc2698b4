#ifndef BELL_RUNNER_HPP
#define BELL_RUNNER_HPP

#include <memory>
#include <string>
#include <vector>

#include "bell/config.hpp"
#include "bell/models.hpp"
#include "bell/report.hpp"

namespace bell {

/// Materialize the configured source behind the common draw interface.
std::unique_ptr<Source> make_source(const SourceSpec& spec);

/// Closed-form reference statistics for the configured source and settings.
ExactSection exact_section_for(const ExperimentConfig& config);

/// Generate exactly config.trials trials and assemble the full report.
///
/// Trial t's randomness derives only from (seed, t); workers own disjoint
/// residue classes t mod W and private accumulators merged in worker order,
/// so the report is identical for any worker count. When config.trials_path
/// is set, one "i j x y" line per trial is written in trial order.
RunReport run_experiment(const ExperimentConfig& config);

/// One grid point of a sweep.
struct SweepRow {
  int index = 0;
  double angle = 0.0;
  RunReport report;
};

/// Vary one singlet analyzer angle over an inclusive grid, re-running the
/// experiment per point with seed = config.seed + point index. Sources
/// without analyzer angles ignore the swept parameter and give constant
/// statistics. Requires config.sweep.
std::vector<SweepRow> run_sweep(const ExperimentConfig& config);

/// Flat CSV for the sweep rows: one line per grid point, nan for
/// conditional quantities when a setting pair went unmeasured.
std::string sweep_to_csv(const std::vector<SweepRow>& rows);

}  // namespace bell

#endif
