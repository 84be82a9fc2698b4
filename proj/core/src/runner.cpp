#include "bell/runner.hpp"

#include <chrono>
#include <cmath>
#include <fstream>
#include <thread>

#include "bell/errors.hpp"
#include "bell/format.hpp"
#include "bell/oracle.hpp"

namespace bell {

namespace {

template <class... Ts>
struct Overloaded : Ts... {
  using Ts::operator()...;
};
template <class... Ts>
Overloaded(Ts...) -> Overloaded<Ts...>;

void write_trial_dump(const std::string& path, const std::vector<TrialOutcome>& trials) {
  std::ofstream out(path);
  if (!out) throw Error("cannot open trial dump file '" + path + "'");
  std::string buffer;
  buffer.reserve(trials.size() * 10);
  for (const TrialOutcome& t : trials) {
    buffer += std::to_string(t.settings.a);
    buffer += ' ';
    buffer += std::to_string(t.settings.b);
    buffer += ' ';
    buffer += std::to_string(t.x);
    buffer += ' ';
    buffer += std::to_string(t.y);
    buffer += '\n';
  }
  out << buffer;
  if (!out) throw Error("failed writing trial dump file '" + path + "'");
}

SourceSpec with_swept_angle(const SourceSpec& source, SweepAngle which, double value) {
  if (kind_of(source) != SourceKind::Singlet) return source;
  const auto& s = std::get<SingletSampler>(source);
  double a1 = s.a_angle(1), a2 = s.a_angle(2), b1 = s.b_angle(1), b2 = s.b_angle(2);
  switch (which) {
    case SweepAngle::A1: a1 = value; break;
    case SweepAngle::A2: a2 = value; break;
    case SweepAngle::B1: b1 = value; break;
    case SweepAngle::B2: b2 = value; break;
  }
  return SingletSampler(a1, a2, b1, b2);
}

}  // namespace

std::unique_ptr<Source> make_source(const SourceSpec& spec) {
  return std::visit(
      Overloaded{
          [](const SingletSampler& s) -> std::unique_ptr<Source> {
            return std::make_unique<SingletSource>(s);
          },
          [](const auto& model) -> std::unique_ptr<Source> {
            using Model = std::decay_t<decltype(model)>;
            return std::make_unique<LocalModelSource>(std::make_shared<Model>(model));
          },
      },
      spec);
}

ExactSection exact_section_for(const ExperimentConfig& config) {
  ExactSection section;
  const bool uniform = config.settings.table() == uniform_settings().table();
  std::visit(Overloaded{
                 [&](const DeterministicStrategy& s) {
                   const ExactCorrelationTable exact = exact_correlations(s);
                   section.conditional = exact.to_table();
                   section.chsh_conditional = to_double(exact_chsh_value(exact));
                   if (uniform) {
                     section.chsh_absolute = to_double(exact_absolute_chsh_value(exact));
                   }
                 },
                 [&](const MixtureModel& m) {
                   const ExactCorrelationTable exact = exact_correlations(m);
                   section.conditional = exact.to_table();
                   section.chsh_conditional = to_double(exact_chsh_value(exact));
                   if (uniform) {
                     section.chsh_absolute = to_double(exact_absolute_chsh_value(exact));
                   }
                 },
                 [&](const BellSphereModel& m) {
                   section.conditional = sphere_model_exact_table(m);
                   section.chsh_conditional = std::abs(chsh_combination(section.conditional));
                   if (uniform) section.chsh_absolute = section.chsh_conditional / 4.0;
                 },
                 [&](const SingletSampler& s) {
                   section.conditional = exact_quantum_table(s);
                   section.chsh_conditional = std::abs(chsh_combination(section.conditional));
                   if (uniform) section.chsh_absolute = section.chsh_conditional / 4.0;
                 },
             },
             config.source);
  return section;
}

RunReport run_experiment(const ExperimentConfig& config) {
  const auto start_time = std::chrono::steady_clock::now();
  if (config.trials == 0) throw ConfigError("run.trials must be >= 1");

  const std::unique_ptr<Source> source = make_source(config.source);
  const RandomSource root(config.seed);
  const std::uint64_t total_trials = config.trials;
  const int workers = config.workers < 1 ? 1 : config.workers;

  const bool dumping = !config.trials_path.empty();
  std::vector<TrialOutcome> dump_buffer(dumping ? total_trials : 0);

  std::vector<CorrelationAccumulator> partials(static_cast<std::size_t>(workers));
  const auto worker_body = [&](int worker_index) {
    CorrelationAccumulator local;
    for (std::uint64_t t = static_cast<std::uint64_t>(worker_index); t < total_trials;
         t += static_cast<std::uint64_t>(workers)) {
      RandomSource rng = root.split(t);
      TrialOutcome trial;
      trial.settings = sample_settings(config.settings, rng);
      const auto [x, y] = source->draw(trial.settings, rng);
      trial.x = x;
      trial.y = y;
      local.record(trial);
      if (dumping) dump_buffer[t] = trial;
    }
    partials[static_cast<std::size_t>(worker_index)] = local;
  };

  if (workers == 1) {
    worker_body(0);
  } else {
    std::vector<std::thread> pool;
    pool.reserve(static_cast<std::size_t>(workers));
    for (int w = 0; w < workers; ++w) pool.emplace_back(worker_body, w);
    for (std::thread& t : pool) t.join();
  }

  CorrelationAccumulator accumulator;
  for (const CorrelationAccumulator& partial : partials) {
    accumulator = merge(accumulator, partial);
  }

  if (dumping) write_trial_dump(config.trials_path, dump_buffer);

  RunReport report;
  report.config = config;
  report.trials = total_trials;
  report.frequencies = accumulator.setting_frequency();
  report.absolute = accumulator.absolute_correlation();
  for (const SettingPair& cell : kCellOrder) {
    if (accumulator.count(cell.a, cell.b) == 0) report.missing_cells.push_back(cell);
  }
  if (report.missing_cells.empty()) {
    report.conditional = accumulator.conditional_correlation();
  }
  report.chsh = evaluate_chsh(report.absolute, report.conditional, report.frequencies,
                              config.guard_k);
  report.exact = exact_section_for(config);
  report.identity_residual = identity_residual(accumulator);
  report.elapsed_seconds =
      std::chrono::duration<double>(std::chrono::steady_clock::now() - start_time).count();
  return report;
}

std::vector<SweepRow> run_sweep(const ExperimentConfig& config) {
  if (!config.sweep) {
    throw ConfigError("sweep.* keys are required for a sweep");
  }
  const SweepSpec& sweep = *config.sweep;
  std::vector<SweepRow> rows;
  rows.reserve(static_cast<std::size_t>(sweep.steps));
  for (int k = 0; k < sweep.steps; ++k) {
    const double angle =
        sweep.steps == 1
            ? sweep.start
            : sweep.start + (sweep.stop - sweep.start) * k / (sweep.steps - 1);
    ExperimentConfig point = config;
    point.sweep.reset();
    point.trials_path.clear();
    point.source = with_swept_angle(config.source, sweep.angle, angle);
    point.seed = config.seed + static_cast<std::uint64_t>(k);
    SweepRow row;
    row.index = k;
    row.angle = angle;
    row.report = run_experiment(point);
    rows.push_back(std::move(row));
  }
  return rows;
}

std::string sweep_to_csv(const std::vector<SweepRow>& rows) {
  std::string out =
      "index,angle,s_conditional,se_conditional,violated_conditional,"
      "s_absolute,se_absolute,violated_absolute,"
      "s_generalized,se_generalized,violated_generalized\n";
  const auto check_fields = [](const std::optional<BoundCheck>& check) {
    if (!check) return std::string("nan,nan,0");
    return format_double17(check->value) + "," + format_double17(check->std_error) + "," +
           (check->violated ? "1" : "0");
  };
  for (const SweepRow& row : rows) {
    out += std::to_string(row.index) + "," + format_double17(row.angle);
    out += "," + check_fields(row.report.chsh.conditional);
    out += "," + check_fields(row.report.chsh.absolute);
    out += "," + check_fields(row.report.chsh.generalized);
    out += "\n";
  }
  return out;
}

}  // namespace bell
