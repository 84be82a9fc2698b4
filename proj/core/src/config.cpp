#include "bell/config.hpp"

#include <cctype>
#include <charconv>
#include <cmath>
#include <cstdlib>
#include <map>
#include <sstream>
#include <vector>

#include "bell/errors.hpp"
#include "bell/format.hpp"

namespace bell {

namespace {

const std::vector<std::string_view> kKnownKeys = {
    "source.kind",  "source.signs", "source.weights", "source.angles", "source.axes",
    "settings.mode", "settings.table", "run.trials",  "run.seed",      "run.workers",
    "run.guard_k",  "out.report",   "out.trials",     "sweep.angle",   "sweep.start",
    "sweep.stop",   "sweep.steps"};

std::string_view trim(std::string_view s) {
  while (!s.empty() && std::isspace(static_cast<unsigned char>(s.front()))) s.remove_prefix(1);
  while (!s.empty() && std::isspace(static_cast<unsigned char>(s.back()))) s.remove_suffix(1);
  return s;
}

std::vector<std::string> split_tokens(std::string_view value) {
  std::vector<std::string> tokens;
  std::istringstream stream{std::string(value)};
  std::string token;
  while (stream >> token) tokens.push_back(token);
  return tokens;
}

/// Raw key -> value lines in document order.
std::map<std::string, std::string, std::less<>> parse_lines(std::string_view text) {
  std::map<std::string, std::string, std::less<>> entries;
  std::size_t line_number = 0;
  std::size_t position = 0;
  while (position <= text.size()) {
    const std::size_t end = text.find('\n', position);
    std::string_view line =
        text.substr(position, end == std::string_view::npos ? text.size() - position
                                                            : end - position);
    position = end == std::string_view::npos ? text.size() + 1 : end + 1;
    ++line_number;
    if (const std::size_t hash = line.find('#'); hash != std::string_view::npos) {
      line = line.substr(0, hash);
    }
    line = trim(line);
    if (line.empty()) continue;
    const std::size_t eq = line.find('=');
    if (eq == std::string_view::npos) {
      throw ConfigError("line " + std::to_string(line_number) +
                        ": expected 'key = value', got '" + std::string(line) + "'");
    }
    const std::string key{trim(line.substr(0, eq))};
    const std::string value{trim(line.substr(eq + 1))};
    bool known = false;
    for (std::string_view k : kKnownKeys) known = known || k == key;
    if (!known) throw ConfigError("unknown key '" + key + "'");
    if (value.empty()) throw ConfigError("key '" + key + "' has no value");
    if (!entries.emplace(key, value).second) {
      throw ConfigError("duplicate key '" + key + "'");
    }
  }
  return entries;
}

std::uint64_t to_u64(const std::string& key, const std::string& value) {
  std::uint64_t out = 0;
  const auto [ptr, ec] = std::from_chars(value.data(), value.data() + value.size(), out);
  if (ec != std::errc{} || ptr != value.data() + value.size()) {
    throw ConfigError("key '" + key + "': expected an unsigned integer, got '" + value + "'");
  }
  return out;
}

int to_positive_int(const std::string& key, const std::string& value) {
  int out = 0;
  const auto [ptr, ec] = std::from_chars(value.data(), value.data() + value.size(), out);
  if (ec != std::errc{} || ptr != value.data() + value.size() || out < 1) {
    throw ConfigError("key '" + key + "': expected a positive integer, got '" + value + "'");
  }
  return out;
}

double to_double(const std::string& key, const std::string& token) {
  try {
    std::size_t consumed = 0;
    const double out = std::stod(token, &consumed);
    if (consumed != token.size()) throw std::invalid_argument(token);
    return out;
  } catch (const std::exception&) {
    throw ConfigError("key '" + key + "': expected a number, got '" + token + "'");
  }
}

std::vector<double> to_doubles(const std::string& key, const std::string& value,
                               std::size_t expected) {
  const std::vector<std::string> tokens = split_tokens(value);
  if (tokens.size() != expected) {
    throw ConfigError("key '" + key + "': expected " + std::to_string(expected) +
                      " numbers, got " + std::to_string(tokens.size()));
  }
  std::vector<double> out;
  out.reserve(expected);
  for (const std::string& token : tokens) out.push_back(to_double(key, token));
  return out;
}

int to_sign(const std::string& key, const std::string& token) {
  if (token == "+1" || token == "1") return +1;
  if (token == "-1") return -1;
  throw ConfigError("key '" + key + "': expected +1 or -1, got '" + token + "'");
}

using Entries = std::map<std::string, std::string, std::less<>>;

const std::string* find(const Entries& entries, std::string_view key) {
  const auto it = entries.find(key);
  return it == entries.end() ? nullptr : &it->second;
}

const std::string& require(const Entries& entries, const std::string& key,
                           const std::string& reason) {
  if (const std::string* value = find(entries, key)) return *value;
  throw ConfigError("key '" + key + "' is required " + reason);
}

SourceSpec parse_source(const Entries& entries) {
  const std::string& kind = require(entries, "source.kind", "to choose a source");
  const auto forbid = [&](const char* key) {
    if (find(entries, key)) {
      throw ConfigError("key '" + std::string(key) + "' does not apply to source.kind = " + kind);
    }
  };
  if (kind == "strategy") {
    forbid("source.weights");
    forbid("source.angles");
    forbid("source.axes");
    const std::vector<std::string> tokens =
        split_tokens(require(entries, "source.signs", "for a strategy source"));
    if (tokens.size() != 4) {
      throw ConfigError("key 'source.signs': expected 4 signs (a1 a2 b1 b2)");
    }
    return DeterministicStrategy(to_sign("source.signs", tokens[0]),
                                 to_sign("source.signs", tokens[1]),
                                 to_sign("source.signs", tokens[2]),
                                 to_sign("source.signs", tokens[3]));
  }
  if (kind == "mixture") {
    forbid("source.signs");
    forbid("source.angles");
    forbid("source.axes");
    const std::vector<std::string> tokens =
        split_tokens(require(entries, "source.weights", "for a mixture source"));
    if (tokens.size() != 16) {
      throw ConfigError(
          "key 'source.weights': expected 16 weights, one per deterministic strategy "
          "in enumeration order, got " +
          std::to_string(tokens.size()));
    }
    const std::vector<DeterministicStrategy> strategies = enumerate_deterministic();
    std::vector<MixtureModel::Component> components;
    components.reserve(16);
    for (std::size_t k = 0; k < 16; ++k) {
      components.push_back({strategies[k], parse_weight(tokens[k])});
    }
    return MixtureModel(std::move(components));
  }
  if (kind == "sphere") {
    forbid("source.signs");
    forbid("source.weights");
    const std::string* angles = find(entries, "source.angles");
    const std::string* axes = find(entries, "source.axes");
    if (angles && axes) {
      throw ConfigError("give either 'source.angles' or 'source.axes' for a sphere source, not both");
    }
    if (axes) {
      const std::vector<double> v = to_doubles("source.axes", *axes, 12);
      return BellSphereModel(Vec3{v[0], v[1], v[2]}, Vec3{v[3], v[4], v[5]},
                             Vec3{v[6], v[7], v[8]}, Vec3{v[9], v[10], v[11]});
    }
    const std::vector<double> v = to_doubles(
        "source.angles", require(entries, "source.angles", "for a sphere source"), 4);
    return BellSphereModel::from_planar_angles(v[0], v[1], v[2], v[3]);
  }
  if (kind == "singlet") {
    forbid("source.signs");
    forbid("source.weights");
    forbid("source.axes");
    const std::vector<double> v = to_doubles(
        "source.angles", require(entries, "source.angles", "for a singlet source"), 4);
    return SingletSampler(v[0], v[1], v[2], v[3]);
  }
  throw ConfigError("unknown model kind '" + kind + "' (expected strategy, mixture, sphere or singlet)");
}

SettingDistribution parse_settings(const Entries& entries) {
  const std::string* mode = find(entries, "settings.mode");
  const std::string* table = find(entries, "settings.table");
  if (!mode || *mode == "uniform") {
    if (table) throw ConfigError("key 'settings.table' requires settings.mode = explicit");
    return uniform_settings();
  }
  if (*mode == "explicit") {
    const std::vector<double> v = to_doubles(
        "settings.table", require(entries, "settings.table", "for explicit settings"), 4);
    return SettingDistribution(make_table(v[0], v[1], v[2], v[3]));
  }
  throw ConfigError("key 'settings.mode': expected uniform or explicit, got '" + *mode + "'");
}

std::optional<SweepSpec> parse_sweep(const Entries& entries) {
  const std::string* angle = find(entries, "sweep.angle");
  const std::string* start = find(entries, "sweep.start");
  const std::string* stop = find(entries, "sweep.stop");
  const std::string* steps = find(entries, "sweep.steps");
  if (!angle && !start && !stop && !steps) return std::nullopt;
  SweepSpec sweep;
  const std::string& name = require(entries, "sweep.angle", "for a sweep");
  if (name == "a1") sweep.angle = SweepAngle::A1;
  else if (name == "a2") sweep.angle = SweepAngle::A2;
  else if (name == "b1") sweep.angle = SweepAngle::B1;
  else if (name == "b2") sweep.angle = SweepAngle::B2;
  else throw ConfigError("key 'sweep.angle': expected a1, a2, b1 or b2, got '" + name + "'");
  sweep.start = to_double("sweep.start", require(entries, "sweep.start", "for a sweep"));
  sweep.stop = to_double("sweep.stop", require(entries, "sweep.stop", "for a sweep"));
  sweep.steps = to_positive_int("sweep.steps", require(entries, "sweep.steps", "for a sweep"));
  return sweep;
}

std::uint64_t seed_from_environment() {
  if (const char* env = std::getenv("BELLLAB_SEED")) {
    try {
      return to_u64("BELLLAB_SEED", env);
    } catch (const ConfigError&) {
      throw ConfigError(std::string("environment variable BELLLAB_SEED is not an unsigned "
                                    "integer: '") +
                        env + "'");
    }
  }
  return 0;
}

ExperimentConfig parse_common(const Entries& entries, bool require_run) {
  ExperimentConfig config;
  config.source = parse_source(entries);
  config.settings = parse_settings(entries);
  config.sweep = parse_sweep(entries);
  if (const std::string* trials = find(entries, "run.trials")) {
    config.trials = to_u64("run.trials", *trials);
    if (config.trials == 0) throw ConfigError("key 'run.trials' must be >= 1");
  } else if (require_run) {
    throw ConfigError("key 'run.trials' is required");
  }
  if (const std::string* seed = find(entries, "run.seed")) {
    config.seed = to_u64("run.seed", *seed);
  } else {
    config.seed = seed_from_environment();
  }
  if (const std::string* workers = find(entries, "run.workers")) {
    config.workers = to_positive_int("run.workers", *workers);
  }
  if (const std::string* guard = find(entries, "run.guard_k")) {
    config.guard_k = to_double("run.guard_k", *guard);
    if (!(config.guard_k > 0.0)) throw ConfigError("key 'run.guard_k' must be positive");
  }
  if (const std::string* report = find(entries, "out.report")) config.report_path = *report;
  if (const std::string* trials_out = find(entries, "out.trials")) config.trials_path = *trials_out;
  return config;
}

}  // namespace

Rational parse_weight(const std::string& token) {
  try {
    if (const std::size_t slash = token.find('/'); slash != std::string::npos) {
      const BigInt numerator(token.substr(0, slash));
      const BigInt denominator(token.substr(slash + 1));
      if (denominator == 0) throw ConfigError("weight '" + token + "' divides by zero");
      return Rational(numerator, denominator);
    }
    std::size_t consumed = 0;
    const double value = std::stod(token, &consumed);
    if (consumed != token.size()) throw std::invalid_argument(token);
    // Decimal weights are snapped to a millionth, keeping them exactly
    // representable for the oracle.
    return Rational(BigInt(std::llround(value * 1e6)), BigInt(1000000));
  } catch (const ConfigError&) {
    throw;
  } catch (const std::exception&) {
    throw ConfigError("weight '" + token + "' is neither a rational n/d nor a decimal");
  }
}

SourceKind kind_of(const SourceSpec& source) {
  return std::visit(
      [](const auto& model) {
        using T = std::decay_t<decltype(model)>;
        if constexpr (std::is_same_v<T, DeterministicStrategy>) return SourceKind::Strategy;
        else if constexpr (std::is_same_v<T, MixtureModel>) return SourceKind::Mixture;
        else if constexpr (std::is_same_v<T, BellSphereModel>) return SourceKind::Sphere;
        else return SourceKind::Singlet;
      },
      source);
}

std::string_view kind_name(SourceKind kind) {
  switch (kind) {
    case SourceKind::Strategy: return "strategy";
    case SourceKind::Mixture: return "mixture";
    case SourceKind::Sphere: return "sphere";
    case SourceKind::Singlet: return "singlet";
  }
  return "unknown";
}

std::string_view sweep_angle_name(SweepAngle angle) {
  switch (angle) {
    case SweepAngle::A1: return "a1";
    case SweepAngle::A2: return "a2";
    case SweepAngle::B1: return "b1";
    case SweepAngle::B2: return "b2";
  }
  return "unknown";
}

bool same_experiment(const ExperimentConfig& a, const ExperimentConfig& b) {
  return a.source == b.source && a.settings.table() == b.settings.table() &&
         a.trials == b.trials && a.seed == b.seed && a.guard_k == b.guard_k &&
         a.sweep == b.sweep;
}

ExperimentConfig parse_config(std::string_view text) {
  return parse_common(parse_lines(text), /*require_run=*/true);
}

ExperimentConfig parse_model_spec(std::string_view text) {
  return parse_common(parse_lines(text), /*require_run=*/false);
}

std::string serialize_config(const ExperimentConfig& config) {
  std::string out;
  const SourceKind kind = kind_of(config.source);
  out += "source.kind = ";
  out += kind_name(kind);
  out += '\n';
  switch (kind) {
    case SourceKind::Strategy: {
      const auto& s = std::get<DeterministicStrategy>(config.source);
      const auto sign = [](int v) { return v > 0 ? "+1" : "-1"; };
      out += std::string("source.signs = ") + sign(s.a1()) + " " + sign(s.a2()) + " " +
             sign(s.b1()) + " " + sign(s.b2()) + "\n";
      break;
    }
    case SourceKind::Mixture: {
      const auto& m = std::get<MixtureModel>(config.source);
      out += "source.weights =";
      for (const MixtureModel::Component& c : m.components()) {
        out += " " + to_string(c.weight);
      }
      out += '\n';
      break;
    }
    case SourceKind::Sphere: {
      const auto& m = std::get<BellSphereModel>(config.source);
      out += "source.axes =";
      for (const Vec3& axis : {m.axis(Side::A, 1), m.axis(Side::A, 2), m.axis(Side::B, 1),
                               m.axis(Side::B, 2)}) {
        out += " " + format_double17(axis.x) + " " + format_double17(axis.y) + " " +
               format_double17(axis.z);
      }
      out += '\n';
      break;
    }
    case SourceKind::Singlet: {
      const auto& s = std::get<SingletSampler>(config.source);
      out += "source.angles = " + format_double17(s.a_angle(1)) + " " +
             format_double17(s.a_angle(2)) + " " + format_double17(s.b_angle(1)) + " " +
             format_double17(s.b_angle(2)) + "\n";
      break;
    }
  }
  if (config.settings.table() == uniform_settings().table()) {
    out += "settings.mode = uniform\n";
  } else {
    const Table2x2& t = config.settings.table();
    out += "settings.mode = explicit\n";
    out += "settings.table = " + format_double17(t(1, 1)) + " " + format_double17(t(1, 2)) +
           " " + format_double17(t(2, 1)) + " " + format_double17(t(2, 2)) + "\n";
  }
  out += "run.trials = " + std::to_string(config.trials) + "\n";
  out += "run.seed = " + std::to_string(config.seed) + "\n";
  out += "run.guard_k = " + format_double17(config.guard_k) + "\n";
  if (config.sweep) {
    out += "sweep.angle = ";
    out += sweep_angle_name(config.sweep->angle);
    out += '\n';
    out += "sweep.start = " + format_double17(config.sweep->start) + "\n";
    out += "sweep.stop = " + format_double17(config.sweep->stop) + "\n";
    out += "sweep.steps = " + std::to_string(config.sweep->steps) + "\n";
  }
  return out;
}

}  // namespace bell
