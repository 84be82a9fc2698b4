#include "bell/report.hpp"

#include "bell/format.hpp"

namespace bell {

namespace {

// The document layout is fixed, so the writer is plain string assembly;
// a JSON library would not give us control over float formatting, and the
// golden-file tests need every byte pinned down.

std::string json_table(const Table2x2& t) {
  return "[[" + format_double17(t(1, 1)) + "," + format_double17(t(1, 2)) + "],[" +
         format_double17(t(2, 1)) + "," + format_double17(t(2, 2)) + "]]";
}

std::string json_bool(bool v) { return v ? "true" : "false"; }

std::string json_bound_check(const BoundCheck& check) {
  std::string out = "{";
  out += "\"value\":" + format_double17(check.value);
  out += ",\"bound\":" + format_double17(check.bound);
  out += ",\"bound_applicable\":" + json_bool(check.bound_applicable);
  out += ",\"std_error\":" + format_double17(check.std_error);
  out += ",\"slack\":" + format_double17(check.slack);
  out += ",\"violated\":" + json_bool(check.violated);
  out += "}";
  return out;
}

std::string json_optional_check(const std::optional<BoundCheck>& check) {
  return check ? json_bound_check(*check) : "null";
}

std::string json_source(const SourceSpec& source) {
  std::string out = "{\"kind\":\"";
  out += kind_name(kind_of(source));
  out += "\"";
  switch (kind_of(source)) {
    case SourceKind::Strategy: {
      const auto& s = std::get<DeterministicStrategy>(source);
      out += ",\"signs\":[" + std::to_string(s.a1()) + "," + std::to_string(s.a2()) + "," +
             std::to_string(s.b1()) + "," + std::to_string(s.b2()) + "]";
      break;
    }
    case SourceKind::Mixture: {
      const auto& m = std::get<MixtureModel>(source);
      out += ",\"weights\":[";
      bool first = true;
      for (const MixtureModel::Component& c : m.components()) {
        if (!first) out += ",";
        first = false;
        out += "\"" + to_string(c.weight) + "\"";
      }
      out += "]";
      break;
    }
    case SourceKind::Sphere: {
      const auto& m = std::get<BellSphereModel>(source);
      out += ",\"axes\":[";
      bool first = true;
      for (const Vec3& axis : {m.axis(Side::A, 1), m.axis(Side::A, 2), m.axis(Side::B, 1),
                               m.axis(Side::B, 2)}) {
        if (!first) out += ",";
        first = false;
        out += "[" + format_double17(axis.x) + "," + format_double17(axis.y) + "," +
               format_double17(axis.z) + "]";
      }
      out += "]";
      break;
    }
    case SourceKind::Singlet: {
      const auto& s = std::get<SingletSampler>(source);
      out += ",\"angles\":[" + format_double17(s.a_angle(1)) + "," +
             format_double17(s.a_angle(2)) + "," + format_double17(s.b_angle(1)) + "," +
             format_double17(s.b_angle(2)) + "]";
      break;
    }
  }
  out += "}";
  return out;
}

std::string json_config(const ExperimentConfig& config) {
  std::string out = "{";
  out += "\"source\":" + json_source(config.source);
  const bool uniform = config.settings.table() == uniform_settings().table();
  out += ",\"settings\":{\"mode\":\"";
  out += uniform ? "uniform" : "explicit";
  out += "\",\"table\":" + json_table(config.settings.table()) + "}";
  out += ",\"run\":{\"trials\":" + std::to_string(config.trials) +
         ",\"seed\":" + std::to_string(config.seed) +
         ",\"guard_k\":" + format_double17(config.guard_k) + "}";
  out += "}";
  return out;
}

std::string json_correlation(const CorrelationTable& table) {
  return "{\"values\":" + json_table(table.values) +
         ",\"standard_errors\":" + json_table(table.standard_errors) + "}";
}

}  // namespace

std::string report_to_json(const RunReport& report) {
  std::string out = "{\n";
  out += "\"config\":" + json_config(report.config) + ",\n";
  out += "\"frequencies\":" + json_table(report.frequencies) + ",\n";
  out += "\"absolute\":" + json_correlation(report.absolute) + ",\n";

  out += "\"conditional\":";
  if (report.conditional) {
    out += "{\"available\":true,\"values\":" + json_table(report.conditional->values) +
           ",\"standard_errors\":" + json_table(report.conditional->standard_errors) + "}";
  } else {
    out += "{\"available\":false,\"missing_cells\":[";
    bool first = true;
    for (const SettingPair& cell : report.missing_cells) {
      if (!first) out += ",";
      first = false;
      out += "[" + std::to_string(cell.a) + "," + std::to_string(cell.b) + "]";
    }
    out += "]}";
  }
  out += ",\n";

  out += "\"chsh\":{";
  out += "\"conditional\":" + json_optional_check(report.chsh.conditional);
  out += ",\"absolute\":" + json_bound_check(report.chsh.absolute);
  out += ",\"generalized\":" + json_optional_check(report.chsh.generalized);
  out += ",\"weak_absolute\":" + json_bound_check(report.chsh.weak_absolute);
  out += ",\"weak_bellian_8\":" + json_optional_check(report.chsh.weak_bellian_8);
  out += ",\"weak_bellian_4\":" + json_optional_check(report.chsh.weak_bellian_4);
  out += ",\"intermediate\":";
  if (report.chsh.intermediate) {
    const IntermediateBoundWitness& w = *report.chsh.intermediate;
    out += "{\"lhs\":" + format_double17(w.lhs) + ",\"rhs\":" + format_double17(w.rhs) +
           ",\"margin\":" + format_double17(w.margin) + ",\"holds\":" + json_bool(w.holds) + "}";
  } else {
    out += "null";
  }
  out += "},\n";

  if (report.exact) {
    out += "\"exact\":{\"conditional\":" + json_table(report.exact->conditional) +
           ",\"chsh_conditional\":" + format_double17(report.exact->chsh_conditional) +
           ",\"chsh_absolute\":" +
           (report.exact->chsh_absolute ? format_double17(*report.exact->chsh_absolute)
                                        : std::string("null")) +
           "},\n";
  }

  out += "\"identity_residual\":" + format_double17(report.identity_residual) + ",\n";
  out += "\"timing\":{\"trials\":" + std::to_string(report.trials) + "}\n";
  out += "}\n";
  return out;
}

}  // namespace bell
