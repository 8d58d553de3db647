/*
 * SPDX-License-Identifier: Apache-2.0
 */
#include "tmss/config.hpp"

#include <algorithm>
#include <cmath>
#include <fstream>
#include <set>
#include <sstream>

#include <fmt/format.h>

#include "tmss/errors.hpp"

namespace tmss {

using nlohmann::json;

ConfigError::ConfigError(std::vector<Violation> violations)
    : Error([&] {
        std::string msg = "invalid configuration:";
        for (const auto& v : violations) msg += fmt::format(" [{}: {}]", v.field, v.reason);
        return msg;
      }()),
      violations_(std::move(violations)) {}

std::string_view to_string(Command c) {
  switch (c) {
    case Command::Evolve: return "evolve";
    case Command::Sweep: return "sweep";
    case Command::Extrema: return "extrema";
    case Command::Verify: return "verify";
  }
  return "?";
}

Command parse_command(std::string_view name) {
  if (name == "evolve") return Command::Evolve;
  if (name == "sweep") return Command::Sweep;
  if (name == "extrema") return Command::Extrema;
  if (name == "verify") return Command::Verify;
  throw ConfigError({{"command", fmt::format("unknown command '{}'", name)}});
}

namespace {

const json& defaults() {
  static const json d = {
      {"family", "step"},     {"r", 1.0},
      {"n_i", 0.0},           {"n_s", 0.0},
      {"kappa_i", 0.1},       {"kappa_s", 0.1},
      {"omega_k", 1.0},       {"omega_l", 1.0},
      {"tau_i", 0.2},         {"tau_s", 0.2},
      {"measure", "en"},      {"T_start", 0.0},
      {"T_stop", 0.95},       {"T_count", 64},
      {"T_grid", nullptr},    {"axis", "r"},
      {"values_start", 0.0},  {"values_stop", 3.0},
      {"values_count", 31},   {"values", nullptr},
      {"T", 0.5},             {"r_lo", 0.0},
      {"r_hi", 4.0},          {"bell_restarts", 16},
      {"bell_xtol", 1e-7},    {"bell_ftol", 1e-10},
      {"bell_max_evals", 20000}, {"quad_rel_tol", 1e-9},
      {"quad_abs_tol", 1e-12}, {"quad_max_subdivisions", 2000},
      {"verify_draws", 1000}, {"verify_tolerance", 1e-6},
      {"seed", 42},           {"format", "csv"},
      {"out", ""},            {"scenario", nullptr},
  };
  return d;
}

json preset_entry(std::string scenario, std::string measure, double r, double n, double kappa, double omega_l,
             double tau_s) {
  return {{"scenario", std::move(scenario)}, {"measure", std::move(measure)},
          {"r", r},          {"n_i", n},
          {"n_s", n},        {"kappa_i", kappa},
          {"kappa_s", kappa}, {"omega_k", 1.0},
          {"omega_l", omega_l}, {"tau_i", 0.2},
          {"tau_s", tau_s}};
}

class Resolver {
 public:
  Resolver() : merged_(defaults()) {
    for (const auto& [k, _] : merged_.items()) defaulted_.insert(k);
  }

  void apply(const json& layer, const std::string& origin) {
    if (!layer.is_object()) {
      violation(origin, "expected a JSON object of key/value pairs");
      return;
    }
    // Two-party shortcuts first, so explicit per-party keys in the same layer win.
    for (const char* shortcut : {"n", "kappa"}) {
      if (layer.contains(shortcut)) {
        set(std::string(shortcut) + "_i", layer.at(shortcut));
        set(std::string(shortcut) + "_s", layer.at(shortcut));
      }
    }
    for (const auto& [k, v] : layer.items()) {
      if (k == "preset" || k == "n" || k == "kappa") continue;
      if (!merged_.contains(k)) {
        violation(k, "unknown field");
        continue;
      }
      set(k, v);
    }
  }

  void violation(std::string field, std::string reason) { violations_.push_back({std::move(field), std::move(reason)}); }

  double number(const std::string& key) {
    const json& v = merged_.at(key);
    if (!v.is_number()) {
      violation(key, "expected a number");
      return std::nan("");
    }
    return v.get<double>();
  }

  long long integer(const std::string& key) {
    const json& v = merged_.at(key);
    if (v.is_number_integer() || v.is_number_unsigned()) return v.get<long long>();
    if (v.is_number_float() && std::floor(v.get<double>()) == v.get<double>()) return static_cast<long long>(v.get<double>());
    violation(key, "expected an integer");
    return 0;
  }

  std::string text(const std::string& key) {
    const json& v = merged_.at(key);
    if (!v.is_string()) {
      violation(key, "expected a string");
      return {};
    }
    return v.get<std::string>();
  }

  std::vector<double> numbers(const std::string& key) {
    const json& v = merged_.at(key);
    std::vector<double> out;
    if (!v.is_array()) {
      violation(key, "expected an array of numbers");
      return out;
    }
    for (const auto& x : v) {
      if (!x.is_number()) {
        violation(key, "expected an array of numbers");
        return {};
      }
      out.push_back(x.get<double>());
    }
    return out;
  }

  bool is_null(const std::string& key) const { return merged_.at(key).is_null(); }

  json& merged() { return merged_; }
  std::vector<std::string> defaulted() const { return {defaulted_.begin(), defaulted_.end()}; }
  std::vector<ConfigError::Violation>& violations() { return violations_; }

 private:
  void set(const std::string& key, const json& v) {
    merged_[key] = v;
    defaulted_.erase(key);
  }

  json merged_;
  std::set<std::string> defaulted_;
  std::vector<ConfigError::Violation> violations_;
};

json parse_override_value(const std::string& text) {
  try {
    return json::parse(text);
  } catch (const json::parse_error&) {
    return text;
  }
}

std::vector<double> linspace(double a, double b, long long n) {
  std::vector<double> out;
  if (n == 1) return {a};
  for (long long k = 0; k < n; ++k) out.push_back(k == n - 1 ? b : a + (b - a) * static_cast<double>(k) / static_cast<double>(n - 1));
  return out;
}

void check_increasing(Resolver& res, const std::string& key, const std::vector<double>& xs) {
  if (xs.empty()) {
    res.violation(key, "grid must be nonempty");
    return;
  }
  for (std::size_t i = 1; i < xs.size(); ++i) {
    if (!(xs[i] > xs[i - 1])) {
      res.violation(key, "grid must be strictly increasing");
      return;
    }
  }
}

}  // namespace

const std::map<std::string, json>& presets() {
  static const std::map<std::string, json> p = {
      {"fig2", preset_entry("tmstdf", "en", 1.0, 0.6, 0.07, 1.0, 0.2)},
      {"fig3", preset_entry("tmstdf", "en", 1.0, 0.6, 0.07, 1.02, 0.208)},
      {"fig4", preset_entry("tmstdf", "bmax", 0.4, 0.1, 0.1, 1.0, 0.2)},
      {"fig5", preset_entry("tmstdf", "bmax", 0.4, 0.1, 0.1, 1.01, 0.205)},
      {"fig6", preset_entry("tdtmsv", "en", 1.0, 0.6, 0.07, 1.0, 0.2)},
      {"fig7", preset_entry("tdtmsv", "en", 1.0, 0.6, 0.07, 1.02, 0.208)},
      {"fig8", preset_entry("tdtmsv", "bmax", 0.4, 0.1, 0.1, 1.0, 0.2)},
      {"fig9", preset_entry("tdtmsv", "bmax", 0.4, 0.1, 0.1, 1.01, 0.205)},
  };
  return p;
}

json load_config_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw ConfigError({{"--config", fmt::format("cannot open '{}'", path)}});
  try {
    return json::parse(in);
  } catch (const json::parse_error& e) {
    throw ConfigError({{"--config", fmt::format("not valid JSON: {}", e.what())}});
  }
}

RunConfig parse_config(Command command, const ConfigLayers& layers) {
  Resolver res;

  json overrides = json::object();
  for (const auto& kv : layers.overrides) {
    const auto eq = kv.find('=');
    if (eq == std::string::npos || eq == 0) {
      res.violation("--set", fmt::format("expected key=value, got '{}'", kv));
      continue;
    }
    overrides[kv.substr(0, eq)] = parse_override_value(kv.substr(eq + 1));
  }

  std::string preset;
  if (layers.file.is_object() && layers.file.contains("preset")) {
    if (layers.file.at("preset").is_string()) preset = layers.file.at("preset").get<std::string>();
    else res.violation("preset", "expected a string");
  }
  if (overrides.contains("preset") && overrides.at("preset").is_string()) preset = overrides.at("preset").get<std::string>();
  if (layers.preset) preset = *layers.preset;
  if (!preset.empty()) {
    const auto it = presets().find(preset);
    if (it == presets().end()) res.violation("preset", fmt::format("unknown preset '{}'", preset));
    else res.apply(it->second, "preset");
  }
  res.apply(layers.file, "--config");
  res.apply(overrides, "--set");
  json flags = json::object();
  if (layers.seed) flags["seed"] = *layers.seed;
  if (layers.format) flags["format"] = *layers.format;
  if (layers.out) flags["out"] = *layers.out;
  res.apply(flags, "flags");

  RunConfig cfg;
  cfg.command = command;
  cfg.preset = preset;

  auto& p = cfg.params;
  if (res.is_null("scenario")) {
    // verify draws both scenarios itself.
    if (command != Command::Verify) res.violation("scenario", "required field is missing");
  } else {
    try {
      p.scenario = parse_scenario(res.text("scenario"));
    } catch (const DomainError& e) {
      res.violation("scenario", e.what());
    }
  }
  FilterFamily family = FilterFamily::Step;
  try {
    family = parse_filter_family(res.text("family"));
  } catch (const DomainError& e) {
    res.violation("family", e.what());
  }

  p.r = res.number("r");
  p.n_i = res.number("n_i");
  p.n_s = res.number("n_s");
  p.kappa_i = res.number("kappa_i");
  p.kappa_s = res.number("kappa_s");
  p.filter_i = {family, res.number("omega_k"), res.number("tau_i")};
  p.filter_s = {family, res.number("omega_l"), res.number("tau_s")};
  if (!(p.r >= 0.0)) res.violation("r", "r must be >= 0");
  if (!(p.n_i >= 0.0)) res.violation("n_i", "n must be >= 0");
  if (!(p.n_s >= 0.0)) res.violation("n_s", "n must be >= 0");
  if (!(p.kappa_i > 0.0)) res.violation("kappa_i", "kappa must be > 0");
  if (!(p.kappa_s > 0.0)) res.violation("kappa_s", "kappa must be > 0");
  if (!std::isfinite(p.filter_i.omega)) res.violation("omega_k", "omega must be finite");
  if (!std::isfinite(p.filter_s.omega)) res.violation("omega_l", "omega must be finite");
  if (!(p.filter_i.tau > 0.0)) res.violation("tau_i", "tau must be > 0");
  if (!(p.filter_s.tau > 0.0)) res.violation("tau_s", "tau must be > 0");

  try {
    cfg.measure = parse_measure(res.text("measure"));
  } catch (const DomainError& e) {
    res.violation("measure", e.what());
  }

  if (command == Command::Evolve) {
    if (!res.is_null("T_grid")) {
      cfg.t_grid = res.numbers("T_grid");
      check_increasing(res, "T_grid", cfg.t_grid);
    } else {
      const long long n = res.integer("T_count");
      if (n < 1) res.violation("T_count", "must be >= 1");
      else cfg.t_grid = linspace(res.number("T_start"), res.number("T_stop"), n);
      check_increasing(res, "T_grid", cfg.t_grid);
    }
    for (double T : cfg.t_grid) {
      if (!(T >= 0.0 && T < 1.0)) {
        res.violation("T_grid", "normalized times must lie in [0, 1)");
        break;
      }
    }
  }

  if (command == Command::Sweep) {
    try {
      cfg.axis = parse_axis(res.text("axis"));
    } catch (const DomainError& e) {
      res.violation("axis", e.what());
    }
    if (!res.is_null("values")) {
      cfg.values = res.numbers("values");
    } else {
      const long long n = res.integer("values_count");
      if (n < 1) res.violation("values_count", "must be >= 1");
      else cfg.values = linspace(res.number("values_start"), res.number("values_stop"), n);
    }
    check_increasing(res, "values", cfg.values);
  }

  if (command == Command::Sweep || command == Command::Extrema) {
    cfg.T = res.number("T");
    if (!(cfg.T >= 0.0 && cfg.T < 1.0)) res.violation("T", "normalized time must lie in [0, 1)");
  }
  if (command == Command::Extrema) {
    cfg.r_lo = res.number("r_lo");
    cfg.r_hi = res.number("r_hi");
    if (!(cfg.r_lo >= 0.0 && cfg.r_hi > cfg.r_lo)) res.violation("r_hi", "r search interval must satisfy 0 <= r_lo < r_hi");
  }

  cfg.bell.n_restarts = static_cast<int>(res.integer("bell_restarts"));
  cfg.bell.xtol = res.number("bell_xtol");
  cfg.bell.ftol = res.number("bell_ftol");
  cfg.bell.max_evals = static_cast<int>(res.integer("bell_max_evals"));
  if (cfg.bell.n_restarts < 0) res.violation("bell_restarts", "must be >= 0");
  if (!(cfg.bell.xtol > 0.0)) res.violation("bell_xtol", "tolerance must be > 0");
  if (!(cfg.bell.ftol > 0.0)) res.violation("bell_ftol", "tolerance must be > 0");
  if (cfg.bell.max_evals < 1) res.violation("bell_max_evals", "must be >= 1");

  cfg.quadrature.rel_tol = res.number("quad_rel_tol");
  cfg.quadrature.abs_tol = res.number("quad_abs_tol");
  cfg.quadrature.max_subdivisions = static_cast<int>(res.integer("quad_max_subdivisions"));
  if (!(cfg.quadrature.rel_tol > 0.0)) res.violation("quad_rel_tol", "tolerance must be > 0");
  if (!(cfg.quadrature.abs_tol > 0.0)) res.violation("quad_abs_tol", "tolerance must be > 0");
  if (cfg.quadrature.max_subdivisions < 1) res.violation("quad_max_subdivisions", "must be >= 1");

  cfg.verify_draws = static_cast<int>(res.integer("verify_draws"));
  cfg.verify_tolerance = res.number("verify_tolerance");
  if (cfg.verify_draws < 1) res.violation("verify_draws", "must be >= 1");
  if (!(cfg.verify_tolerance > 0.0)) res.violation("verify_tolerance", "tolerance must be > 0");

  const json& seed = res.merged().at("seed");
  if (seed.is_number_unsigned() || (seed.is_number_integer() && seed.get<long long>() >= 0)) {
    cfg.seed = seed.get<std::uint64_t>();
  } else {
    res.violation("seed", "expected a non-negative integer");
  }
  cfg.bell.seed = cfg.seed;

  const std::string format = res.text("format");
  if (format == "csv") cfg.format = OutputFormat::Csv;
  else if (format == "json") cfg.format = OutputFormat::Json;
  else res.violation("format", "must be csv or json");
  cfg.out_path = res.text("out");

  if (!res.violations().empty()) throw ConfigError(std::move(res.violations()));

  cfg.resolved = res.merged();
  // The destination is not part of the result; leaving it out keeps outputs
  // written to different paths byte-identical.
  cfg.resolved.erase("out");
  if (!preset.empty()) cfg.resolved["preset"] = preset;
  cfg.defaulted = res.defaulted();
  std::erase(cfg.defaulted, std::string("out"));
  return cfg;
}

}  // namespace tmss
