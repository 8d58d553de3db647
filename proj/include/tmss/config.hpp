/*
 * SPDX-License-Identifier: Apache-2.0
 */
#pragma once

#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include <nlohmann/json.hpp>

#include "tmss/covariance.hpp"
#include "tmss/measures.hpp"
#include "tmss/quadrature.hpp"
#include "tmss/sweeps.hpp"

namespace tmss {

enum class Command { Evolve, Sweep, Extrema, Verify };
enum class OutputFormat { Csv, Json };

std::string_view to_string(Command c);
Command parse_command(std::string_view name);

/// Fully resolved run. Built by parse_config; every field is valid.
struct RunConfig {
  Command command = Command::Evolve;
  std::string preset;
  ScenarioParams params;
  Measure measure = Measure::EN;

  std::vector<double> t_grid;  ///< evolve: normalized times
  SweepAxis axis = SweepAxis::R;
  std::vector<double> values;  ///< sweep: axis values
  double T = 0.5;              ///< sweep / extrema: normalized time
  double r_lo = 0.0;
  double r_hi = 4.0;

  BellOptimizerConfig bell;
  QuadratureConfig quadrature;
  int verify_draws = 1000;
  double verify_tolerance = 1e-6;

  std::uint64_t seed = 42;
  OutputFormat format = OutputFormat::Csv;
  std::string out_path;  ///< empty: standard output

  /// Every resolved key with its value, for output metadata.
  nlohmann::json resolved;
  /// Keys that fell back to built-in defaults.
  std::vector<std::string> defaulted;
};

/// Flat key/value sources, lowest precedence first. Later layers win.
struct ConfigLayers {
  nlohmann::json file = nlohmann::json::object();
  std::vector<std::string> overrides;  ///< "key=value" from --set
  std::optional<std::string> preset;
  std::optional<std::uint64_t> seed;
  std::optional<std::string> format;
  std::optional<std::string> out;
};

/// Resolves defaults < preset < file < --set overrides < dedicated flags and
/// validates the result. Throws ConfigError listing every violation.
RunConfig parse_config(Command command, const ConfigLayers& layers);

/// Reads a JSON config file (a flat object of the documented keys).
nlohmann::json load_config_file(const std::string& path);

/// Named parameter sets "fig2" ... "fig9", as flat key/value objects.
const std::map<std::string, nlohmann::json>& presets();

}  // namespace tmss
