/*
 * SPDX-License-Identifier: Apache-2.0
 */
#include <doctest.h>

#include <algorithm>
#include <string>

#include "tmss/config.hpp"
#include "tmss/errors.hpp"

using namespace tmss;
using nlohmann::json;

namespace {

bool names(const ConfigError& e, const std::string& field, const std::string& reason = {}) {
  return std::any_of(e.violations().begin(), e.violations().end(), [&](const auto& v) {
    return v.field == field && (reason.empty() || v.reason.find(reason) != std::string::npos);
  });
}

ConfigError expect_error(Command c, const ConfigLayers& layers) {
  try {
    parse_config(c, layers);
  } catch (const ConfigError& e) {
    return e;
  }
  FAIL("expected ConfigError");
  return ConfigError({});
}

}  // namespace

TEST_CASE("fig2 preset") {
  ConfigLayers l;
  l.preset = "fig2";
  const auto cfg = parse_config(Command::Evolve, l);
  const auto& p = cfg.params;
  CHECK(p.scenario == Scenario::TMSTDF);
  CHECK(p.r == 1.0);
  CHECK((p.n_i == 0.6 && p.n_s == 0.6));
  CHECK((p.kappa_i == 0.07 && p.kappa_s == 0.07));
  CHECK(p.filter_i.omega == p.filter_s.omega);
  CHECK((p.filter_i.tau == 0.2 && p.filter_s.tau == 0.2));
  CHECK(p.filter_i.family == FilterFamily::Step);
  CHECK(cfg.measure == Measure::EN);
  CHECK(cfg.t_grid.size() == 64);
  CHECK(std::is_sorted(cfg.t_grid.begin(), cfg.t_grid.end()));
  CHECK(cfg.resolved.at("preset") == "fig2");
}

TEST_CASE("every preset resolves") {
  for (const auto& [name, _] : presets()) {
    ConfigLayers l;
    l.preset = name;
    CHECK_NOTHROW(parse_config(Command::Evolve, l));
  }
  CHECK(presets().size() == 8);
  ConfigLayers l;
  l.preset = "fig7";
  const auto cfg = parse_config(Command::Sweep, l);
  CHECK(cfg.params.scenario == Scenario::TDTMSV);
  CHECK(cfg.params.filter_s.omega == 1.02);
  CHECK(cfg.params.filter_s.tau == 0.208);
}

TEST_CASE("missing scenario is named") {
  ConfigLayers l;
  l.overrides = {"r=1"};
  CHECK(names(expect_error(Command::Evolve, l), "scenario"));
  // verify draws both scenarios and needs none.
  CHECK_NOTHROW(parse_config(Command::Verify, l));
}

TEST_CASE("negative window") {
  ConfigLayers l;
  l.preset = "fig2";
  l.overrides = {"tau_s=-1"};
  const auto e = expect_error(Command::Evolve, l);
  CHECK(names(e, "tau_s", "tau must be > 0"));
  CHECK(std::string(e.what()).find("tau must be > 0") != std::string::npos);
}

TEST_CASE("all violations are reported together") {
  ConfigLayers l;
  l.file = {{"scenario", "sideways"}, {"r", -1}, {"kappa", 0}, {"bogus", 3}, {"format", "xml"}};
  l.overrides = {"T_grid=[0.5, 0.2]", "no-equals-sign"};
  const auto e = expect_error(Command::Evolve, l);
  CHECK(names(e, "scenario"));
  CHECK(names(e, "r"));
  CHECK(names(e, "kappa_i"));
  CHECK(names(e, "kappa_s"));
  CHECK(names(e, "bogus", "unknown"));
  CHECK(names(e, "format"));
  CHECK(names(e, "T_grid", "increasing"));
  CHECK(names(e, "--set"));
  CHECK(e.violations().size() >= 8);
}

TEST_CASE("layer precedence") {
  ConfigLayers l;
  l.preset = "fig2";
  l.file = {{"r", 0.5}, {"seed", 3}, {"n", 0.2}, {"n_s", 0.9}};
  CHECK(parse_config(Command::Evolve, l).params.r == 0.5);
  CHECK(parse_config(Command::Evolve, l).params.n_i == 0.2);
  CHECK(parse_config(Command::Evolve, l).params.n_s == 0.9);
  l.overrides = {"r=0.75", "seed=9", "format=json"};
  auto cfg = parse_config(Command::Evolve, l);
  CHECK(cfg.params.r == 0.75);
  CHECK(cfg.seed == 9);
  CHECK(cfg.bell.seed == 9);
  CHECK(cfg.format == OutputFormat::Json);
  l.seed = 11;
  l.format = "csv";
  cfg = parse_config(Command::Evolve, l);
  CHECK(cfg.seed == 11);
  CHECK(cfg.format == OutputFormat::Csv);
}

TEST_CASE("defaulted keys are recorded") {
  ConfigLayers l;
  l.preset = "fig3";
  l.overrides = {"T_count=5"};
  const auto cfg = parse_config(Command::Evolve, l);
  auto has = [&](const std::string& k) {
    return std::find(cfg.defaulted.begin(), cfg.defaulted.end(), k) != cfg.defaulted.end();
  };
  CHECK(has("seed"));
  CHECK(has("family"));
  CHECK(has("T_start"));
  CHECK_FALSE(has("T_count"));
  CHECK_FALSE(has("r"));
  CHECK_FALSE(has("scenario"));
  CHECK(cfg.resolved.contains("seed"));
  CHECK(cfg.t_grid.size() == 5);
}

TEST_CASE("override values are JSON, falling back to text") {
  ConfigLayers l;
  l.overrides = {"scenario=tdtmsv", "family=exponential", "values=[0.1,0.2,0.4]", "axis=n", "T=0.25"};
  const auto cfg = parse_config(Command::Sweep, l);
  CHECK(cfg.params.scenario == Scenario::TDTMSV);
  CHECK(cfg.params.filter_s.family == FilterFamily::Exponential);
  CHECK(cfg.axis == SweepAxis::N);
  CHECK(cfg.values == std::vector<double>{0.1, 0.2, 0.4});
  CHECK(cfg.T == 0.25);
}

TEST_CASE("type and range errors") {
  ConfigLayers l;
  l.preset = "fig4";
  l.overrides = {"r=\"big\"", "T_grid=[0.2, 1.0]", "bell_restarts=2.5", "seed=-4"};
  const auto e = expect_error(Command::Evolve, l);
  CHECK(names(e, "r", "number"));
  CHECK(names(e, "T_grid", "[0, 1)"));
  CHECK(names(e, "bell_restarts", "integer"));
  CHECK(names(e, "seed"));
  ConfigLayers x;
  x.preset = "fig10";
  CHECK(names(expect_error(Command::Evolve, x), "preset"));
}

TEST_CASE("commands and files") {
  CHECK(parse_command("extrema") == Command::Extrema);
  CHECK_THROWS_AS(parse_command("plot"), ConfigError);
  CHECK_THROWS_AS(load_config_file("/nonexistent/config.json"), ConfigError);
}
