/*
 * SPDX-License-Identifier: Apache-2.0
 */
#include <cstdint>
#include <iostream>
#include <optional>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "tmss/config.hpp"
#include "tmss/run.hpp"

int main(int argc, char** argv) {
  CLI::App app{"Filtered two-mode squeezed states under thermal decoherence", "tmss"};
  app.set_version_flag("--version", std::string(tmss::tool_version()));

  std::string command;
  std::string config_path;
  std::vector<std::string> sets;
  std::optional<std::string> out;
  std::optional<std::string> format;
  std::optional<std::uint64_t> seed;
  std::optional<std::string> preset;

  app.add_option("command", command, "evolve | sweep | extrema | verify")->required();
  app.add_option("--config", config_path, "JSON config file (flat key/value object)");
  app.add_option("--set", sets, "override one key, key=value (repeatable)");
  app.add_option("--out", out, "output path; standard output when omitted");
  app.add_option("--format", format, "csv | json");
  app.add_option("--seed", seed, "u64 seed for random draws and restarts");
  app.add_option("--preset", preset, "named parameter set fig2 ... fig9");

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::CallForVersion& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    std::cerr << "tmss: " << e.what() << "\n";
    return tmss::kExitConfig;
  }

  try {
    tmss::ConfigLayers layers;
    if (!config_path.empty()) layers.file = tmss::load_config_file(config_path);
    layers.overrides = sets;
    layers.preset = preset;
    layers.seed = seed;
    layers.format = format;
    layers.out = out;
    const tmss::RunConfig cfg = tmss::parse_config(tmss::parse_command(command), layers);
    const int code = tmss::run(cfg);
    if (code == tmss::kExitVerifyFailed) std::cerr << "tmss: verify: one or more checks failed\n";
    return code;
  } catch (const std::exception& e) {
    std::cerr << "tmss: " << e.what() << "\n";
    return tmss::exit_code_for(std::current_exception());
  }
}
