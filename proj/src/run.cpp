/*
 * SPDX-License-Identifier: Apache-2.0
 */
#include "tmss/run.hpp"

#include <cmath>
#include <fstream>
#include <iostream>
#include <string_view>

#include <fmt/format.h>

#include "tmss/sweeps.hpp"
#include "tmss/verify.hpp"

#ifndef TMSS_VERSION
#define TMSS_VERSION "0.0.0"
#endif

namespace tmss {

using nlohmann::json;

std::string_view tool_version() { return TMSS_VERSION; }

namespace {

// 17 significant digits round-trips every double.
std::string num(double x) { return fmt::format("{:.17g}", x); }

// A rectangular result: column names plus rows of already formatted cells.
struct Table {
  std::vector<std::string> columns;
  std::vector<std::vector<std::string>> rows;
  json data;
};

json meta(const RunConfig& cfg) {
  return {{"tool", "tmss"},
          {"version", std::string(tool_version())},
          {"command", std::string(to_string(cfg.command))},
          {"config", cfg.resolved},
          {"defaulted", cfg.defaulted}};
}

MeasureOptions measure_options(const RunConfig& cfg) { return {cfg.bell, Execution::Parallel}; }

Table evolve(const RunConfig& cfg) {
  const SweepSeries s = time_series(cfg.params, cfg.measure, cfg.t_grid, measure_options(cfg));
  const double rate = clock_rate(cfg.params);
  const std::string m(to_string(cfg.measure));
  Table tab{{"T", "t", m}, {}, json::array()};
  for (const auto& p : s.points) {
    const double t = normalized_time(rate, p.x);
    tab.rows.push_back({num(p.x), num(t), num(p.value)});
    tab.data.push_back({{"T", p.x}, {"t", t}, {m, p.value}});
  }
  return tab;
}

Table sweep(const RunConfig& cfg) {
  const SweepSeries s = param_sweep(cfg.params, cfg.axis, cfg.values, cfg.measure, cfg.T, measure_options(cfg));
  const std::string a(to_string(cfg.axis));
  const std::string m(to_string(cfg.measure));
  Table tab{{a, m}, {}, json::array()};
  for (const auto& p : s.points) {
    tab.rows.push_back({num(p.x), num(p.value)});
    tab.data.push_back({{a, p.x}, {m, p.value}});
  }
  return tab;
}

Table extrema(const RunConfig& cfg) {
  const CutoffReport r =
      find_extremum_and_cutoffs(cfg.params, cfg.measure, cfg.T, cfg.r_lo, cfg.r_hi, measure_options(cfg));
  Table tab{{"r_max", "value_at_max", "r_lcf", "r_ucf", "threshold", "lcf_status", "ucf_status", "violation"}, {}, {}};
  tab.rows.push_back({num(r.r_max), num(r.value_at_max), num(r.r_lcf), num(r.r_ucf), num(r.threshold),
                      std::string(to_string(r.lcf_status)), std::string(to_string(r.ucf_status)),
                      r.violation ? "true" : "false"});
  // NaN cutoffs (no violation anywhere) become null.
  auto finite_or_null = [](double x) { return std::isfinite(x) ? json(x) : json(nullptr); };
  tab.data = {{"r_max", r.r_max},
              {"value_at_max", r.value_at_max},
              {"r_lcf", finite_or_null(r.r_lcf)},
              {"r_ucf", finite_or_null(r.r_ucf)},
              {"threshold", r.threshold},
              {"lcf_status", std::string(to_string(r.lcf_status))},
              {"ucf_status", std::string(to_string(r.ucf_status))},
              {"violation", r.violation}};
  return tab;
}

Table verify(const RunConfig& cfg, bool& failed) {
  const oracle::VerifyReport rep =
      oracle::cross_check(cfg.verify_draws, cfg.seed, cfg.verify_tolerance, cfg.quadrature, Execution::Parallel);
  failed = !rep.pass();
  Table tab{{"check", "scenario", "element", "draws", "metric", "worst_draw", "failures", "pass"}, {}, json::array()};
  for (const auto& e : rep.elements) {
    tab.rows.push_back({"max_rel_error", std::string(to_string(e.scenario)), std::string(oracle::to_string(e.element)),
                        std::to_string(e.draws), num(e.max_rel_error), std::to_string(e.worst_draw),
                        std::to_string(e.quadrature_failures), e.pass ? "true" : "false"});
    tab.data.push_back({{"check", "max_rel_error"},
                        {"scenario", std::string(to_string(e.scenario))},
                        {"element", std::string(oracle::to_string(e.element))},
                        {"draws", e.draws},
                        {"metric", e.max_rel_error},
                        {"worst_draw", e.worst_draw},
                        {"failures", e.quadrature_failures},
                        {"pass", e.pass}});
  }
  for (const auto& p : rep.physicality) {
    tab.rows.push_back({"min_symplectic", std::string(to_string(p.scenario)), "V", std::to_string(p.draws),
                        num(p.min_symplectic), "-1", std::to_string(p.unphysical), p.pass ? "true" : "false"});
    tab.data.push_back({{"check", "min_symplectic"},
                        {"scenario", std::string(to_string(p.scenario))},
                        {"element", "V"},
                        {"draws", p.draws},
                        {"metric", p.min_symplectic},
                        {"worst_draw", -1},
                        {"failures", p.unphysical},
                        {"pass", p.pass}});
  }
  return tab;
}

std::string join(const std::vector<std::string>& xs, std::string_view sep) {
  std::string out;
  for (std::size_t i = 0; i < xs.size(); ++i) {
    if (i) out += sep;
    out += xs[i];
  }
  return out;
}

std::string to_csv(const RunConfig& cfg, const Table& tab) {
  std::string out;
  out += fmt::format("# tool=tmss {}\n", tool_version());
  out += fmt::format("# command={}\n", to_string(cfg.command));
  for (const auto& [k, v] : cfg.resolved.items()) out += fmt::format("# {}={}\n", k, v.dump());
  out += fmt::format("# defaulted={}\n", join(cfg.defaulted, ";"));
  out += join(tab.columns, ",") + "\n";
  for (const auto& row : tab.rows) out += join(row, ",") + "\n";
  return out;
}

}  // namespace

RunOutput render(const RunConfig& cfg) {
  RunOutput out;
  Table tab;
  switch (cfg.command) {
    case Command::Evolve: tab = evolve(cfg); break;
    case Command::Sweep: tab = sweep(cfg); break;
    case Command::Extrema: tab = extrema(cfg); break;
    case Command::Verify: tab = verify(cfg, out.verify_failed); break;
  }
  if (cfg.format == OutputFormat::Csv) {
    out.text = to_csv(cfg, tab);
  } else {
    out.text = json{{"meta", meta(cfg)}, {"data", tab.data}}.dump(2) + "\n";
  }
  return out;
}

int run(const RunConfig& cfg) {
  const RunOutput out = render(cfg);
  if (cfg.out_path.empty()) {
    std::cout << out.text << std::flush;
    if (!std::cout) throw IoError("failed writing to standard output");
  } else {
    std::ofstream f(cfg.out_path, std::ios::binary | std::ios::trunc);
    if (!f) throw IoError(fmt::format("cannot open '{}' for writing", cfg.out_path));
    f << out.text;
    f.close();
    if (!f) throw IoError(fmt::format("failed writing '{}'", cfg.out_path));
  }
  return out.verify_failed ? kExitVerifyFailed : kExitOk;
}

int exit_code_for(const std::exception_ptr& e) {
  try {
    std::rethrow_exception(e);
  } catch (const ConfigError&) {
    return kExitConfig;
  } catch (const DomainError&) {
    return kExitDomain;
  } catch (const NonConvergentQuadrature&) {
    return kExitQuadrature;
  } catch (const NumericalFailure&) {
    return kExitNumerical;
  } catch (const UnphysicalState&) {
    return kExitUnphysical;
  } catch (const IoError&) {
    return kExitIo;
  } catch (...) {
    return kExitOther;
  }
}

}  // namespace tmss
