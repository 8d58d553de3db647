/*
 * SPDX-License-Identifier: Apache-2.0
 */
#include "tmss/sweeps.hpp"

#include <algorithm>
#include <cmath>
#include <functional>
#include <limits>
#include <string>

#include <fmt/format.h>

#include "tmss/errors.hpp"

namespace tmss {

std::string_view to_string(Measure m) { return m == Measure::EN ? "en" : "bmax"; }

std::string_view to_string(SweepAxis a) {
  switch (a) {
    case SweepAxis::R: return "r";
    case SweepAxis::N: return "n";
    case SweepAxis::KAPPA: return "kappa";
    case SweepAxis::DELTA_OMEGA: return "delta_omega";
    case SweepAxis::TAU_S: return "tau_s";
  }
  return "?";
}

Measure parse_measure(std::string_view name) {
  if (name == "en" || name == "EN") return Measure::EN;
  if (name == "bmax" || name == "BMAX") return Measure::BMAX;
  throw DomainError("unknown measure '" + std::string(name) + "'");
}

SweepAxis parse_axis(std::string_view name) {
  if (name == "r") return SweepAxis::R;
  if (name == "n") return SweepAxis::N;
  if (name == "kappa") return SweepAxis::KAPPA;
  if (name == "delta_omega") return SweepAxis::DELTA_OMEGA;
  if (name == "tau_s") return SweepAxis::TAU_S;
  throw DomainError("unknown sweep axis '" + std::string(name) + "'");
}

std::string_view to_string(BracketStatus s) {
  return s == BracketStatus::Bracketed ? "bracketed" : "not_bracketed";
}

double normalized_time(double kappa, double T) {
  if (!(T >= 0.0 && T < 1.0)) throw DomainError(fmt::format("normalized time T = {} not in [0, 1)", T));
  if (!(kappa > 0.0)) throw DomainError("normalized_time: kappa must be > 0");
  return -std::log1p(-T) / kappa;
}

double clock_rate(const ScenarioParams& params) { return std::max(params.kappa_i, params.kappa_s); }

double evaluate_measure(const ScenarioParams& params, Measure measure, double t,
                        const BellOptimizerConfig& bell) {
  const CovMatrix v = assemble(params, t);
  return measure == Measure::EN ? log_negativity(v) : bell_max(v, bell).b_max;
}

namespace {

void require_increasing(std::span<const double> xs, const char* what) {
  if (xs.empty()) throw DomainError(fmt::format("{}: grid is empty", what));
  for (std::size_t i = 1; i < xs.size(); ++i) {
    if (!(xs[i] > xs[i - 1])) throw DomainError(fmt::format("{}: grid must be strictly increasing", what));
  }
}

std::string series_label(const ScenarioParams& p, Measure m, std::string_view x) {
  return fmt::format("{}/{}/{} vs {}", to_string(p.scenario), to_string(p.filter_i.family),
                     m == Measure::EN ? "E_N" : "|B|_max", x);
}

// Evaluates fn(i) for i in [0, n) into out, concurrently when asked.
template <typename Fn>
void for_each_point(std::size_t n, Execution execution, std::vector<double>& out, Fn fn) {
  out.assign(n, 0.0);
  const auto count = static_cast<long>(n);
  if (execution == Execution::Parallel) {
#pragma omp parallel for schedule(dynamic)
    for (long i = 0; i < count; ++i) out[i] = fn(static_cast<std::size_t>(i));
  } else {
    for (long i = 0; i < count; ++i) out[i] = fn(static_cast<std::size_t>(i));
  }
}

}  // namespace

SweepSeries time_series(const ScenarioParams& params, Measure measure, std::span<const double> T_grid,
                        const MeasureOptions& opts) {
  params.validate();
  require_increasing(T_grid, "time_series");
  const double kappa = clock_rate(params);
  std::vector<double> times;
  for (double T : T_grid) times.push_back(normalized_time(kappa, T));

  SweepSeries series{series_label(params, measure, "T"), "T", {}, params};
  std::vector<double> values;
  if (measure == Measure::EN) {
    for_each_point(times.size(), opts.execution, values,
                   [&](std::size_t i) { return log_negativity(assemble(params, times[i])); });
  } else {
    std::vector<BellSettings> warm;
    for (double t : times) {
      const BellResult res = bell_max(assemble(params, t), opts.bell, warm);
      values.push_back(res.b_max);
      warm.assign(1, res.argmax);
    }
  }
  for (std::size_t i = 0; i < T_grid.size(); ++i) series.points.push_back({T_grid[i], values[i]});
  return series;
}

ScenarioParams with_axis(const ScenarioParams& base, SweepAxis axis, double value) {
  ScenarioParams p = base;
  switch (axis) {
    case SweepAxis::R: p.r = value; break;
    case SweepAxis::N: p.n_i = p.n_s = value; break;
    case SweepAxis::KAPPA: p.kappa_i = p.kappa_s = value; break;
    case SweepAxis::DELTA_OMEGA: p.filter_s.omega = p.filter_i.omega - value; break;
    case SweepAxis::TAU_S: p.filter_s.tau = value; break;
  }
  return p;
}

SweepSeries param_sweep(const ScenarioParams& base, SweepAxis axis, std::span<const double> values,
                        Measure measure, double T, const MeasureOptions& opts) {
  base.validate();
  require_increasing(values, "param_sweep");
  std::vector<ScenarioParams> configs;
  for (double x : values) {
    configs.push_back(with_axis(base, axis, x));
    configs.back().validate();
  }
  std::vector<double> out;
  for_each_point(values.size(), opts.execution, out, [&](std::size_t i) {
    const double t = normalized_time(clock_rate(configs[i]), T);
    return evaluate_measure(configs[i], measure, t, opts.bell);
  });
  SweepSeries series{series_label(base, measure, to_string(axis)), std::string(to_string(axis)), {}, base};
  for (std::size_t i = 0; i < values.size(); ++i) series.points.push_back({values[i], out[i]});
  return series;
}

namespace {

constexpr int kScanPoints = 32;

double golden_max(const std::function<double(double)>& f, double a, double b, double tol) {
  const double inv_phi = (std::sqrt(5.0) - 1.0) / 2.0;
  double c = b - inv_phi * (b - a);
  double d = a + inv_phi * (b - a);
  double fc = f(c);
  double fd = f(d);
  while (b - a > tol) {
    if (fc >= fd) {
      b = d;
      d = c;
      fd = fc;
      c = b - inv_phi * (b - a);
      fc = f(c);
    } else {
      a = c;
      c = d;
      fc = fd;
      d = a + inv_phi * (b - a);
      fd = f(d);
    }
  }
  return fc >= fd ? c : d;
}

// Root of f - threshold in [below, above], f(below) <= threshold < f(above).
double bisect_crossing(const std::function<double(double)>& f, double threshold, double below, double above) {
  for (int it = 0; it < 200; ++it) {
    const double mid = 0.5 * (below + above);
    if (mid == below || mid == above) break;
    if (std::abs(above - below) < 1e-13 * std::max(1.0, std::abs(mid))) break;
    (f(mid) > threshold ? above : below) = mid;
  }
  return 0.5 * (below + above);
}

}  // namespace

CutoffReport find_extremum_and_cutoffs(const ScenarioParams& base, Measure measure, double T,
                                       double r_lo, double r_hi, const MeasureOptions& opts) {
  base.validate();
  if (!(r_lo >= 0.0) || !(r_hi > r_lo)) throw DomainError("r_search must satisfy 0 <= r_lo < r_hi");
  const double t = normalized_time(clock_rate(base), T);
  const std::function<double(double)> f = [&](double r) {
    return evaluate_measure(with_axis(base, SweepAxis::R, r), measure, t, opts.bell);
  };

  std::vector<double> xs(kScanPoints);
  for (int k = 0; k < kScanPoints; ++k) xs[k] = r_lo + (r_hi - r_lo) * k / (kScanPoints - 1);
  xs.back() = r_hi;
  std::vector<double> ys;
  for_each_point(xs.size(), opts.execution, ys, [&](std::size_t i) { return f(xs[i]); });

  const auto peak = static_cast<int>(std::max_element(ys.begin(), ys.end()) - ys.begin());
  const double lo = xs[std::max(peak - 1, 0)];
  const double hi = xs[std::min(peak + 1, kScanPoints - 1)];
  double r_max = golden_max(f, lo, hi, 1e-9 * std::max(1.0, hi));
  double f_max = f(r_max);
  if (ys[peak] > f_max) {
    r_max = xs[peak];
    f_max = ys[peak];
  }

  CutoffReport rep;
  rep.threshold = measure == Measure::EN ? kEntanglementEpsilon : kBellLocalBound;
  rep.r_max = r_max;
  rep.value_at_max = f_max;
  rep.violation = f_max > rep.threshold;
  if (!rep.violation) {
    rep.r_lcf = rep.r_ucf = std::numeric_limits<double>::quiet_NaN();
    return rep;
  }

  if (ys.front() > rep.threshold) {
    rep.r_lcf = r_lo;
  } else {
    int j = std::max(peak - 1, 0);
    while (j > 0 && ys[j] > rep.threshold) --j;
    rep.r_lcf = bisect_crossing(f, rep.threshold, xs[j], std::min(xs[j + 1], r_max));
    rep.lcf_status = BracketStatus::Bracketed;
  }

  if (ys.back() > rep.threshold) {
    rep.r_ucf = r_hi;
  } else {
    int j = std::min(peak + 1, kScanPoints - 1);
    while (j < kScanPoints - 1 && ys[j] > rep.threshold) ++j;
    // Walking right from the peak: ys[j] <= threshold < f(point left of it).
    rep.r_ucf = bisect_crossing(f, rep.threshold, xs[j], std::max(xs[j - 1], r_max));
    rep.ucf_status = BracketStatus::Bracketed;
  }
  return rep;
}

}  // namespace tmss
