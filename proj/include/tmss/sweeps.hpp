/*
 * SPDX-License-Identifier: Apache-2.0
 */
#pragma once

#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "tmss/covariance.hpp"
#include "tmss/execution.hpp"
#include "tmss/measures.hpp"

namespace tmss {

enum class Measure { EN, BMAX };
enum class SweepAxis { R, N, KAPPA, DELTA_OMEGA, TAU_S };

std::string_view to_string(Measure m);
std::string_view to_string(SweepAxis a);
Measure parse_measure(std::string_view name);
SweepAxis parse_axis(std::string_view name);

/// t = -ln(1 - T) / kappa, the inverse of T(t) = 1 - exp(-kappa t).
/// Throws DomainError unless 0 <= T < 1 and kappa > 0.
double normalized_time(double kappa, double T);

/// The rate that defines the normalized clock: max(kappa_i, kappa_s).
double clock_rate(const ScenarioParams& params);

struct SweepPoint {
  double x = 0.0;
  double value = 0.0;
};

struct SweepSeries {
  std::string label;
  std::string abscissa_name;
  std::vector<SweepPoint> points;
  ScenarioParams meta;
};

struct MeasureOptions {
  BellOptimizerConfig bell;
  Execution execution = Execution::Parallel;
};

/// E_N or |B|_max of the state at physical time t.
double evaluate_measure(const ScenarioParams& params, Measure measure, double t,
                        const BellOptimizerConfig& bell);

/// Measure on a strictly increasing grid of normalized times in [0, 1).
/// EN points are independent and evaluated concurrently; BMAX points run in
/// order, each warm-started from the previous optimum.
SweepSeries time_series(const ScenarioParams& params, Measure measure, std::span<const double> T_grid,
                        const MeasureOptions& opts = {});

/// Returns base with one axis overridden. N and KAPPA set both parties;
/// DELTA_OMEGA sets Omega_L = Omega_K - value; TAU_S sets the signal window.
ScenarioParams with_axis(const ScenarioParams& base, SweepAxis axis, double value);

/// Measure at fixed normalized time T over strictly increasing axis values.
/// T is converted with the clock rate of each overridden parameter set.
SweepSeries param_sweep(const ScenarioParams& base, SweepAxis axis, std::span<const double> values,
                        Measure measure, double T, const MeasureOptions& opts = {});

enum class BracketStatus { Bracketed, NotBracketed };
std::string_view to_string(BracketStatus s);

struct CutoffReport {
  double r_max = 0.0;
  double value_at_max = 0.0;
  double r_lcf = 0.0;
  double r_ucf = 0.0;
  double threshold = 0.0;
  BracketStatus lcf_status = BracketStatus::NotBracketed;
  BracketStatus ucf_status = BracketStatus::NotBracketed;
  bool violation = false;  ///< false: the measure never exceeds the threshold
};

// E_N is clamped at zero, so its cutoffs are roots of E_N - kEntanglementEpsilon.
inline constexpr double kEntanglementEpsilon = 1e-9;
inline constexpr double kBellLocalBound = 2.0;

/// Squeezing r_max that maximizes the measure on [r_lo, r_hi] at normalized
/// time T, and the cutoffs r_lcf < r_max < r_ucf where it crosses the
/// threshold (1e-9 for E_N, 2 for |B|_max).
///
/// A 32-point pre-scan locates the peak; golden-section search refines it
/// inside the neighbouring scan interval. Cutoffs are bisected inside the scan
/// interval that straddles the threshold. A side whose boundary still exceeds
/// the threshold is reported NotBracketed with the boundary as its value.
CutoffReport find_extremum_and_cutoffs(const ScenarioParams& base, Measure measure, double T,
                                       double r_lo, double r_hi, const MeasureOptions& opts = {});

}  // namespace tmss
