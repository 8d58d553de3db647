/*
 * SPDX-License-Identifier: Apache-2.0
 */
#include "tmss/filters.hpp"

#include <algorithm>
#include <array>
#include <cmath>
#include <numbers>
#include <string>

#include "tmss/errors.hpp"

namespace tmss {

std::string_view to_string(FilterFamily family) {
  return family == FilterFamily::Step ? "step" : "exponential";
}

FilterFamily parse_filter_family(std::string_view name) {
  if (name == "step") return FilterFamily::Step;
  if (name == "exponential" || name == "exp") return FilterFamily::Exponential;
  throw DomainError("unknown filter family '" + std::string(name) + "'");
}

void FilterSpec::validate() const {
  if (!(tau > 0.0) || !std::isfinite(tau)) throw DomainError("tau must be > 0");
  if (!std::isfinite(omega)) throw DomainError("omega must be finite");
}

std::complex<double> eval_filter(const FilterSpec& spec, double t) {
  if (t < 0.0) return {0.0, 0.0};
  const std::complex<double> phase = std::polar(1.0, -spec.omega * t);
  switch (spec.family) {
    case FilterFamily::Step:
      if (t >= spec.tau) return {0.0, 0.0};
      return phase / std::sqrt(spec.tau);
    case FilterFamily::Exponential:
      return phase * (std::exp(-t / spec.tau) / std::sqrt(spec.tau / 2.0));
  }
  return {0.0, 0.0};
}

double support_end(const FilterSpec& spec) {
  return spec.family == FilterFamily::Step ? spec.tau : kExponentialTruncation * spec.tau;
}

double orthonormality_defect(const FilterSpec& spec_i, const FilterSpec& spec_j,
                             const QuadratureConfig& cfg) {
  spec_i.validate();
  spec_j.validate();
  if (spec_i.family != spec_j.family) {
    throw DomainError("orthonormality_defect: filters must share a family");
  }
  const double upper = std::min(support_end(spec_i), support_end(spec_j));
  const double d_omega = std::abs(spec_i.omega - spec_j.omega);
  // Half-period segments of the beat note, and no segment longer than the
  // shorter decay time.
  double seg = std::min(spec_i.tau, spec_j.tau);
  if (d_omega > 0.0) seg = std::min(seg, std::numbers::pi / d_omega);
  const auto breaks = segment_breakpoints(0.0, upper, seg);

  const auto re = integrate_piecewise(
      [&](double t) { return (eval_filter(spec_i, t) * std::conj(eval_filter(spec_j, t))).real(); },
      breaks, cfg);
  const auto im = integrate_piecewise(
      [&](double t) { return (eval_filter(spec_i, t) * std::conj(eval_filter(spec_j, t))).imag(); },
      breaks, cfg);
  const double delta = spec_i == spec_j ? 1.0 : 0.0;
  return std::abs(std::complex<double>(re.value - delta, im.value));
}

}  // namespace tmss
