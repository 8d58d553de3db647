/*
 * SPDX-License-Identifier: Apache-2.0
 */
#pragma once

#include <complex>
#include <string_view>

#include "tmss/quadrature.hpp"

namespace tmss {

enum class FilterFamily { Step, Exponential };

std::string_view to_string(FilterFamily family);
FilterFamily parse_filter_family(std::string_view name);

/// One temporal filter channel. Frequencies are in units of the reference
/// central frequency Omega_K and times (including tau) in units of 1/Omega_K.
struct FilterSpec {
  FilterFamily family = FilterFamily::Step;
  double omega = 1.0;  ///< central angular frequency
  double tau = 0.2;    ///< window length (step) or decay time (exponential)

  /// Throws DomainError unless tau > 0 and omega is finite.
  void validate() const;

  friend bool operator==(const FilterSpec&, const FilterSpec&) = default;
};

// Exponential filters are integrated out to this many decay times.
inline constexpr double kExponentialTruncation = 40.0;

/// Impulse response h(t).
///   Step:        (Theta(t) - Theta(t - tau)) / sqrt(tau) * exp(-i omega t)
///   Exponential: exp(-(1/tau + i omega) t) / sqrt(tau / 2) * Theta(t)
/// Theta is right-continuous, so t = 0 lies inside the window and t = tau
/// does not.
std::complex<double> eval_filter(const FilterSpec& spec, double t);

/// Upper end of the effective support: tau for step filters, the truncation
/// point for exponential ones.
double support_end(const FilterSpec& spec);

/// |int_0^inf h_i(t) conj(h_j(t)) dt - delta_ij| by adaptive quadrature, with
/// delta_ij = 1 exactly when the two specs are equal. Both specs must share a
/// family.
double orthonormality_defect(const FilterSpec& spec_i, const FilterSpec& spec_j,
                             const QuadratureConfig& cfg = {});

}  // namespace tmss
