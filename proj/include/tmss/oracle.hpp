/*
 * SPDX-License-Identifier: Apache-2.0
 */
#pragma once

#include <string_view>

#include "tmss/covariance.hpp"
#include "tmss/execution.hpp"
#include "tmss/quadrature.hpp"

// Brute-force reference paths. Nothing in here calls into the closed-form
// kernels; the integrands are rebuilt from eval_filter and the bath factors.
namespace tmss::oracle {

enum class Element { DI, DS, C11, C12 };

std::string_view to_string(Element e);

/// Direct quadrature of the convolution int_{-inf}^{t} A(t - t') B(t') dt'
/// defining one covariance element, with A built from eval_filter products and
/// B the scenario's bath factor. The integration variable is split at the
/// switch-on instant t' = 0, at the filter window edges and every half period
/// of the beat frequency Omega_K - Omega_L. Exponential windows are truncated
/// at 40 decay times.
QuadratureResult convolve_element(Element element, const ScenarioParams& params, double t,
                                  const QuadratureConfig& cfg = {});

/// Exhaustive maximum of |bell_value| over the tensor grid of
/// points_per_axis equispaced values in [-half_width, half_width] for each of
/// the eight displacements. The Wigner values factor through a per-party
/// table (one Wigner evaluation per pair of local points), so the 8-D sweep
/// only does additions.
double grid_bell_max(const CovMatrix& v, double half_width, int points_per_axis = 7,
                     Execution execution = Execution::Parallel);

}  // namespace tmss::oracle
