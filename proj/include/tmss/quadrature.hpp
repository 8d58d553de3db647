/*
 * SPDX-License-Identifier: Apache-2.0
 */
#pragma once

#include <functional>
#include <span>
#include <vector>

namespace tmss {

struct QuadratureConfig {
  double rel_tol = 1e-9;
  double abs_tol = 1e-12;
  int max_subdivisions = 2000;

  void validate() const;
};

struct QuadratureResult {
  double value = 0.0;
  double error_estimate = 0.0;
  double l1 = 0.0;  ///< integral of |f|, the scale for the relative tolerance
};

/// Adaptive Gauss-Kronrod (G10/K21) over each segment [b_i, b_{i+1}] of an
/// increasing breakpoint list. Throws NonConvergentQuadrature when the summed
/// error estimate exceeds max(abs_tol, rel_tol * L1).
QuadratureResult integrate_piecewise(const std::function<double(double)>& f,
                                     std::span<const double> breakpoints,
                                     const QuadratureConfig& cfg);

/// Breakpoints covering [a, b] with segments no longer than max_len, merged
/// with any interior points in `extra`.
std::vector<double> segment_breakpoints(double a, double b, double max_len,
                                        std::span<const double> extra = {});

}  // namespace tmss
