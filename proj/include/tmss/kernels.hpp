/*
 * SPDX-License-Identifier: Apache-2.0
 */
#pragma once

#include "tmss/filters.hpp"

namespace tmss {

/// Arguments shared by the cross-filter kernels. `filter_i` belongs to the
/// idler party (Omega_K, tau_I), `filter_s` to the signal party (Omega_L, tau_S).
struct KernelArgs {
  FilterSpec filter_i;
  FilterSpec filter_s;
  double kappa = 0.0;
  double t = 0.0;

  /// kappa >= 0, t >= 0, both filters valid and of the same family.
  void validate() const;
};

/// Sine-weighted window integral
///   J_s(kappa) = N * int_0^L exp((2 kappa - g) u) sin(dOmega u) du,
/// dOmega = Omega_K - Omega_L. Step: N = 1/sqrt(tau_I tau_S), g = 0,
/// L = min(t, tau_I, tau_S). Exponential: N = 2/sqrt(tau_I tau_S),
/// g = 1/tau_I + 1/tau_S, L = t.
double j_s(const KernelArgs& args);

/// Cosine-weighted counterpart of j_s.
double j_c(const KernelArgs& args);

/// Both kernels from one evaluation: {j_c, j_s}.
struct CrossKernels {
  double jc;
  double js;
};
CrossKernels cross_kernels(const KernelArgs& args);

/// Single-party window integral I(kappa).
///   Step:        (exp(2 kappa tau) - 1) / (2 kappa tau_party), tau = min(t, tau_party)
///   Exponential: (exp(2 (kappa - 1/tau_party) t) - 1) / ((kappa - 1/tau_party) tau_party)
double i_window(FilterFamily family, double tau_party, double kappa, double t);

/// Filter overlap constant; 1 for identical filters.
///   Step:        sin(tau dOmega) / (sqrt(tau_I tau_S) dOmega), tau = min(tau_I, tau_S)
///   Exponential: 2/sqrt(tau_I tau_S) * g / (g^2 + dOmega^2)
double k_f(const FilterSpec& filter_i, const FilterSpec& filter_s);

/// Bath occupancy switched on at t = 0: n (1 - exp(-2 kappa t)) + 1/2, and
/// 1/2 for t < 0.
double thermal_occupancy(double n, double kappa, double t);

}  // namespace tmss
