/*
 * SPDX-License-Identifier: Apache-2.0
 */
#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "tmss/covariance.hpp"
#include "tmss/execution.hpp"
#include "tmss/oracle.hpp"
#include "tmss/quadrature.hpp"

namespace tmss::oracle {

struct Draw {
  ScenarioParams params;
  double t = 0.0;
};

/// Seeded random parameter sets for one scenario: family uniform over
/// {step, exponential}, Omega_K in [-2, 2], dOmega in [-5, 5],
/// tau_I, tau_S in [0.05, 1], kappa_I, kappa_S in [0.01, 0.5], t in [0, 50],
/// r in [0, 2], n_I, n_S in [0, 2].
std::vector<Draw> random_draws(Scenario scenario, int count, std::uint64_t seed);

/// Closed-form vs quadrature agreement for one element over a draw set.
/// Errors are |closed - oracle| / max(|oracle|, 1e-4): a relative error,
/// turning absolute below 1e-4 so rel 1e-6 means abs 1e-10 near zeros.
struct ElementCheck {
  Scenario scenario;
  Element element;
  int draws = 0;
  double max_rel_error = 0.0;
  int worst_draw = -1;
  int quadrature_failures = 0;
  bool pass = false;
};

struct PhysicalityCheck {
  Scenario scenario;
  int draws = 0;
  double min_symplectic = 0.0;
  int unphysical = 0;  ///< assemble_* rejected the state
  bool pass = false;
};

struct VerifyReport {
  std::vector<ElementCheck> elements;
  std::vector<PhysicalityCheck> physicality;
  bool pass() const;
};

/// Runs the element and physicality checks over the draws of both scenarios.
VerifyReport cross_check(int draws_per_scenario, std::uint64_t seed, double tolerance,
                         const QuadratureConfig& quadrature, Execution execution = Execution::Parallel);

}  // namespace tmss::oracle
