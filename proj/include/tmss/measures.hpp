/*
 * SPDX-License-Identifier: Apache-2.0
 */
#pragma once

#include <array>
#include <cstdint>
#include <span>

#include <Eigen/Cholesky>
#include <Eigen/Core>

#include "tmss/covariance.hpp"
#include "tmss/execution.hpp"

namespace tmss {

/// Logarithmic negativity max(0, -ln 2 nu), nu the smallest symplectic
/// eigenvalue of the partially transposed covariance matrix, obtained from
/// the block invariants
///   Sigma = det V_I + det V_S - 2 det V_corr,
///   nu^2  = (Sigma - sqrt(Sigma^2 - 4 det V)) / 2.
double log_negativity(const CovMatrix& v);

/// Displacements of the four phase-space points
/// u^{mn} = (q_i^m, p_i^m, q_s^n, p_s^n), m, n in {0, 1}.
struct BellSettings {
  double q_i0 = 0.0, p_i0 = 0.0, q_i1 = 0.0, p_i1 = 0.0;
  double q_s0 = 0.0, p_s0 = 0.0, q_s1 = 0.0, p_s1 = 0.0;

  Eigen::Matrix<double, 8, 1> to_vector() const;
  static BellSettings from_vector(const Eigen::Matrix<double, 8, 1>& x);
  Eigen::Vector4d point(int m, int n) const;

  friend bool operator==(const BellSettings&, const BellSettings&) = default;
};

/// Gaussian Wigner function of a two-mode state,
///   W(u) = exp(-u^T V^{-1} u / 2) / (pi^2 sqrt(det V)).
/// The Cholesky factor of V is computed once, so repeated evaluations are
/// cheap. Normalized to 1 over the phase-space measure d^2 alpha_I d^2 alpha_S
/// with d^2 alpha = dq dp / 2.
class WignerFunction {
 public:
  /// Throws NumericalFailure if V is not positive definite.
  explicit WignerFunction(const CovMatrix& v);
  double operator()(const Eigen::Vector4d& u) const;
  double at_origin() const { return prefactor_; }

 private:
  Eigen::LLT<Eigen::Matrix4d> llt_;
  double prefactor_ = 0.0;
};

double wigner(const CovMatrix& v, const Eigen::Vector4d& u);

/// CHSH combination of displaced parities,
///   B = pi^2/4 [W(u00) + W(u01) + W(u10) - W(u11)].
double bell_value(const CovMatrix& v, const BellSettings& s);
double bell_value(const WignerFunction& w, const BellSettings& s);

struct BellOptimizerConfig {
  int n_restarts = 16;   ///< random multi-starts
  double xtol = 1e-7;
  double ftol = 1e-10;
  int max_evals = 20000;  ///< per simplex run
  std::uint64_t seed = 42;
  Execution execution = Execution::Parallel;
};

struct BellResult {
  double b_max = 0.0;
  BellSettings argmax;
  int n_restarts_used = 0;
  bool converged = false;
};

/// Maximizes |bell_value| over all eight displacements.
///
/// Starts are, in order: every warm start, the origin, then cfg.n_restarts
/// points drawn uniformly from the cube of half-width 3 sqrt(max_i V_ii).
/// Each start runs Nelder-Mead and is re-polished from its optimum until the
/// value stops improving. Start k draws from its own generator seeded with
/// (cfg.seed, k), and ties in the final max go to the lowest k, so the result
/// does not depend on cfg.execution.
BellResult bell_max(const CovMatrix& v, const BellOptimizerConfig& cfg = {},
                    std::span<const BellSettings> warm_starts = {});

}  // namespace tmss
