/*
 * SPDX-License-Identifier: Apache-2.0
 */
#pragma once

#include <string_view>

#include <Eigen/Core>

#include "tmss/filters.hpp"

namespace tmss {

/// TMSTDF: the input vacua thermalize before the squeezing crystal.
/// TDTMSV: the squeezed vacuum thermalizes after the crystal.
enum class Scenario { TMSTDF, TDTMSV };

std::string_view to_string(Scenario scenario);
Scenario parse_scenario(std::string_view name);

struct ScenarioParams {
  Scenario scenario = Scenario::TMSTDF;
  double r = 0.0;        ///< squeezing amplitude
  double n_i = 0.0;      ///< idler bath occupancy
  double n_s = 0.0;      ///< signal bath occupancy
  double kappa_i = 0.1;  ///< idler coupling (kappa_in for TMSTDF, kappa_out for TDTMSV)
  double kappa_s = 0.1;
  FilterSpec filter_i;
  FilterSpec filter_s;

  /// r >= 0, n >= 0, kappa > 0, valid filters of one family.
  void validate() const;
};

/// Symmetric 4x4 covariance matrix in quadrature order (X_I, Y_I, X_S, Y_S),
/// vacuum = identity / 2. Immutable once built.
///
/// Layout: V = [[V_I, V_corr^T], [V_corr, V_S]] with
///   V_I = D_I/2 * 1, V_S = D_S/2 * 1, V_corr = 1/2 [[C11, C12], [C21, C22]].
/// The D/C accessors read the matrix back in that convention.
class CovMatrix {
 public:
  using Matrix = Eigen::Matrix4d;

  /// Builds the block-structured matrix from the named elements.
  static CovMatrix from_elements(double d_i, double d_s, double c11, double c12, double c21,
                                 double c22);
  /// Any symmetric matrix (within 1e-12); throws DomainError otherwise.
  static CovMatrix from_matrix(const Matrix& m);
  /// identity / 2
  static CovMatrix vacuum();
  /// Pure two-mode squeezed vacuum with squeezing r.
  static CovMatrix tmsv(double r);

  const Matrix& matrix() const noexcept { return m_; }
  double operator()(int i, int j) const { return m_(i, j); }

  Eigen::Matrix2d v_i() const { return m_.topLeftCorner<2, 2>(); }
  Eigen::Matrix2d v_s() const { return m_.bottomRightCorner<2, 2>(); }
  Eigen::Matrix2d v_corr() const { return m_.bottomLeftCorner<2, 2>(); }

  double d_i() const { return 2.0 * m_(0, 0); }
  double d_s() const { return 2.0 * m_(2, 2); }
  double c11() const { return 2.0 * m_(2, 0); }
  double c12() const { return 2.0 * m_(2, 1); }
  double c21() const { return 2.0 * m_(3, 0); }
  double c22() const { return 2.0 * m_(3, 1); }

  /// Exchanges the two parties (X_I, Y_I) <-> (X_S, Y_S).
  CovMatrix swapped_parties() const;

 private:
  explicit CovMatrix(const Matrix& m) : m_(m) {}
  Matrix m_;
};

/// Covariance of the filtered TMSTDF modes at time t >= 0.
CovMatrix assemble_tmstdf(const ScenarioParams& params, double t);

/// Covariance of the filtered TDTMSV modes at time t >= 0.
CovMatrix assemble_tdtmsv(const ScenarioParams& params, double t);

/// Dispatches on params.scenario.
CovMatrix assemble(const ScenarioParams& params, double t);

/// Smallest modulus among the eigenvalues of Omega V, where Omega is the
/// two-mode symplectic form. Physical states give >= 1/2.
double min_symplectic_eigenvalue_full(const CovMatrix& v);

// Tolerance of the physicality gate inside assemble_*.
inline constexpr double kPhysicalityTolerance = 1e-9;

}  // namespace tmss
