/*
 * SPDX-License-Identifier: Apache-2.0
 */
#include "tmss/covariance.hpp"

#include <algorithm>
#include <cmath>
#include <string>

#include <Eigen/Eigenvalues>
#include <fmt/format.h>

#include "tmss/errors.hpp"
#include "tmss/kernels.hpp"

namespace tmss {

std::string_view to_string(Scenario scenario) {
  return scenario == Scenario::TMSTDF ? "tmstdf" : "tdtmsv";
}

Scenario parse_scenario(std::string_view name) {
  if (name == "tmstdf" || name == "TMSTDF") return Scenario::TMSTDF;
  if (name == "tdtmsv" || name == "TDTMSV") return Scenario::TDTMSV;
  throw DomainError("unknown scenario '" + std::string(name) + "'");
}

void ScenarioParams::validate() const {
  if (!(r >= 0.0) || !std::isfinite(r)) throw DomainError("r must be >= 0");
  if (!(n_i >= 0.0) || !std::isfinite(n_i)) throw DomainError("n_i must be >= 0");
  if (!(n_s >= 0.0) || !std::isfinite(n_s)) throw DomainError("n_s must be >= 0");
  if (!(kappa_i > 0.0) || !std::isfinite(kappa_i)) throw DomainError("kappa_i must be > 0");
  if (!(kappa_s > 0.0) || !std::isfinite(kappa_s)) throw DomainError("kappa_s must be > 0");
  filter_i.validate();
  filter_s.validate();
  if (filter_i.family != filter_s.family) throw DomainError("filters must share a family");
}

CovMatrix CovMatrix::from_elements(double d_i, double d_s, double c11, double c12, double c21,
                                   double c22) {
  Matrix m = Matrix::Zero();
  m(0, 0) = m(1, 1) = d_i / 2.0;
  m(2, 2) = m(3, 3) = d_s / 2.0;
  m(2, 0) = m(0, 2) = c11 / 2.0;
  m(2, 1) = m(1, 2) = c12 / 2.0;
  m(3, 0) = m(0, 3) = c21 / 2.0;
  m(3, 1) = m(1, 3) = c22 / 2.0;
  return CovMatrix(m);
}

CovMatrix CovMatrix::from_matrix(const Matrix& m) {
  if (!m.allFinite()) throw DomainError("covariance matrix has non-finite entries");
  if ((m - m.transpose()).cwiseAbs().maxCoeff() > 1e-12) {
    throw DomainError("covariance matrix is not symmetric");
  }
  return CovMatrix(0.5 * (m + m.transpose()));
}

CovMatrix CovMatrix::vacuum() { return CovMatrix(0.5 * Matrix::Identity()); }

CovMatrix CovMatrix::tmsv(double r) {
  const double c = std::cosh(2.0 * r);
  const double s = std::sinh(2.0 * r);
  return from_elements(c, c, s, 0.0, 0.0, -s);
}

CovMatrix CovMatrix::swapped_parties() const {
  Eigen::PermutationMatrix<4> p;
  p.indices() << 2, 3, 0, 1;
  return CovMatrix(p * m_ * p.transpose());
}

namespace {

void require_physical(const CovMatrix& v, const char* where) {
  const double nu = min_symplectic_eigenvalue_full(v);
  if (nu < 0.5 - kPhysicalityTolerance) {
    throw UnphysicalState(
        fmt::format("{}: minimal symplectic eigenvalue {:.12g} < 1/2", where, nu), nu);
  }
}

// I(0) - exp(-2 kappa t) I(kappa): the thermalized share of one party's window.
double thermal_share(FilterFamily family, double tau, double kappa, double t) {
  return i_window(family, tau, 0.0, t) - std::exp(-2.0 * kappa * t) * i_window(family, tau, kappa, t);
}

}  // namespace

CovMatrix assemble_tmstdf(const ScenarioParams& params, double t) {
  params.validate();
  if (params.scenario != Scenario::TMSTDF) throw DomainError("assemble_tmstdf: scenario is not TMSTDF");
  if (!(t >= 0.0) || !std::isfinite(t)) throw DomainError("t must be >= 0");

  const FilterFamily family = params.filter_i.family;
  const double tau_i = params.filter_i.tau;
  const double tau_s = params.filter_s.tau;
  const double ch = std::cosh(2.0 * params.r);
  const double sh = std::sinh(2.0 * params.r);
  const double decay_i = std::exp(-2.0 * params.kappa_i * t);
  const double decay_s = std::exp(-2.0 * params.kappa_s * t);

  const double d_i = params.n_i * thermal_share(family, tau_i, params.kappa_i, t) * (1.0 + ch) -
                     params.n_s * thermal_share(family, tau_i, params.kappa_s, t) * (1.0 - ch) + ch;
  const double d_s = -params.n_i * thermal_share(family, tau_s, params.kappa_i, t) * (1.0 - ch) +
                     params.n_s * thermal_share(family, tau_s, params.kappa_s, t) * (1.0 + ch) + ch;

  const CrossKernels k0 = cross_kernels({params.filter_i, params.filter_s, 0.0, t});
  const CrossKernels ki = cross_kernels({params.filter_i, params.filter_s, params.kappa_i, t});
  const CrossKernels ks = cross_kernels({params.filter_i, params.filter_s, params.kappa_s, t});
  const double kf = k_f(params.filter_i, params.filter_s);

  const double c11 = sh * (-params.n_i * decay_i * ki.jc - params.n_s * decay_s * ks.jc +
                           (params.n_i + params.n_s) * k0.jc + kf);
  const double c12 = -sh * (-params.n_i * decay_i * ki.js + params.n_s * decay_s * ks.js +
                            (params.n_i - params.n_s) * k0.js);

  const CovMatrix v = CovMatrix::from_elements(d_i, d_s, c11, c12, c12, -c11);
  require_physical(v, "assemble_tmstdf");
  return v;
}

CovMatrix assemble_tdtmsv(const ScenarioParams& params, double t) {
  params.validate();
  if (params.scenario != Scenario::TDTMSV) throw DomainError("assemble_tdtmsv: scenario is not TDTMSV");
  if (!(t >= 0.0) || !std::isfinite(t)) throw DomainError("t must be >= 0");

  const FilterFamily family = params.filter_i.family;
  const double ch = std::cosh(2.0 * params.r);
  const double sh = std::sinh(2.0 * params.r);

  const double share_i = thermal_share(family, params.filter_i.tau, params.kappa_i, t);
  const double share_s = thermal_share(family, params.filter_s.tau, params.kappa_s, t);
  const double d_i = (2.0 * params.n_i + 1.0) * share_i + (1.0 - share_i) * ch;
  const double d_s = (2.0 * params.n_s + 1.0) * share_s + (1.0 - share_s) * ch;

  const double kappa_mean = 0.5 * (params.kappa_i + params.kappa_s);
  const double jc0 = j_c({params.filter_i, params.filter_s, 0.0, t});
  const double jc_mean = j_c({params.filter_i, params.filter_s, kappa_mean, t});
  const double c11 =
      (k_f(params.filter_i, params.filter_s) - jc0 + std::exp(-2.0 * kappa_mean * t) * jc_mean) * sh;

  const CovMatrix v = CovMatrix::from_elements(d_i, d_s, c11, 0.0, 0.0, -c11);
  require_physical(v, "assemble_tdtmsv");
  return v;
}

CovMatrix assemble(const ScenarioParams& params, double t) {
  return params.scenario == Scenario::TMSTDF ? assemble_tmstdf(params, t)
                                             : assemble_tdtmsv(params, t);
}

double min_symplectic_eigenvalue_full(const CovMatrix& v) {
  Eigen::Matrix4d omega = Eigen::Matrix4d::Zero();
  omega(0, 1) = omega(2, 3) = 1.0;
  omega(1, 0) = omega(3, 2) = -1.0;
  Eigen::EigenSolver<Eigen::Matrix4d> solver(omega * v.matrix(), /*computeEigenvectors=*/false);
  if (solver.info() != Eigen::Success) {
    throw NumericalFailure("symplectic eigenvalue solve did not converge");
  }
  return solver.eigenvalues().cwiseAbs().minCoeff();
}

}  // namespace tmss
