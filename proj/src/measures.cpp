/*
 * SPDX-License-Identifier: Apache-2.0
 */
#include "tmss/measures.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <random>
#include <vector>

#include <Eigen/LU>
#include <fmt/format.h>

#include "tmss/errors.hpp"
#include "tmss/nelder_mead.hpp"

namespace tmss {

double log_negativity(const CovMatrix& v) {
  const double det_i = v.v_i().determinant();
  const double det_s = v.v_s().determinant();
  const double det_corr = v.v_corr().determinant();
  // det V through the Schur complement of V_I: the 4x4 LU determinant loses
  // far more digits once the blocks grow like cosh 2r.
  const Eigen::Matrix2d schur = v.v_s() - v.v_corr() * v.v_i().inverse() * v.v_corr().transpose();
  const double det_v = det_i * schur.determinant();
  const double sigma = det_i + det_s - 2.0 * det_corr;

  double disc = sigma * sigma - 4.0 * det_v;
  const double scale = std::max(1.0, sigma * sigma);
  if (disc < -1e-9 * scale) {
    throw NumericalFailure(fmt::format("log_negativity: negative discriminant {:.6e}", disc));
  }
  disc = std::max(disc, 0.0);
  // nu_-^2 nu_+^2 = det V, so take nu_-^2 from the larger root instead of
  // subtracting two nearly equal numbers.
  const double nu_plus_sq = (sigma + std::sqrt(disc)) / 2.0;
  if (!(nu_plus_sq > 0.0) || !(det_v > 0.0)) {
    throw NumericalFailure("log_negativity: covariance matrix is not positive definite");
  }
  const double nu_minus = std::sqrt(det_v / nu_plus_sq);
  return std::max(0.0, -std::log(2.0 * nu_minus));
}

Eigen::Matrix<double, 8, 1> BellSettings::to_vector() const {
  Eigen::Matrix<double, 8, 1> x;
  x << q_i0, p_i0, q_i1, p_i1, q_s0, p_s0, q_s1, p_s1;
  return x;
}

BellSettings BellSettings::from_vector(const Eigen::Matrix<double, 8, 1>& x) {
  return {x(0), x(1), x(2), x(3), x(4), x(5), x(6), x(7)};
}

Eigen::Vector4d BellSettings::point(int m, int n) const {
  return m == 0 ? (n == 0 ? Eigen::Vector4d(q_i0, p_i0, q_s0, p_s0)
                          : Eigen::Vector4d(q_i0, p_i0, q_s1, p_s1))
                : (n == 0 ? Eigen::Vector4d(q_i1, p_i1, q_s0, p_s0)
                          : Eigen::Vector4d(q_i1, p_i1, q_s1, p_s1));
}

WignerFunction::WignerFunction(const CovMatrix& v) : llt_(v.matrix()) {
  if (llt_.info() != Eigen::Success) {
    throw NumericalFailure("wigner: covariance matrix is not positive definite");
  }
  // sqrt(det V) is the product of the Cholesky diagonal.
  const double sqrt_det = llt_.matrixL().toDenseMatrix().diagonal().prod();
  if (!(sqrt_det > 0.0)) throw NumericalFailure("wigner: singular covariance matrix");
  prefactor_ = 1.0 / (std::numbers::pi * std::numbers::pi * sqrt_det);
}

double WignerFunction::operator()(const Eigen::Vector4d& u) const {
  const Eigen::Vector4d y = llt_.matrixL().solve(u);
  return prefactor_ * std::exp(-0.5 * y.squaredNorm());
}

double wigner(const CovMatrix& v, const Eigen::Vector4d& u) { return WignerFunction(v)(u); }

double bell_value(const WignerFunction& w, const BellSettings& s) {
  constexpr double weight = std::numbers::pi * std::numbers::pi / 4.0;
  return weight * (w(s.point(0, 0)) + w(s.point(0, 1)) + w(s.point(1, 0)) - w(s.point(1, 1)));
}

double bell_value(const CovMatrix& v, const BellSettings& s) {
  return bell_value(WignerFunction(v), s);
}

namespace {

using Vec8 = Eigen::Matrix<double, 8, 1>;

struct StartOutcome {
  Vec8 x;
  double value = 0.0;  // |B| at x
  bool converged = false;
};

StartOutcome run_start(const WignerFunction& w, const Vec8& x0, double step,
                       const BellOptimizerConfig& cfg) {
  auto objective = [&](const Vec8& x) { return -std::abs(bell_value(w, BellSettings::from_vector(x))); };
  NelderMeadOptions opt{cfg.xtol, cfg.ftol, cfg.max_evals, step};
  auto res = nelder_mead<8>(objective, x0, opt);
  // Re-polish: a fresh simplex around the optimum escapes premature collapse.
  for (int round = 0; round < 4; ++round) {
    opt.initial_step = std::max(100.0 * cfg.xtol, 0.1 * step / (round + 1));
    auto again = nelder_mead<8>(objective, res.x, opt);
    const bool improved = again.fx < res.fx - cfg.ftol;
    if (again.fx <= res.fx) res = again;
    if (!improved) break;
  }
  return {res.x, -res.fx, res.converged};
}

}  // namespace

BellResult bell_max(const CovMatrix& v, const BellOptimizerConfig& cfg,
                    std::span<const BellSettings> warm_starts) {
  if (cfg.n_restarts < 0) throw DomainError("bell_max: n_restarts must be >= 0");
  const WignerFunction w(v);
  const double half_width = 3.0 * std::sqrt(v.matrix().diagonal().maxCoeff());

  std::vector<Vec8> starts;
  for (const auto& s : warm_starts) starts.push_back(s.to_vector());
  starts.push_back(Vec8::Zero());
  const std::size_t first_random = starts.size();
  for (int k = 0; k < cfg.n_restarts; ++k) {
    std::seed_seq seq{static_cast<std::uint32_t>(cfg.seed), static_cast<std::uint32_t>(cfg.seed >> 32),
                      static_cast<std::uint32_t>(first_random + k)};
    std::mt19937_64 rng(seq);
    std::uniform_real_distribution<double> box(-half_width, half_width);
    Vec8 x;
    for (int i = 0; i < 8; ++i) x(i) = box(rng);
    starts.push_back(x);
  }

  const double step = half_width / 4.0;
  std::vector<StartOutcome> outcomes(starts.size());
  const auto count = static_cast<long>(starts.size());
  if (cfg.execution == Execution::Parallel) {
#pragma omp parallel for schedule(dynamic)
    for (long k = 0; k < count; ++k) outcomes[k] = run_start(w, starts[k], step, cfg);
  } else {
    for (long k = 0; k < count; ++k) outcomes[k] = run_start(w, starts[k], step, cfg);
  }

  std::size_t best = 0;
  for (std::size_t k = 1; k < outcomes.size(); ++k) {
    if (outcomes[k].value > outcomes[best].value) best = k;
  }
  return {outcomes[best].value, BellSettings::from_vector(outcomes[best].x),
          static_cast<int>(outcomes.size()), outcomes[best].converged};
}

}  // namespace tmss
