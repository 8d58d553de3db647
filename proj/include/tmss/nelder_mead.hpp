/*
 * SPDX-License-Identifier: Apache-2.0
 */
#pragma once

#include <algorithm>
#include <array>
#include <cmath>
#include <numeric>

#include <Eigen/Core>

namespace tmss {

struct NelderMeadOptions {
  double xtol = 1e-7;         ///< simplex diameter (max-norm from the best vertex)
  double ftol = 1e-10;        ///< spread of function values over the simplex
  int max_evals = 20000;
  double initial_step = 0.1;  ///< edge length of the axis-aligned start simplex
};

template <int N>
struct NelderMeadResult {
  Eigen::Matrix<double, N, 1> x;
  double fx = 0.0;
  int evals = 0;
  bool converged = false;
};

/// Minimizes f with the Nelder-Mead simplex method using the
/// dimension-adaptive coefficients of Gao and Han (2012), which behave much
/// better than the classic (1, 2, 1/2, 1/2) set once N grows past ~5.
template <int N, typename F>
NelderMeadResult<N> nelder_mead(F&& f, const Eigen::Matrix<double, N, 1>& x0,
                                const NelderMeadOptions& opt) {
  using Vec = Eigen::Matrix<double, N, 1>;
  constexpr double n = N;
  constexpr double alpha = 1.0;
  constexpr double beta = 1.0 + 2.0 / n;
  constexpr double gamma = 0.75 - 1.0 / (2.0 * n);
  constexpr double delta = 1.0 - 1.0 / n;

  std::array<Vec, N + 1> pts;
  std::array<double, N + 1> vals;
  int evals = 0;
  auto eval = [&](const Vec& x) {
    ++evals;
    return f(x);
  };

  pts[0] = x0;
  vals[0] = eval(x0);
  for (int i = 0; i < N; ++i) {
    pts[i + 1] = x0;
    pts[i + 1](i) += opt.initial_step;
    vals[i + 1] = eval(pts[i + 1]);
  }

  std::array<int, N + 1> order;
  auto sort_simplex = [&] {
    std::iota(order.begin(), order.end(), 0);
    std::stable_sort(order.begin(), order.end(), [&](int a, int b) { return vals[a] < vals[b]; });
    std::array<Vec, N + 1> p2;
    std::array<double, N + 1> v2;
    for (int i = 0; i <= N; ++i) {
      p2[i] = pts[order[i]];
      v2[i] = vals[order[i]];
    }
    pts = p2;
    vals = v2;
  };

  auto converged = [&] {
    double diameter = 0.0;
    for (int i = 1; i <= N; ++i) {
      diameter = std::max(diameter, (pts[i] - pts[0]).cwiseAbs().maxCoeff());
    }
    return diameter < opt.xtol && vals[N] - vals[0] < opt.ftol;
  };

  sort_simplex();
  while (evals < opt.max_evals && !converged()) {
    Vec centroid = Vec::Zero();
    for (int i = 0; i < N; ++i) centroid += pts[i];
    centroid /= n;

    const Vec xr = centroid + alpha * (centroid - pts[N]);
    const double fr = eval(xr);
    if (fr < vals[0]) {
      const Vec xe = centroid + beta * (xr - centroid);
      const double fe = eval(xe);
      if (fe < fr) {
        pts[N] = xe;
        vals[N] = fe;
      } else {
        pts[N] = xr;
        vals[N] = fr;
      }
    } else if (fr < vals[N - 1]) {
      pts[N] = xr;
      vals[N] = fr;
    } else {
      bool shrink = false;
      if (fr < vals[N]) {
        const Vec xc = centroid + gamma * (xr - centroid);
        const double fc = eval(xc);
        if (fc <= fr) {
          pts[N] = xc;
          vals[N] = fc;
        } else {
          shrink = true;
        }
      } else {
        const Vec xc = centroid - gamma * (centroid - pts[N]);
        const double fc = eval(xc);
        if (fc < vals[N]) {
          pts[N] = xc;
          vals[N] = fc;
        } else {
          shrink = true;
        }
      }
      if (shrink) {
        for (int i = 1; i <= N; ++i) {
          pts[i] = pts[0] + delta * (pts[i] - pts[0]);
          vals[i] = eval(pts[i]);
        }
      }
    }
    sort_simplex();
  }

  return {pts[0], vals[0], evals, converged()};
}

}  // namespace tmss
