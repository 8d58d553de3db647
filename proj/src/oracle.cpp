/*
 * SPDX-License-Identifier: Apache-2.0
 */
#include "tmss/oracle.hpp"

#include <algorithm>
#include <cmath>
#include <complex>
#include <functional>
#include <numbers>
#include <vector>

#include "tmss/errors.hpp"
#include "tmss/filters.hpp"
#include "tmss/measures.hpp"

namespace tmss::oracle {

std::string_view to_string(Element e) {
  switch (e) {
    case Element::DI: return "D_I";
    case Element::DS: return "D_S";
    case Element::C11: return "C11";
    case Element::C12: return "C12";
  }
  return "?";
}

namespace {

double heaviside(double x) { return x >= 0.0 ? 1.0 : 0.0; }

// Filter-side factor A(s), s = t - t' >= 0.
double filter_factor(Element e, const ScenarioParams& p, double s) {
  const std::complex<double> hk = eval_filter(p.filter_i, s);
  const std::complex<double> hl = eval_filter(p.filter_s, s);
  switch (e) {
    case Element::DI: return hk.imag() * hk.imag() + hk.real() * hk.real();
    case Element::DS: return hl.imag() * hl.imag() + hl.real() * hl.real();
    case Element::C11: return hk.imag() * hl.imag() + hk.real() * hl.real();
    case Element::C12: return hk.imag() * hl.real() - hl.imag() * hk.real();
  }
  return 0.0;
}

// Bath-side factor B(t') before filtering.
double bath_factor(Element e, const ScenarioParams& p, double tp) {
  const double ch = std::cosh(2.0 * p.r);
  const double sh = std::sinh(2.0 * p.r);
  const double on = heaviside(tp);
  if (p.scenario == Scenario::TMSTDF) {
    const double pi = p.n_i * on * (1.0 - std::exp(-2.0 * p.kappa_i * tp)) + 0.5;
    const double ps = p.n_s * on * (1.0 - std::exp(-2.0 * p.kappa_s * tp)) + 0.5;
    switch (e) {
      case Element::DI: return (pi + ps) * ch + pi - ps;
      case Element::DS: return (pi + ps) * ch - pi + ps;
      case Element::C11: return (pi + ps) * sh;
      case Element::C12: return (pi - ps) * sh;
    }
  } else {
    const double off = 1.0 - on;
    switch (e) {
      case Element::DI:
        return on * (2.0 * p.n_i + 1.0) * (1.0 - std::exp(-2.0 * p.kappa_i * tp)) +
               (off + on * std::exp(-2.0 * p.kappa_i * tp)) * ch;
      case Element::DS:
        return on * (2.0 * p.n_s + 1.0) * (1.0 - std::exp(-2.0 * p.kappa_s * tp)) +
               (off + on * std::exp(-2.0 * p.kappa_s * tp)) * ch;
      case Element::C11:
        return (off + on * std::exp(-(p.kappa_i + p.kappa_s) * tp)) * sh;
      case Element::C12: return 0.0;
    }
  }
  return 0.0;
}

}  // namespace

QuadratureResult convolve_element(Element element, const ScenarioParams& params, double t,
                                  const QuadratureConfig& cfg) {
  params.validate();
  cfg.validate();
  if (!(t >= 0.0) || !std::isfinite(t)) throw DomainError("t must be >= 0");
  // The TDTMSV cross-quadrature correlation vanishes identically.
  if (params.scenario == Scenario::TDTMSV && element == Element::C12) return {};

  const FilterSpec& fi = params.filter_i;
  const FilterSpec& fs = params.filter_s;
  double window = 0.0;
  double segment = 0.0;
  switch (element) {
    case Element::DI:
      window = support_end(fi);
      segment = fi.tau;
      break;
    case Element::DS:
      window = support_end(fs);
      segment = fs.tau;
      break;
    case Element::C11:
    case Element::C12: {
      window = std::min(support_end(fi), support_end(fs));
      segment = std::min(fi.tau, fs.tau);
      const double beat = std::abs(fi.omega - fs.omega);
      if (beat > 0.0) segment = std::min(segment, std::numbers::pi / beat);
      break;
    }
  }
  // Integrate over s = t - t' in [0, window]; the switch-on instant is s = t.
  const double switch_on[] = {t};
  const auto breaks = segment_breakpoints(0.0, window, segment, switch_on);
  auto integrand = [&](double s) { return filter_factor(element, params, s) * bath_factor(element, params, t - s); };
  return integrate_piecewise(integrand, breaks, cfg);
}

double grid_bell_max(const CovMatrix& v, double half_width, int points_per_axis, Execution execution) {
  if (points_per_axis < 3) throw DomainError("grid_bell_max: points_per_axis must be >= 3");
  if (!(half_width > 0.0)) throw DomainError("grid_bell_max: half_width must be > 0");
  const WignerFunction w(v);
  const int n = points_per_axis;
  std::vector<double> axis(n);
  for (int k = 0; k < n; ++k) axis[k] = -half_width + 2.0 * half_width * k / (n - 1);

  // Local settings: every (q, p) pair on the grid.
  const int local = n * n;
  std::vector<Eigen::Vector2d> pts;
  pts.reserve(local);
  for (int a = 0; a < n; ++a)
    for (int b = 0; b < n; ++b) pts.emplace_back(axis[a], axis[b]);

  // table[a * local + b] = pi^2/4 W(pts[a], pts[b]).
  constexpr double weight = std::numbers::pi * std::numbers::pi / 4.0;
  std::vector<double> table(static_cast<std::size_t>(local) * local);
  for (int a = 0; a < local; ++a)
    for (int b = 0; b < local; ++b)
      table[static_cast<std::size_t>(a) * local + b] =
          weight * w(Eigen::Vector4d(pts[a](0), pts[a](1), pts[b](0), pts[b](1)));

  auto best_for = [&](int a0) {
    double best = 0.0;
    const double* row0 = &table[static_cast<std::size_t>(a0) * local];
    for (int a1 = 0; a1 < local; ++a1) {
      const double* row1 = &table[static_cast<std::size_t>(a1) * local];
      for (int b0 = 0; b0 < local; ++b0) {
        const double base = row0[b0] + row1[b0];
        for (int b1 = 0; b1 < local; ++b1) {
          best = std::max(best, std::abs(base + row0[b1] - row1[b1]));
        }
      }
    }
    return best;
  };

  std::vector<double> per_row(local, 0.0);
  if (execution == Execution::Parallel) {
#pragma omp parallel for schedule(static)
    for (int a0 = 0; a0 < local; ++a0) per_row[a0] = best_for(a0);
  } else {
    for (int a0 = 0; a0 < local; ++a0) per_row[a0] = best_for(a0);
  }
  return *std::max_element(per_row.begin(), per_row.end());
}

}  // namespace tmss::oracle
