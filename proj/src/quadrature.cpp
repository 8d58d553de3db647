/*
 * SPDX-License-Identifier: Apache-2.0
 */
#include "tmss/quadrature.hpp"

#include <algorithm>
#include <cmath>
#include <limits>

#include <boost/math/quadrature/gauss_kronrod.hpp>
#include <fmt/format.h>

#include "tmss/errors.hpp"

namespace tmss {

void QuadratureConfig::validate() const {
  if (!(rel_tol > 0.0) || !(abs_tol > 0.0)) {
    throw DomainError("quadrature tolerances must be > 0");
  }
  if (max_subdivisions < 1) {
    throw DomainError("quadrature max_subdivisions must be >= 1");
  }
}

QuadratureResult integrate_piecewise(const std::function<double(double)>& f,
                                     std::span<const double> breakpoints,
                                     const QuadratureConfig& cfg) {
  cfg.validate();
  QuadratureResult out;
  if (breakpoints.size() < 2) return out;

  const auto segments = static_cast<double>(breakpoints.size() - 1);
  // Split the subdivision budget evenly; boost bisects each segment up to
  // max_depth levels.
  const double per_segment = std::max(2.0, cfg.max_subdivisions / segments);
  const auto depth = static_cast<unsigned>(std::max(3.0, std::ceil(std::log2(per_segment))));

  using gk = boost::math::quadrature::gauss_kronrod<double, 21>;
  for (std::size_t i = 0; i + 1 < breakpoints.size(); ++i) {
    const double a = breakpoints[i];
    const double b = breakpoints[i + 1];
    if (!(b > a)) continue;
    double err = 0.0;
    double l1 = 0.0;
    out.value += gk::integrate(f, a, b, depth, cfg.rel_tol, &err, &l1);
    out.error_estimate += err;
    out.l1 += l1;
  }

  const double allowed = std::max(cfg.abs_tol, cfg.rel_tol * out.l1);
  if (!(out.error_estimate <= allowed) || !std::isfinite(out.value)) {
    throw NonConvergentQuadrature(
        fmt::format("quadrature did not converge: error estimate {:.3e} > {:.3e}",
                    out.error_estimate, allowed),
        out.error_estimate);
  }
  return out;
}

std::vector<double> segment_breakpoints(double a, double b, double max_len,
                                        std::span<const double> extra) {
  std::vector<double> pts{a, b};
  if (max_len > 0.0 && std::isfinite(max_len)) {
    const auto n = static_cast<long>(std::ceil((b - a) / max_len));
    for (long k = 1; k < n; ++k) pts.push_back(a + (b - a) * static_cast<double>(k) / static_cast<double>(n));
  }
  for (double x : extra) {
    if (x > a && x < b) pts.push_back(x);
  }
  std::sort(pts.begin(), pts.end());
  // Drop near-duplicates so no segment is degenerate.
  const double eps = 64.0 * std::numeric_limits<double>::epsilon() * std::max({1.0, std::abs(a), std::abs(b)});
  std::vector<double> out;
  for (double x : pts) {
    if (out.empty() || x - out.back() > eps) out.push_back(x);
  }
  if (out.back() != b) out.back() = b;
  return out;
}

}  // namespace tmss
