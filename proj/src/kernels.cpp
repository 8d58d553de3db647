/*
 * SPDX-License-Identifier: Apache-2.0
 */
#include "tmss/kernels.hpp"

#include <algorithm>
#include <cmath>
#include <complex>

#include "tmss/errors.hpp"

namespace tmss {
namespace {

// Below this |x| the closed forms below are replaced by their Taylor series.
constexpr double kSeriesThreshold = 1e-4;

// expm1(x) / x, with the removable singularity at 0.
double expm1_ratio(double x) {
  if (std::abs(x) < kSeriesThreshold) {
    return 1.0 + x / 2.0 * (1.0 + x / 3.0 * (1.0 + x / 4.0 * (1.0 + x / 5.0)));
  }
  return std::expm1(x) / x;
}

// (exp(z L) - 1) / z for complex z, accurate for small |z L| and for z -> 0.
std::complex<double> exp_window(std::complex<double> z, double length) {
  const std::complex<double> w = z * length;
  if (std::abs(w) < kSeriesThreshold) {
    return length * (1.0 + w / 2.0 * (1.0 + w / 3.0 * (1.0 + w / 4.0 * (1.0 + w / 5.0))));
  }
  // expm1(a + ib) = expm1(a) cos b - 2 sin^2(b/2) + i exp(a) sin b
  const double a = w.real();
  const double b = w.imag();
  const double half = std::sin(b / 2.0);
  const std::complex<double> em1(std::expm1(a) * std::cos(b) - 2.0 * half * half,
                                 std::exp(a) * std::sin(b));
  return em1 / z;
}

double sinc(double x) {
  if (std::abs(x) < kSeriesThreshold) return 1.0 - x * x / 6.0 * (1.0 - x * x / 20.0);
  return std::sin(x) / x;
}

}  // namespace

void KernelArgs::validate() const {
  filter_i.validate();
  filter_s.validate();
  if (filter_i.family != filter_s.family) throw DomainError("kernel filters must share a family");
  if (!(kappa >= 0.0) || !std::isfinite(kappa)) throw DomainError("kappa must be >= 0");
  if (!(t >= 0.0) || !std::isfinite(t)) throw DomainError("t must be >= 0");
}

CrossKernels cross_kernels(const KernelArgs& args) {
  args.validate();
  const double tau_i = args.filter_i.tau;
  const double tau_s = args.filter_s.tau;
  const double d_omega = args.filter_i.omega - args.filter_s.omega;
  const double root = std::sqrt(tau_i * tau_s);

  double norm = 0.0;
  double rate = 0.0;
  double length = 0.0;
  if (args.filter_i.family == FilterFamily::Step) {
    norm = 1.0 / root;
    rate = 2.0 * args.kappa;
    length = std::min({args.t, tau_i, tau_s});
  } else {
    norm = 2.0 / root;
    rate = 2.0 * args.kappa - 1.0 / tau_i - 1.0 / tau_s;
    length = args.t;
  }
  // int_0^L exp(rate u) (cos(dOmega u) + i sin(dOmega u)) du
  const std::complex<double> v = exp_window({rate, d_omega}, length);
  return {norm * v.real(), norm * v.imag()};
}

double j_s(const KernelArgs& args) { return cross_kernels(args).js; }

double j_c(const KernelArgs& args) { return cross_kernels(args).jc; }

double i_window(FilterFamily family, double tau_party, double kappa, double t) {
  if (!(tau_party > 0.0)) throw DomainError("tau must be > 0");
  if (!(kappa >= 0.0)) throw DomainError("kappa must be >= 0");
  if (!(t >= 0.0)) throw DomainError("t must be >= 0");
  if (family == FilterFamily::Step) {
    const double length = std::min(t, tau_party);
    return length / tau_party * expm1_ratio(2.0 * kappa * length);
  }
  const double rate = 2.0 * (kappa - 1.0 / tau_party);
  return 2.0 * t / tau_party * expm1_ratio(rate * t);
}

double k_f(const FilterSpec& filter_i, const FilterSpec& filter_s) {
  filter_i.validate();
  filter_s.validate();
  if (filter_i.family != filter_s.family) throw DomainError("k_f: filters must share a family");
  const double tau_i = filter_i.tau;
  const double tau_s = filter_s.tau;
  const double d_omega = filter_i.omega - filter_s.omega;
  const double root = std::sqrt(tau_i * tau_s);
  if (filter_i.family == FilterFamily::Step) {
    const double tau = std::min(tau_i, tau_s);
    return tau / root * sinc(tau * d_omega);
  }
  const double g = 1.0 / tau_i + 1.0 / tau_s;
  return 2.0 / root * g / (g * g + d_omega * d_omega);
}

double thermal_occupancy(double n, double kappa, double t) {
  if (t < 0.0) return 0.5;
  return -n * std::expm1(-2.0 * kappa * t) + 0.5;
}

}  // namespace tmss
