/*
 * SPDX-License-Identifier: Apache-2.0
 */
#include "tmss/verify.hpp"

#include <algorithm>
#include <array>
#include <cmath>
#include <random>

#include "tmss/errors.hpp"

namespace tmss::oracle {

std::vector<Draw> random_draws(Scenario scenario, int count, std::uint64_t seed) {
  std::seed_seq seq{static_cast<std::uint32_t>(seed), static_cast<std::uint32_t>(seed >> 32),
                    static_cast<std::uint32_t>(scenario)};
  std::mt19937_64 rng(seq);
  auto uniform = [&](double a, double b) { return std::uniform_real_distribution<double>(a, b)(rng); };

  std::vector<Draw> draws;
  draws.reserve(count);
  for (int i = 0; i < count; ++i) {
    Draw d;
    auto& p = d.params;
    p.scenario = scenario;
    const FilterFamily family = uniform(0.0, 1.0) < 0.5 ? FilterFamily::Step : FilterFamily::Exponential;
    const double omega_k = uniform(-2.0, 2.0);
    const double d_omega = uniform(-5.0, 5.0);
    p.filter_i = {family, omega_k, uniform(0.05, 1.0)};
    p.filter_s = {family, omega_k - d_omega, uniform(0.05, 1.0)};
    p.kappa_i = uniform(0.01, 0.5);
    p.kappa_s = uniform(0.01, 0.5);
    p.r = uniform(0.0, 2.0);
    p.n_i = uniform(0.0, 2.0);
    p.n_s = uniform(0.0, 2.0);
    d.t = uniform(0.0, 50.0);
    draws.push_back(d);
  }
  return draws;
}

bool VerifyReport::pass() const {
  return std::all_of(elements.begin(), elements.end(), [](const auto& e) { return e.pass; }) &&
         std::all_of(physicality.begin(), physicality.end(), [](const auto& p) { return p.pass; });
}

namespace {

constexpr std::array kElements{Element::DI, Element::DS, Element::C11, Element::C12};

struct DrawOutcome {
  bool assembled = false;
  double min_symplectic = 0.0;
  std::array<double, 4> rel_error{};
  std::array<bool, 4> quadrature_ok{};
};

double closed_form(const CovMatrix& v, Element e) {
  switch (e) {
    case Element::DI: return v.d_i();
    case Element::DS: return v.d_s();
    case Element::C11: return v.c11();
    case Element::C12: return v.c12();
  }
  return 0.0;
}

DrawOutcome check_draw(const Draw& d, const QuadratureConfig& quadrature) {
  DrawOutcome out;
  CovMatrix v = CovMatrix::vacuum();
  try {
    v = assemble(d.params, d.t);
    out.assembled = true;
  } catch (const UnphysicalState& e) {
    out.min_symplectic = e.min_symplectic();
    return out;
  }
  out.min_symplectic = min_symplectic_eigenvalue_full(v);
  for (std::size_t k = 0; k < kElements.size(); ++k) {
    try {
      const double ref = convolve_element(kElements[k], d.params, d.t, quadrature).value;
      out.rel_error[k] = std::abs(closed_form(v, kElements[k]) - ref) / std::max(std::abs(ref), 1e-4);
      out.quadrature_ok[k] = true;
    } catch (const NonConvergentQuadrature&) {
      out.quadrature_ok[k] = false;
    }
  }
  return out;
}

}  // namespace

VerifyReport cross_check(int draws_per_scenario, std::uint64_t seed, double tolerance,
                         const QuadratureConfig& quadrature, Execution execution) {
  VerifyReport report;
  for (Scenario scenario : {Scenario::TMSTDF, Scenario::TDTMSV}) {
    const auto draws = random_draws(scenario, draws_per_scenario, seed);
    std::vector<DrawOutcome> outcomes(draws.size());
    const auto count = static_cast<long>(draws.size());
    if (execution == Execution::Parallel) {
#pragma omp parallel for schedule(dynamic)
      for (long i = 0; i < count; ++i) outcomes[i] = check_draw(draws[i], quadrature);
    } else {
      for (long i = 0; i < count; ++i) outcomes[i] = check_draw(draws[i], quadrature);
    }

    PhysicalityCheck phys{scenario, static_cast<int>(draws.size()), 0.5, 0, false};
    phys.min_symplectic = draws.empty() ? 0.5 : outcomes.front().min_symplectic;
    for (const auto& o : outcomes) {
      phys.min_symplectic = std::min(phys.min_symplectic, o.min_symplectic);
      if (!o.assembled) ++phys.unphysical;
    }
    phys.pass = phys.unphysical == 0 && phys.min_symplectic >= 0.5 - kPhysicalityTolerance;
    report.physicality.push_back(phys);

    for (std::size_t k = 0; k < kElements.size(); ++k) {
      ElementCheck chk{scenario, kElements[k], static_cast<int>(draws.size())};
      for (std::size_t i = 0; i < outcomes.size(); ++i) {
        const auto& o = outcomes[i];
        if (!o.assembled) continue;
        if (!o.quadrature_ok[k]) {
          ++chk.quadrature_failures;
          continue;
        }
        if (chk.worst_draw < 0 || o.rel_error[k] > chk.max_rel_error) {
          chk.max_rel_error = o.rel_error[k];
          chk.worst_draw = static_cast<int>(i);
        }
      }
      chk.pass = chk.quadrature_failures == 0 && phys.unphysical == 0 && chk.max_rel_error <= tolerance;
      report.elements.push_back(chk);
    }
  }
  return report;
}

}  // namespace tmss::oracle
