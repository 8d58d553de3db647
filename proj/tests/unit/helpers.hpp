/*
 * SPDX-License-Identifier: Apache-2.0
 */
#pragma once

#include <algorithm>
#include <cmath>
#include <random>

#include "tmss/covariance.hpp"

namespace tmss::test {

// |a - b| <= max(rel |b|, abs)
inline bool close(double a, double b, double rel, double abs = 0.0) {
  return std::abs(a - b) <= std::max(rel * std::abs(b), abs);
}

inline ScenarioParams identical_filters(Scenario scenario, FilterFamily family, double r, double n, double kappa,
                                        double tau = 0.2) {
  ScenarioParams p;
  p.scenario = scenario;
  p.r = r;
  p.n_i = p.n_s = n;
  p.kappa_i = p.kappa_s = kappa;
  p.filter_i = p.filter_s = FilterSpec{family, 1.0, tau};
  return p;
}

inline double uniform(std::mt19937_64& rng, double lo, double hi) {
  return std::uniform_real_distribution<double>(lo, hi)(rng);
}

}  // namespace tmss::test
