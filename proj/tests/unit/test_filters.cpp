/*
 * SPDX-License-Identifier: Apache-2.0
 */
#include <doctest.h>

#include <cmath>
#include <complex>
#include <numbers>

#include "helpers.hpp"
#include "tmss/errors.hpp"
#include "tmss/filters.hpp"

using namespace tmss;

TEST_CASE("eval_filter reference values") {
  const FilterSpec step{FilterFamily::Step, 1.0, 0.2};
  CHECK(eval_filter(step, -0.1) == std::complex<double>(0.0, 0.0));
  const FilterSpec step_any{FilterFamily::Step, 3.7, 0.2};
  CHECK(eval_filter(step_any, 0.0).real() == doctest::Approx(2.2360679774997896).epsilon(1e-15));
  CHECK(eval_filter(step_any, 0.0).imag() == 0.0);
  CHECK(eval_filter(step, 0.2) == std::complex<double>(0.0, 0.0));

  const FilterSpec ex{FilterFamily::Exponential, 1.0, 0.2};
  const std::complex<double> expected = std::exp(-0.5) * std::exp(std::complex<double>(0.0, -0.1)) / std::sqrt(0.1);
  const auto got = eval_filter(ex, 0.1);
  CHECK(std::abs(got - expected) < 1e-15);
}

TEST_CASE("filters are normalized and the step comb is orthogonal") {
  for (auto fam : {FilterFamily::Step, FilterFamily::Exponential}) {
    for (double tau : {0.05, 0.2, 1.0}) {
      const FilterSpec f{fam, 0.7, tau};
      CHECK(orthonormality_defect(f, f) < 1e-9);
    }
  }
  const double tau = 0.2;
  const double pi = std::numbers::pi;
  const FilterSpec a{FilterFamily::Step, 1.0, tau};
  for (int k : {1, 2, -3}) {
    const FilterSpec b{FilterFamily::Step, 1.0 - k * 2.0 * pi / tau, tau};
    CHECK(orthonormality_defect(a, b) < 1e-9);
  }
  const FilterSpec off{FilterFamily::Step, 1.0 - pi / tau, tau};
  CHECK(orthonormality_defect(a, off) > 0.1);
}

TEST_CASE("support and monotone envelope") {
  const FilterSpec step{FilterFamily::Step, 2.0, 0.3};
  CHECK(support_end(step) == 0.3);
  CHECK(std::abs(eval_filter(step, 0.2999)) > 0.0);
  CHECK(std::abs(eval_filter(step, 0.3)) == 0.0);
  const FilterSpec ex{FilterFamily::Exponential, 2.0, 0.3};
  CHECK(support_end(ex) == doctest::Approx(kExponentialTruncation * 0.3));
  double prev = std::abs(eval_filter(ex, 0.0));
  for (double t = 0.01; t < 5.0; t += 0.01) {
    const double now = std::abs(eval_filter(ex, t));
    CHECK(now < prev);
    prev = now;
  }
}

TEST_CASE("validation and parsing") {
  CHECK_THROWS_AS((FilterSpec{FilterFamily::Step, 1.0, 0.0}.validate()), DomainError);
  CHECK_THROWS_AS((FilterSpec{FilterFamily::Step, NAN, 0.2}.validate()), DomainError);
  CHECK(parse_filter_family("step") == FilterFamily::Step);
  CHECK(parse_filter_family("exp") == FilterFamily::Exponential);
  CHECK(parse_filter_family(to_string(FilterFamily::Exponential)) == FilterFamily::Exponential);
  CHECK_THROWS_AS(parse_filter_family("gauss"), DomainError);
  CHECK_THROWS_AS(orthonormality_defect({FilterFamily::Step, 1, 0.2}, {FilterFamily::Exponential, 1, 0.2}),
                  DomainError);
}
