/*
 * SPDX-License-Identifier: Apache-2.0
 */
#include <doctest.h>

#include <cmath>
#include <utility>

#include "helpers.hpp"
#include "tmss/covariance.hpp"
#include "tmss/errors.hpp"
#include "tmss/kernels.hpp"
#include "tmss/oracle.hpp"
#include "tmss/sweeps.hpp"
#include "tmss/verify.hpp"

using namespace tmss;
using test::close;

TEST_CASE("element layout round-trips") {
  const auto v = CovMatrix::from_elements(1.5, 2.5, 0.3, -0.2, 0.1, -0.4);
  CHECK(v.d_i() == 1.5);
  CHECK(v.d_s() == 2.5);
  CHECK(v.c11() == 0.3);
  CHECK(v.c12() == -0.2);
  CHECK(v.c21() == 0.1);
  CHECK(v.c22() == -0.4);
  CHECK(v.v_corr()(0, 0) == 0.15);
  CHECK(v.matrix() == v.matrix().transpose());
  const auto w = v.swapped_parties();
  CHECK(w.d_i() == 2.5);
  CHECK(w.d_s() == 1.5);
  CHECK(w.v_corr() == v.v_corr().transpose());

  Eigen::Matrix4d m = Eigen::Matrix4d::Identity();
  m(0, 1) = 0.1;
  CHECK_THROWS_AS(CovMatrix::from_matrix(m), DomainError);
}

TEST_CASE("TMSTDF pure-state limit") {
  for (double r : {0.1, 0.5, 1.0, 2.0}) {
    const auto p = test::identical_filters(Scenario::TMSTDF, FilterFamily::Step, r, 0.0, 0.07);
    const auto v = assemble(p, 30.0);
    CHECK(close(v.d_i(), std::cosh(2 * r), 1e-14));
    CHECK(close(v.d_s(), std::cosh(2 * r), 1e-14));
    CHECK(close(v.c11(), std::sinh(2 * r), 1e-14));
    CHECK(v.c12() == 0.0);
    CHECK(v.c22() == -v.c11());
  }
}

TEST_CASE("no squeezing means no correlations") {
  for (auto sc : {Scenario::TMSTDF, Scenario::TDTMSV}) {
    for (auto fam : {FilterFamily::Step, FilterFamily::Exponential}) {
      auto p = test::identical_filters(sc, fam, 0.0, 0.8, 0.1);
      p.filter_s = {fam, 0.6, 0.5};
      p.n_s = 0.3;
      double prev = 0.0;
      for (double t : {0.0, 0.1, 1.0, 10.0, 200.0}) {
        const auto v = assemble(p, t);
        CHECK(v.c11() == 0.0);
        CHECK(v.c12() == 0.0);
        CHECK(v.d_i() >= 1.0 - 1e-15);
        CHECK(v.d_s() >= 1.0 - 1e-15);
        CHECK(v.d_i() >= prev - 1e-15);
        prev = v.d_i();
      }
      CHECK(close(assemble(p, 0.0).d_i(), 1.0, 1e-15));
      CHECK(close(assemble(p, 2000.0).d_i(), 2.0 * 0.8 + 1.0, 1e-9));
      CHECK(close(assemble(p, 2000.0).d_s(), 2.0 * 0.3 + 1.0, 1e-9));
    }
  }
}

TEST_CASE("fig2 preset at T = 0.5 matches direct convolution") {
  const auto p = test::identical_filters(Scenario::TMSTDF, FilterFamily::Step, 1.0, 0.6, 0.07);
  const double t = normalized_time(0.07, 0.5);
  const auto v = assemble(p, t);
  const double di = oracle::convolve_element(oracle::Element::DI, p, t).value;
  const double ds = oracle::convolve_element(oracle::Element::DS, p, t).value;
  const double c11 = oracle::convolve_element(oracle::Element::C11, p, t).value;
  const double c12 = oracle::convolve_element(oracle::Element::C12, p, t).value;
  CHECK(close(v.d_i(), di, 1e-6));
  CHECK(close(v.d_s(), ds, 1e-6));
  CHECK(close(v.c11(), c11, 1e-6));
  CHECK(std::abs(v.c12() - c12) < 1e-10);
}

TEST_CASE("TDTMSV limits") {
  for (auto fam : {FilterFamily::Step, FilterFamily::Exponential}) {
    auto p = test::identical_filters(Scenario::TDTMSV, fam, 0.8, 0.4, 0.1);
    const auto v0 = assemble(p, 0.0);
    CHECK(close(v0.d_i(), std::cosh(1.6), 1e-14));
    CHECK(close(v0.d_s(), std::cosh(1.6), 1e-14));
    CHECK(close(v0.c11(), std::sinh(1.6) * k_f(p.filter_i, p.filter_s), 1e-14));
  }
  auto p = test::identical_filters(Scenario::TDTMSV, FilterFamily::Step, 0.8, 0.4, 0.1);
  p.filter_s = {FilterFamily::Step, 1.3, 0.25};
  const auto late = assemble(p, 500.0);
  CHECK(close(late.d_i(), 1.8, 1e-12));
  CHECK(close(late.d_s(), 1.8, 1e-12));
  CHECK(std::abs(late.c11()) < 1e-12);
  CHECK(late.c12() == 0.0);
}

TEST_CASE("TMSTDF identical filters have no C12") {
  for (auto fam : {FilterFamily::Step, FilterFamily::Exponential}) {
    auto p = test::identical_filters(Scenario::TMSTDF, fam, 0.7, 0.3, 0.05);
    p.n_s = 1.2;
    p.kappa_s = 0.4;
    for (double t : {0.0, 0.1, 0.3, 5.0}) CHECK(assemble(p, t).c12() == 0.0);
  }
}

TEST_CASE("party exchange") {
  const auto draws = oracle::random_draws(Scenario::TMSTDF, 300, 17);
  for (const auto& d : draws) {
    ScenarioParams q = d.params;
    std::swap(q.filter_i, q.filter_s);
    std::swap(q.n_i, q.n_s);
    std::swap(q.kappa_i, q.kappa_s);
    const auto a = assemble(d.params, d.t);
    const auto b = assemble(q, d.t);
    CHECK(close(b.d_i(), a.d_s(), 1e-12, 1e-14));
    CHECK(close(b.d_s(), a.d_i(), 1e-12, 1e-14));
    CHECK(close(b.c11(), a.c11(), 1e-12, 1e-14));
    // Swapping both the filters and the baths flips dOmega and the J_s bath
    // weights together, so C12 keeps its sign.
    CHECK(close(b.c12(), a.c12(), 1e-12, 1e-14));
  }
}

TEST_CASE("symplectic eigenvalue reference values") {
  CHECK(close(min_symplectic_eigenvalue_full(CovMatrix::vacuum()), 0.5, 1e-15));
  for (double r : {0.1, 1.0, 2.0}) {
    CHECK(std::abs(min_symplectic_eigenvalue_full(CovMatrix::tmsv(r)) - 0.5) < 1e-9);
    const auto p = test::identical_filters(Scenario::TMSTDF, FilterFamily::Step, r, 0.0, 0.1);
    CHECK(std::abs(min_symplectic_eigenvalue_full(assemble(p, 5.0)) - 0.5) < 1e-9);
  }
  const auto diag = CovMatrix::from_elements(2 * 0.9, 2 * 0.7, 0, 0, 0, 0);
  CHECK(close(min_symplectic_eigenvalue_full(diag), 0.7, 1e-14));
}

TEST_CASE("physicality over random draws, per scenario and family") {
  for (auto sc : {Scenario::TMSTDF, Scenario::TDTMSV}) {
    int per_family[2] = {0, 0};
    double worst = 1e300;
    for (const auto& d : oracle::random_draws(sc, 2400, 4242)) {
      ++per_family[d.params.filter_i.family == FilterFamily::Step ? 0 : 1];
      worst = std::min(worst, min_symplectic_eigenvalue_full(assemble(d.params, d.t)));
    }
    CHECK(per_family[0] >= 1000);
    CHECK(per_family[1] >= 1000);
    CHECK(worst >= 0.5 - 1e-9);
  }
}

TEST_CASE("input validation") {
  auto p = test::identical_filters(Scenario::TMSTDF, FilterFamily::Step, 1.0, 0.6, 0.07);
  p.r = -1.0;
  CHECK_THROWS_AS(assemble(p, 1.0), DomainError);
  p.r = 1.0;
  p.kappa_s = 0.0;
  CHECK_THROWS_AS(assemble(p, 1.0), DomainError);
  p.kappa_s = 0.07;
  p.filter_s.family = FilterFamily::Exponential;
  CHECK_THROWS_AS(assemble(p, 1.0), DomainError);
  p.filter_s.family = FilterFamily::Step;
  CHECK_THROWS_AS(assemble(p, -1.0), DomainError);
  CHECK_THROWS_AS(assemble_tdtmsv(p, 1.0), DomainError);
  CHECK(parse_scenario("tdtmsv") == Scenario::TDTMSV);
  CHECK_THROWS_AS(parse_scenario("other"), DomainError);
}
