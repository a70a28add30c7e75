#include <doctest.h>

#include <cmath>

#include "galled_census/asymptotics.hpp"
#include "galled_census/one_component.hpp"

using namespace galled;

TEST_CASE("ln of a big integer") {
  Integer big = 1;
  big <<= 100;
  CHECK(std::abs(ln(big) - 100 * std::log(2.0)) < 1e-9);
  CHECK_THROWS_AS(ln(Integer(0)), std::domain_error);
}

TEST_CASE("asymptotic constants differ by the predicted gaps") {
  for (int n : {2, 5, 17, 100, 1000}) {
    double gn = log_asym(Family::galled, n).ln_value;
    double oc = log_asym(Family::one_component, n).ln_value;
    double du = log_asym(Family::dup, n).ln_value;
    double fd = log_asym(Family::fdu, n).ln_value;
    CHECK(std::abs((gn - oc) - 0.375) < 1e-12);  // fraction e^-3/8
    CHECK(std::abs((du - fd) - 0.5) < 1e-12);    // fraction e^-1/2
    CHECK_EQ(oc, fd);
  }
}

TEST_CASE("one-component estimate at n = 7") {
  NTable t = NTable::build(8);
  double exact = ln(one_component_total(7, t));
  double asym = log_asym(Family::one_component, 7).ln_value;
  CHECK(std::abs((exact - asym) - 0.064235) < 1e-4);
}

TEST_CASE("log_asym argument checking") {
  CHECK_THROWS_AS(log_asym(Family::galled, 1), std::domain_error);
  CHECK_THROWS_AS(log_asym(Family::galled, 10, 2), std::domain_error);
  CHECK_THROWS_AS(log_asym(Family::one_component_near_max, 10), std::domain_error);
  CHECK_THROWS_AS(log_asym(Family::one_component_near_max, 10, -1), std::domain_error);
  LogEstimate e = log_asym(Family::one_component_near_max, 10, 2);
  CHECK_EQ(e.n, 10);
  CHECK_EQ(*e.k, 2);
}

TEST_CASE("near-max refinement tracks the exact counts") {
  // 1-GN_{n,n-k} for small k; the relative error decays like (k^2+1)/n
  NTable t = NTable::build(41);
  for (int k = 0; k <= 2; ++k) {
    double exact = ln(one_component_count(40, 40 - k, t));
    double asym = log_asym(Family::one_component_near_max, 40, k).ln_value;
    CHECK(std::abs(exact - asym) < 0.2);
  }
}

TEST_CASE("laurent coefficients") {
  CHECK_EQ(laurent_coeff(0, 0), Rational(1));
  CHECK_EQ(laurent_coeff(0, -1), Rational(1, 2));
  CHECK_EQ(laurent_coeff(1, 1), Rational(7, 2));
  CHECK_EQ(laurent_coeff(0, 1), Rational(0));  // no positive powers at j = 0
  for (int j = 0; j <= 6; ++j) {
    for (int m = -10; m <= 2 * j; ++m) {
      CHECK(laurent_coeff(j, m) >= 0);
    }
  }
}

TEST_CASE("limit pmf values") {
  CHECK(std::abs(limit_pmf_xy(0, 0) - 0.416862) < 1e-6);
  // P(X=0, Y=k) = e^-7/8 / (2^k k!)
  for (int k = 0; k <= 6; ++k) {
    CHECK_EQ(limit_pmf_xy_rational(0, k), Rational(1) / Rational(int_pow(2, k) * factorial(k)));
  }
  CHECK_EQ(limit_pmf_xy(1, -2), 0.0);
  CHECK_EQ(limit_pmf_xy(3, -3), limit_pmf_xy(3, -3));  // defined at k = -j
}

TEST_CASE("X marginal is Poisson(3/8)") {
  for (int j = 0; j <= 10; ++j) {
    double sum = 0.0;
    for (int k = -j; k <= 40; ++k) sum += limit_pmf_xy(j, k);
    CHECK(std::abs(sum - limit_x_marginal(j)) < 1e-9);
  }
  CHECK(std::abs(limit_x_marginal(0) - std::exp(-0.375)) < 1e-12);
  CHECK(std::abs(limit_x_marginal(1) - 0.375 * std::exp(-0.375)) < 1e-12);
}

TEST_CASE("conditioning on X = 0 gives the Poisson(1/2) weights") {
  // P(X=0, Y=k) / P(X=0) = e^-1/2 / (2^k k!): the rational parts obey
  // r(0,k) / r(0,0) = 1/(2^k k!) exactly
  for (int k = 0; k <= 8; ++k) {
    Rational lhs = limit_pmf_xy_rational(0, k) / limit_pmf_xy_rational(0, 0);
    CHECK_EQ(lhs, Rational(1) / Rational(int_pow(2, k) * factorial(k)));
  }
}

TEST_CASE("truncated pmf is a sub-probability measure") {
  LimitPmfXY t = build_limit_pmf(12, 12);
  CHECK(t.total_mass <= 1.0 + 1e-12);
  for (const auto& [jk, p] : t.cells) CHECK(p >= 0.0);
  CHECK_EQ(t.cells.size(), t.rational_parts.size());
}

TEST_CASE("truncated moments of Y") {
  Moments m = limit_moments(40, 40);
  CHECK(std::abs(m.total_mass - 1.0) < 1e-9);
  CHECK(std::abs(m.mean - 0.375) < 1e-6);
  CHECK(std::abs(m.variance - 0.75) < 1e-6);
  CHECK_THROWS_AS(limit_moments(2, 2), std::invalid_argument);
}

TEST_CASE("poisson pmf") {
  CHECK(std::abs(poisson_pmf(0.5, 0) - 0.606531) < 1e-6);
  CHECK(std::abs(poisson_pmf(0.5, 1) - 0.303265) < 1e-6);
  CHECK(std::abs(poisson_pmf(0.375, 0) - std::exp(-0.375)) < 1e-12);
  CHECK_THROWS_AS(poisson_pmf(0.0, 1), std::domain_error);
  CHECK_THROWS_AS(poisson_pmf(-1.0, 1), std::domain_error);
}
