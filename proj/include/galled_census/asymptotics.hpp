#pragma once

#include <map>
#include <optional>
#include <utility>

#include "galled_census/arith.hpp"

namespace galled {

// Counting families with a known first-order asymptotic of the form
// constant * n^-1 * (8/e^2)^n * n^(2n). `one_component_near_max` is the
// per-k refinement 1-GN_{n,n-k} for small k.
enum class Family { one_component, galled, dup, fdu, one_component_near_max };

struct LogEstimate {
  Family family;
  int n = 0;
  std::optional<int> k;
  double ln_value = 0.0;
};

// Natural log of the first-order asymptotic formula for the family at n
// (and offset k for near_max). Throws std::domain_error for n < 2, a missing
// or extraneous k, or negative k.
LogEstimate log_asym(Family family, int n, std::optional<int> k = std::nullopt);

// [z^m] e^(1/(2z)) (1+2z+3z^2)^j as an exact rational: a finite sum of
// polynomial coefficients against 1/(2^d d!) Laurent terms. m may be negative.
Rational laurent_coeff(int j, int m);

// P(X=j, Y=k) = e^(-7/8)/(16^j j!) [z^(j-k)] e^(1/(2z)) (1+2z+3z^2)^j,
// the limit law of (inner reticulations, n - reticulations). Zero for k < -j.
double limit_pmf_xy(int j, int k);

// The exact rational part of limit_pmf_xy: pmf = e^(-7/8) * this.
Rational limit_pmf_xy_rational(int j, int k);

// P(X=j): Poisson(3/8).
double limit_x_marginal(int j);

// Truncated limit pmf cells with the rational factor retained.
struct LimitPmfXY {
  int truncation_j = 0;
  int truncation_k = 0;
  // (j, k) -> probability; cells with j in 0..J, k in -j..K
  std::map<std::pair<int, int>, double> cells;
  std::map<std::pair<int, int>, Rational> rational_parts;
  double total_mass = 0.0;
};

LimitPmfXY build_limit_pmf(int truncation_j, int truncation_k);

// Mean and variance of Y under the truncated limit pmf. Throws
// std::invalid_argument when the truncation leaves residual mass >= 1e-12.
struct Moments {
  double mean = 0.0;
  double variance = 0.0;
  double total_mass = 0.0;
};

Moments limit_moments(int truncation_j, int truncation_k);

// Standard Poisson pmf; lambda <= 0 is a domain error.
double poisson_pmf(double lambda, int k);

}  // namespace galled
