#include "galled_census/asymptotics.hpp"

#include <cmath>
#include <vector>

namespace galled {

namespace {

// ln of the family constant in front of n^-1 (8/e^2)^n n^(2n):
//   one_component, fdu: sqrt(2 e^(1/2)) / 4
//   galled:             sqrt(2 e^(5/4)) / 4
//   dup:                sqrt(2 e^(3/2)) / 4
// near_max (offset k):  sqrt(2) / (k! 2^(k+2) e^(1/4))
double ln_constant(Family family, std::optional<int> k) {
  switch (family) {
    case Family::one_component:
    case Family::fdu:
      return 0.5 * (std::log(2.0) + 0.5) - std::log(4.0);
    case Family::galled:
      return 0.5 * (std::log(2.0) + 1.25) - std::log(4.0);
    case Family::dup:
      return 0.5 * (std::log(2.0) + 1.5) - std::log(4.0);
    case Family::one_component_near_max: {
      if (!k) throw std::domain_error("log_asym: near_max family requires k");
      if (*k < 0) throw std::domain_error("log_asym: k must be >= 0");
      return 0.5 * std::log(2.0) - ln(factorial(*k)) - (*k + 2) * std::log(2.0) - 0.25;
    }
  }
  throw std::domain_error("log_asym: unknown family");
}

}  // namespace galled::(anonymous)

LogEstimate log_asym(Family family, int n, std::optional<int> k) {
  if (n < 2) throw std::domain_error("log_asym: n must be >= 2");
  if (family != Family::one_component_near_max && k.has_value()) {
    throw std::domain_error("log_asym: k is only meaningful for the near_max family");
  }
  double ln_n = std::log(static_cast<double>(n));
  double v = ln_constant(family, k) - ln_n + n * (std::log(8.0) - 2.0) + 2.0 * n * ln_n;
  return LogEstimate{family, n, k, v};
}

namespace {

// Coefficients of (1 + 2z + 3z^2)^j.
std::vector<Integer> poly123_pow(int j) {
  std::vector<Integer> p{1};
  for (int s = 0; s < j; ++s) {
    std::vector<Integer> q(p.size() + 2);
    for (std::size_t i = 0; i < p.size(); ++i) {
      q[i] += p[i];
      q[i + 1] += 2 * p[i];
      q[i + 2] += 3 * p[i];
    }
    p = std::move(q);
  }
  return p;
}

}  // namespace galled::(anonymous)

Rational laurent_coeff(int j, int m) {
  if (j < 0) throw std::domain_error("laurent_coeff: j must be >= 0");
  std::vector<Integer> p = poly123_pow(j);
  // sum over polynomial degree l >= max(0, m); the e^(1/(2z)) factor
  // contributes 1/(2^d d!) at Laurent degree -d with d = l - m.
  Rational total(0);
  for (int l = std::max(0, m); l <= 2 * j; ++l) {
    long d = l - m;
    total += Rational(p[l]) / Rational(int_pow(2, d) * factorial(d));
  }
  return total;
}

Rational limit_pmf_xy_rational(int j, int k) {
  if (j < 0) throw std::domain_error("limit_pmf_xy: j must be >= 0");
  if (k < -j) return Rational(0);
  return laurent_coeff(j, j - k) / Rational(int_pow(16, j) * factorial(j));
}

double limit_pmf_xy(int j, int k) {
  static const double scale = std::exp(-7.0 / 8.0);
  return scale * limit_pmf_xy_rational(j, k).get_d();
}

double limit_x_marginal(int j) { return poisson_pmf(3.0 / 8.0, j); }

LimitPmfXY build_limit_pmf(int truncation_j, int truncation_k) {
  if (truncation_j < 0 || truncation_k < 0) {
    throw std::domain_error("build_limit_pmf: negative truncation");
  }
  LimitPmfXY t;
  t.truncation_j = truncation_j;
  t.truncation_k = truncation_k;
  for (int j = 0; j <= truncation_j; ++j) {
    for (int k = -j; k <= truncation_k; ++k) {
      Rational r = limit_pmf_xy_rational(j, k);
      double v = std::exp(-7.0 / 8.0) * r.get_d();
      t.rational_parts[{j, k}] = std::move(r);
      t.cells[{j, k}] = v;
      t.total_mass += v;
    }
  }
  return t;
}

Moments limit_moments(int truncation_j, int truncation_k) {
  LimitPmfXY t = build_limit_pmf(truncation_j, truncation_k);
  if (1.0 - t.total_mass >= 1e-12) {
    throw std::invalid_argument("limit_moments: truncation leaves residual mass >= 1e-12");
  }
  Moments m;
  m.total_mass = t.total_mass;
  double m2 = 0.0;
  for (const auto& [jk, p] : t.cells) {
    m.mean += jk.second * p;
    m2 += static_cast<double>(jk.second) * jk.second * p;
  }
  m.variance = m2 - m.mean * m.mean;
  return m;
}

double poisson_pmf(double lambda, int k) {
  if (lambda <= 0.0) throw std::domain_error("poisson_pmf: lambda must be positive");
  if (k < 0) throw std::domain_error("poisson_pmf: k must be >= 0");
  return std::exp(-lambda + k * std::log(lambda) - std::lgamma(k + 1.0));
}

}  // namespace galled
