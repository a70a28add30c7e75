#include "galled_census/arith.hpp"

#include <cmath>

namespace galled {

Integer double_factorial(long m) {
  if (m < -1 || (m % 2 + 2) % 2 != 1) {
    throw std::domain_error("double_factorial: argument must be odd and >= -1, got " +
                            std::to_string(m));
  }
  Integer r = 1;
  for (long v = m; v > 1; v -= 2) r *= v;
  return r;
}

Integer factorial(long n) {
  if (n < 0) throw std::domain_error("factorial: negative argument");
  Integer r;
  mpz_fac_ui(r.get_mpz_t(), static_cast<unsigned long>(n));
  return r;
}

Integer binomial(long n, long k) {
  if (k < 0 || k > n) return 0;
  Integer r;
  mpz_bin_uiui(r.get_mpz_t(), static_cast<unsigned long>(n), static_cast<unsigned long>(k));
  return r;
}

Integer int_pow(long base, unsigned long e) {
  Integer r;
  mpz_ui_pow_ui(r.get_mpz_t(), static_cast<unsigned long>(base), e);
  return r;
}

double ln(const Integer& v) {
  if (v <= 0) throw std::domain_error("ln: argument must be positive");
  signed long exp2;
  double mant = mpz_get_d_2exp(&exp2, v.get_mpz_t());
  return std::log(mant) + static_cast<double>(exp2) * std::log(2.0);
}

Integer as_integer(const Rational& q, const char* context) {
  if (q.get_den() != 1) {
    throw std::logic_error(std::string("non-integral ") + context + ": " + q.get_str());
  }
  return q.get_num();
}

}  // namespace galled
