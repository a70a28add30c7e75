#pragma once

#include <gmpxx.h>

#include <stdexcept>
#include <string>

namespace galled {

// All counts are exact arbitrary-precision integers; all series coefficients
// are exact rationals. GMP supplies both.
using Integer = mpz_class;
using Rational = mpq_class;

// Thrown when a computation is refused because it would blow the resource
// guard (oracle enumerations, large joint tables). The CLI maps it to exit 3.
class resource_limit_error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// m!! = m(m-2)(m-4)...; (-1)!! = 1 (empty product). Throws std::domain_error
// for even m or m < -1.
Integer double_factorial(long m);

Integer factorial(long n);

Integer binomial(long n, long k);

// base^e for e >= 0
Integer int_pow(long base, unsigned long e);

// Natural log of a positive big integer, via mantissa + exact binary exponent.
double ln(const Integer& v);

// Extracts the integer value of a rational known to be integral; throws
// std::logic_error otherwise. Non-integrality here always means a formula or
// transcription bug, never a data condition.
Integer as_integer(const Rational& q, const char* context = "value");

}  // namespace galled
