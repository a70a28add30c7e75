#pragma once

#include <map>
#include <utility>

#include "galled_census/arith.hpp"

namespace galled {

// Exponent pair of a monomial u^u_deg * w^w_deg. u marks inner reticulations,
// w marks reticulations.
struct MarkKey {
  int u = 0;
  int w = 0;
  friend auto operator<=>(const MarkKey&, const MarkKey&) = default;
};

// Sparse bivariate polynomial in the marks with exact rational coefficients.
// Degrees are capped: terms whose degree would exceed (max_u, max_w) are
// dropped on insertion. The counts beyond the caps are provably zero (a
// network on n leaves has at most 2n-2 reticulations and n-2 inner ones),
// so dropping is exact whenever the caps are chosen that way.
//
// Invariants: no stored zero coefficients; all stored degrees within caps.
class MarkPoly {
 public:
  MarkPoly() = default;
  MarkPoly(int max_u, int max_w);

  static MarkPoly constant(const Rational& c, int max_u, int max_w);

  int max_u() const { return max_u_; }
  int max_w() const { return max_w_; }

  bool is_zero() const { return terms_.empty(); }
  std::size_t term_count() const { return terms_.size(); }

  // Coefficient of u^u w^w (zero if absent).
  Rational coeff(int u, int w) const;

  // this += c * u^u w^w; silently drops out-of-cap degrees.
  void add_term(int u, int w, const Rational& c);

  MarkPoly& operator+=(const MarkPoly& other);

  // this += a * b, degree-capped. The workhorse of series multiplication.
  void add_mul(const MarkPoly& a, const MarkPoly& b);

  // this += a * b shifted by u^du w^dw and scaled by c.
  void add_mul_shifted(const MarkPoly& a, const Rational& c, int du, int dw);

  friend MarkPoly operator*(const MarkPoly& a, const MarkPoly& b);
  friend MarkPoly operator+(MarkPoly a, const MarkPoly& b);
  friend bool operator==(const MarkPoly& a, const MarkPoly& b);

  // Sum of all coefficients (evaluation at u = w = 1).
  Rational value_at_one() const;

  const std::map<MarkKey, Rational>& terms() const { return terms_; }

 private:
  void require_same_caps(const MarkPoly& other) const;

  int max_u_ = 0;
  int max_w_ = 0;
  std::map<MarkKey, Rational> terms_;
};

}  // namespace galled
