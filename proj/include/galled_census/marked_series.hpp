#pragma once

#include <vector>

#include "galled_census/mark_poly.hpp"

namespace galled {

// Truncated power series in z whose coefficients are mark polynomials.
// coeffs_[d] is the coefficient of z^d; the truncation degree (`order`) is
// inclusive. All coefficients share the same degree caps.
class MarkedSeries {
 public:
  // Zero series of the given order and caps.
  MarkedSeries(int order, int max_u, int max_w);

  int order() const { return order_; }
  int max_u() const { return max_u_; }
  int max_w() const { return max_w_; }

  const MarkPoly& at(int d) const;
  MarkPoly& at(int d);

  // this += other (orders may differ; degrees above this->order are ignored).
  MarkedSeries& operator+=(const MarkedSeries& other);

  bool is_zero() const;

  friend bool operator==(const MarkedSeries& a, const MarkedSeries& b);

 private:
  int order_;
  int max_u_;
  int max_w_;
  std::vector<MarkPoly> coeffs_;
};

// Truncated Cauchy product; result order = min(a.order, b.order).
// Throws std::invalid_argument on cap mismatch.
MarkedSeries series_mul(const MarkedSeries& a, const MarkedSeries& b);

// acc += a * b, truncated at acc.order (both inputs must share acc's caps).
void series_mul_add(MarkedSeries& acc, const MarkedSeries& a, const MarkedSeries& b);

// (1 - m)^(-n) truncated at `order`, for m with zero constant term. Computed
// as sum_{i>=0} C(n-1+i, i) m^i; finite because m has valuation >= 1 in z.
// Throws std::invalid_argument if m has a nonzero constant term or
// order > m.order().
MarkedSeries reciprocal_power(const MarkedSeries& m, int n, int order);

}  // namespace galled
