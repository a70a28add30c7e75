#include "galled_census/marked_series.hpp"

#include <algorithm>

namespace galled {

MarkedSeries::MarkedSeries(int order, int max_u, int max_w)
    : order_(order), max_u_(max_u), max_w_(max_w) {
  if (order < 0) throw std::invalid_argument("MarkedSeries: negative order");
  coeffs_.assign(order + 1, MarkPoly(max_u, max_w));
}

const MarkPoly& MarkedSeries::at(int d) const {
  if (d < 0 || d > order_) throw std::out_of_range("MarkedSeries: degree out of range");
  return coeffs_[d];
}

MarkPoly& MarkedSeries::at(int d) {
  if (d < 0 || d > order_) throw std::out_of_range("MarkedSeries: degree out of range");
  return coeffs_[d];
}

MarkedSeries& MarkedSeries::operator+=(const MarkedSeries& other) {
  if (max_u_ != other.max_u_ || max_w_ != other.max_w_) {
    throw std::invalid_argument("MarkedSeries: cap mismatch");
  }
  int top = std::min(order_, other.order_);
  for (int d = 0; d <= top; ++d) coeffs_[d] += other.coeffs_[d];
  return *this;
}

bool MarkedSeries::is_zero() const {
  return std::all_of(coeffs_.begin(), coeffs_.end(),
                     [](const MarkPoly& p) { return p.is_zero(); });
}

bool operator==(const MarkedSeries& a, const MarkedSeries& b) {
  return a.order_ == b.order_ && a.max_u_ == b.max_u_ && a.max_w_ == b.max_w_ &&
         a.coeffs_ == b.coeffs_;
}

MarkedSeries series_mul(const MarkedSeries& a, const MarkedSeries& b) {
  MarkedSeries r(std::min(a.order(), b.order()), a.max_u(), a.max_w());
  series_mul_add(r, a, b);
  return r;
}

void series_mul_add(MarkedSeries& acc, const MarkedSeries& a, const MarkedSeries& b) {
  if (a.max_u() != b.max_u() || a.max_w() != b.max_w() || a.max_u() != acc.max_u() ||
      a.max_w() != acc.max_w()) {
    throw std::invalid_argument("series_mul: cap mismatch");
  }
  int order = acc.order();
  for (int d1 = 0; d1 <= std::min(order, a.order()); ++d1) {
    const MarkPoly& pa = a.at(d1);
    if (pa.is_zero()) continue;
    int top2 = std::min(order - d1, b.order());
    for (int d2 = 0; d2 <= top2; ++d2) {
      const MarkPoly& pb = b.at(d2);
      if (pb.is_zero()) continue;
      acc.at(d1 + d2).add_mul(pa, pb);
    }
  }
}

MarkedSeries reciprocal_power(const MarkedSeries& m, int n, int order) {
  if (n < 1) throw std::invalid_argument("reciprocal_power: exponent must be >= 1");
  if (order < 0) throw std::invalid_argument("reciprocal_power: negative order");
  if (!m.at(0).is_zero()) {
    throw std::invalid_argument("reciprocal_power: series must have zero constant term");
  }
  if (order > m.order()) {
    throw std::invalid_argument("reciprocal_power: order exceeds input truncation");
  }
  MarkedSeries result(order, m.max_u(), m.max_w());
  result.at(0).add_term(0, 0, 1);
  // m^i has valuation >= i, so i ranges over 0..order only.
  MarkedSeries power(order, m.max_u(), m.max_w());
  power.at(0).add_term(0, 0, 1);
  Integer coeff = 1;  // C(n-1+i, i)
  for (int i = 1; i <= order; ++i) {
    power = series_mul(power, m);
    coeff = coeff * (n - 1 + i) / i;  // exact: consecutive binomial
    MarkPoly scale = MarkPoly::constant(Rational(coeff), m.max_u(), m.max_w());
    for (int d = i; d <= order; ++d) {
      result.at(d).add_mul(power.at(d), scale);
    }
  }
  return result;
}

}  // namespace galled
