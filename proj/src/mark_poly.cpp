#include "galled_census/mark_poly.hpp"

namespace galled {

MarkPoly::MarkPoly(int max_u, int max_w) : max_u_(max_u), max_w_(max_w) {
  if (max_u < 0 || max_w < 0) throw std::invalid_argument("MarkPoly: negative degree cap");
}

MarkPoly MarkPoly::constant(const Rational& c, int max_u, int max_w) {
  MarkPoly p(max_u, max_w);
  p.add_term(0, 0, c);
  return p;
}

Rational MarkPoly::coeff(int u, int w) const {
  auto it = terms_.find(MarkKey{u, w});
  return it == terms_.end() ? Rational(0) : it->second;
}

void MarkPoly::add_term(int u, int w, const Rational& c) {
  if (u > max_u_ || w > max_w_) return;
  if (u < 0 || w < 0) throw std::invalid_argument("MarkPoly: negative degree");
  if (c == 0) return;
  auto [it, inserted] = terms_.try_emplace(MarkKey{u, w}, c);
  if (!inserted) {
    it->second += c;
    if (it->second == 0) terms_.erase(it);
  }
}

void MarkPoly::require_same_caps(const MarkPoly& other) const {
  if (max_u_ != other.max_u_ || max_w_ != other.max_w_) {
    throw std::invalid_argument("MarkPoly: degree cap mismatch");
  }
}

MarkPoly& MarkPoly::operator+=(const MarkPoly& other) {
  require_same_caps(other);
  for (const auto& [key, c] : other.terms_) add_term(key.u, key.w, c);
  return *this;
}

void MarkPoly::add_mul(const MarkPoly& a, const MarkPoly& b) {
  require_same_caps(a);
  require_same_caps(b);
  Rational prod;
  for (const auto& [ka, ca] : a.terms_) {
    for (const auto& [kb, cb] : b.terms_) {
      int u = ka.u + kb.u, w = ka.w + kb.w;
      if (u > max_u_ || w > max_w_) continue;
      prod = ca * cb;
      auto [it, inserted] = terms_.try_emplace(MarkKey{u, w}, prod);
      if (!inserted) {
        it->second += prod;
        if (it->second == 0) terms_.erase(it);
      }
    }
  }
}

void MarkPoly::add_mul_shifted(const MarkPoly& a, const Rational& c, int du, int dw) {
  require_same_caps(a);
  Rational prod;
  for (const auto& [ka, ca] : a.terms_) {
    int u = ka.u + du, w = ka.w + dw;
    if (u > max_u_ || w > max_w_) continue;
    prod = ca * c;
    auto [it, inserted] = terms_.try_emplace(MarkKey{u, w}, prod);
    if (!inserted) {
      it->second += prod;
      if (it->second == 0) terms_.erase(it);
    }
  }
}

MarkPoly operator*(const MarkPoly& a, const MarkPoly& b) {
  MarkPoly r(a.max_u_, a.max_w_);
  r.add_mul(a, b);
  return r;
}

MarkPoly operator+(MarkPoly a, const MarkPoly& b) {
  a += b;
  return a;
}

bool operator==(const MarkPoly& a, const MarkPoly& b) {
  return a.max_u_ == b.max_u_ && a.max_w_ == b.max_w_ && a.terms_ == b.terms_;
}

Rational MarkPoly::value_at_one() const {
  Rational s = 0;
  for (const auto& [key, c] : terms_) s += c;
  return s;
}

}  // namespace galled
