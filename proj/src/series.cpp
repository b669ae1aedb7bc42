#include "gotz/series.hpp"

#include "gotz/error.hpp"

namespace gotz {

RationalSeries::RationalSeries(int order) : order_(order), coeffs_(order + 1) {
  require(order >= 0, "truncation order must be nonnegative");
}

RationalSeries::RationalSeries(int order, std::vector<Rational> coeffs)
    : order_(order), coeffs_(std::move(coeffs)) {
  require(order >= 0, "truncation order must be nonnegative");
  coeffs_.resize(order + 1);
}

RationalSeries RationalSeries::constant(int order, Rational c) {
  RationalSeries s(order);
  s.coeffs_[0] = std::move(c);
  return s;
}

RationalSeries RationalSeries::t(int order) {
  RationalSeries s(order);
  if (order >= 1) s.coeffs_[1] = 1;
  return s;
}

RationalSeries RationalSeries::exp(int order) {
  RationalSeries s(order);
  Rational term = 1;
  for (int k = 0; k <= order; ++k) {
    s.coeffs_[k] = term;
    term /= k + 1;
  }
  return s;
}

RationalSeries RationalSeries::operator+(const RationalSeries& o) const {
  require(order_ == o.order_, "series truncation orders differ");
  RationalSeries s(order_);
  for (int k = 0; k <= order_; ++k) s.coeffs_[k] = coeffs_[k] + o.coeffs_[k];
  return s;
}

RationalSeries RationalSeries::operator-(const RationalSeries& o) const {
  return *this + o.scaled(-1);
}

RationalSeries RationalSeries::operator*(const RationalSeries& o) const {
  require(order_ == o.order_, "series truncation orders differ");
  RationalSeries s(order_);
  for (int i = 0; i <= order_; ++i) {
    if (coeffs_[i] == 0) continue;
    for (int j = 0; i + j <= order_; ++j) s.coeffs_[i + j] += coeffs_[i] * o.coeffs_[j];
  }
  return s;
}

RationalSeries RationalSeries::scaled(const Rational& c) const {
  RationalSeries s(order_);
  for (int k = 0; k <= order_; ++k) s.coeffs_[k] = coeffs_[k] * c;
  return s;
}

RationalSeries RationalSeries::inverse() const {
  require(coeffs_[0] != 0, "cannot invert a series with zero constant term");
  RationalSeries s(order_);
  s.coeffs_[0] = 1 / coeffs_[0];
  for (int k = 1; k <= order_; ++k) {
    Rational acc = 0;
    for (int j = 1; j <= k; ++j) acc += coeffs_[j] * s.coeffs_[k - j];
    s.coeffs_[k] = -acc / coeffs_[0];
  }
  return s;
}

BigInt egf_coefficient(const RationalSeries& s, int n) {
  require(n >= 0 && n <= s.order(), "coefficient index beyond the truncation order");
  BigInt factorial = 1;
  for (int k = 2; k <= n; ++k) factorial *= k;
  const Rational v = s[n] * factorial;
  ensure(denominator(v) == 1, "e.g.f. coefficient is not an integer");
  return numerator(v);
}

RationalSeries fubini_egf(int order) {
  return (RationalSeries::constant(order, 2) - RationalSeries::exp(order)).inverse();
}

RationalSeries last_block_egf(int order) {
  return (RationalSeries::constant(order, 1) - RationalSeries::t(order)) * fubini_egf(order);
}

RationalSeries full_support_egf(int order) {
  return last_block_egf(order).scaled(2) + RationalSeries::t(order);
}

RationalSeries gotzmann_egf(int order) {
  return RationalSeries::exp(order) * full_support_egf(order);
}

}  // namespace gotz
