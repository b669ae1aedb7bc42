#pragma once

#include <boost/multiprecision/cpp_int.hpp>
#include <vector>

namespace gotz {

using BigInt = boost::multiprecision::cpp_int;
using Rational = boost::multiprecision::cpp_rational;

inline constexpr int kDefaultTruncation = 12;

// Power series truncated after t^order, exact rational coefficients.
class RationalSeries {
 public:
  explicit RationalSeries(int order = kDefaultTruncation);
  RationalSeries(int order, std::vector<Rational> coeffs);

  static RationalSeries constant(int order, Rational c);
  static RationalSeries t(int order);  // the series "t"
  static RationalSeries exp(int order);

  int order() const noexcept { return order_; }
  const Rational& operator[](int k) const { return coeffs_.at(k); }
  const std::vector<Rational>& coeffs() const noexcept { return coeffs_; }

  RationalSeries operator+(const RationalSeries& o) const;
  RationalSeries operator-(const RationalSeries& o) const;
  RationalSeries operator*(const RationalSeries& o) const;
  RationalSeries scaled(const Rational& c) const;
  // Multiplicative inverse; the constant term must be nonzero.
  RationalSeries inverse() const;

  friend bool operator==(const RationalSeries&, const RationalSeries&) = default;

 private:
  int order_;
  std::vector<Rational> coeffs_;
};

// n! [t^n] s; throws if the result is not an integer or n > order.
BigInt egf_coefficient(const RationalSeries& s, int n);

// Generating functions of the counting module.
RationalSeries fubini_egf(int order);            // 1 / (2 - e^t)
RationalSeries last_block_egf(int order);        // (1 - t) / (2 - e^t)
RationalSeries full_support_egf(int order);      // h = 2(1 - t)/(2 - e^t) + t
RationalSeries gotzmann_egf(int order);          // g = e^t h

}  // namespace gotz
