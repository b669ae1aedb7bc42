#pragma once

#include <array>
#include <bit>
#include <compare>
#include <cstdint>
#include <span>
#include <vector>

#include "gotz/ring.hpp"

namespace gotz {

// A squarefree monomial as a set of variable indices (bit i = x_i).
// The empty set is the unit monomial.
class SqfMonomial {
 public:
  constexpr SqfMonomial() = default;
  constexpr explicit SqfMonomial(std::uint32_t bits) : bits_(bits) {}

  static constexpr SqfMonomial variable(int i) { return SqfMonomial(1u << i); }
  static constexpr SqfMonomial full(int n) {
    return SqfMonomial(n >= 32 ? ~0u : (1u << n) - 1u);
  }

  constexpr std::uint32_t bits() const noexcept { return bits_; }
  constexpr int degree() const noexcept { return std::popcount(bits_); }
  constexpr bool is_unit() const noexcept { return bits_ == 0; }
  constexpr bool contains(int i) const noexcept { return (bits_ >> i) & 1u; }
  constexpr bool divides(SqfMonomial o) const noexcept {
    return (bits_ & ~o.bits_) == 0;
  }
  constexpr bool disjoint(SqfMonomial o) const noexcept {
    return (bits_ & o.bits_) == 0;
  }

  constexpr SqfMonomial operator|(SqfMonomial o) const {
    return SqfMonomial(bits_ | o.bits_);
  }
  constexpr SqfMonomial operator&(SqfMonomial o) const {
    return SqfMonomial(bits_ & o.bits_);
  }
  constexpr SqfMonomial minus(SqfMonomial o) const {
    return SqfMonomial(bits_ & ~o.bits_);
  }
  constexpr SqfMonomial with(int i) const { return SqfMonomial(bits_ | (1u << i)); }
  constexpr SqfMonomial without(int i) const {
    return SqfMonomial(bits_ & ~(1u << i));
  }

  // Indices in increasing order.
  std::vector<int> indices() const;

  friend constexpr bool operator==(SqfMonomial, SqfMonomial) = default;
  // Plain integer order on the bit pattern; NOT a monomial order.
  friend constexpr auto operator<=>(SqfMonomial a, SqfMonomial b) {
    return a.bits_ <=> b.bits_;
  }

 private:
  std::uint32_t bits_ = 0;
};

// A monomial of S as an exponent vector. Comparison is lexicographic on the
// exponent vector with x_1 most significant, which for monomials of equal
// degree is the lex order a > b > c > ...
class Monomial {
 public:
  Monomial() = default;

  static Monomial from_exponents(std::span<const int> exps);
  static Monomial from_support(SqfMonomial s);
  static Monomial variable(int i);

  int exponent(int i) const { return exps_[i]; }
  int degree() const noexcept { return degree_; }
  bool is_unit() const noexcept { return degree_ == 0; }
  bool is_squarefree() const noexcept;
  SqfMonomial support() const noexcept;
  // Largest index with a nonzero exponent plus one (0 for the unit).
  int span() const noexcept;

  bool divides(const Monomial& o) const noexcept;
  Monomial times(const Monomial& o) const;
  Monomial times_variable(int i) const;
  Monomial divided_by_variable(int i) const;

  // Exponent vector with index i removed / a zero inserted at index i.
  Monomial drop_variable(int i) const;
  Monomial insert_variable(int i) const;

  friend bool operator==(const Monomial& a, const Monomial& b) {
    return a.exps_ == b.exps_;
  }
  friend std::strong_ordering operator<=>(const Monomial& a, const Monomial& b) {
    return a.exps_ <=> b.exps_;
  }

 private:
  std::array<std::uint8_t, kMaxVars> exps_{};
  int degree_ = 0;
};

// Degree ascending, then lex descending under a > b > ...; the order used for
// generator lists and all printed output.
struct GradedLexLess {
  bool operator()(const Monomial& a, const Monomial& b) const {
    if (a.degree() != b.degree()) return a.degree() < b.degree();
    return a > b;
  }
};

// Binomial coefficient C(a, b); zero when b < 0, a < 0 or a < b. Throws on
// 64-bit overflow.
std::uint64_t binomial(std::int64_t a, std::int64_t b);

// Squarefree index bit manipulation between R and Q = R/(x_i).
constexpr std::uint32_t drop_bit(std::uint32_t bits, int i) {
  const std::uint32_t low = bits & ((1u << i) - 1u);
  const std::uint32_t high = (bits >> (i + 1)) << i;
  return low | high;
}
constexpr std::uint32_t insert_zero_bit(std::uint32_t bits, int i) {
  const std::uint32_t low = bits & ((1u << i) - 1u);
  const std::uint32_t high = (bits >> i) << (i + 1);
  return low | high;
}

}  // namespace gotz
