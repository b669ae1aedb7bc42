#include "gotz/monomial.hpp"

#include <limits>

#include "gotz/error.hpp"

namespace gotz {

std::vector<int> SqfMonomial::indices() const {
  std::vector<int> out;
  for (std::uint32_t b = bits_; b; b &= b - 1) out.push_back(std::countr_zero(b));
  return out;
}

Monomial Monomial::from_exponents(std::span<const int> exps) {
  require(exps.size() <= static_cast<std::size_t>(kMaxVars),
          "too many exponents");
  Monomial m;
  for (std::size_t i = 0; i < exps.size(); ++i) {
    require(exps[i] >= 0 && exps[i] <= 255, "exponent out of range");
    m.exps_[i] = static_cast<std::uint8_t>(exps[i]);
    m.degree_ += exps[i];
  }
  return m;
}

Monomial Monomial::from_support(SqfMonomial s) {
  Monomial m;
  for (int i : s.indices()) {
    require(i < kMaxVars, "variable index out of range");
    m.exps_[i] = 1;
  }
  m.degree_ = s.degree();
  return m;
}

Monomial Monomial::variable(int i) {
  require(i >= 0 && i < kMaxVars, "variable index out of range");
  Monomial m;
  m.exps_[i] = 1;
  m.degree_ = 1;
  return m;
}

bool Monomial::is_squarefree() const noexcept {
  for (auto e : exps_)
    if (e > 1) return false;
  return true;
}

SqfMonomial Monomial::support() const noexcept {
  std::uint32_t bits = 0;
  for (int i = 0; i < kMaxVars; ++i)
    if (exps_[i]) bits |= 1u << i;
  return SqfMonomial(bits);
}

int Monomial::span() const noexcept {
  for (int i = kMaxVars; i > 0; --i)
    if (exps_[i - 1]) return i;
  return 0;
}

bool Monomial::divides(const Monomial& o) const noexcept {
  for (int i = 0; i < kMaxVars; ++i)
    if (exps_[i] > o.exps_[i]) return false;
  return true;
}

Monomial Monomial::times(const Monomial& o) const {
  Monomial m;
  for (int i = 0; i < kMaxVars; ++i) {
    const int e = exps_[i] + o.exps_[i];
    require(e <= 255, "exponent overflow");
    m.exps_[i] = static_cast<std::uint8_t>(e);
  }
  m.degree_ = degree_ + o.degree_;
  return m;
}

Monomial Monomial::times_variable(int i) const {
  require(i >= 0 && i < kMaxVars, "variable index out of range");
  require(exps_[i] < 255, "exponent overflow");
  Monomial m = *this;
  ++m.exps_[i];
  ++m.degree_;
  return m;
}

Monomial Monomial::divided_by_variable(int i) const {
  require(i >= 0 && i < kMaxVars && exps_[i] > 0,
          "monomial is not divisible by the variable");
  Monomial m = *this;
  --m.exps_[i];
  --m.degree_;
  return m;
}

Monomial Monomial::drop_variable(int i) const {
  require(exps_[i] == 0, "cannot drop a variable that occurs in the monomial");
  Monomial m;
  for (int j = 0, k = 0; j < kMaxVars; ++j)
    if (j != i) m.exps_[k++] = exps_[j];
  m.degree_ = degree_;
  return m;
}

Monomial Monomial::insert_variable(int i) const {
  require(exps_[kMaxVars - 1] == 0, "no room to insert a variable");
  Monomial m;
  for (int j = 0, k = 0; j < kMaxVars; ++j) {
    if (j == i) continue;
    m.exps_[j] = exps_[k++];
  }
  m.degree_ = degree_;
  return m;
}

std::uint64_t binomial(std::int64_t a, std::int64_t b) {
  if (b < 0 || a < 0 || a < b) return 0;
  if (b > a - b) b = a - b;
  unsigned __int128 r = 1;
  for (std::int64_t k = 1; k <= b; ++k) {
    r = r * static_cast<unsigned __int128>(a - b + k) / k;
    ensure(r <= std::numeric_limits<std::uint64_t>::max(),
           "binomial coefficient overflows 64 bits");
  }
  return static_cast<std::uint64_t>(r);
}

}  // namespace gotz
