#pragma once

#include <cstdint>
#include <span>
#include <vector>

#include "gotz/monomial.hpp"
#include "gotz/ring.hpp"

namespace gotz {

// A degree-homogeneous monomial vector space, identified with its monomial
// basis. Basis is kept sorted lex-descending (a > b > ...) with no repeats;
// in SqfR every basis element is squarefree.
class MonomialSpace {
 public:
  // Repeated monomials are merged. Throws if a monomial has the wrong degree,
  // uses a variable outside the context or (in SqfR) is not squarefree.
  MonomialSpace(RingContext ctx, int degree, std::vector<Monomial> basis);
  MonomialSpace(RingContext ctx, int degree, std::span<const SqfMonomial> basis);

  static MonomialSpace zero(RingContext ctx, int degree);
  static MonomialSpace full(RingContext ctx, int degree);

  const RingContext& ctx() const noexcept { return ctx_; }
  int degree() const noexcept { return degree_; }
  std::size_t size() const noexcept { return basis_.size(); }
  bool empty() const noexcept { return basis_.empty(); }
  const std::vector<Monomial>& basis() const noexcept { return basis_; }
  std::vector<SqfMonomial> sqf_basis() const;

  bool contains(const Monomial& m) const;
  bool contains(SqfMonomial m) const { return contains(Monomial::from_support(m)); }
  bool is_subset_of(const MonomialSpace& o) const;

  MonomialSpace united(const MonomialSpace& o) const;
  MonomialSpace minus(const MonomialSpace& o) const;

  friend bool operator==(const MonomialSpace& a, const MonomialSpace& b) {
    return a.degree_ == b.degree_ && a.ctx_ == b.ctx_ && a.basis_ == b.basis_;
  }

 private:
  struct Trusted {};
  MonomialSpace(Trusted, RingContext ctx, int degree, std::vector<Monomial> basis);
  void check_compatible(const MonomialSpace& o) const;

  RingContext ctx_;
  int degree_;
  std::vector<Monomial> basis_;
};

// Dimension of the full degree-d component: C(n, d) in R, C(n+d-1, d) in S.
std::uint64_t full_dimension(const RingContext& ctx, int d);

// All degree-d monomials of the ring, lex-descending. S-side components are
// materialized by bounded multiset enumeration.
std::vector<Monomial> all_monomials(const RingContext& ctx, int d);

// Degree-d squarefree monomials on n variables, lex-descending.
std::vector<SqfMonomial> all_sqf_monomials(int n, int d);

// m_1 V: the span of x_i m over all variables and basis elements. In SqfR
// products with a repeated variable vanish.
MonomialSpace shadow_up(const MonomialSpace& v);

}  // namespace gotz
