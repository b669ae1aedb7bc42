#pragma once

#include <compare>
#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <utility>
#include <vector>

#include "gotz/ideal.hpp"
#include "gotz/space.hpp"

namespace gotz {

// A total order on the variables; position 0 holds the greatest variable.
class VariableOrder {
 public:
  static VariableOrder identity(int n);
  // Throws unless perm is a permutation of 0..n-1.
  explicit VariableOrder(std::vector<int> perm);
  // "acbd" means a > c > b > d; names are resolved in ctx.
  static VariableOrder parse(std::string_view text, const RingContext& ctx);

  int size() const noexcept { return static_cast<int>(perm_.size()); }
  const std::vector<int>& perm() const noexcept { return perm_; }
  int at(int position) const { return perm_.at(position); }
  std::string to_string(const RingContext& ctx) const;

  friend bool operator==(const VariableOrder&, const VariableOrder&) = default;

 private:
  std::vector<int> perm_;
};

// u > v iff at the greatest variable where their exponents differ, u has the
// larger exponent. Degrees must match.
std::strong_ordering lex_compare(const Monomial& u, const Monomial& v,
                                 const VariableOrder& order);

// The first `dim` degree-d monomials in the given lex order.
MonomialSpace lex_segment(std::uint64_t dim, int d, const RingContext& ctx,
                          const VariableOrder& order);
MonomialSpace lex_segment(std::uint64_t dim, int d, const RingContext& ctx);

bool is_lex_segment(const MonomialSpace& v, const VariableOrder& order);
// Smallest witness permutation (in lexicographic order of perm vectors), or
// none. Tries all n! orders; n <= 8.
std::optional<VariableOrder> is_lex_some_order(const MonomialSpace& v);
// A single order making every given space (same ring) a lex segment.
std::optional<VariableOrder> common_lex_order(std::span<const MonomialSpace> spaces);

inline constexpr int kMaxOrderSearchVars = 8;

// Greedy d-th Macaulay representation m = sum C(a_i, i), i = d, d-1, ..., j.
struct MacaulayRep {
  int degree = 0;
  std::vector<std::pair<std::uint64_t, int>> terms;  // (a_i, i), i descending

  std::uint64_t value() const;
};

MacaulayRep macaulay_rep(std::uint64_t m, int d);

// min |m_1 W| over degree-d monomial spaces W of dimension dim, realised as
// the shadow of the lex segment.
std::uint64_t minimal_growth(std::uint64_t dim, int d, const RingContext& ctx);
// The same bound from Macaulay representations of the codimension: Macaulay's
// upper function in S, its exterior analogue sum C(a_i, i+1) in R.
std::uint64_t minimal_growth_closed_form(std::uint64_t dim, int d, const RingContext& ctx);

bool is_gotzmann_space(const MonomialSpace& v);
// Checks I_d for d from the least to the greatest generator degree;
// persistence covers every higher degree.
bool is_gotzmann_ideal(const MonomialIdeal& ideal);

// The lex ideal of R with the same squarefree Hilbert function as I.
MonomialIdeal lexify_in_R(const MonomialIdeal& ideal);
// The S-ideal generated by the monomials of lexify_in_R(I).
MonomialIdeal sqf_lexify_in_S(const MonomialIdeal& ideal);

}  // namespace gotz
