#pragma once

#include <cstdint>
#include <optional>

#include "gotz/ideal.hpp"
#include "gotz/lex.hpp"
#include "gotz/space.hpp"

namespace gotz {

// V = vhat (+) x_i * vxi, with both parts living in Q = R/(x_i): vhat in
// degree d, vxi in degree d - 1. Q's variables are R's minus x_i, in order.
struct Decomposition {
  int var;
  RingContext r_ctx;
  MonomialSpace vhat;
  MonomialSpace vxi;
};

// Moves a squarefree space of Q into R (x_i unused) and back.
MonomialSpace embed_from_quotient(const MonomialSpace& q_space, const RingContext& r_ctx, int i);
MonomialSpace project_to_quotient(const MonomialSpace& r_space, int i);

// Needs an SqfR space of degree >= 1.
Decomposition decompose(const MonomialSpace& v, int i);
MonomialSpace reassemble(const Decomposition& dec);

// Replaces vhat and vxi by lex segments of the same dimensions in Q under
// `order` (an order on Q's variables; identity when omitted).
MonomialSpace compress(const MonomialSpace& v, int i,
                       const std::optional<VariableOrder>& order = std::nullopt);

// Both sides of the growth identity
//   |n_1 vhat| + |vhat + n_1 vxi| = |n_1 Lhat| + |Lhat + n_1 Lxi|
// for V and its x_i-compression, which holds whenever V is Gotzmann.
struct GrowthEquality {
  std::uint64_t n1_vhat = 0;
  std::uint64_t vhat_plus_n1_vxi = 0;
  std::uint64_t n1_lhat = 0;
  std::uint64_t lhat_plus_n1_lxi = 0;
  std::uint64_t shadow_v = 0;
  std::uint64_t shadow_compressed = 0;

  std::uint64_t lhs() const { return n1_vhat + vhat_plus_n1_vxi; }
  std::uint64_t rhs() const { return n1_lhat + lhat_plus_n1_lxi; }
  bool holds() const { return lhs() == rhs(); }
};

GrowthEquality growth_equality(const MonomialSpace& v, int i,
                               const std::optional<VariableOrder>& order = std::nullopt);

// (W : n_1) in degree d - 1: monomials m with m x_j in W for every variable
// x_j of W's ring not dividing m.
MonomialSpace colon_with_n1(const MonomialSpace& w);

// V^dual = span{ x/m : m in R_d, m not in V } in degree n - d.
MonomialSpace alexander_dual_space(const MonomialSpace& v);
// Direct sum of the componentwise duals, minimalized. Throws an Invariant
// error if the components do not fit together as an ideal.
MonomialIdeal alexander_dual_ideal(const MonomialIdeal& ideal);

bool is_gdual(const MonomialSpace& v);
bool is_gdual_ideal(const MonomialIdeal& ideal);

// argmax_i |V cap (x_i)|, ties to the least index. V must be nonempty.
int pick_variable(const MonomialSpace& v);

// V = (n_1 vxi) (+) x_i vxi in R, where vxi lives in r_ctx.without(i) and must
// be Gotzmann there. The result is checked to be Gotzmann in R.
MonomialSpace reconstruct(const RingContext& r_ctx, int i, const MonomialSpace& vxi);

}  // namespace gotz
