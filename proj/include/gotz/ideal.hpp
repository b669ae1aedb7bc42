#pragma once

#include <cstdint>
#include <map>
#include <optional>
#include <span>
#include <vector>

#include "gotz/monomial.hpp"
#include "gotz/ring.hpp"
#include "gotz/space.hpp"

namespace gotz {

// A monomial ideal given by its minimal generators. The generator list is an
// antichain under divisibility, sorted by GradedLexLess. The zero ideal has no
// generators; the unit ideal is generated by the monomial 1.
class MonomialIdeal {
 public:
  static MonomialIdeal zero(RingContext ctx);
  static MonomialIdeal unit(RingContext ctx);

  const RingContext& ctx() const noexcept { return ctx_; }
  const std::vector<Monomial>& gens() const noexcept { return gens_; }
  std::size_t num_gens() const noexcept { return gens_.size(); }
  bool is_zero() const noexcept { return gens_.empty(); }
  bool is_unit() const noexcept { return gens_.size() == 1 && gens_[0].is_unit(); }
  bool is_squarefree() const noexcept;
  bool contains_linear_form() const noexcept;
  // Union of generator supports.
  SqfMonomial support() const;
  // Smallest / largest generator degree; -1 for the zero ideal.
  int min_gen_degree() const noexcept;
  int max_gen_degree() const noexcept;

  bool contains(const Monomial& m) const;
  bool contains(const MonomialIdeal& o) const;  // o is a subideal

  // Same generators, different ring flavor (generators must be squarefree
  // when moving to SqfR).
  MonomialIdeal in_flavor(Flavor f) const;

  friend bool operator==(const MonomialIdeal& a, const MonomialIdeal& b) {
    return a.ctx_ == b.ctx_ && a.gens_ == b.gens_;
  }

 private:
  friend MonomialIdeal minimalize(RingContext ctx, std::vector<Monomial> monomials);
  MonomialIdeal(RingContext ctx, std::vector<Monomial> gens)
      : ctx_(std::move(ctx)), gens_(std::move(gens)) {}

  RingContext ctx_;
  std::vector<Monomial> gens_;
};

// The divisibility-minimal generating set of the ideal the monomials generate.
// Mixed degrees are fine; in SqfR a non-squarefree input is rejected.
MonomialIdeal minimalize(RingContext ctx, std::vector<Monomial> monomials);
MonomialIdeal minimalize(RingContext ctx, std::span<const SqfMonomial> monomials);

// I_d: the degree-d monomials lying in I (squarefree ones only in SqfR).
MonomialSpace component_space(const MonomialIdeal& ideal, int d);

// Minimal generators per degree, read off the generator list.
std::map<int, std::uint64_t> generator_counts(const MonomialIdeal& ideal);
// The same counts recomputed as |I_d| - |m_1 I_{d-1}|.
std::map<int, std::uint64_t> generator_counts_from_components(const MonomialIdeal& ideal);

// (1/x_i) I, same ring. Every generator must be divisible by x_i.
MonomialIdeal divide_by_variable(const MonomialIdeal& ideal, int i);
// Image of I in the ring with x_i set to zero, over the context without x_i.
MonomialIdeal quotient_by_variable(const MonomialIdeal& ideal, int i);

// Smallest index i with every generator divisible by x_i.
std::optional<int> common_variable(const MonomialIdeal& ideal);

}  // namespace gotz
