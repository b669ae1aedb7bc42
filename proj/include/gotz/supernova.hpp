#pragma once

#include <optional>
#include <string>
#include <vector>

#include "gotz/ideal.hpp"

namespace gotz {

// One summand m_1...m_j * (x_{j,1}, ..., x_{j,r_j}) of the nested normal form:
// `prefix` is m_j (may be 1), `block` is the nonempty variable set.
struct SupernovaStage {
  SqfMonomial prefix;
  SqfMonomial block;

  friend bool operator==(const SupernovaStage&, const SupernovaStage&) = default;
};

// I = m_1(B_1) + m_1 m_2(B_2) + ... + m_1...m_s(B_s) with every m_j and B_j
// pairwise disjoint. No stages is the zero ideal; `unit` marks the unit
// ideal, which has no nested form of its own.
struct SupernovaForm {
  std::vector<SupernovaStage> stages;
  bool unit = false;

  friend bool operator==(const SupernovaForm&, const SupernovaForm&) = default;
};

// Throws on empty blocks or overlapping supports.
void validate(const SupernovaForm& form, const RingContext& ctx);

MonomialIdeal supernova_to_ideal(const SupernovaForm& form, const RingContext& ctx);

// Peels variable generators into a stage, otherwise divides out the smallest
// common variable, until nothing is left. Fails when neither step applies.
std::optional<SupernovaForm> recognize_supernova(const MonomialIdeal& ideal);

// "a*(b,c) + a*d*(e)"; "(a) + b*(c)" when m_1 = 1; "(0)" / "(1)".
std::string format_supernova(const SupernovaForm& form, const RingContext& ctx);

// A simplicial complex by its facets (equivalently a hypergraph's edges).
class FacetComplex {
 public:
  // Throws if the facets are not an antichain.
  explicit FacetComplex(std::vector<SqfMonomial> facets);
  // Facets of the squarefree ideal's generators.
  static FacetComplex of_ideal(const MonomialIdeal& ideal);

  const std::vector<SqfMonomial>& facets() const noexcept { return facets_; }
  bool is_pure() const;
  // Largest facet dimension |F| - 1; -1 when there are no facets.
  int dimension() const;

 private:
  std::vector<SqfMonomial> facets_;
};

// Pure complexes only: some (d-1)-simplex lies in every facet.
bool is_star_shaped(const FacetComplex& h);
// A chain F_0 c F_1 c ... c F_{d-1}, |F_i| = i + 1, such that every
// i-dimensional facet contains F_{i-1}. Returns the chain when one exists.
std::optional<std::vector<SqfMonomial>> supernova_chain(const FacetComplex& h);
bool is_supernova_complex(const FacetComplex& h);

// Lexicographically least generator list over all n! relabelings, as text.
// Equal keys iff the ideals agree up to a permutation of the variables. n <= 8.
std::string canonicalize(const MonomialIdeal& ideal);

}  // namespace gotz
