#pragma once

#include <cstdint>
#include <vector>

#include "gotz/ideal.hpp"

namespace gotz {

// Dimensions of the graded pieces of an ideal, indexed by degree.
struct HilbertData {
  std::vector<std::uint64_t> values;

  std::uint64_t at(int d) const {
    return d >= 0 && d < static_cast<int>(values.size()) ? values[d] : 0;
  }
  friend bool operator==(const HilbertData&, const HilbertData&) = default;
};

// Number of degree-d squarefree monomials in I, for d = 0..n. Requires a
// squarefree ideal (of either flavor).
HilbertData sqf_hilbert(const MonomialIdeal& ideal);

// |I_d| in S recovered from the squarefree Hilbert data through the
// substitution t -> t/(1-t):  sum_k sqf[k] * C(d-1, k-1).
std::uint64_t poly_hilbert_from_sqf(const HilbertData& sqf, int d);

// |I_d| by direct enumeration in the ideal's own ring, d = 0..max_degree.
HilbertData direct_hilbert(const MonomialIdeal& ideal, int max_degree);

}  // namespace gotz
