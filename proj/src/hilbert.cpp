#include "gotz/hilbert.hpp"

#include <algorithm>

#include "gotz/error.hpp"

namespace gotz {

HilbertData sqf_hilbert(const MonomialIdeal& ideal) {
  require(ideal.is_squarefree(), "squarefree Hilbert data needs a squarefree ideal");
  const int n = ideal.ctx().num_vars();
  std::vector<SqfMonomial> gens;
  for (const auto& g : ideal.gens()) gens.push_back(g.support());

  HilbertData out;
  out.values.assign(n + 1, 0);
  const std::uint32_t limit = 1u << n;
  for (std::uint32_t s = 0; s < limit; ++s) {
    const SqfMonomial m(s);
    if (std::any_of(gens.begin(), gens.end(), [m](SqfMonomial g) { return g.divides(m); }))
      ++out.values[m.degree()];
  }
  return out;
}

std::uint64_t poly_hilbert_from_sqf(const HilbertData& sqf, int d) {
  require(d >= 0, "degree must be nonnegative");
  if (d == 0) return sqf.at(0);
  std::uint64_t total = 0;
  for (int k = 1; k < static_cast<int>(sqf.values.size()) && k <= d; ++k)
    total += sqf.values[k] * binomial(d - 1, k - 1);
  return total;
}

HilbertData direct_hilbert(const MonomialIdeal& ideal, int max_degree) {
  HilbertData out;
  for (int d = 0; d <= max_degree; ++d)
    out.values.push_back(component_space(ideal, d).size());
  return out;
}

}  // namespace gotz
