#pragma once

#include <cstdint>
#include <random>
#include <vector>

#include "gotz/ideal.hpp"
#include "gotz/space.hpp"
#include "gotz/text.hpp"

namespace testing {

inline gotz::MonomialIdeal ideal_r(const char* t, int n) {
  return gotz::parse_ideal(t, n, gotz::Flavor::SqfR);
}
inline gotz::MonomialIdeal ideal_s(const char* t, int n) {
  return gotz::parse_ideal(t, n, gotz::Flavor::PolyS);
}
inline gotz::MonomialSpace space_r(const char* t, int n) {
  return gotz::parse_space(t, n, gotz::Flavor::SqfR);
}
inline gotz::MonomialSpace space_s(const char* t, int n) {
  return gotz::parse_space(t, n, gotz::Flavor::PolyS);
}

// Each degree-d squarefree monomial kept with probability p.
inline gotz::MonomialSpace random_sqf_space(std::mt19937_64& rng, int n, int d, double p) {
  std::bernoulli_distribution keep(p);
  std::vector<gotz::SqfMonomial> b;
  for (auto m : gotz::all_sqf_monomials(n, d))
    if (keep(rng)) b.push_back(m);
  return gotz::MonomialSpace(gotz::RingContext(n, gotz::Flavor::SqfR), d, b);
}

inline gotz::MonomialSpace random_space(std::mt19937_64& rng, const gotz::RingContext& ctx, int d,
                                        double p) {
  std::bernoulli_distribution keep(p);
  std::vector<gotz::Monomial> b;
  for (const auto& m : gotz::all_monomials(ctx, d))
    if (keep(rng)) b.push_back(m);
  return gotz::MonomialSpace(ctx, d, std::move(b));
}

// Random squarefree ideal: a few random supports of mixed sizes.
inline gotz::MonomialIdeal random_sqf_ideal(std::mt19937_64& rng, int n, gotz::Flavor f) {
  std::uniform_int_distribution<int> count(0, 5);
  std::uniform_int_distribution<std::uint32_t> bits(1, (1u << n) - 1);
  std::vector<gotz::SqfMonomial> g;
  for (int k = count(rng); k > 0; --k) g.emplace_back(bits(rng));
  return gotz::minimalize(gotz::RingContext(n, f), g);
}

// Every subset of R_d, n small.
template <class F>
void for_each_sqf_space(int n, int d, F&& visit) {
  const auto all = gotz::all_sqf_monomials(n, d);
  const gotz::RingContext ctx(n, gotz::Flavor::SqfR);
  const std::uint64_t count = std::uint64_t{1} << all.size();
  std::vector<gotz::SqfMonomial> b;
  for (std::uint64_t s = 0; s < count; ++s) {
    b.clear();
    for (std::size_t k = 0; k < all.size(); ++k)
      if ((s >> k) & 1u) b.push_back(all[k]);
    visit(gotz::MonomialSpace(ctx, d, b));
  }
}

}  // namespace testing
