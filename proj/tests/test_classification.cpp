#include <random>
#include <set>

#include "doctest.h"
#include "gotz/counting.hpp"
#include "gotz/error.hpp"
#include "gotz/lex.hpp"
#include "gotz/supernova.hpp"
#include "helpers.hpp"

using namespace gotz;
using namespace testing;

namespace {

SqfMonomial vars(const char* letters) {
  std::uint32_t b = 0;
  for (const char* p = letters; *p; ++p) b |= 1u << (*p - 'a');
  return SqfMonomial(b);
}

SupernovaForm form(std::initializer_list<std::pair<const char*, const char*>> stages) {
  SupernovaForm f;
  for (auto [m, b] : stages) f.stages.push_back({vars(m), vars(b)});
  return f;
}

// All squarefree monomials as subsets, relabelled by perm, in a neutral
// encoding: the sorted list of sorted index vectors.
std::vector<std::vector<int>> relabel(const MonomialIdeal& i, const std::vector<int>& perm) {
  std::vector<std::vector<int>> out;
  for (const auto& g : i.gens()) {
    std::vector<int> s;
    for (int k : g.support().indices()) s.push_back(perm[k]);
    std::sort(s.begin(), s.end());
    out.push_back(s);
  }
  std::sort(out.begin(), out.end());
  return out;
}

std::vector<std::vector<int>> orbit_min(const MonomialIdeal& i) {
  std::vector<int> perm(i.ctx().num_vars());
  std::iota(perm.begin(), perm.end(), 0);
  auto best = relabel(i, perm);
  while (std::next_permutation(perm.begin(), perm.end())) best = std::min(best, relabel(i, perm));
  return best;
}

}  // namespace

TEST_SUITE("classification") {

TEST_CASE("supernova forms generate the displayed ideals") {
  const RingContext s4(4, Flavor::PolyS);
  CHECK(format_ideal(supernova_to_ideal(form({{"a", "bc"}}), s4)) == "ab,ac");
  CHECK(format_ideal(supernova_to_ideal(form({{"", "a"}, {"b", "c"}}), s4)) == "a,bc");
  CHECK(format_ideal(supernova_to_ideal(form({{"a", "b"}, {"c", "d"}}), s4)) == "ab,acd");
  CHECK(supernova_to_ideal(SupernovaForm{}, s4).is_zero());
  CHECK(supernova_to_ideal(SupernovaForm{{}, true}, s4).is_unit());
  CHECK_THROWS_AS(supernova_to_ideal(form({{"a", "ab"}}), s4), Error);
  CHECK_THROWS_AS(supernova_to_ideal(form({{"a", "b"}, {"b", "c"}}), s4), Error);
  CHECK_THROWS_AS(supernova_to_ideal(form({{"a", ""}}), s4), Error);
  CHECK_THROWS_AS(supernova_to_ideal(form({{"a", "e"}}), s4), Error);
}

TEST_CASE("printing supernova forms") {
  const RingContext s5(5, Flavor::PolyS);
  CHECK(format_supernova(form({{"a", "bc"}, {"d", "e"}}), s5) == "a*(b,c) + a*d*(e)");
  CHECK(format_supernova(form({{"", "a"}, {"b", "c"}}), s5) == "(a) + b*(c)");
  CHECK(format_supernova(SupernovaForm{}, s5) == "(0)");
  CHECK(format_supernova(SupernovaForm{{}, true}, s5) == "(1)");
}

TEST_CASE("recognition") {
  const auto star = recognize_supernova(ideal_s("ab,ac,ad", 4));
  REQUIRE(star.has_value());
  CHECK(*star == form({{"a", "bcd"}}));
  CHECK_FALSE(recognize_supernova(ideal_s("ab,ac,bc", 3)).has_value());
  const auto mixed = recognize_supernova(ideal_s("a,bc", 3));
  REQUIRE(mixed.has_value());
  CHECK(supernova_to_ideal(*mixed, RingContext(3, Flavor::PolyS)) == ideal_s("a,bc", 3));
  CHECK(*mixed == form({{"", "a"}, {"b", "c"}}));
  CHECK(recognize_supernova(ideal_s("0", 3))->stages.empty());
  CHECK(recognize_supernova(ideal_s("1", 3))->unit);
  CHECK_FALSE(recognize_supernova(ideal_s("ab,ac,bd,cd", 4)).has_value());
}

TEST_CASE("star-shaped and supernova complexes") {
  CHECK(is_star_shaped(FacetComplex({vars("ab"), vars("ac"), vars("ad")})));
  CHECK_FALSE(is_star_shaped(FacetComplex({vars("ab"), vars("bc"), vars("cd"), vars("ad")})));
  CHECK_THROWS_AS(is_star_shaped(FacetComplex({vars("a"), vars("bc")})), Error);
  CHECK_THROWS_AS(FacetComplex({vars("a"), vars("ab")}), Error);
  const RingContext s5(5, Flavor::PolyS);
  const auto i = supernova_to_ideal(form({{"a", "bc"}, {"d", "e"}}), s5);
  const auto chain = supernova_chain(FacetComplex::of_ideal(i));
  REQUIRE(chain.has_value());
  CHECK(chain->size() == 2);
  for (std::size_t k = 1; k < chain->size(); ++k) CHECK((*chain)[k - 1].divides((*chain)[k]));
  CHECK_FALSE(is_supernova_complex(FacetComplex::of_ideal(ideal_s("ab,cd", 4))));
  CHECK(is_supernova_complex(FacetComplex::of_ideal(ideal_s("a,bc", 3))));
}

TEST_CASE("canonical keys") {
  CHECK(canonicalize(ideal_s("bd,bc", 4)) == canonicalize(ideal_s("ac,ad", 4)));
  CHECK(canonicalize(ideal_s("ab", 3)) != canonicalize(ideal_s("a", 3)));
  CHECK(canonicalize(ideal_s("ab,ac,bd,cd", 4)) == canonicalize(ideal_s("ac,ab,cd,bd", 4)));
  CHECK(canonicalize(ideal_s("0", 3)) == "0");
  CHECK_THROWS_AS(canonicalize(ideal_s("a", 9)), Error);
}

TEST_CASE("canonical keys agree with brute-force orbits") {
  for (int n = 1; n <= 4; ++n) {
    std::map<std::string, std::vector<std::vector<int>>> seen;
    std::set<std::vector<std::vector<int>>> orbits;
    std::size_t keys = 0;
    for_each_antichain(n, [&](const MonomialIdeal& i) {
      const auto key = canonicalize(i);
      const auto o = orbit_min(i);
      auto [it, fresh] = seen.emplace(key, o);
      if (fresh) ++keys;
      CHECK(it->second == o);
      orbits.insert(o);
    });
    CHECK(keys == orbits.size());
  }
}

TEST_CASE("classification matches the Gotzmann test through n = 5") {
  for (int n = 0; n <= 5; ++n)
    for_each_antichain(n, [&](const MonomialIdeal& i) {
      const bool gotz = is_gotzmann_ideal(i);
      const auto f = recognize_supernova(i);
      CHECK(gotz == f.has_value());
      if (f) CHECK(supernova_to_ideal(*f, i.ctx()) == i);
      if (!i.is_unit()) CHECK(gotz == is_supernova_complex(FacetComplex::of_ideal(i)));
    });
}

TEST_CASE("forms round trip through recognition") {
  std::mt19937_64 rng(5);
  for (int trial = 0; trial < 500; ++trial) {
    const int n = 1 + trial % 8;
    std::vector<int> label(n);
    std::iota(label.begin(), label.end(), 0);
    std::shuffle(label.begin(), label.end(), rng);
    SupernovaForm f;
    int pos = 0;
    while (pos < n) {
      const int m = f.stages.empty() ? std::uniform_int_distribution<int>(0, n - pos - 1)(rng)
                                     : std::uniform_int_distribution<int>(1, std::max(1, n - pos - 1))(rng);
      if (pos + m >= n) break;
      const int b = std::uniform_int_distribution<int>(1, n - pos - m)(rng);
      SupernovaStage st;
      for (int k = 0; k < m; ++k) st.prefix = st.prefix.with(label[pos++]);
      for (int k = 0; k < b; ++k) st.block = st.block.with(label[pos++]);
      f.stages.push_back(st);
      if (std::bernoulli_distribution(0.3)(rng)) break;
    }
    const RingContext ctx(n, Flavor::PolyS);
    const auto i = supernova_to_ideal(f, ctx);
    const auto back = recognize_supernova(i);
    REQUIRE(back.has_value());
    CHECK(supernova_to_ideal(*back, ctx) == i);
    CHECK(is_gotzmann_ideal(i));
    if (i.num_gens() > 0 && i.min_gen_degree() == i.max_gen_degree()) {
      const FacetComplex h = FacetComplex::of_ideal(i);
      CHECK(h.is_pure());
      CHECK(is_star_shaped(h));
    }
  }
}

TEST_CASE("reduction lemmas") {
  for (int n = 1; n <= 5; ++n)
    for_each_antichain(n, [&](const MonomialIdeal& i) {
      if (!is_gotzmann_ideal(i) || i.is_unit() || i.is_zero()) return;
      for (int v = 0; v < n; ++v) {
        if (std::all_of(i.gens().begin(), i.gens().end(), [v](const Monomial& m) { return m.exponent(v) > 0; }))
          CHECK(is_gotzmann_ideal(divide_by_variable(i, v)));
        if (i.contains(Monomial::variable(v))) CHECK(is_gotzmann_ideal(quotient_by_variable(i, v)));
      }
    });
}

}  // TEST_SUITE
