#include <random>

#include "doctest.h"
#include "gotz/error.hpp"
#include "gotz/hilbert.hpp"
#include "gotz/ideal.hpp"
#include "gotz/text.hpp"
#include "helpers.hpp"
#include "oracles.hpp"

using namespace gotz;
using namespace testing;

TEST_SUITE("monomial-core") {

TEST_CASE("ring context labels and bounds") {
  const RingContext r(4, Flavor::SqfR);
  CHECK(r.names() == std::vector<std::string>{"a", "b", "c", "d"});
  CHECK(r.index_of("c") == 2);
  CHECK_FALSE(r.index_of("e").has_value());
  CHECK(r.without(1).names() == std::vector<std::string>{"a", "c", "d"});
  CHECK(r.without(1).with_inserted(1, "b") == r);
  CHECK(r.with_flavor(Flavor::PolyS) != r);
  CHECK_THROWS_AS(RingContext(17, Flavor::PolyS), Error);
  CHECK_THROWS_AS(RingContext(-1, Flavor::PolyS), Error);
  CHECK_THROWS_AS(RingContext({"x", "x"}, Flavor::PolyS), Error);
  CHECK_THROWS_AS(RingContext({"1x"}, Flavor::PolyS), Error);
  CHECK_NOTHROW(RingContext({"x1", "y_2"}, Flavor::SqfR));
}

TEST_CASE("binomial coefficients") {
  CHECK(binomial(5, 2) == 10);
  CHECK(binomial(3, 5) == 0);
  CHECK(binomial(4, -1) == 0);
  CHECK(binomial(0, 0) == 1);
  CHECK(binomial(60, 30) == 118264581564861424LL);
}

TEST_CASE("monomial text round trip") {
  const RingContext ctx(4, Flavor::PolyS);
  const auto m = parse_monomial("a^2bd", ctx);
  CHECK(m.degree() == 4);
  CHECK(m.exponent(0) == 2);
  CHECK(format_monomial(m, ctx) == "a^2bd");
  CHECK(parse_monomial("x1*x2*x4", ctx) == parse_monomial("abd", ctx));
  CHECK(parse_monomial("1", ctx).is_unit());
  CHECK_THROWS_AS(parse_monomial("az", ctx), Error);
  CHECK_THROWS_AS(parse_monomial("x9", ctx), Error);
  try {
    parse_ideal("ab,a$", 3, Flavor::PolyS);
    FAIL("expected a parse error");
  } catch (const Error& e) {
    CHECK(e.code() == ErrorCode::Parse);
  }
}

TEST_CASE("ideal text conventions") {
  CHECK(format_ideal(parse_ideal("0", 3, Flavor::SqfR)) == "0");
  CHECK(parse_ideal("0", 3, Flavor::SqfR).is_zero());
  CHECK(parse_ideal("1", 3, Flavor::SqfR).is_unit());
  CHECK(format_ideal(parse_ideal("# comment\ncd\nab , ac\n", std::nullopt, Flavor::SqfR)) == "ab,ac,cd");
  CHECK(parse_ideal("ab,cd", std::nullopt, Flavor::PolyS).ctx().num_vars() == 4);
  CHECK(parse_ideal("x1*x5", std::nullopt, Flavor::PolyS).ctx().num_vars() == 5);
  CHECK_THROWS_AS(parse_ideal("ae", 4, Flavor::SqfR), Error);
  const auto stanzas = parse_ideal_stanzas("a\nb\n\n0\n\nbc\n", 3, Flavor::PolyS);
  REQUIRE(stanzas.size() == 3);
  CHECK(format_ideal(stanzas[0]) == "a,b");
  CHECK(stanzas[1].is_zero());
}

TEST_CASE("minimalize") {
  CHECK(format_ideal(ideal_s("ab,abc", 3)) == "ab");
  CHECK(format_ideal(ideal_r("ab,ac,bd,cd", 4)) == "ab,ac,bd,cd");
  CHECK(minimalize(RingContext(3, Flavor::PolyS), std::vector<Monomial>{}).is_zero());
  CHECK(format_ideal(ideal_s("a^2,ab,a,b^3", 2)) == "a,b^3");
  CHECK_THROWS_AS(ideal_r("a^2b", 3), Error);
  const auto i = ideal_s("abc,ab,bc,b", 3);
  CHECK(minimalize(i.ctx(), i.gens()) == i);
}

TEST_CASE("component spaces") {
  CHECK(format_space(component_space(ideal_r("ab", 3), 3)) == "abc");
  const auto s3 = component_space(ideal_s("ab", 3), 3);
  CHECK(s3.size() == 3);
  CHECK(s3 == space_s("a^2b,ab^2,abc", 3));
  const auto i = ideal_r("ab,ac,bd,cd", 4);
  CHECK(component_space(i, 3) == space_r("abc,abd,acd,bcd", 4));
  CHECK(component_space(i, 3) == shadow_up(component_space(i, 2)));
}

TEST_CASE("shadows") {
  CHECK(shadow_up(space_r("ab,ac,bd,cd", 4)) == space_r("abc,abd,acd,bcd", 4));
  CHECK(shadow_up(space_r("ab,ac,ad", 4)).size() == 3);
  CHECK(shadow_up(MonomialSpace::zero(RingContext(3, Flavor::SqfR), 2)).empty());
  CHECK(shadow_up(space_r("abc", 3)).empty());
  CHECK(shadow_up(space_s("ab", 2)) == space_s("a^2b,ab^2", 2));
}

TEST_CASE("squarefree Hilbert data") {
  CHECK(sqf_hilbert(ideal_r("ab", 3)).values == std::vector<std::uint64_t>{0, 0, 1, 1});
  CHECK(sqf_hilbert(ideal_r("1", 4)).values == std::vector<std::uint64_t>{1, 4, 6, 4, 1});
  CHECK(sqf_hilbert(ideal_r("ab,ac,bd,cd", 4)).values == std::vector<std::uint64_t>{0, 0, 4, 4, 1});
  CHECK_THROWS_AS(sqf_hilbert(ideal_s("a^2", 2)), Error);
}

TEST_CASE("Hilbert transform examples") {
  const auto ab = sqf_hilbert(ideal_s("ab", 3));
  CHECK(poly_hilbert_from_sqf(ab, 3) == 3);
  CHECK(poly_hilbert_from_sqf(ab, 0) == 0);
  const auto unit = sqf_hilbert(ideal_s("1", 4));
  for (int d = 0; d <= 8; ++d)
    CHECK(poly_hilbert_from_sqf(unit, d) == static_cast<std::uint64_t>(binomial(4 + d - 1, d)));
}

TEST_CASE("Hilbert transform agrees with counting in S on random ideals") {
  std::mt19937_64 rng(20240611);
  std::uniform_int_distribution<int> nvars(1, 6);
  for (int trial = 0; trial < 200; ++trial) {
    const int n = nvars(rng);
    const auto i = random_sqf_ideal(rng, n, Flavor::PolyS);
    const auto sqf = sqf_hilbert(i);
    const auto direct = direct_hilbert(i, 8);
    const auto gens = oracle::gens_of(i);
    for (int d = 0; d <= 8; ++d) {
      CHECK(poly_hilbert_from_sqf(sqf, d) == direct.at(d));
      if (d <= 5) CHECK(direct.at(d) == oracle::ideal_dim(gens, n, d, false));
    }
  }
}

TEST_CASE("generator counts") {
  using Counts = std::map<int, std::uint64_t>;
  CHECK(generator_counts(ideal_r("bc,abd,abe,acd,ace,ade", 5)) == Counts{{2, 1}, {3, 5}});
  CHECK(generator_counts(ideal_r("0", 3)).empty());
  CHECK(generator_counts(ideal_r("ab,ac,bd,cd", 4)) == Counts{{2, 4}});
  std::mt19937_64 rng(7);
  for (int trial = 0; trial < 100; ++trial) {
    const auto r = random_sqf_ideal(rng, 5, Flavor::SqfR);
    CHECK(generator_counts(r) == generator_counts_from_components(r));
    const auto s = random_sqf_ideal(rng, 4, Flavor::PolyS);
    CHECK(generator_counts(s) == generator_counts_from_components(s));
  }
}

TEST_CASE("division and quotient by a variable") {
  CHECK(format_ideal(divide_by_variable(ideal_s("ab,abc", 3), 0)) == "b");
  CHECK(format_ideal(divide_by_variable(ideal_s("ab,ac,ad", 4), 0)) == "b,c,d");
  CHECK_THROWS_AS(divide_by_variable(ideal_s("ab,c", 3), 0), Error);
  const auto q = quotient_by_variable(ideal_s("a,bc", 3), 0);
  CHECK(q.ctx().names() == std::vector<std::string>{"b", "c"});
  CHECK(format_ideal(q) == "bc");
  CHECK(common_variable(ideal_s("abc,bd", 4)) == 1);
  CHECK_FALSE(common_variable(ideal_s("ab,cd", 4)).has_value());
}

TEST_CASE("antichain, monotonicity and component consistency") {
  std::mt19937_64 rng(99);
  for (int trial = 0; trial < 200; ++trial) {
    const int n = 2 + trial % 5;
    const auto i = random_sqf_ideal(rng, n, Flavor::SqfR);
    const auto& g = i.gens();
    for (std::size_t a = 0; a < g.size(); ++a)
      for (std::size_t b = 0; b < g.size(); ++b)
        if (a != b) CHECK_FALSE(g[a].divides(g[b]));
    const auto counts = generator_counts(i);
    for (int d = 0; d < n; ++d) {
      const auto lower = component_space(i, d);
      const auto upper = component_space(i, d + 1);
      const auto sh = shadow_up(lower);
      CHECK(sh.is_subset_of(upper));
      CHECK((sh == upper) == (counts.count(d + 1) == 0));
      CHECK(oracle::to_set(sh) == oracle::shadow(oracle::to_set(lower), n, true));
    }
    const int d = 1 + trial % (n - 1);
    const auto v = random_sqf_space(rng, n, d, 0.3);
    const auto w = v.united(random_sqf_space(rng, n, d, 0.3));
    CHECK(shadow_up(v).is_subset_of(shadow_up(w)));
  }
}

}  // TEST_SUITE
