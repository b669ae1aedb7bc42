#include "gotz/selftest.hpp"

#include <array>
#include <functional>

#include "gotz/counting.hpp"
#include "gotz/duality.hpp"
#include "gotz/error.hpp"
#include "gotz/lex.hpp"
#include "gotz/supernova.hpp"
#include "gotz/text.hpp"

namespace gotz {

namespace {

MonomialIdeal ideal_r(const char* text, int n) { return parse_ideal(text, n, Flavor::SqfR); }

MonomialSpace space_r(const char* text, int n) { return parse_space(text, n, Flavor::SqfR); }

// Gotzmann in R, generating component lex in no order, dual not Gotzmann.
std::string rigid_gotzmann(const char* text, int n) {
  const auto ideal = ideal_r(text, n);
  const auto v = component_space(ideal, ideal.min_gen_degree());
  if (!is_gotzmann_ideal(ideal)) return "not Gotzmann in R";
  if (auto o = is_lex_some_order(v)) return "lex under " + o->to_string(v.ctx());
  if (is_gotzmann_space(alexander_dual_space(v))) return "dual component is Gotzmann";
  if (is_gdual_ideal(ideal)) return "ideal is gdual";
  return {};
}

std::string four_cycle_in_s() {
  const auto s = parse_ideal("ab,ac,bd,cd", 4, Flavor::PolyS);
  if (is_gotzmann_ideal(s)) return "Gotzmann in S";
  if (recognize_supernova(s)) return "recognized as a supernova";
  return {};
}

std::string reconstruction() {
  const RingContext r(5, Flavor::SqfR);
  const auto vxi = parse_space("ab,bc,cd,ad", r.without(4));
  const auto v = reconstruct(r, 4, vxi);
  if (v != space_r("abc,abd,acd,bcd,abe,bce,cde,ade", 5))
    return "reconstructed " + format_space(v);
  if (!is_gotzmann_space(v)) return "not Gotzmann";
  if (auto o = is_lex_some_order(v)) return "lex under " + o->to_string(r);
  return {};
}

std::string mixed_orders() {
  const auto ideal = ideal_r("bc,abd,abe,acd,ace,ade", 5);
  const auto& ctx = ideal.ctx();
  const std::array<MonomialSpace, 2> parts{component_space(ideal, 2), component_space(ideal, 3)};
  if (!is_gotzmann_ideal(ideal)) return "not Gotzmann";
  if (!is_gdual_ideal(ideal)) return "not gdual";
  if (generator_counts(ideal) != std::map<int, std::uint64_t>{{2, 1}, {3, 5}})
    return "unexpected generator counts";
  if (!is_lex_segment(parts[0], VariableOrder::parse("bcade", ctx))) return "I_2 not lex under bcade";
  if (!is_lex_segment(parts[1], VariableOrder::parse("abcde", ctx))) return "I_3 not lex under abcde";
  if (auto o = common_lex_order(parts)) return "common order " + o->to_string(ctx);
  return {};
}

std::string non_converse() {
  const auto v = space_r("ab,ac,bc", 4);
  if (is_gotzmann_space(v)) return "Gotzmann";
  const auto dec = decompose(v, 0);
  if (!is_gotzmann_space(dec.vhat) || !is_gotzmann_space(dec.vxi)) return "a part is not Gotzmann";
  return {};
}

std::string non_gotzmann_part() {
  const auto v = space_r("abc,abd,acd,bcd,bce,bde,cde", 5);
  if (!is_gotzmann_space(v)) return "not Gotzmann";
  const auto dec = decompose(v, 0);
  if (dec.vxi != parse_space("bc,bd,cd", dec.vxi.ctx())) return "vxi = " + format_space(dec.vxi);
  if (is_gotzmann_space(dec.vxi)) return "vxi is Gotzmann";
  return {};
}

std::string counts() {
  constexpr std::array<std::uint64_t, 6> expected{2, 3, 6, 19, 96, 669};
  for (const auto& row : count_table(5)) {
    if (!row.agree()) return "disagreement at n = " + std::to_string(row.n);
    if (row.supernova != expected[row.n]) return "wrong count at n = " + std::to_string(row.n);
  }
  return {};
}

}  // namespace

std::vector<SelftestCase> run_selftest() {
  const std::vector<std::pair<const char*, std::function<std::string()>>> cases{
      {"four_cycle_gotzmann_in_R", [] { return rigid_gotzmann("ab,ac,bd,cd", 4); }},
      {"four_cycle_not_gotzmann_in_S", four_cycle_in_s},
      {"cubic_gotzmann_in_R", [] { return rigid_gotzmann("abc,abd,abe,acd,ace,bcd,bce", 5); }},
      {"reconstruction_not_lex", reconstruction},
      {"components_need_different_orders", mixed_orders},
      {"decomposition_non_converse", non_converse},
      {"gotzmann_with_non_gotzmann_part", non_gotzmann_part},
      {"counts_through_five", counts},
  };
  std::vector<SelftestCase> out;
  for (const auto& [name, run] : cases) {
    SelftestCase c{name, false, {}};
    try {
      c.detail = run();
      c.passed = c.detail.empty();
    } catch (const std::exception& e) {
      c.detail = e.what();
    }
    out.push_back(std::move(c));
  }
  return out;
}

}  // namespace gotz
