#include "report.hpp"

#include <map>

#include "gotz/counting.hpp"
#include "gotz/duality.hpp"
#include "gotz/error.hpp"
#include "gotz/hilbert.hpp"
#include "gotz/lex.hpp"
#include "gotz/selftest.hpp"
#include "gotz/series.hpp"
#include "gotz/supernova.hpp"
#include "gotz/text.hpp"

namespace gotz::report {

namespace {

json degree_map(const std::map<int, std::uint64_t>& counts) {
  json out = json::object();
  for (const auto& [d, c] : counts) out[std::to_string(d)] = c;
  return out;
}

json header(const char* command, const RingContext& ctx, json gens) {
  return json{{"command", command},
              {"ring", std::string(flavor_name(ctx.flavor()))},
              {"n", ctx.num_vars()},
              {"gens", std::move(gens)}};
}

json space_json(const MonomialSpace& v) {
  return json{{"degree", v.degree()}, {"basis", monomial_strings(v)}};
}

json order_json(const std::optional<VariableOrder>& o, const RingContext& ctx) {
  return o ? json(o->to_string(ctx)) : json(nullptr);
}

MonomialSpace parse_r_space(const Input& in) { return parse_space(in.text, in.n, Flavor::SqfR); }

int resolve_var(const std::string& name, const RingContext& ctx) {
  const auto i = ctx.index_of(name);
  require(i.has_value(), "unknown variable '" + name + "'");
  return *i;
}

json big(const BigInt& v) {
  if (v >= 0 && v <= std::numeric_limits<std::uint64_t>::max())
    return v.convert_to<std::uint64_t>();
  return v.str();
}

json coefficients(const RationalSeries& s) {
  json out = json::array();
  for (int k = 0; k <= s.order(); ++k) out.push_back(big(egf_coefficient(s, k)));
  return out;
}

const char* class_name(FullSupportClass c) {
  switch (c) {
    case FullSupportClass::H0: return "H0";
    case FullSupportClass::H1: return "H1";
    case FullSupportClass::H2: return "H2";
    case FullSupportClass::H3: return "H3";
    case FullSupportClass::H4: return "H4";
    case FullSupportClass::Unclassified: break;
  }
  return nullptr;
}

}  // namespace

json check(const Input& in, Flavor flavor) {
  const auto ideal = parse_ideal(in.text, in.n, flavor);
  json degrees = json::array();
  bool gotzmann = true;
  if (!ideal.is_zero()) {
    for (int d = ideal.min_gen_degree(); d <= ideal.max_gen_degree(); ++d) {
      const auto v = component_space(ideal, d);
      const auto shadow = shadow_up(v).size();
      const auto bound = minimal_growth(v.size(), d, ideal.ctx());
      gotzmann = gotzmann && shadow == bound;
      degrees.push_back({{"degree", d}, {"dim", v.size()}, {"shadow", shadow},
                         {"minimal_growth", bound}, {"gotzmann", shadow == bound}});
    }
  }
  ensure(gotzmann == is_gotzmann_ideal(ideal), "degreewise Gotzmann check disagrees");
  auto out = header("check", ideal.ctx(), monomial_strings(ideal));
  out["result"] = {{"gotzmann", gotzmann}};
  out["diagnostics"] = {{"degrees", std::move(degrees)},
                        {"generator_counts", degree_map(generator_counts(ideal))}};
  return out;
}

json classify(const Input& in) {
  const auto ideal = parse_ideal(in.text, in.n, Flavor::PolyS);
  require(ideal.is_squarefree(), "classify needs a squarefree ideal");
  const auto& ctx = ideal.ctx();
  const bool gotzmann = is_gotzmann_ideal(ideal);
  const auto form = recognize_supernova(ideal);

  json stages = json::array();
  if (form)
    for (const auto& s : form->stages) {
      json block = json::array();
      for (int i : s.block.indices()) block.push_back(ctx.name(i));
      stages.push_back({{"prefix", format_monomial(s.prefix, ctx)}, {"block", std::move(block)}});
    }

  json complex = nullptr;
  bool complex_ok = gotzmann;
  if (!ideal.is_unit()) {
    const auto h = FacetComplex::of_ideal(ideal);
    const auto chain = supernova_chain(h);
    complex_ok = chain.has_value();
    json chain_json = nullptr;
    if (chain) {
      chain_json = json::array();
      for (auto f : *chain) chain_json.push_back(format_monomial(f, ctx));
    }
    complex = {{"pure", h.is_pure()},
               {"star_shaped", h.is_pure() && !h.facets().empty() ? json(is_star_shaped(h)) : json(nullptr)},
               {"supernova", chain.has_value()},
               {"chain", std::move(chain_json)}};
  }

  const char* cls = gotzmann ? class_name(full_support_class(ideal)) : nullptr;
  auto out = header("classify", ctx, monomial_strings(ideal));
  out["result"] = {
      {"gotzmann", gotzmann},
      {"supernova", form ? json(format_supernova(*form, ctx)) : json(nullptr)},
      {"stages", std::move(stages)},
      {"complex", std::move(complex)},
      {"linear_form", ideal.contains_linear_form()},
      {"full_support", has_full_support(ideal)},
      {"full_support_class", cls ? json(cls) : json(nullptr)},
      {"canonical", ctx.num_vars() <= 8 ? json(canonicalize(ideal)) : json(nullptr)}};
  out["diagnostics"] = {{"generator_counts", degree_map(generator_counts(ideal))},
                        {"agree", gotzmann == form.has_value() && gotzmann == complex_ok}};
  return out;
}

json lexify(const Input& in) {
  const auto ideal = parse_ideal(in.text, in.n, Flavor::SqfR);
  const auto lex = lexify_in_R(ideal);
  const auto counts = generator_counts(ideal);
  const auto lex_counts = generator_counts(lex);
  auto out = header("lexify", ideal.ctx(), monomial_strings(ideal));
  out["result"] = {{"lex", monomial_strings(lex)},
                   {"sqf_lex_in_S", monomial_strings(sqf_lexify_in_S(ideal))}};
  out["diagnostics"] = {{"sqf_hilbert", sqf_hilbert(ideal).values},
                        {"generator_counts", degree_map(counts)},
                        {"lex_generator_counts", degree_map(lex_counts)},
                        {"gotzmann", is_gotzmann_ideal(ideal)},
                        {"counts_match", counts == lex_counts}};
  return out;
}

json dual_ideal(const Input& in) {
  const auto ideal = parse_ideal(in.text, in.n, Flavor::SqfR);
  const auto dual = alexander_dual_ideal(ideal);
  auto out = header("dual", ideal.ctx(), monomial_strings(ideal));
  out["result"] = {{"dual", monomial_strings(dual)}};
  out["diagnostics"] = {{"gotzmann", is_gotzmann_ideal(ideal)},
                        {"dual_gotzmann", is_gotzmann_ideal(dual)},
                        {"gdual", is_gdual_ideal(ideal)}};
  return out;
}

json dual_space(const Input& in) {
  const auto v = parse_r_space(in);
  const auto dual = alexander_dual_space(v);
  const auto& ctx = v.ctx();
  const bool small = ctx.num_vars() <= kMaxOrderSearchVars;
  auto out = header("dual", ctx, monomial_strings(v));
  out["result"] = {{"dual", space_json(dual)}};
  out["diagnostics"] = {
      {"gotzmann", is_gotzmann_space(v)},
      {"gdual", is_gotzmann_space(dual)},
      {"lex_order", small ? order_json(is_lex_some_order(v), ctx) : json(nullptr)}};
  return out;
}

json decompose(const Input& in, const std::optional<std::string>& var) {
  const auto v = parse_r_space(in);
  const auto& ctx = v.ctx();
  const int i = var ? resolve_var(*var, ctx) : pick_variable(v);
  const auto dec = decompose(v, i);
  const auto growth = growth_equality(v, i);
  json colon = nullptr;
  if (dec.vhat.degree() >= 1) colon = colon_with_n1(dec.vhat).is_subset_of(dec.vxi);
  auto out = header("decompose", ctx, monomial_strings(v));
  out["result"] = {{"var", ctx.name(i)},
                   {"quotient_vars", dec.vhat.ctx().names()},
                   {"vhat", space_json(dec.vhat)},
                   {"vxi", space_json(dec.vxi)}};
  out["diagnostics"] = {
      {"dim_v", v.size()},
      {"dim_vhat", dec.vhat.size()},
      {"dim_vxi", dec.vxi.size()},
      {"v_gotzmann", is_gotzmann_space(v)},
      {"vhat_gotzmann", is_gotzmann_space(dec.vhat)},
      {"vxi_gotzmann", is_gotzmann_space(dec.vxi)},
      {"vhat_in_n1_vxi", dec.vhat.is_subset_of(shadow_up(dec.vxi))},
      {"colon_vhat_in_vxi", std::move(colon)},
      {"pick_variable", ctx.name(pick_variable(v))},
      {"growth", {{"n1_vhat", growth.n1_vhat},
                  {"vhat_plus_n1_vxi", growth.vhat_plus_n1_vxi},
                  {"n1_lhat", growth.n1_lhat},
                  {"lhat_plus_n1_lxi", growth.lhat_plus_n1_lxi},
                  {"lhs", growth.lhs()},
                  {"rhs", growth.rhs()},
                  {"holds", growth.holds()}}}};
  return out;
}

json compress(const Input& in, const std::string& var, const std::optional<std::string>& order) {
  const auto v = parse_r_space(in);
  const auto& ctx = v.ctx();
  const int i = resolve_var(var, ctx);
  const auto q = ctx.without(i);
  const auto o = order ? VariableOrder::parse(*order, q) : VariableOrder::identity(q.num_vars());
  const auto c = compress(v, i, o);
  const auto growth = growth_equality(v, i, o);
  auto out = header("compress", ctx, monomial_strings(v));
  out["result"] = {{"var", var}, {"order", o.to_string(q)}, {"compressed", space_json(c)}};
  out["diagnostics"] = {{"shadow_v", growth.shadow_v},
                        {"shadow_compressed", growth.shadow_compressed},
                        {"shadow_not_increased", growth.shadow_compressed <= growth.shadow_v},
                        {"growth_lhs", growth.lhs()},
                        {"growth_rhs", growth.rhs()},
                        {"growth_holds", growth.holds()},
                        {"v_gotzmann", is_gotzmann_space(v)}};
  return out;
}

json count(int max_n) {
  json rows = json::array();
  bool all = true;
  for (const auto& r : count_table(max_n)) {
    all = all && r.agree();
    rows.push_back({{"n", r.n},
                    {"supernova", r.supernova},
                    {"egf", r.egf},
                    {"brute", r.brute ? json(*r.brute) : json(nullptr)},
                    {"full_support", r.full_support},
                    {"full_support_egf", r.full_support_egf},
                    {"agree", r.agree()}});
  }
  return json{{"command", "count"}, {"ring", "S"}, {"n", max_n}, {"gens", json::array()},
              {"result", std::move(rows)}, {"diagnostics", {{"all_agree", all}}}};
}

json series(int order) {
  require(order >= 0 && order <= 40, "series order must lie in 0..40");
  return json{{"command", "series"},
              {"ring", "S"},
              {"n", order},
              {"gens", json::array()},
              {"result", {{"fubini", coefficients(fubini_egf(order))},
                          {"last_block", coefficients(last_block_egf(order))},
                          {"full_support", coefficients(full_support_egf(order))},
                          {"gotzmann", coefficients(gotzmann_egf(order))}}},
              {"diagnostics", {{"integral", true}}}};
}

json selftest() {
  json cases = json::array();
  int failed = 0;
  for (const auto& c : run_selftest()) {
    failed += c.passed ? 0 : 1;
    cases.push_back({{"name", c.name}, {"passed", c.passed}, {"detail", c.detail}});
  }
  const auto total = static_cast<int>(cases.size());
  return json{{"command", "selftest"}, {"ring", nullptr}, {"n", nullptr}, {"gens", json::array()},
              {"result", std::move(cases)},
              {"diagnostics", {{"passed", total - failed}, {"failed", failed}}}};
}

}  // namespace gotz::report
