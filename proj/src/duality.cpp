#include "gotz/duality.hpp"

#include <algorithm>

#include "gotz/error.hpp"

namespace gotz {

namespace {

void require_sqf(const MonomialSpace& v) {
  require(v.ctx().is_sqf(), "operation is defined for spaces of the squarefree ring");
}

MonomialSpace sqf_space(const RingContext& ctx, int d, const std::vector<std::uint32_t>& bits) {
  std::vector<SqfMonomial> b;
  b.reserve(bits.size());
  for (auto x : bits) b.emplace_back(x);
  return MonomialSpace(ctx, d, b);
}

}  // namespace

MonomialSpace embed_from_quotient(const MonomialSpace& q_space, const RingContext& r_ctx, int i) {
  require(q_space.ctx() == r_ctx.without(i), "space does not live in R/(x_i)");
  std::vector<std::uint32_t> out;
  for (auto m : q_space.sqf_basis()) out.push_back(insert_zero_bit(m.bits(), i));
  return sqf_space(r_ctx, q_space.degree(), out);
}

MonomialSpace project_to_quotient(const MonomialSpace& r_space, int i) {
  std::vector<std::uint32_t> out;
  for (auto m : r_space.sqf_basis()) {
    require(!m.contains(i), "monomial involves the removed variable");
    out.push_back(drop_bit(m.bits(), i));
  }
  return sqf_space(r_space.ctx().without(i), r_space.degree(), out);
}

Decomposition decompose(const MonomialSpace& v, int i) {
  require_sqf(v);
  require(i >= 0 && i < v.ctx().num_vars(), "variable index out of range");
  require(v.degree() >= 1, "x_i-decomposition needs degree >= 1");
  std::vector<std::uint32_t> hat, xi;
  for (auto m : v.sqf_basis()) {
    if (m.contains(i)) xi.push_back(drop_bit(m.without(i).bits(), i));
    else hat.push_back(drop_bit(m.bits(), i));
  }
  const RingContext q = v.ctx().without(i);
  return Decomposition{i, v.ctx(), sqf_space(q, v.degree(), hat), sqf_space(q, v.degree() - 1, xi)};
}

MonomialSpace reassemble(const Decomposition& dec) {
  std::vector<std::uint32_t> out;
  for (auto m : dec.vhat.sqf_basis()) out.push_back(insert_zero_bit(m.bits(), dec.var));
  for (auto m : dec.vxi.sqf_basis())
    out.push_back(insert_zero_bit(m.bits(), dec.var) | (1u << dec.var));
  const auto v = sqf_space(dec.r_ctx, dec.vhat.degree(), out);
  ensure(v.size() == dec.vhat.size() + dec.vxi.size(), "decomposition parts overlap");
  return v;
}

namespace {

struct Compressed {
  MonomialSpace lhat;
  MonomialSpace lxi;
};

Compressed compression_parts(const Decomposition& dec, const std::optional<VariableOrder>& order) {
  const auto& q = dec.vhat.ctx();
  const VariableOrder o = order.value_or(VariableOrder::identity(q.num_vars()));
  require(o.size() == q.num_vars(), "compression order must rank the remaining variables");
  return {lex_segment(dec.vhat.size(), dec.vhat.degree(), q, o),
          lex_segment(dec.vxi.size(), dec.vxi.degree(), q, o)};
}

}  // namespace

MonomialSpace compress(const MonomialSpace& v, int i, const std::optional<VariableOrder>& order) {
  const auto dec = decompose(v, i);
  auto parts = compression_parts(dec, order);
  return reassemble(Decomposition{i, dec.r_ctx, std::move(parts.lhat), std::move(parts.lxi)});
}

GrowthEquality growth_equality(const MonomialSpace& v, int i,
                               const std::optional<VariableOrder>& order) {
  const auto dec = decompose(v, i);
  const auto parts = compression_parts(dec, order);
  GrowthEquality g;
  g.n1_vhat = shadow_up(dec.vhat).size();
  g.vhat_plus_n1_vxi = dec.vhat.united(shadow_up(dec.vxi)).size();
  g.n1_lhat = shadow_up(parts.lhat).size();
  g.lhat_plus_n1_lxi = parts.lhat.united(shadow_up(parts.lxi)).size();
  g.shadow_v = shadow_up(v).size();
  g.shadow_compressed = shadow_up(reassemble(Decomposition{i, dec.r_ctx, parts.lhat, parts.lxi})).size();
  return g;
}

MonomialSpace colon_with_n1(const MonomialSpace& w) {
  require_sqf(w);
  require(w.degree() >= 1, "colon with n_1 needs degree >= 1");
  const int n = w.ctx().num_vars();
  std::vector<SqfMonomial> out;
  for (auto m : all_sqf_monomials(n, w.degree() - 1)) {
    bool ok = true;
    for (int j = 0; j < n && ok; ++j)
      if (!m.contains(j)) ok = w.contains(m.with(j));
    if (ok) out.push_back(m);
  }
  return MonomialSpace(w.ctx(), w.degree() - 1, out);
}

MonomialSpace alexander_dual_space(const MonomialSpace& v) {
  require_sqf(v);
  const int n = v.ctx().num_vars();
  require(v.degree() <= n, "degree exceeds the number of variables");
  const SqfMonomial x = SqfMonomial::full(n);
  std::vector<SqfMonomial> out;
  for (auto m : all_sqf_monomials(n, v.degree()))
    if (!v.contains(m)) out.push_back(x.minus(m));
  return MonomialSpace(v.ctx(), n - v.degree(), out);
}

MonomialIdeal alexander_dual_ideal(const MonomialIdeal& ideal) {
  require(ideal.ctx().is_sqf(), "Alexander duality is defined for ideals of the squarefree ring");
  const int n = ideal.ctx().num_vars();
  std::vector<std::optional<MonomialSpace>> by_degree(n + 1);
  for (int d = 0; d <= n; ++d) {
    auto dual = alexander_dual_space(component_space(ideal, d));
    by_degree[dual.degree()] = std::move(dual);
  }
  std::vector<Monomial> all;
  for (int k = 0; k <= n; ++k) {
    if (k < n)
      ensure(shadow_up(*by_degree[k]).is_subset_of(*by_degree[k + 1]),
             "componentwise Alexander duals are not closed under multiplication in degree " +
                 std::to_string(k));
    all.insert(all.end(), by_degree[k]->basis().begin(), by_degree[k]->basis().end());
  }
  return minimalize(ideal.ctx(), std::move(all));
}

bool is_gdual(const MonomialSpace& v) {
  return is_gotzmann_space(alexander_dual_space(v));
}

bool is_gdual_ideal(const MonomialIdeal& ideal) {
  require(ideal.ctx().is_sqf(), "gdual is defined for ideals of the squarefree ring");
  for (int d = 0; d <= ideal.ctx().num_vars(); ++d)
    if (!is_gdual(component_space(ideal, d))) return false;
  return true;
}

int pick_variable(const MonomialSpace& v) {
  require_sqf(v);
  require(!v.empty(), "cannot pick a variable for the zero space");
  const int n = v.ctx().num_vars();
  int best = 0;
  std::size_t best_count = 0;
  const auto basis = v.sqf_basis();
  for (int i = 0; i < n; ++i) {
    const auto c = static_cast<std::size_t>(
        std::count_if(basis.begin(), basis.end(), [i](SqfMonomial m) { return m.contains(i); }));
    if (c > best_count) {
      best = i;
      best_count = c;
    }
  }
  return best;
}

MonomialSpace reconstruct(const RingContext& r_ctx, int i, const MonomialSpace& vxi) {
  require(r_ctx.is_sqf(), "reconstruction happens in the squarefree ring");
  require(vxi.ctx() == r_ctx.without(i), "vxi must live in R/(x_i)");
  require(is_gotzmann_space(vxi), "vxi is not Gotzmann in R/(x_i)");
  Decomposition dec{i, r_ctx, shadow_up(vxi), vxi};
  auto v = reassemble(dec);
  ensure(is_gotzmann_space(v), "reconstructed space is not Gotzmann");
  return v;
}

}  // namespace gotz
