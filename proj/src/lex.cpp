#include "gotz/lex.hpp"

#include <algorithm>
#include <numeric>

#include "gotz/error.hpp"
#include "gotz/hilbert.hpp"

namespace gotz {

VariableOrder VariableOrder::identity(int n) {
  std::vector<int> perm(n);
  std::iota(perm.begin(), perm.end(), 0);
  return VariableOrder(std::move(perm));
}

VariableOrder::VariableOrder(std::vector<int> perm) : perm_(std::move(perm)) {
  std::vector<bool> seen(perm_.size(), false);
  for (int p : perm_) {
    require(p >= 0 && p < static_cast<int>(perm_.size()) && !seen[p],
            "variable order is not a permutation");
    seen[p] = true;
  }
}

VariableOrder VariableOrder::parse(std::string_view text, const RingContext& ctx) {
  std::vector<int> perm;
  const bool letters = std::all_of(ctx.names().begin(), ctx.names().end(),
                                   [](const std::string& s) { return s.size() == 1; });
  auto add = [&](std::string_view name) {
    auto idx = ctx.index_of(name);
    if (!idx) fail(ErrorCode::Parse, "unknown variable '" + std::string(name) + "' in order");
    perm.push_back(*idx);
  };
  if (letters && text.find_first_of(",> ") == std::string_view::npos) {
    for (char c : text) add(std::string_view(&c, 1));
  } else {
    std::size_t pos = 0;
    while (pos < text.size()) {
      auto next = text.find_first_of(",> ", pos);
      auto piece = text.substr(pos, next == std::string_view::npos ? std::string_view::npos : next - pos);
      if (!piece.empty()) add(piece);
      if (next == std::string_view::npos) break;
      pos = next + 1;
    }
  }
  if (static_cast<int>(perm.size()) != ctx.num_vars())
    fail(ErrorCode::Parse, "order must list all " + std::to_string(ctx.num_vars()) + " variables");
  try {
    return VariableOrder(std::move(perm));
  } catch (const Error& e) {
    fail(ErrorCode::Parse, e.what());
  }
}

std::string VariableOrder::to_string(const RingContext& ctx) const {
  std::string out;
  const bool letters = std::all_of(ctx.names().begin(), ctx.names().end(),
                                   [](const std::string& s) { return s.size() == 1; });
  for (std::size_t i = 0; i < perm_.size(); ++i) {
    if (!letters && i) out += '>';
    out += ctx.name(perm_[i]);
  }
  return out;
}

std::strong_ordering lex_compare(const Monomial& u, const Monomial& v,
                                 const VariableOrder& order) {
  require(u.degree() == v.degree(), "lex comparison needs equal degrees");
  for (int var : order.perm()) {
    if (auto c = u.exponent(var) <=> v.exponent(var); c != 0) return c;
  }
  return std::strong_ordering::equal;
}

namespace {

std::vector<Monomial> sorted_component(const RingContext& ctx, int d,
                                       const VariableOrder& order) {
  require(order.size() == ctx.num_vars(), "order size does not match the ring");
  auto all = all_monomials(ctx, d);
  const bool is_identity = order == VariableOrder::identity(ctx.num_vars());
  if (!is_identity) {
    std::sort(all.begin(), all.end(), [&](const Monomial& a, const Monomial& b) {
      return lex_compare(a, b, order) > 0;
    });
  }
  return all;
}

MonomialSpace take_prefix(const RingContext& ctx, int d, std::vector<Monomial> sorted,
                          std::uint64_t dim) {
  require(dim <= sorted.size(), "lex segment dimension exceeds the full component");
  sorted.resize(dim);
  return MonomialSpace(ctx, d, std::move(sorted));
}

}  // namespace

MonomialSpace lex_segment(std::uint64_t dim, int d, const RingContext& ctx,
                          const VariableOrder& order) {
  require(d >= 0, "degree must be nonnegative");
  return take_prefix(ctx, d, sorted_component(ctx, d, order), dim);
}

MonomialSpace lex_segment(std::uint64_t dim, int d, const RingContext& ctx) {
  return lex_segment(dim, d, ctx, VariableOrder::identity(ctx.num_vars()));
}

bool is_lex_segment(const MonomialSpace& v, const VariableOrder& order) {
  const auto sorted = sorted_component(v.ctx(), v.degree(), order);
  for (std::size_t k = 0; k < v.size(); ++k)
    if (!v.contains(sorted[k])) return false;
  return true;
}

std::optional<VariableOrder> is_lex_some_order(const MonomialSpace& v) {
  const MonomialSpace* one = &v;
  return common_lex_order(std::span<const MonomialSpace>(one, 1));
}

std::optional<VariableOrder> common_lex_order(std::span<const MonomialSpace> spaces) {
  if (spaces.empty()) return std::nullopt;
  const auto& ctx = spaces.front().ctx();
  for (const auto& s : spaces) require(s.ctx() == ctx, "spaces live in different rings");
  const int n = ctx.num_vars();
  require(n <= kMaxOrderSearchVars,
          "order search is limited to " + std::to_string(kMaxOrderSearchVars) + " variables");
  std::vector<int> perm(n);
  std::iota(perm.begin(), perm.end(), 0);
  do {
    const VariableOrder order(perm);
    const bool ok = std::all_of(spaces.begin(), spaces.end(),
                                [&](const MonomialSpace& s) { return is_lex_segment(s, order); });
    if (ok) return order;
  } while (std::next_permutation(perm.begin(), perm.end()));
  return std::nullopt;
}

std::uint64_t MacaulayRep::value() const {
  std::uint64_t total = 0;
  for (auto [a, i] : terms) total += binomial(static_cast<std::int64_t>(a), i);
  return total;
}

MacaulayRep macaulay_rep(std::uint64_t m, int d) {
  require(d >= 1, "Macaulay representation needs d >= 1");
  MacaulayRep rep;
  rep.degree = d;
  for (int i = d; i >= 1 && m > 0; --i) {
    // Largest a with C(a, i) <= m; a >= i because C(i, i) = 1 <= m.
    std::uint64_t a = static_cast<std::uint64_t>(i);
    while (binomial(static_cast<std::int64_t>(a + 1), i) <= m) ++a;
    rep.terms.emplace_back(a, i);
    m -= binomial(static_cast<std::int64_t>(a), i);
  }
  return rep;
}

std::uint64_t minimal_growth(std::uint64_t dim, int d, const RingContext& ctx) {
  return shadow_up(lex_segment(dim, d, ctx)).size();
}

std::uint64_t minimal_growth_closed_form(std::uint64_t dim, int d, const RingContext& ctx) {
  const std::uint64_t total = full_dimension(ctx, d);
  require(dim <= total, "dimension exceeds the full component");
  const std::uint64_t next = full_dimension(ctx, d + 1);
  if (d == 0) return dim == 0 ? 0 : next;
  const auto rep = macaulay_rep(total - dim, d);
  std::uint64_t max_codim = 0;
  for (auto [a, i] : rep.terms) {
    const auto ai = static_cast<std::int64_t>(a);
    max_codim += ctx.is_sqf() ? binomial(ai, i + 1) : binomial(ai + 1, i + 1);
  }
  return next - max_codim;
}

bool is_gotzmann_space(const MonomialSpace& v) {
  return shadow_up(v).size() == minimal_growth(v.size(), v.degree(), v.ctx());
}

bool is_gotzmann_ideal(const MonomialIdeal& ideal) {
  if (ideal.is_zero()) return true;
  for (int d = ideal.min_gen_degree(); d <= ideal.max_gen_degree(); ++d)
    if (!is_gotzmann_space(component_space(ideal, d))) return false;
  return true;
}

MonomialIdeal lexify_in_R(const MonomialIdeal& ideal) {
  require(ideal.is_squarefree(), "lexification needs a squarefree ideal");
  const RingContext r = ideal.ctx().with_flavor(Flavor::SqfR);
  const auto h = sqf_hilbert(ideal);
  std::vector<Monomial> all;
  std::optional<MonomialSpace> prev;
  for (int d = 0; d <= r.num_vars(); ++d) {
    auto seg = lex_segment(h.at(d), d, r);
    if (prev) ensure(shadow_up(*prev).is_subset_of(seg), "lex segments are not nested");
    all.insert(all.end(), seg.basis().begin(), seg.basis().end());
    prev = std::move(seg);
  }
  return minimalize(r, std::move(all));
}

MonomialIdeal sqf_lexify_in_S(const MonomialIdeal& ideal) {
  return lexify_in_R(ideal).in_flavor(Flavor::PolyS);
}

}  // namespace gotz
