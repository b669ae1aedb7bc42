#include "gotz/space.hpp"

#include <algorithm>
#include <functional>

#include "gotz/error.hpp"

namespace gotz {

namespace {

constexpr std::uint64_t kMaxMaterialized = 5'000'000;

void sort_unique(std::vector<Monomial>& v) {
  std::sort(v.begin(), v.end(), std::greater<>());
  v.erase(std::unique(v.begin(), v.end()), v.end());
}

}  // namespace

MonomialSpace::MonomialSpace(Trusted, RingContext ctx, int degree,
                             std::vector<Monomial> basis)
    : ctx_(std::move(ctx)), degree_(degree), basis_(std::move(basis)) {}

MonomialSpace::MonomialSpace(RingContext ctx, int degree, std::vector<Monomial> basis)
    : ctx_(std::move(ctx)), degree_(degree), basis_(std::move(basis)) {
  require(degree_ >= 0, "monomial space degree must be nonnegative");
  for (const auto& m : basis_) {
    require(m.degree() == degree_, "basis monomial has the wrong degree");
    require(m.span() <= ctx_.num_vars(), "basis monomial uses an unknown variable");
    if (ctx_.is_sqf())
      require(m.is_squarefree(), "non-squarefree monomial in a space of R");
  }
  sort_unique(basis_);
}

MonomialSpace::MonomialSpace(RingContext ctx, int degree,
                             std::span<const SqfMonomial> basis)
    : MonomialSpace(std::move(ctx), degree, [&] {
        std::vector<Monomial> out;
        out.reserve(basis.size());
        for (auto s : basis) out.push_back(Monomial::from_support(s));
        return out;
      }()) {}

MonomialSpace MonomialSpace::zero(RingContext ctx, int degree) {
  require(degree >= 0, "monomial space degree must be nonnegative");
  return MonomialSpace(Trusted{}, std::move(ctx), degree, {});
}

MonomialSpace MonomialSpace::full(RingContext ctx, int degree) {
  require(degree >= 0, "monomial space degree must be nonnegative");
  auto basis = all_monomials(ctx, degree);
  return MonomialSpace(Trusted{}, std::move(ctx), degree, std::move(basis));
}

std::vector<SqfMonomial> MonomialSpace::sqf_basis() const {
  std::vector<SqfMonomial> out;
  out.reserve(basis_.size());
  for (const auto& m : basis_) {
    require(m.is_squarefree(), "space has a non-squarefree basis element");
    out.push_back(m.support());
  }
  return out;
}

bool MonomialSpace::contains(const Monomial& m) const {
  return std::binary_search(basis_.begin(), basis_.end(), m, std::greater<>());
}

void MonomialSpace::check_compatible(const MonomialSpace& o) const {
  require(ctx_ == o.ctx_, "monomial spaces live in different rings");
  require(degree_ == o.degree_, "monomial spaces have different degrees");
}

bool MonomialSpace::is_subset_of(const MonomialSpace& o) const {
  check_compatible(o);
  return std::includes(o.basis_.begin(), o.basis_.end(), basis_.begin(),
                       basis_.end(), std::greater<>());
}

MonomialSpace MonomialSpace::united(const MonomialSpace& o) const {
  check_compatible(o);
  std::vector<Monomial> out;
  out.reserve(basis_.size() + o.basis_.size());
  std::set_union(basis_.begin(), basis_.end(), o.basis_.begin(), o.basis_.end(),
                 std::back_inserter(out), std::greater<>());
  return MonomialSpace(Trusted{}, ctx_, degree_, std::move(out));
}

MonomialSpace MonomialSpace::minus(const MonomialSpace& o) const {
  check_compatible(o);
  std::vector<Monomial> out;
  std::set_difference(basis_.begin(), basis_.end(), o.basis_.begin(),
                      o.basis_.end(), std::back_inserter(out), std::greater<>());
  return MonomialSpace(Trusted{}, ctx_, degree_, std::move(out));
}

std::uint64_t full_dimension(const RingContext& ctx, int d) {
  if (d < 0) return 0;
  const int n = ctx.num_vars();
  if (ctx.is_sqf()) return binomial(n, d);
  if (d == 0) return 1;
  return binomial(n + d - 1, d);
}

std::vector<SqfMonomial> all_sqf_monomials(int n, int d) {
  std::vector<SqfMonomial> out;
  if (d < 0 || d > n) return out;
  // Gosper's hack walks d-subsets in increasing integer order.
  if (d == 0) {
    out.emplace_back(0u);
  } else {
    const std::uint32_t limit = 1u << n;
    for (std::uint32_t s = (1u << d) - 1u; s < limit;) {
      out.emplace_back(s);
      const std::uint32_t c = s & -s;
      const std::uint32_t r = s + c;
      s = (((r ^ s) >> 2) / c) | r;
    }
  }
  // With bit 0 = a, lex-descending is bit-reversed-descending order.
  std::sort(out.begin(), out.end(), [](SqfMonomial a, SqfMonomial b) {
    const std::uint32_t diff = a.bits() ^ b.bits();
    if (!diff) return false;
    return (a.bits() & (diff & -diff)) != 0;
  });
  return out;
}

std::vector<Monomial> all_monomials(const RingContext& ctx, int d) {
  require(d >= 0, "degree must be nonnegative");
  const int n = ctx.num_vars();
  std::vector<Monomial> out;
  if (ctx.is_sqf()) {
    for (auto s : all_sqf_monomials(n, d)) out.push_back(Monomial::from_support(s));
    return out;
  }
  require(full_dimension(ctx, d) <= kMaxMaterialized,
          "degree component too large to materialize");
  if (n == 0) {
    if (d == 0) out.emplace_back();
    return out;
  }
  // Exponent of x_1 from d down to 0 yields lex-descending order directly.
  std::vector<int> exps(n, 0);
  std::function<void(int, int)> rec = [&](int var, int left) {
    if (var == n - 1) {
      exps[var] = left;
      out.push_back(Monomial::from_exponents(exps));
      return;
    }
    for (int e = left; e >= 0; --e) {
      exps[var] = e;
      rec(var + 1, left - e);
    }
    exps[var] = 0;
  };
  rec(0, d);
  return out;
}

MonomialSpace shadow_up(const MonomialSpace& v) {
  const int n = v.ctx().num_vars();
  std::vector<Monomial> out;
  out.reserve(v.size() * n);
  for (const auto& m : v.basis()) {
    for (int i = 0; i < n; ++i) {
      if (v.ctx().is_sqf() && m.exponent(i) > 0) continue;
      out.push_back(m.times_variable(i));
    }
  }
  sort_unique(out);
  return MonomialSpace(v.ctx(), v.degree() + 1, std::move(out));
}

}  // namespace gotz
