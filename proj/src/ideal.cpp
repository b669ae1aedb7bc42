#include "gotz/ideal.hpp"

#include <algorithm>

#include "gotz/error.hpp"

namespace gotz {

MonomialIdeal minimalize(RingContext ctx, std::vector<Monomial> monomials) {
  for (const auto& m : monomials) {
    require(m.span() <= ctx.num_vars(), "monomial uses an unknown variable");
    if (ctx.is_sqf())
      require(m.is_squarefree(),
              "monomial with exponent > 1 is zero in the squarefree ring");
  }
  std::sort(monomials.begin(), monomials.end(), GradedLexLess{});
  monomials.erase(std::unique(monomials.begin(), monomials.end()), monomials.end());
  // Sorted by degree, so only earlier entries can divide later ones.
  std::vector<Monomial> gens;
  for (const auto& m : monomials) {
    const bool redundant = std::any_of(gens.begin(), gens.end(),
                                       [&](const Monomial& g) { return g.divides(m); });
    if (!redundant) gens.push_back(m);
  }
  return MonomialIdeal(std::move(ctx), std::move(gens));
}

MonomialIdeal minimalize(RingContext ctx, std::span<const SqfMonomial> monomials) {
  std::vector<Monomial> v;
  v.reserve(monomials.size());
  for (auto s : monomials) v.push_back(Monomial::from_support(s));
  return minimalize(std::move(ctx), std::move(v));
}

MonomialIdeal MonomialIdeal::zero(RingContext ctx) {
  return MonomialIdeal(std::move(ctx), {});
}

MonomialIdeal MonomialIdeal::unit(RingContext ctx) {
  return MonomialIdeal(std::move(ctx), {Monomial{}});
}

bool MonomialIdeal::is_squarefree() const noexcept {
  return std::all_of(gens_.begin(), gens_.end(),
                     [](const Monomial& g) { return g.is_squarefree(); });
}

bool MonomialIdeal::contains_linear_form() const noexcept {
  return !gens_.empty() && gens_.front().degree() == 1;
}

SqfMonomial MonomialIdeal::support() const {
  SqfMonomial s;
  for (const auto& g : gens_) s = s | g.support();
  return s;
}

int MonomialIdeal::min_gen_degree() const noexcept {
  return gens_.empty() ? -1 : gens_.front().degree();
}

int MonomialIdeal::max_gen_degree() const noexcept {
  return gens_.empty() ? -1 : gens_.back().degree();
}

bool MonomialIdeal::contains(const Monomial& m) const {
  if (ctx_.is_sqf() && !m.is_squarefree()) return true;  // zero in R
  return std::any_of(gens_.begin(), gens_.end(),
                     [&](const Monomial& g) { return g.divides(m); });
}

bool MonomialIdeal::contains(const MonomialIdeal& o) const {
  require(ctx_ == o.ctx_, "ideals live in different rings");
  return std::all_of(o.gens_.begin(), o.gens_.end(),
                     [&](const Monomial& g) { return contains(g); });
}

MonomialIdeal MonomialIdeal::in_flavor(Flavor f) const {
  return minimalize(ctx_.with_flavor(f), gens_);
}

MonomialSpace component_space(const MonomialIdeal& ideal, int d) {
  require(d >= 0, "degree must be nonnegative");
  std::vector<Monomial> basis;
  if (ideal.is_zero() || d < ideal.min_gen_degree())
    return MonomialSpace::zero(ideal.ctx(), d);
  for (auto& m : all_monomials(ideal.ctx(), d))
    if (ideal.contains(m)) basis.push_back(m);
  return MonomialSpace(ideal.ctx(), d, std::move(basis));
}

std::map<int, std::uint64_t> generator_counts(const MonomialIdeal& ideal) {
  std::map<int, std::uint64_t> out;
  for (const auto& g : ideal.gens()) ++out[g.degree()];
  return out;
}

std::map<int, std::uint64_t> generator_counts_from_components(const MonomialIdeal& ideal) {
  std::map<int, std::uint64_t> out;
  if (ideal.is_zero()) return out;
  const int top = ideal.max_gen_degree();
  std::uint64_t below = 0;  // |m_1 I_{d-1}|
  for (int d = 0; d <= top; ++d) {
    const auto comp = component_space(ideal, d);
    if (comp.size() > below) out[d] = comp.size() - below;
    below = shadow_up(comp).size();
  }
  return out;
}

MonomialIdeal divide_by_variable(const MonomialIdeal& ideal, int i) {
  require(i >= 0 && i < ideal.ctx().num_vars(), "variable index out of range");
  std::vector<Monomial> out;
  for (const auto& g : ideal.gens()) {
    require(g.exponent(i) > 0, "generator not divisible by " + ideal.ctx().name(i));
    out.push_back(g.divided_by_variable(i));
  }
  return minimalize(ideal.ctx(), std::move(out));
}

MonomialIdeal quotient_by_variable(const MonomialIdeal& ideal, int i) {
  require(i >= 0 && i < ideal.ctx().num_vars(), "variable index out of range");
  std::vector<Monomial> out;
  for (const auto& g : ideal.gens())
    if (g.exponent(i) == 0) out.push_back(g.drop_variable(i));
  return minimalize(ideal.ctx().without(i), std::move(out));
}

std::optional<int> common_variable(const MonomialIdeal& ideal) {
  if (ideal.is_zero()) return std::nullopt;
  for (int i = 0; i < ideal.ctx().num_vars(); ++i) {
    const bool all = std::all_of(ideal.gens().begin(), ideal.gens().end(),
                                 [i](const Monomial& g) { return g.exponent(i) > 0; });
    if (all) return i;
  }
  return std::nullopt;
}

}  // namespace gotz
