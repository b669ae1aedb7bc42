#include "gotz/supernova.hpp"

#include <algorithm>
#include <numeric>

#include "gotz/error.hpp"
#include "gotz/text.hpp"

namespace gotz {

void validate(const SupernovaForm& form, const RingContext& ctx) {
  if (form.unit) {
    require(form.stages.empty(), "the unit form has no stages");
    return;
  }
  SqfMonomial used;
  const SqfMonomial universe = SqfMonomial::full(ctx.num_vars());
  for (const auto& st : form.stages) {
    require(!st.block.is_unit(), "supernova stage has an empty variable block");
    require(st.prefix.disjoint(st.block), "supernova supports overlap");
    require(used.disjoint(st.prefix | st.block), "supernova supports overlap");
    require((st.prefix | st.block).divides(universe), "supernova uses a variable outside the ring");
    used = used | st.prefix | st.block;
  }
}

MonomialIdeal supernova_to_ideal(const SupernovaForm& form, const RingContext& ctx) {
  validate(form, ctx);
  if (form.unit) return MonomialIdeal::unit(ctx);
  std::vector<SqfMonomial> gens;
  SqfMonomial prefix;
  for (const auto& st : form.stages) {
    prefix = prefix | st.prefix;
    for (int v : st.block.indices()) gens.push_back(prefix.with(v));
  }
  auto ideal = minimalize(ctx, gens);
  ensure(ideal.num_gens() == gens.size(), "supernova generators are not minimal");
  return ideal;
}

std::optional<SupernovaForm> recognize_supernova(const MonomialIdeal& ideal) {
  require(ideal.is_squarefree(), "supernova recognition needs a squarefree ideal");
  SupernovaForm form;
  if (ideal.is_zero()) return form;
  if (ideal.is_unit()) {
    form.unit = true;
    return form;
  }
  std::vector<SqfMonomial> rest;
  for (const auto& g : ideal.gens()) rest.push_back(g.support());

  SqfMonomial prefix;  // m_j accumulated since the last stage
  while (!rest.empty()) {
    SqfMonomial block;
    for (auto g : rest)
      if (g.degree() == 1) block = block | g;
    if (!block.is_unit()) {
      form.stages.push_back({prefix, block});
      prefix = SqfMonomial();
      std::erase_if(rest, [](SqfMonomial g) { return g.degree() == 1; });
      continue;
    }
    const std::uint32_t common =
        std::accumulate(rest.begin(), rest.end(), ~0u,
                        [](std::uint32_t acc, SqfMonomial g) { return acc & g.bits(); });
    if (common == 0) return std::nullopt;
    const int v = std::countr_zero(common);
    prefix = prefix.with(v);
    for (auto& g : rest) g = g.without(v);
  }
  ensure(supernova_to_ideal(form, ideal.ctx()) == ideal,
         "recognized supernova form does not regenerate the ideal");
  return form;
}

std::string format_supernova(const SupernovaForm& form, const RingContext& ctx) {
  if (form.unit) return "(1)";
  if (form.stages.empty()) return "(0)";
  std::string out;
  SqfMonomial prefix;
  for (const auto& st : form.stages) {
    prefix = prefix | st.prefix;
    if (!out.empty()) out += " + ";
    for (int v : prefix.indices()) out += ctx.name(v) + "*";
    out += "(";
    bool first = true;
    for (int v : st.block.indices()) {
      if (!first) out += ",";
      out += ctx.name(v);
      first = false;
    }
    out += ")";
  }
  return out;
}

FacetComplex::FacetComplex(std::vector<SqfMonomial> facets) : facets_(std::move(facets)) {
  std::sort(facets_.begin(), facets_.end());
  for (std::size_t i = 0; i < facets_.size(); ++i)
    for (std::size_t j = 0; j < facets_.size(); ++j)
      if (i != j)
        require(!facets_[i].divides(facets_[j]), "facet list is not an antichain");
}

FacetComplex FacetComplex::of_ideal(const MonomialIdeal& ideal) {
  require(ideal.is_squarefree(), "facet complex needs a squarefree ideal");
  std::vector<SqfMonomial> f;
  for (const auto& g : ideal.gens()) f.push_back(g.support());
  return FacetComplex(std::move(f));
}

bool FacetComplex::is_pure() const {
  return std::all_of(facets_.begin(), facets_.end(), [&](SqfMonomial f) {
    return f.degree() == facets_.front().degree();
  });
}

int FacetComplex::dimension() const {
  int d = -1;
  for (auto f : facets_) d = std::max(d, f.degree() - 1);
  return d;
}

bool is_star_shaped(const FacetComplex& h) {
  require(h.is_pure(), "star-shaped test needs a pure hypergraph");
  if (h.facets().empty()) return true;
  std::uint32_t common = ~0u;
  for (auto f : h.facets()) common &= f.bits();
  return std::popcount(common) >= h.facets().front().degree() - 1;
}

std::optional<std::vector<SqfMonomial>> supernova_chain(const FacetComplex& h) {
  const int d = h.dimension();
  std::vector<SqfMonomial> chain;
  if (d <= 0) return chain;
  std::uint32_t universe = 0;
  for (auto f : h.facets()) universe |= f.bits();
  // allowed[k]: vertices F_{k-1} (size k) may use = intersection of all
  // facets of size > k, since F_{k-1} lies in every later chain member.
  std::vector<std::uint32_t> allowed(d + 2, universe);
  for (int k = d; k >= 1; --k) {
    std::uint32_t level = universe;
    for (auto f : h.facets())
      if (f.degree() == k + 1) level &= f.bits();
    allowed[k] = allowed[k + 1] & level;
  }
  std::uint32_t current = 0;
  for (int k = 1; k <= d; ++k) {
    const std::uint32_t fresh = allowed[k] & ~current;
    if (!fresh) return std::nullopt;
    current |= fresh & -fresh;
    chain.emplace_back(current);
  }
  return chain;
}

bool is_supernova_complex(const FacetComplex& h) {
  return supernova_chain(h).has_value();
}

namespace {

std::uint32_t reverse16(std::uint32_t x) {
  std::uint32_t r = 0;
  for (int i = 0; i < 16; ++i)
    if ((x >> i) & 1u) r |= 1u << (15 - i);
  return r;
}

// Ascending keys give GradedLexLess order on squarefree monomials.
std::uint32_t graded_key(std::uint32_t mask) {
  return (static_cast<std::uint32_t>(std::popcount(mask)) << 16) | (0xFFFFu - reverse16(mask));
}

}  // namespace

std::string canonicalize(const MonomialIdeal& ideal) {
  require(ideal.is_squarefree(), "canonical key needs a squarefree ideal");
  const int n = ideal.ctx().num_vars();
  require(n <= 8, "canonical key search is limited to 8 variables");
  std::vector<std::uint32_t> gens;
  for (const auto& g : ideal.gens()) gens.push_back(g.support().bits());

  std::vector<int> perm(n);
  std::iota(perm.begin(), perm.end(), 0);
  std::vector<std::uint32_t> best, keys(gens.size());
  do {
    for (std::size_t k = 0; k < gens.size(); ++k) {
      std::uint32_t mapped = 0;
      for (std::uint32_t b = gens[k]; b; b &= b - 1) mapped |= 1u << perm[std::countr_zero(b)];
      keys[k] = graded_key(mapped);
    }
    std::sort(keys.begin(), keys.end());
    if (best.empty() || keys < best) best = keys;
  } while (std::next_permutation(perm.begin(), perm.end()));

  if (ideal.is_zero()) return "0";
  std::string out;
  const RingContext letters(n, Flavor::SqfR);
  for (std::size_t k = 0; k < best.size(); ++k) {
    if (k) out += ',';
    const std::uint32_t mask = reverse16(0xFFFFu - (best[k] & 0xFFFFu));
    out += format_monomial(SqfMonomial(mask), letters);
  }
  return out;
}

}  // namespace gotz
