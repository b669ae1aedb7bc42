#include "gotz/counting.hpp"

#include <algorithm>
#include <set>

#include "gotz/error.hpp"
#include "gotz/lex.hpp"
#include "gotz/supernova.hpp"

namespace gotz {

bool OrderedSetPartition::last_block_nonsingleton() const noexcept {
  return blocks.empty() || blocks.back().degree() > 1;
}

std::uint64_t fubini(int n) {
  require(n >= 0 && n <= 20, "fubini(n) is computed for 0 <= n <= 20");
  std::vector<std::uint64_t> a(n + 1, 0);
  a[0] = 1;
  for (int m = 1; m <= n; ++m)
    for (int k = 1; k <= m; ++k) a[m] += binomial(m, k) * a[m - k];
  return a[n];
}

void for_each_osp(int n, const std::function<void(std::span<const SqfMonomial>)>& visit) {
  require(n >= 0 && n <= 10, "ordered set partitions are enumerated for n <= 10");
  std::vector<SqfMonomial> blocks;
  std::function<void(std::uint32_t)> rec = [&](std::uint32_t remaining) {
    if (!remaining) {
      visit(blocks);
      return;
    }
    for (std::uint32_t s = remaining; s; s = (s - 1) & remaining) {
      blocks.emplace_back(s);
      rec(remaining & ~s);
      blocks.pop_back();
    }
  };
  rec(SqfMonomial::full(n).bits());
}

std::vector<OrderedSetPartition> enumerate_osp(int n) {
  require(n >= 0 && n <= 8, "materialized ordered set partitions need n <= 8");
  std::vector<OrderedSetPartition> out;
  for_each_osp(n, [&](std::span<const SqfMonomial> b) {
    out.push_back({n, std::vector<SqfMonomial>(b.begin(), b.end())});
  });
  return out;
}

std::uint64_t count_last_block_nonsingleton(int n) {
  std::uint64_t count = 0;
  for_each_osp(n, [&](std::span<const SqfMonomial> b) {
    if (b.empty() || b.back().degree() > 1) ++count;
  });
  return count;
}

namespace {

// m_last (x) with the greatest-index element of the block as the variable.
SupernovaStage principal_stage(SqfMonomial block) {
  const int top = 31 - std::countl_zero(block.bits());
  return {block.without(top), SqfMonomial::variable(top)};
}

}  // namespace

MonomialIdeal osp_to_ideal(const OrderedSetPartition& sigma, BijectionFamily family) {
  require(sigma.last_block_nonsingleton(), "ordered set partition must end in a block of size > 1");
  SqfMonomial covered;
  for (auto b : sigma.blocks) {
    require(!b.is_unit() && covered.disjoint(b), "blocks must be disjoint and nonempty");
    covered = covered | b;
  }
  require(covered == SqfMonomial::full(sigma.n), "blocks must cover every variable");

  const RingContext ctx(sigma.n, Flavor::PolyS);
  const auto& b = sigma.blocks;
  const int k = static_cast<int>(b.size());
  SupernovaForm form;
  if (family == BijectionFamily::H12) {
    if (k == 0) return MonomialIdeal::zero(ctx);
    form.stages.push_back({SqfMonomial(), b[0]});
    int j = 1;
    for (; j + 1 < k; j += 2) form.stages.push_back({b[j], b[j + 1]});
    if (j == k - 1) form.stages.push_back(principal_stage(b[j]));
  } else {
    if (k == 0) return MonomialIdeal::unit(ctx);
    int j = 0;
    for (; j + 1 < k; j += 2) form.stages.push_back({b[j], b[j + 1]});
    if (j == k - 1) form.stages.push_back(principal_stage(b[j]));
  }
  return supernova_to_ideal(form, ctx);
}

namespace {

bool graded_list_less(const MonomialIdeal& a, const MonomialIdeal& b) {
  return std::lexicographical_compare(a.gens().begin(), a.gens().end(), b.gens().begin(),
                                      b.gens().end(), GradedLexLess{});
}

}  // namespace

std::vector<MonomialIdeal> enumerate_gotzmann(int n) {
  require(n >= 0 && n <= kMaxEnumerateN, "Gotzmann enumeration needs n <= 6");
  const RingContext ctx(n, Flavor::PolyS);
  std::set<std::vector<std::uint32_t>> seen;
  std::vector<MonomialIdeal> out{MonomialIdeal::zero(ctx), MonomialIdeal::unit(ctx)};

  SupernovaForm form;
  std::function<void(std::uint32_t)> rec = [&](std::uint32_t free) {
    // m_j may be 1 only in the first stage; later it would merge stages.
    const bool first = form.stages.empty();
    for (std::uint32_t m = free;; m = (m - 1) & free) {
      if (m || first) {
        const std::uint32_t rest = free & ~m;
        for (std::uint32_t blk = rest; blk; blk = (blk - 1) & rest) {
          form.stages.push_back({SqfMonomial(m), SqfMonomial(blk)});
          auto ideal = supernova_to_ideal(form, ctx);
          std::vector<std::uint32_t> key;
          for (const auto& g : ideal.gens()) key.push_back(g.support().bits());
          if (seen.insert(std::move(key)).second) out.push_back(std::move(ideal));
          rec(rest & ~blk);
          form.stages.pop_back();
        }
      }
      if (!m) break;
    }
  };
  rec(SqfMonomial::full(n).bits());
  std::sort(out.begin(), out.end(), graded_list_less);
  return out;
}

void for_each_antichain(int n, const std::function<void(const MonomialIdeal&)>& visit) {
  require(n >= 0 && n <= kMaxAntichainN, "antichain enumeration needs n <= 5");
  const RingContext ctx(n, Flavor::PolyS);
  const std::uint32_t count = 1u << n;
  std::vector<SqfMonomial> chosen;
  std::function<void(std::uint32_t)> rec = [&](std::uint32_t next) {
    if (next == count) {
      visit(minimalize(ctx, chosen));
      return;
    }
    rec(next + 1);
    const SqfMonomial s(next);
    const bool free = std::none_of(chosen.begin(), chosen.end(), [s](SqfMonomial c) {
      return c.divides(s) || s.divides(c);
    });
    if (free) {
      chosen.push_back(s);
      rec(next + 1);
      chosen.pop_back();
    }
  };
  rec(0);
}

std::vector<MonomialIdeal> enumerate_antichains(int n) {
  std::vector<MonomialIdeal> out;
  for_each_antichain(n, [&](const MonomialIdeal& i) { out.push_back(i); });
  return out;
}

bool has_full_support(const MonomialIdeal& ideal) {
  return ideal.support() == SqfMonomial::full(ideal.ctx().num_vars());
}

FullSupportClass full_support_class(const MonomialIdeal& ideal) {
  if (ideal.is_zero() || !has_full_support(ideal)) return FullSupportClass::Unclassified;
  const int reg = ideal.max_gen_degree();
  const auto beta = generator_counts(ideal).at(reg);
  if (ideal.contains_linear_form()) {
    if (reg == 1 && beta == 1) return FullSupportClass::H0;
    return beta == 1 ? FullSupportClass::H1 : FullSupportClass::H2;
  }
  return beta == 1 ? FullSupportClass::H3 : FullSupportClass::H4;
}

SymmetryCounts count_up_to_symmetry(int n) {
  require(n >= 1 && n <= kMaxEnumerateN, "symmetry counts need 1 <= n <= 6");
  std::array<std::set<std::string>, 4> classes;
  for (const auto& ideal : enumerate_gotzmann(n)) {
    if (ideal.is_unit()) continue;
    const bool linear = ideal.contains_linear_form();
    const bool full = has_full_support(ideal);
    classes[(linear ? 1 : 0) + (full ? 0 : 2)].insert(canonicalize(ideal));
  }
  SymmetryCounts c;
  c.n = n;
  c.no_linear_full = classes[0].size();
  c.linear_full = classes[1].size();
  c.no_linear_partial = classes[2].size();
  c.linear_partial = classes[3].size();
  c.total_nonunit = c.no_linear_full + c.linear_full + c.no_linear_partial + c.linear_partial;
  return c;
}

std::vector<CountRow> count_table(int n_max) {
  require(n_max >= 0 && n_max <= kMaxEnumerateN, "count table needs 0 <= n_max <= 6");
  const int order = std::max(kDefaultTruncation, n_max);
  const auto g = gotzmann_egf(order);
  const auto h = full_support_egf(order);
  // Every coefficient of both counting series must be an integer.
  for (int k = 0; k <= order; ++k) {
    egf_coefficient(g, k);
    egf_coefficient(h, k);
  }
  std::vector<CountRow> rows;
  for (int n = 0; n <= n_max; ++n) {
    CountRow row;
    row.n = n;
    const auto all = enumerate_gotzmann(n);
    row.supernova = all.size();
    row.full_support = static_cast<std::uint64_t>(
        std::count_if(all.begin(), all.end(), [](const MonomialIdeal& i) { return has_full_support(i); }));
    row.egf = egf_coefficient(g, n).convert_to<std::uint64_t>();
    row.full_support_egf = egf_coefficient(h, n).convert_to<std::uint64_t>();
    if (n <= kMaxAntichainN) {
      std::uint64_t brute = 0;
      for_each_antichain(n, [&](const MonomialIdeal& i) {
        if (is_gotzmann_ideal(i)) ++brute;
      });
      row.brute = brute;
    }
    rows.push_back(row);
  }
  return rows;
}

}  // namespace gotz
