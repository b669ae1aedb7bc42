// Acceptance run: one PASS/FAIL line per criterion, nonzero exit on any FAIL.
#include <chrono>
#include <cstdio>
#include <functional>
#include <random>
#include <string>

#include "gotz/counting.hpp"
#include "gotz/duality.hpp"
#include "gotz/hilbert.hpp"
#include "gotz/lex.hpp"
#include "gotz/supernova.hpp"
#include "helpers.hpp"
#include "oracles.hpp"

using namespace gotz;
using namespace testing;

namespace {

constexpr double kLongLimit = 60.0;
constexpr double kShortLimit = 10.0;
constexpr std::uint64_t kSeed = 20260101;
constexpr int kTrials = 1000;

struct Outcome {
  bool ok = true;
  std::string note;

  void expect(bool cond, const std::string& what) {
    if (!cond && ok) note = what;
    ok = ok && cond;
  }
};

int failures = 0;

void criterion(int id, const char* title, double limit, const std::function<Outcome()>& body) {
  const auto t0 = std::chrono::steady_clock::now();
  Outcome o;
  try {
    o = body();
  } catch (const std::exception& e) {
    o.ok = false;
    o.note = std::string("exception: ") + e.what();
  }
  const double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
  if (secs > limit) o.expect(false, "over time limit");
  failures += o.ok ? 0 : 1;
  std::printf("[%s] %d %s (%.2f s, limit %.0f s)%s%s\n", o.ok ? "PASS" : "FAIL", id, title, secs, limit,
              o.note.empty() ? "" : ": ", o.note.c_str());
  std::fflush(stdout);
}

Outcome counts() {
  Outcome o;
  const std::vector<std::uint64_t> expected{2, 3, 6, 19, 96, 669};
  const auto rows = count_table(5);
  o.expect(rows.size() == 6, "wrong number of rows");
  for (const auto& r : rows) {
    const auto at = " at n = " + std::to_string(r.n);
    o.expect(r.supernova == expected[r.n], "enumeration" + at);
    o.expect(r.egf == expected[r.n], "e.g.f. coefficient" + at);
    o.expect(r.brute && *r.brute == expected[r.n], "antichain filter" + at);
  }
  std::string line;
  for (const auto& r : rows) line += (line.empty() ? "" : ",") + std::to_string(r.supernova);
  if (o.ok) o.note = line;
  return o;
}

Outcome classification() {
  Outcome o;
  for (int n : {4, 5}) {
    std::size_t seen = 0, mismatches = 0;
    for_each_antichain(n, [&](const MonomialIdeal& i) {
      ++seen;
      if (is_gotzmann_ideal(i) != recognize_supernova(i).has_value()) ++mismatches;
    });
    o.expect(seen == (n == 4 ? 168u : 7581u), "antichain count at n = " + std::to_string(n));
    o.expect(mismatches == 0, std::to_string(mismatches) + " mismatches at n = " + std::to_string(n));
  }
  if (o.ok) o.note = "168 + 7581 antichains, 0 mismatches";
  return o;
}

Outcome symmetry() {
  Outcome o;
  for (int n = 2; n <= 6; ++n) {
    const auto c = count_up_to_symmetry(n);
    const std::uint64_t each = std::uint64_t{1} << (n - 2);
    const auto at = " at n = " + std::to_string(n);
    o.expect(c.no_linear_full == each && c.linear_full == each && c.no_linear_partial == each &&
                 c.linear_partial == each,
             "class sizes" + at);
    o.expect(c.total_nonunit == (std::uint64_t{1} << n), "nonunit total" + at);
  }
  return o;
}

Outcome regression() {
  Outcome o;
  for (auto [text, n] : {std::pair{"ab,ac,bd,cd", 4}, std::pair{"abc,abd,abe,acd,ace,bcd,bce", 5}}) {
    const auto i = ideal_r(text, n);
    const auto v = component_space(i, i.min_gen_degree());
    const std::string t = text;
    o.expect(is_gotzmann_ideal(i), t + " not Gotzmann in R");
    o.expect(!is_lex_some_order(v).has_value(), t + " lex in some order");
    o.expect(!is_gotzmann_space(alexander_dual_space(v)), "dual of " + t + " Gotzmann");
  }
  const RingContext r5(5, Flavor::SqfR);
  const auto v = reconstruct(r5, 4, parse_space("ab,bc,cd,ad", r5.without(4)));
  o.expect(v == space_r("abc,abd,acd,bcd,abe,bce,cde,ade", 5), "reconstructed space");
  o.expect(is_gotzmann_space(v), "reconstructed space not Gotzmann");
  o.expect(!is_lex_some_order(v).has_value(), "reconstructed space lex");
  const auto i = ideal_r("bc,abd,abe,acd,ace,ade", 5);
  o.expect(is_gotzmann_ideal(i), "mixed ideal not Gotzmann");
  o.expect(is_gdual_ideal(i), "mixed ideal not gdual");
  const std::array<MonomialSpace, 2> parts{component_space(i, 2), component_space(i, 3)};
  o.expect(is_lex_segment(parts[0], VariableOrder::parse("bcade", r5)), "I_2 not lex under bcade");
  o.expect(is_lex_segment(parts[1], VariableOrder::parse("abcde", r5)), "I_3 not lex under abcde");
  o.expect(!common_lex_order(parts).has_value(), "a common order exists");
  return o;
}

Outcome dual_surprise() {
  Outcome o;
  std::size_t spaces = 0, both = 0, counter = 0;
  for (int n = 1; n <= 5; ++n)
    for (int d = 0; d <= n; ++d)
      for_each_sqf_space(n, d, [&](const MonomialSpace& v) {
        ++spaces;
        if (!is_gotzmann_space(v) || !is_gdual(v)) return;
        ++both;
        if (!is_lex_some_order(v)) ++counter;
      });
  o.expect(counter == 0, std::to_string(counter) + " counterexamples");
  if (o.ok)
    o.note = std::to_string(spaces) + " spaces, " + std::to_string(both) + " Gotzmann and gdual, all lex";
  return o;
}

// A Gotzmann space by construction: a lex segment under a random order, or
// a component of a random supernova ideal read in R.
MonomialSpace random_gotzmann(std::mt19937_64& rng, int n) {
  const RingContext r(n, Flavor::SqfR);
  const int d = std::uniform_int_distribution<int>(1, n - 1)(rng);
  if (rng() % 2 == 0) {
    std::vector<int> perm = oracle::identity(n);
    std::shuffle(perm.begin(), perm.end(), rng);
    const auto dim = std::uniform_int_distribution<std::uint64_t>(0, full_dimension(r, d))(rng);
    return lex_segment(dim, d, r, VariableOrder(perm));
  }
  const auto all = enumerate_gotzmann(std::min(n, 5));
  const auto& pick = all[rng() % all.size()];
  const auto i = minimalize(r, [&] {
    std::vector<SqfMonomial> g;
    for (const auto& m : pick.gens()) g.push_back(m.support());
    return g;
  }());
  return component_space(i, d);
}

Outcome properties() {
  Outcome o;
  std::mt19937_64 rng(kSeed);
  std::uniform_int_distribution<int> nvars(2, 7);
  std::uniform_real_distribution<double> density(0.05, 0.9);
  std::size_t kk = 0, comp = 0, growth = 0, persist = 0, hilbert = 0;
  for (int t = 0; t < kTrials; ++t) {
    const int n = nvars(rng);
    const int d = std::uniform_int_distribution<int>(1, n - 1)(rng);
    const auto v = random_sqf_space(rng, n, d, density(rng));
    if (shadow_up(v).size() < minimal_growth(v.size(), d, v.ctx())) ++kk;
    const int i = static_cast<int>(rng() % static_cast<unsigned>(n));
    std::vector<int> perm = oracle::identity(n - 1);
    std::shuffle(perm.begin(), perm.end(), rng);
    if (shadow_up(compress(v, i, VariableOrder(perm))).size() > shadow_up(v).size()) ++comp;
    const auto dec = decompose(v, i);
    const auto up = decompose(shadow_up(v), i);
    if (up.vhat != shadow_up(dec.vhat) || up.vxi != dec.vhat.united(shadow_up(dec.vxi))) ++growth;
    const auto g = random_gotzmann(rng, n);
    if (!is_gotzmann_space(g) || !is_gotzmann_space(shadow_up(g))) ++persist;
    const auto ideal = random_sqf_ideal(rng, n, Flavor::PolyS);
    const auto sqf = sqf_hilbert(ideal);
    const auto direct = direct_hilbert(ideal, 8);
    for (int k = 0; k <= 8; ++k)
      if (poly_hilbert_from_sqf(sqf, k) != direct.at(k)) {
        ++hilbert;
        break;
      }
  }
  o.expect(kk == 0, std::to_string(kk) + " Kruskal-Katona failures");
  o.expect(comp == 0, std::to_string(comp) + " compression failures");
  o.expect(growth == 0, std::to_string(growth) + " shadow decomposition failures");
  o.expect(persist == 0, std::to_string(persist) + " persistence failures");
  o.expect(hilbert == 0, std::to_string(hilbert) + " Hilbert transform failures");
  if (o.ok) o.note = "5 x 1000 trials, 0 failures";
  return o;
}

Outcome structure() {
  Outcome o;
  std::size_t gotz = 0;
  for (int n = 2; n <= 5; ++n)
    for (int d = 1; d <= n; ++d)
      for_each_sqf_space(n, d, [&](const MonomialSpace& v) {
        if (!is_gotzmann_space(v)) return;
        ++gotz;
        for (int i = 0; i < n; ++i) {
          const auto dec = decompose(v, i);
          o.expect(is_gotzmann_space(dec.vhat), "vhat not Gotzmann for " + format_space(v));
          const auto t = decompose(compress(v, i), i);
          o.expect(is_gotzmann_space(dec.vxi) || shadow_up(t.vxi).is_subset_of(t.vhat),
                   "vxi dichotomy fails for " + format_space(v));
        }
        if (v.empty()) return;
        const auto dec = decompose(v, pick_variable(v));
        o.expect(is_gotzmann_space(dec.vhat) && is_gotzmann_space(dec.vxi) &&
                     dec.vhat.is_subset_of(shadow_up(dec.vxi)),
                 "top variable decomposition fails for " + format_space(v));
      });
  const auto nc = space_r("ab,ac,bc", 4);
  const auto ncd = decompose(nc, 0);
  o.expect(!is_gotzmann_space(nc) && is_gotzmann_space(ncd.vhat) && is_gotzmann_space(ncd.vxi),
           "non-converse example");
  const auto w = space_r("abc,abd,acd,bcd,bce,bde,cde", 5);
  const auto wd = decompose(w, 0);
  o.expect(is_gotzmann_space(w) && wd.vxi == parse_space("bc,bd,cd", wd.vxi.ctx()) &&
               !is_gotzmann_space(wd.vxi),
           "non-Gotzmann part example");
  if (o.ok) o.note = std::to_string(gotz) + " Gotzmann spaces checked";
  return o;
}

std::uint64_t surjections(int n) {
  // Ordered set partitions via placing element n-1 into an existing block or
  // a new block at any position: a(n) = sum_k k! S(n,k).
  std::vector<std::vector<std::uint64_t>> s(n + 1, std::vector<std::uint64_t>(n + 1, 0));
  s[0][0] = 1;
  for (int m = 1; m <= n; ++m)
    for (int k = 1; k <= m; ++k) s[m][k] = k * s[m - 1][k] + s[m - 1][k - 1];
  std::uint64_t total = 0, fact = 1;
  for (int k = 0; k <= n; ++k) {
    if (k) fact *= k;
    total += fact * s[n][k];
  }
  return total;
}

Outcome generating_functions() {
  Outcome o;
  const auto f = fubini_egf(kDefaultTruncation);
  const auto lb = last_block_egf(kDefaultTruncation);
  const auto h = full_support_egf(kDefaultTruncation);
  for (int n = 0; n <= 8; ++n) {
    const auto at = " at n = " + std::to_string(n);
    o.expect(fubini(n) == surjections(n), "recurrence" + at);
    o.expect(enumerate_osp(n).size() == fubini(n), "enumeration" + at);
    o.expect(egf_coefficient(f, n) == fubini(n), "1/(2-e^t)" + at);
    o.expect(egf_coefficient(lb, n) == count_last_block_nonsingleton(n), "last-block series" + at);
  }
  const std::vector<std::uint64_t> hs{2, 1, 2, 8, 46, 332};
  for (int n = 0; n <= 5; ++n) {
    const auto all = enumerate_gotzmann(n);
    const auto full = static_cast<std::uint64_t>(std::count_if(all.begin(), all.end(), has_full_support));
    o.expect(egf_coefficient(h, n) == hs[n] && full == hs[n], "h at n = " + std::to_string(n));
  }
  return o;
}

}  // namespace

int main() {
  criterion(1, "count reproduction", kLongLimit, counts);
  criterion(2, "classification equivalence", kLongLimit, classification);
  criterion(3, "symmetry counts", kLongLimit, symmetry);
  criterion(4, "worked-example regression suite", kShortLimit, regression);
  criterion(5, "Gotzmann and gdual implies lex", kLongLimit, dual_surprise);
  criterion(6, "randomized property suites", kLongLimit, properties);
  criterion(7, "structure-theory sweeps", kLongLimit, structure);
  criterion(8, "generating functions", kLongLimit, generating_functions);
  std::printf("%d of 8 criteria failed\n", failures);
  return failures == 0 ? 0 : 1;
}
