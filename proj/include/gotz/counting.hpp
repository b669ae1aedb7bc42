#pragma once

#include <array>
#include <cstdint>
#include <functional>
#include <optional>
#include <span>
#include <vector>

#include "gotz/ideal.hpp"
#include "gotz/series.hpp"

namespace gotz {

// Disjoint nonempty blocks covering {0..n-1}, in order.
struct OrderedSetPartition {
  int n = 0;
  std::vector<SqfMonomial> blocks;

  int weight() const noexcept { return n; }
  // Member of P': the last block has more than one element. The empty
  // partition of the empty set counts as a member.
  bool last_block_nonsingleton() const noexcept;

  friend bool operator==(const OrderedSetPartition&, const OrderedSetPartition&) = default;
};

// Fubini number by the recurrence a(n) = sum_{k>=1} C(n,k) a(n-k).
std::uint64_t fubini(int n);

// Visits every ordered set partition of {0..n-1}; n <= 10.
void for_each_osp(int n, const std::function<void(std::span<const SqfMonomial>)>& visit);
// Materialized list; n <= 8.
std::vector<OrderedSetPartition> enumerate_osp(int n);
// #{ sigma in P' : weight n }, counted by enumeration.
std::uint64_t count_last_block_nonsingleton(int n);

enum class BijectionFamily { H12, H34 };

// Alternates the blocks between variable blocks and monomial supports of the
// nested normal form; H12 starts with a variable block (linear forms), H34
// with a monomial. sigma must lie in P'.
MonomialIdeal osp_to_ideal(const OrderedSetPartition& sigma, BijectionFamily family);

// Every Gotzmann squarefree ideal of S in n variables (zero and unit
// included), generated from nested normal forms over all variable subsets.
// Sorted by generator list; n <= 6.
std::vector<MonomialIdeal> enumerate_gotzmann(int n);

// Every antichain of subsets of {0..n-1} exactly once, as S-ideals; n <= 5.
void for_each_antichain(int n, const std::function<void(const MonomialIdeal&)>& visit);
std::vector<MonomialIdeal> enumerate_antichains(int n);

// The classes H_0..H_4 of full-support Gotzmann ideals, using the maximal
// generator degree as the regularity.
enum class FullSupportClass { H0, H1, H2, H3, H4, Unclassified };
FullSupportClass full_support_class(const MonomialIdeal& ideal);
bool has_full_support(const MonomialIdeal& ideal);

// Gotzmann squarefree nonunit ideals up to relabeling, split by
// (contains a linear form) x (full support).
struct SymmetryCounts {
  int n = 0;
  std::uint64_t no_linear_full = 0;     // (iii)
  std::uint64_t linear_full = 0;        // (iv)
  std::uint64_t no_linear_partial = 0;  // (v)
  std::uint64_t linear_partial = 0;     // (vi)
  std::uint64_t total_nonunit = 0;
};
SymmetryCounts count_up_to_symmetry(int n);  // 1 <= n <= 6

struct CountRow {
  int n = 0;
  std::uint64_t supernova = 0;           // |enumerate_gotzmann(n)|
  std::uint64_t egf = 0;                 // n! [t^n] g
  std::optional<std::uint64_t> brute;    // Gotzmann antichains, n <= 5
  std::uint64_t full_support = 0;        // enumeration filtered to full support
  std::uint64_t full_support_egf = 0;    // n! [t^n] h

  bool agree() const {
    return supernova == egf && full_support == full_support_egf &&
           (!brute || *brute == supernova);
  }
};
std::vector<CountRow> count_table(int n_max);  // n_max <= 6

inline constexpr int kMaxEnumerateN = 6;
inline constexpr int kMaxAntichainN = 5;

}  // namespace gotz
