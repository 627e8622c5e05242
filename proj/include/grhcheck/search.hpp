#pragma once

#include <optional>
#include <string>
#include <vector>

#include "grhcheck/characters.hpp"

namespace grhcheck {

enum class SearchTarget { OutsideSubgroup, Coset, ArithmeticProgression };

struct SearchResult {
  u64 modulus = 0;
  SearchTarget target = SearchTarget::OutsideSubgroup;
  std::string descriptor;  // e.g. "outside:squares", "coset:3*squares", "ap:3"
  std::optional<u64> prime;
  u64 primes_examined = 0;  // primes scanned (sieve searches) or candidates tested (stepping)
  u64 ceiling = 0;

  bool found() const noexcept { return prime.has_value(); }
  /// The prime; throws NotFoundBelowCeiling when the search ran out.
  u64 value() const;
};

/// 4 (log q + B(q))^2, at least 1000.
u64 default_subgroup_ceiling(u64 q);
/// max(10^9, 4 x the coset bound for index h).
u64 default_coset_ceiling(u64 q, u64 index);
/// 4 (phi(q) log q)^2, at least 1000.
u64 default_ap_ceiling(u64 q);

/// Least prime l with l not dividing q and l mod q outside H. ceiling 0 selects the default.
SearchResult least_prime_outside_subgroup(const SubgroupSpec& h, u64 ceiling = 0);
/// Least prime p with (p/q) = -1, q an odd prime.
SearchResult least_qnr(u64 q);
/// Least prime outside the k-th powers. Throws ImproperSubgroup when the k-th powers fill G.
SearchResult least_kth_nonresidue(const std::shared_ptr<const UnitGroupStructure>& group, u64 k, u64 ceiling = 0);
/// Least prime in the coset aH.
SearchResult least_prime_in_coset(const SubgroupSpec& h, u64 a, u64 ceiling = 0);
/// Least prime congruent to a mod q, by stepping a, a + q, a + 2q, ...
SearchResult least_prime_in_ap(u64 q, u64 a, u64 ceiling = 0);
/// P(a, q) for every unit a mod q in ascending order of a, from one pass over the primes.
std::vector<SearchResult> least_primes_in_all_progressions(u64 q, u64 ceiling = 0);

}  // namespace grhcheck
