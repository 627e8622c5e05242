#include "grhcheck/search.hpp"

#include <algorithm>
#include <cmath>
#include <mutex>

#include "grhcheck/error.hpp"
#include "grhcheck/formulas.hpp"

namespace grhcheck {

namespace {

constexpr u64 kMinCeiling = 1000;

u64 to_ceiling(double bound) {
  double c = std::ceil(4 * bound);
  if (c > 9.0e18) return UINT64_MAX / 2;
  return std::max<u64>(kMinCeiling, static_cast<u64>(c));
}

// Primes in ascending order, shared between searches and grown on demand.
struct PrimeSnapshot {
  std::shared_ptr<const std::vector<u32>> primes;
  u64 covered = 0;  // every prime <= covered is listed
};

constexpr u64 kPrimeCacheCap = 1ull << 24;

PrimeSnapshot cached_primes(u64 limit) {
  static std::mutex mutex;
  static PrimeSnapshot cache;
  limit = std::min(limit, kPrimeCacheCap);
  std::lock_guard lock(mutex);
  if (!cache.primes || limit > cache.covered) {
    u64 target = std::clamp<u64>(std::max(limit, cache.covered * 2), 1u << 16, kPrimeCacheCap);
    cache.primes = std::make_shared<const std::vector<u32>>(primes_upto(static_cast<u32>(target)));
    cache.covered = target;
  }
  return cache;
}

// Calls visit(p) for primes p <= limit in increasing order until it returns true.
template <class Visit>
void for_each_prime(u64 limit, Visit&& visit) {
  auto snap = cached_primes(limit);
  for (u32 p : *snap.primes) {
    if (p > limit) return;
    if (visit(static_cast<u64>(p))) return;
  }
  if (limit <= snap.covered) return;
  PrimeStream stream(snap.covered + 1);
  for (u64 p = stream.next(); p <= limit; p = stream.next())
    if (visit(p)) return;
}

}  // namespace

u64 SearchResult::value() const {
  if (!prime) {
    throw Error(ErrorKind::NotFoundBelowCeiling,
                "no prime for " + descriptor + " mod " + std::to_string(modulus) + " below " + std::to_string(ceiling));
  }
  return *prime;
}

u64 default_subgroup_ceiling(u64 q) { return to_ceiling(thm11_quantities(std::max<u64>(q, 3)).bound); }

u64 default_coset_ceiling(u64 q, u64 index) {
  double qq = std::max<double>(static_cast<double>(q), 3.0);
  return std::max<u64>(static_cast<u64>(kThm14SmallPrime), to_ceiling(thm14_formula(qq, static_cast<double>(index))));
}

u64 default_ap_ceiling(u64 q) { return to_ceiling(cor15_formula(std::max<u64>(q, 2))); }

SearchResult least_prime_outside_subgroup(const SubgroupSpec& h, u64 ceiling) {
  if (!h.proper()) throw Error(ErrorKind::ImproperSubgroup, "H = G has no primes outside it");
  const u64 q = h.modulus();
  SearchResult r;
  r.modulus = q;
  r.target = SearchTarget::OutsideSubgroup;
  r.descriptor = "outside:" + h.describe();
  r.ceiling = ceiling ? ceiling : default_subgroup_ceiling(q);
  for_each_prime(r.ceiling, [&](u64 p) {
    ++r.primes_examined;
    if (q % p == 0 || h.contains(p % q)) return false;
    r.prime = p;
    return true;
  });
  return r;
}

SearchResult least_qnr(u64 q) {
  if (q < 3 || q % 2 == 0 || !is_prime(q)) throw Error(ErrorKind::InvalidArgument, "least_qnr needs an odd prime");
  SearchResult r;
  r.modulus = q;
  r.target = SearchTarget::OutsideSubgroup;
  r.descriptor = "outside:squares";
  r.ceiling = q;  // every non-residue class holds a residue below q
  for_each_prime(q, [&](u64 p) {
    ++r.primes_examined;
    if (powmod(p, (q - 1) / 2, q) != q - 1) return false;
    r.prime = p;
    return true;
  });
  return r;
}

SearchResult least_kth_nonresidue(const std::shared_ptr<const UnitGroupStructure>& group, u64 k, u64 ceiling) {
  auto h = SubgroupSpec::kth_powers(group, k);
  if (!h.proper()) {
    throw Error(ErrorKind::ImproperSubgroup, "the " + std::to_string(k) + "-th powers are all of G");
  }
  return least_prime_outside_subgroup(h, ceiling);
}

SearchResult least_prime_in_coset(const SubgroupSpec& h, u64 a, u64 ceiling) {
  const u64 q = h.modulus();
  if (!h.group_ptr()->is_unit(a % q)) throw Error(ErrorKind::NonUnitCoset, "gcd(a, q) > 1");
  SearchResult r;
  r.modulus = q;
  r.target = SearchTarget::Coset;
  r.descriptor = "coset:" + std::to_string(a % q) + "*" + h.describe();
  r.ceiling = ceiling ? ceiling : default_coset_ceiling(q, h.index());
  const auto residues = h.coset(a % q);
  for (u64 base = 0;; base += q) {
    for (u64 res : residues) {
      u64 n = base + res;
      if (n > r.ceiling) return r;
      if (n < 2) continue;
      ++r.primes_examined;
      if (is_prime(n)) {
        r.prime = n;
        return r;
      }
    }
    if (base > r.ceiling) return r;
  }
}

SearchResult least_prime_in_ap(u64 q, u64 a, u64 ceiling) {
  if (q == 0 || gcd(a % q, q) != 1) throw Error(ErrorKind::NonUnitCoset, "gcd(a, q) > 1");
  SearchResult r;
  r.modulus = q;
  r.target = SearchTarget::ArithmeticProgression;
  r.descriptor = "ap:" + std::to_string(a % q);
  r.ceiling = ceiling ? ceiling : default_ap_ceiling(q);
  for (u64 n = a % q; n <= r.ceiling; n += q) {
    ++r.primes_examined;
    if (is_prime(n)) {
      r.prime = n;
      break;
    }
    if (n > UINT64_MAX - q) break;
  }
  return r;
}

std::vector<SearchResult> least_primes_in_all_progressions(u64 q, u64 ceiling) {
  if (q < 2) throw Error(ErrorKind::InvalidArgument, "modulus must be at least 2");
  const u64 limit = ceiling ? ceiling : default_ap_ceiling(q);
  std::vector<SearchResult> out;
  std::vector<std::size_t> slot(q, SIZE_MAX);
  for (u64 a = 1; a < q; ++a) {
    if (gcd(a, q) != 1) continue;
    slot[a] = out.size();
    SearchResult r;
    r.modulus = q;
    r.target = SearchTarget::ArithmeticProgression;
    r.descriptor = "ap:" + std::to_string(a);
    r.ceiling = limit;
    out.push_back(std::move(r));
  }
  std::size_t missing = out.size();
  u64 examined = 0;
  auto visit = [&](u64 p) {
    ++examined;
    u64 res = p % q;
    std::size_t s = slot[res];
    if (s == SIZE_MAX || out[s].prime) return;
    out[s].prime = p;
    out[s].primes_examined = examined;
    --missing;
  };
  for_each_prime(limit, [&](u64 p) {
    visit(p);
    return missing == 0;
  });
  for (auto& r : out)
    if (!r.prime) r.primes_examined = examined;
  return out;
}

}  // namespace grhcheck
