#include <doctest.h>

#include <map>
#include <set>

#include "grhcheck/error.hpp"
#include "grhcheck/search.hpp"
#include "oracles.hpp"

using namespace grhcheck;

namespace {

std::shared_ptr<const UnitGroupStructure> group(u64 q) { return UnitGroupStructure::create(q); }

// least prime outside H by plain enumeration with trial-division primality
u64 brute_outside(const SubgroupSpec& h) {
  u64 q = h.modulus();
  for (u64 n = 2;; ++n)
    if (oracle::trial_prime(n) && q % n != 0 && !h.contains(n % q)) return n;
}

u64 brute_in_residues(u64 q, const std::vector<u64>& residues) {
  std::set<u64> rs(residues.begin(), residues.end());
  for (u64 n = 2;; ++n)
    if (oracle::trial_prime(n) && rs.count(n % q)) return n;
}

}  // namespace

TEST_CASE("least prime outside a subgroup: examples") {
  CHECK(least_prime_outside_subgroup(SubgroupSpec::squares(group(7))).value() == 3);
  auto cubes13 = SubgroupSpec::kth_powers(group(13), 3);
  CHECK(cubes13.elements() == std::vector<u64>{1, 5, 8, 12});
  CHECK(least_prime_outside_subgroup(cubes13).value() == 2);
  CHECK(least_prime_outside_subgroup(SubgroupSpec::squares(group(5))).value() == 2);
  try {
    least_prime_outside_subgroup(SubgroupSpec::kth_powers(group(7), 5));
    FAIL("expected improper-subgroup");
  } catch (const Error& e) {
    CHECK(e.kind() == ErrorKind::ImproperSubgroup);
  }
}

TEST_CASE("least quadratic non-residue: examples") {
  CHECK(least_qnr(5).value() == 2);
  CHECK(least_qnr(7).value() == 3);
  CHECK(least_qnr(23).value() == 5);
  CHECK(oracle::euler_legendre(2, 23) == 1);
  CHECK(oracle::euler_legendre(3, 23) == 1);
  CHECK(oracle::euler_legendre(5, 23) == -1);
}

TEST_CASE("least k-th power non-residue: examples") {
  CHECK(least_kth_nonresidue(group(7), 3).value() == 2);
  try {
    least_kth_nonresidue(group(7), 5);
    FAIL("expected improper-subgroup");
  } catch (const Error& e) {
    CHECK(e.kind() == ErrorKind::ImproperSubgroup);
  }
  CHECK(least_kth_nonresidue(group(13), 2).value() == 2);
  CHECK(oracle::euler_legendre(2, 13) == -1);
}

TEST_CASE("least prime in a coset and in a progression: examples") {
  CHECK(least_prime_in_coset(SubgroupSpec::trivial(group(8)), 3).value() == 3);
  CHECK(least_prime_in_coset(SubgroupSpec::squares(group(7)), 3).value() == 3);
  CHECK(least_prime_in_coset(SubgroupSpec::squares(group(23)), 5).value() == 5);
  CHECK(least_prime_in_ap(4, 3).value() == 3);
  CHECK(least_prime_in_ap(8, 1).value() == 17);
  CHECK(least_prime_in_ap(5, 4).value() == 19);
  try {
    least_prime_in_coset(SubgroupSpec::trivial(group(8)), 2);
    FAIL("expected non-unit-coset");
  } catch (const Error& e) {
    CHECK(e.kind() == ErrorKind::NonUnitCoset);
  }
}

TEST_CASE("not found below the ceiling is reported, not thrown") {
  auto r = least_prime_in_ap(1000, 999, 500);
  CHECK_FALSE(r.found());
  CHECK(r.ceiling == 500);
  try {
    r.value();
    FAIL("expected not-found");
  } catch (const Error& e) {
    CHECK(e.kind() == ErrorKind::NotFoundBelowCeiling);
  }
  auto squares = SubgroupSpec::squares(group(1009));
  u64 expected = brute_outside(squares);
  CHECK(expected == 11);
  auto s = least_prime_outside_subgroup(squares, expected);
  REQUIRE(s.found());
  CHECK(*s.prime == expected);
  CHECK_FALSE(least_prime_outside_subgroup(squares, expected - 1).found());
}

TEST_CASE("minimality against brute force, q <= 500") {
  for (u64 q = 3; q <= 500; ++q) {
    auto g = group(q);
    for (u64 k : {2u, 3u}) {
      auto h = SubgroupSpec::kth_powers(g, k);
      if (!h.proper()) continue;
      REQUIRE(least_prime_outside_subgroup(h).value() == brute_outside(h));
      for (u64 a : h.coset_representatives()) REQUIRE(least_prime_in_coset(h, a).value() == brute_in_residues(q, h.coset(a)));
    }
    for (u64 a = 1; a < q; a += 7)
      if (std::gcd(a, q) == 1) REQUIRE(least_prime_in_ap(q, a).value() == brute_in_residues(q, {a}));
  }
}

TEST_CASE("progression search equals trivial-coset search and the batch pass, q <= 300") {
  for (u64 q = 3; q <= 300; ++q) {
    auto trivial = SubgroupSpec::trivial(group(q));
    auto batch = least_primes_in_all_progressions(q);
    std::size_t i = 0;
    for (u64 a = 1; a < q; ++a) {
      if (std::gcd(a, q) != 1) continue;
      u64 p = least_prime_in_ap(q, a).value();
      REQUIRE(p == least_prime_in_coset(trivial, a).value());
      REQUIRE(i < batch.size());
      REQUIRE(batch[i].descriptor == "ap:" + std::to_string(a));
      REQUIRE(batch[i++].value() == p);
    }
    REQUIRE(i == batch.size());
  }
}

TEST_CASE("least_qnr equals the squares search for primes q <= 10^4") {
  for (u64 q = 3; q <= 10000; q += 2) {
    if (!is_prime(q)) continue;
    REQUIRE(least_qnr(q).value() == least_prime_outside_subgroup(SubgroupSpec::squares(group(q))).value());
  }
}

TEST_CASE("cosets partition the primes coprime to q") {
  const u64 bound = 5000;
  for (u64 q : {15u, 21u, 40u, 63u, 91u}) {
    auto g = group(q);
    auto h = SubgroupSpec::kth_powers(g, 2);
    std::map<u64, int> hits;
    for (u64 a : h.coset_representatives()) {
      auto residues = h.coset(a);
      std::set<u64> rs(residues.begin(), residues.end());
      for (u64 p = 2; p <= bound; ++p)
        if (oracle::trial_prime(p) && rs.count(p % q)) ++hits[p];
    }
    for (u64 p = 2; p <= bound; ++p) {
      if (!oracle::trial_prime(p)) continue;
      int expected = q % p == 0 ? 0 : 1;
      REQUIRE(hits[p] == expected);
    }
  }
}

TEST_CASE("default ceilings") {
  CHECK(default_coset_ceiling(20001, 2) >= 1'000'000'000ULL);
  CHECK(default_ap_ceiling(5) >= 1000);
  CHECK(default_subgroup_ceiling(3001) >= 4 * 64);
}
