#include <doctest.h>

#include <cmath>
#include <numeric>
#include <random>

#include "grhcheck/arith.hpp"
#include "grhcheck/error.hpp"
#include "oracles.hpp"

using namespace grhcheck;

TEST_CASE("factorize examples") {
  CHECK(factorize(1).factors.empty());
  auto f12 = factorize(12);
  REQUIRE(f12.factors.size() == 2);
  CHECK(f12.factors[0] == std::pair<u64, unsigned>{2, 2});
  CHECK(f12.factors[1] == std::pair<u64, unsigned>{3, 1});
  auto f3000 = factorize(3000);
  CHECK(f3000.factors == oracle::trial_factor(3000));
  CHECK(f3000.phi() == oracle::brute_phi(3000));
  CHECK(f3000.omega() == 3);
}

TEST_CASE("factorize matches trial division, including large semiprimes") {
  for (u64 n = 1; n <= 20000; ++n) REQUIRE(factorize(n).factors == oracle::trial_factor(n));
  std::mt19937_64 rng(7);
  for (int i = 0; i < 200; ++i) {
    u64 n = rng() >> 30;  // < 2^34, trial division is cheap enough
    REQUIRE(factorize(n).factors == oracle::trial_factor(n));
  }
  u64 p = 1000000007ULL, q = 998244353ULL;
  auto f = factorize(p * q);
  REQUIRE(f.factors.size() == 2);
  CHECK(f.factors[0].first == q);
  CHECK(f.factors[1].first == p);
  auto big = factorize((1ULL << 62) + 135);
  u64 prod = 1;
  for (auto [pp, e] : big.factors) {
    CHECK(is_prime(pp));
    for (unsigned k = 0; k < e; ++k) prod *= pp;
  }
  CHECK(prod == (1ULL << 62) + 135);
}

TEST_CASE("is_prime examples") {
  CHECK(is_prime(2));
  CHECK_FALSE(is_prime(1));
  CHECK(is_prime(1000000007ULL));
  CHECK(oracle::trial_prime(1000000007ULL));
  CHECK_FALSE(is_prime(3215031751ULL));  // strong pseudoprime to bases 2, 3, 5, 7
  CHECK(is_prime(9223372036854775783ULL));
  CHECK_FALSE(is_prime(9223372036854775781ULL));
}

TEST_CASE("is_prime agrees with an independent sieve up to 10^7") {
  const u64 limit = 10'000'000;
  auto sieve = oracle::eratosthenes(limit);
  u64 mismatches = 0;
  for (u64 n = 0; n <= limit; ++n)
    if (is_prime(n) != sieve[n]) ++mismatches;
  CHECK(mismatches == 0);
}

TEST_CASE("is_prime agrees with trial division on random 40-bit integers") {
  std::mt19937_64 rng(11);
  for (int i = 0; i < 2000; ++i) {
    u64 n = (rng() >> 24) | 1;
    REQUIRE(is_prime(n) == oracle::trial_prime(n));
  }
}

TEST_CASE("von_mangoldt examples and psi self-consistency") {
  CHECK(von_mangoldt(8) == doctest::Approx(std::log(2.0)).epsilon(1e-15));
  CHECK(von_mangoldt(6) == 0.0);
  CHECK(von_mangoldt(97) == doctest::Approx(std::log(97.0)).epsilon(1e-15));
  CHECK(von_mangoldt(1) == 0.0);

  const u64 x = 1'000'000;
  auto sieve = oracle::eratosthenes(x);
  double psi_direct = 0.0;
  for (u64 p = 2; p <= x; ++p) {
    if (!sieve[p]) continue;
    for (u64 pk = p; pk <= x; pk *= p) psi_direct += std::log(static_cast<double>(p));
  }
  double psi_vm = 0.0;
  for (u64 n = 1; n <= x; ++n) psi_vm += von_mangoldt(n);
  CHECK(psi_vm == doctest::Approx(psi_direct).epsilon(1e-12));
  auto table = PrimePowerTable(x);
  double psi_table = 0.0;
  for (double l : table.lambda()) psi_table += l;
  CHECK(psi_table == doctest::Approx(psi_direct).epsilon(1e-12));
  CHECK(table.count_upto(10.0) == 7);  // 2 3 4 5 7 8 9
}

TEST_CASE("primes_upto and PrimeStream agree with the sieve") {
  auto sieve = oracle::eratosthenes(2'000'000);
  auto ps = primes_upto(2'000'000);
  std::size_t idx = 0;
  PrimeStream stream(2, 1 << 12);
  for (u64 n = 0; n <= 2'000'000; ++n) {
    if (!sieve[n]) continue;
    REQUIRE(idx < ps.size());
    REQUIRE(ps[idx++] == n);
    REQUIRE(stream.next() == n);
  }
  CHECK(idx == ps.size());
  PrimeStream late(1'000'000'000ULL);
  CHECK(late.next() == 1000000007ULL);
}

TEST_CASE("unit group examples") {
  auto g7 = UnitGroupStructure::create(7);
  REQUIRE(g7->components().size() == 1);
  CHECK(g7->components()[0].generator == 3);
  CHECK(g7->components()[0].order == 6);
  CHECK(oracle::multiplicative_order(3, 7) == 6);

  auto g8 = UnitGroupStructure::create(8);
  REQUIRE(g8->components().size() == 2);
  CHECK(g8->components()[0].order == 2);
  CHECK(g8->components()[1].order == 2);

  auto g4 = UnitGroupStructure::create(4);
  REQUIRE(g4->components().size() == 1);
  CHECK(g4->components()[0].generator == 3);
  CHECK(g4->components()[0].order == 2);

  CHECK_THROWS_AS(UnitGroupStructure::create(20'000'000), Error);
  try {
    UnitGroupStructure::create(20'000'000);
  } catch (const Error& e) {
    CHECK(e.kind() == ErrorKind::ModulusTooLarge);
  }
}

TEST_CASE("unit group structure: orders, phi and dlog round-trip for q <= 2000") {
  for (u64 q = 3; q <= 2000; ++q) {
    auto g = UnitGroupStructure::create(q);
    u64 prod = 1;
    for (const auto& c : g->components()) {
      REQUIRE(oracle::multiplicative_order(c.generator, q) == c.order);
      prod *= c.order;
    }
    u64 units = oracle::brute_phi(q);
    REQUIRE(prod == units);
    REQUIRE(g->order() == units);
    REQUIRE(g->factorization().phi() == units);
    std::vector<u32> exps(g->components().size());
    std::vector<std::uint8_t> seen(q, 0);
    for (u64 n = 1; n < q; ++n) {
      bool unit = g->dlog(n, exps);
      REQUIRE(unit == (std::gcd(n, q) == 1));
      if (!unit) continue;
      REQUIRE(g->from_exponents(exps) == n);
      u64 packed = g->from_exponents(exps);
      REQUIRE(seen[packed] == 0);
      seen[packed] = 1;
    }
  }
}

TEST_CASE("is_prime agrees with trial division just below 2^32") {
  std::mt19937_64 rng(13);
  for (int i = 0; i < 3000; ++i) {
    u64 n = (u64{1} << 32) - 1 - (rng() % 50'000'000);
    REQUIRE(is_prime(n) == oracle::trial_prime(n));
  }
  CHECK(is_prime(4294967291ULL));
  CHECK_FALSE(is_prime(4294967297ULL));  // 641 * 6700417
}
