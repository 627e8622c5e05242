#pragma once

#include <cstdint>
#include <memory>
#include <span>
#include <utility>
#include <vector>

namespace grhcheck {

using u64 = std::uint64_t;
using u32 = std::uint32_t;

inline constexpr u64 kDefaultModulusCeiling = 10'000'000;

u64 mulmod(u64 a, u64 b, u64 m) noexcept;
u64 powmod(u64 base, u64 exp, u64 m) noexcept;
u64 gcd(u64 a, u64 b) noexcept;
u64 lcm(u64 a, u64 b) noexcept;
// Inverse of a modulo m; requires gcd(a, m) == 1.
u64 invmod(u64 a, u64 m);

/// Deterministic Miller-Rabin over the first twelve prime bases, exact for all n < 2^64.
bool is_prime(u64 n) noexcept;

struct Factorization {
  u64 n = 1;
  std::vector<std::pair<u64, unsigned>> factors;  // primes strictly increasing

  unsigned omega() const noexcept { return static_cast<unsigned>(factors.size()); }
  u64 phi() const noexcept;
  bool squarefree() const noexcept;
  bool divisible_by(u64 p) const noexcept;
};

/// Trial division below 10^5, Pollard-Brent rho above.
Factorization factorize(u64 n);

u64 euler_phi(u64 n);

/// log p when n = p^k (k >= 1), otherwise 0.
double von_mangoldt(u64 n);

/// All primes <= limit, ascending.
std::vector<u32> primes_upto(u32 limit);

/// Primes in ascending order from 2, produced by a segmented sieve.
class PrimeStream {
 public:
  explicit PrimeStream(u64 start = 2, u64 segment = 1u << 16);
  u64 next();

 private:
  void refill();

  u64 low_;
  u64 segment_;
  std::vector<u32> base_;
  u64 base_limit_ = 0;
  std::vector<u64> buffer_;
  std::size_t pos_ = 0;
};

/// Prime powers n <= limit with per-entry weights used by the explicit-formula sums.
/// Arrays are parallel and sorted by n.
class PrimePowerTable {
 public:
  explicit PrimePowerTable(u64 limit);

  /// A cached table covering at least `limit`; immutable once built.
  static std::shared_ptr<const PrimePowerTable> shared(u64 limit);

  u64 limit() const noexcept { return limit_; }
  std::size_t size() const noexcept { return value_.size(); }
  /// Number of prime powers <= x.
  std::size_t count_upto(double x) const noexcept;

  std::span<const u64> value() const noexcept { return value_; }
  std::span<const u64> prime() const noexcept { return prime_; }
  std::span<const u32> power() const noexcept { return power_; }
  std::span<const double> n() const noexcept { return n_; }
  std::span<const double> lambda() const noexcept { return lambda_; }
  std::span<const double> log_n() const noexcept { return log_n_; }
  std::span<const double> lambda_over_n() const noexcept { return lambda_over_n_; }
  std::span<const double> lambda_over_n_log_n() const noexcept { return lambda_over_n_log_n_; }

 private:
  u64 limit_;
  std::vector<u64> value_, prime_;
  std::vector<u32> power_;
  std::vector<double> n_, lambda_, log_n_, lambda_over_n_, lambda_over_n_log_n_;
};

struct UnitComponent {
  u64 prime;         // p of the prime power this component lives in
  u64 prime_power;   // p^e
  u64 generator;     // residue mod q (CRT lift, 1 on the other prime powers)
  u64 order;
};

/// (Z/qZ)^* as a product of cyclic groups, with discrete-log tables for every component.
/// Odd p^e contributes <g> with g the least primitive root; 4 contributes <3>;
/// 2^k, k >= 3, contributes <-1> x <5>.
class UnitGroupStructure {
 public:
  static std::shared_ptr<const UnitGroupStructure> create(u64 q, u64 ceiling = kDefaultModulusCeiling);

  u64 modulus() const noexcept { return q_; }
  const Factorization& factorization() const noexcept { return fact_; }
  std::span<const UnitComponent> components() const noexcept { return comps_; }
  u64 order() const noexcept { return phi_; }
  /// lcm of the component orders.
  u64 exponent() const noexcept { return exponent_; }

  bool is_unit(u64 n) const noexcept { return gcd(n % q_, q_) == 1; }
  /// Fills out[j] with the discrete log along component j; false when n is not a unit.
  bool dlog(u64 n, std::span<u32> out) const noexcept;
  u64 from_exponents(std::span<const u32> exps) const noexcept;

  explicit UnitGroupStructure(u64 q);

 private:
  struct Local {
    u64 prime_power;
    std::size_t first_component;
    std::size_t count;
    std::vector<std::vector<u32>> tables;  // one per component, indexed by n mod p^e
  };

  u64 q_;
  Factorization fact_;
  std::vector<UnitComponent> comps_;
  std::vector<Local> locals_;
  u64 phi_ = 1;
  u64 exponent_ = 1;
};

}  // namespace grhcheck
