#include "grhcheck/arith.hpp"

#include <algorithm>
#include <cmath>
#include <map>
#include <mutex>
#include <numeric>

#include "grhcheck/error.hpp"

namespace grhcheck {

u64 mulmod(u64 a, u64 b, u64 m) noexcept {
  return static_cast<u64>(static_cast<unsigned __int128>(a) * b % m);
}

u64 powmod(u64 base, u64 exp, u64 m) noexcept {
  if (m == 1) return 0;
  u64 result = 1;
  base %= m;
  while (exp) {
    if (exp & 1) result = mulmod(result, base, m);
    base = mulmod(base, base, m);
    exp >>= 1;
  }
  return result;
}

u64 gcd(u64 a, u64 b) noexcept { return std::gcd(a, b); }

u64 lcm(u64 a, u64 b) noexcept { return a / gcd(a, b) * b; }

u64 invmod(u64 a, u64 m) {
  // extended Euclid on signed 128-bit to avoid overflow
  __int128 t = 0, new_t = 1;
  __int128 r = m, new_r = a % m;
  while (new_r != 0) {
    __int128 quotient = r / new_r;
    t -= quotient * new_t;
    std::swap(t, new_t);
    r -= quotient * new_r;
    std::swap(r, new_r);
  }
  if (r != 1) throw Error(ErrorKind::InvalidArgument, "invmod: argument not invertible");
  if (t < 0) t += m;
  return static_cast<u64>(t);
}

namespace {

bool strong_probable_prime(u64 n, u64 a, u64 d, int s) noexcept {
  u64 x = powmod(a, d, n);
  if (x == 1 || x == n - 1) return true;
  for (int r = 1; r < s; ++r) {
    x = mulmod(x, x, n);
    if (x == n - 1) return true;
  }
  return false;
}

// n < 2^32: products fit in 64 bits
bool strong_probable_prime32(u64 n, u64 a, u64 d, int s) noexcept {
  u64 x = 1, b = a % n;
  for (u64 e = d; e; e >>= 1) {
    if (e & 1) x = x * b % n;
    b = b * b % n;
  }
  if (x == 1 || x == n - 1) return true;
  for (int r = 1; r < s; ++r) {
    x = x * x % n;
    if (x == n - 1) return true;
  }
  return false;
}

}  // namespace

bool is_prime(u64 n) noexcept {
  if (n < 2) return false;
  static constexpr u64 kBases[] = {2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37};
  for (u64 p : kBases) {
    if (n % p == 0) return n == p;
  }
  if (n < 41 * 41) return true;
  u64 d = n - 1;
  int s = 0;
  while ((d & 1) == 0) {
    d >>= 1;
    ++s;
  }
  if (n < (u64{1} << 32)) {
    // {2, 7, 61} is exact below 4759123141
    for (u64 a : {2, 7, 61})
      if (!strong_probable_prime32(n, a, d, s)) return false;
    return true;
  }
  for (u64 a : kBases)
    if (!strong_probable_prime(n, a, d, s)) return false;
  return true;
}

u64 Factorization::phi() const noexcept {
  u64 result = 1;
  for (auto [p, e] : factors) {
    result *= p - 1;
    for (unsigned i = 1; i < e; ++i) result *= p;
  }
  return result;
}

bool Factorization::squarefree() const noexcept {
  return std::all_of(factors.begin(), factors.end(), [](const auto& f) { return f.second == 1; });
}

bool Factorization::divisible_by(u64 p) const noexcept {
  return std::any_of(factors.begin(), factors.end(), [p](const auto& f) { return f.first == p; });
}

namespace {

u64 pollard_brent(u64 n) {
  if (n % 2 == 0) return 2;
  for (u64 c = 1;; ++c) {
    u64 y = 2, r = 1, q = 1, g = 1, x = 0, ys = 0;
    constexpr u64 m = 128;
    auto f = [&](u64 v) { return (mulmod(v, v, n) + c) % n; };
    do {
      x = y;
      for (u64 i = 0; i < r; ++i) y = f(y);
      u64 k = 0;
      do {
        ys = y;
        for (u64 i = 0; i < std::min(m, r - k); ++i) {
          y = f(y);
          q = mulmod(q, x > y ? x - y : y - x, n);
        }
        g = gcd(q, n);
        k += m;
      } while (k < r && g == 1);
      r <<= 1;
    } while (g == 1);
    if (g == n) {
      do {
        ys = f(ys);
        g = gcd(x > ys ? x - ys : ys - x, n);
      } while (g == 1);
    }
    if (g != n) return g;
  }
}

void split(u64 n, std::map<u64, unsigned>& out) {
  if (n == 1) return;
  if (is_prime(n)) {
    ++out[n];
    return;
  }
  u64 d = pollard_brent(n);
  split(d, out);
  split(n / d, out);
}

}  // namespace

Factorization factorize(u64 n) {
  Factorization f;
  f.n = n;
  if (n == 0) throw Error(ErrorKind::InvalidArgument, "factorize: n must be positive");
  std::map<u64, unsigned> found;
  u64 rest = n;
  for (u64 p = 2; p < 100000 && p * p <= rest; p += (p == 2 ? 1 : 2)) {
    while (rest % p == 0) {
      ++found[p];
      rest /= p;
    }
  }
  if (rest > 1) split(rest, found);
  f.factors.assign(found.begin(), found.end());
  return f;
}

u64 euler_phi(u64 n) { return factorize(n).phi(); }

double von_mangoldt(u64 n) {
  if (n < 2) return 0.0;
  auto f = factorize(n);
  return f.omega() == 1 ? std::log(static_cast<double>(f.factors[0].first)) : 0.0;
}

std::vector<u32> primes_upto(u32 limit) {
  std::vector<u32> primes;
  if (limit < 2) return primes;
  std::vector<bool> composite(limit / 2 + 1, false);  // index i <-> 2i+1
  primes.push_back(2);
  for (u64 i = 1; 2 * i + 1 <= limit; ++i) {
    if (composite[i]) continue;
    u64 p = 2 * i + 1;
    primes.push_back(static_cast<u32>(p));
    for (u64 j = p * p; j <= limit; j += 2 * p) composite[j / 2] = true;
  }
  return primes;
}

PrimeStream::PrimeStream(u64 start, u64 segment) : low_(std::max<u64>(start, 2)), segment_(segment) {}

void PrimeStream::refill() {
  buffer_.clear();
  pos_ = 0;
  while (buffer_.empty()) {
    u64 high = low_ + segment_;
    auto root = static_cast<u64>(std::sqrt(static_cast<double>(high))) + 1;
    if (root > base_limit_) {
      base_limit_ = std::max<u64>(root, 2 * base_limit_);
      base_ = primes_upto(static_cast<u32>(base_limit_));
    }
    std::vector<bool> composite(segment_, false);
    for (u32 p : base_) {
      u64 pp = static_cast<u64>(p) * p;
      if (pp >= high) break;
      u64 first = std::max(pp, (low_ + p - 1) / p * p);
      for (u64 j = first; j < high; j += p) composite[j - low_] = true;
    }
    for (u64 n = low_; n < high; ++n) {
      if (n >= 2 && !composite[n - low_]) buffer_.push_back(n);
    }
    low_ = high;
  }
}

u64 PrimeStream::next() {
  if (pos_ >= buffer_.size()) refill();
  return buffer_[pos_++];
}

PrimePowerTable::PrimePowerTable(u64 limit) : limit_(limit) {
  if (limit > 4'000'000'000ULL) throw Error(ErrorKind::Domain, "prime-power table limit too large");
  auto primes = primes_upto(static_cast<u32>(limit));
  struct Entry {
    u64 n, p;
    u32 k;
  };
  std::vector<Entry> entries;
  entries.reserve(primes.size() + primes.size() / 8);
  for (u32 p32 : primes) {
    u64 p = p32;
    u64 v = p;
    for (u32 k = 1;; ++k) {
      entries.push_back({v, p, k});
      if (v > limit / p) break;
      v *= p;
    }
  }
  std::sort(entries.begin(), entries.end(), [](const Entry& a, const Entry& b) { return a.n < b.n; });
  for (const auto& e : entries) {
    double n = static_cast<double>(e.n);
    double lam = std::log(static_cast<double>(e.p));
    double logn = lam * e.k;
    value_.push_back(e.n);
    prime_.push_back(e.p);
    power_.push_back(e.k);
    n_.push_back(n);
    lambda_.push_back(lam);
    log_n_.push_back(logn);
    lambda_over_n_.push_back(lam / n);
    lambda_over_n_log_n_.push_back(lam / (n * logn));
  }
}

std::size_t PrimePowerTable::count_upto(double x) const noexcept {
  if (!(x >= 2.0)) return 0;
  double fx = std::floor(x);
  auto it = std::upper_bound(n_.begin(), n_.end(), fx);
  return static_cast<std::size_t>(it - n_.begin());
}

std::shared_ptr<const PrimePowerTable> PrimePowerTable::shared(u64 limit) {
  static std::mutex mutex;
  static std::shared_ptr<const PrimePowerTable> cached;
  std::lock_guard lock(mutex);
  if (!cached || cached->limit() < limit) {
    u64 target = 1 << 16;
    while (target < limit) target <<= 1;
    cached = std::make_shared<const PrimePowerTable>(target);
  }
  return cached;
}

namespace {

bool is_primitive_root(u64 g, u64 modulus, u64 order, const Factorization& order_factors) {
  if (gcd(g, modulus) != 1) return false;
  for (auto [r, e] : order_factors.factors) {
    if (powmod(g, order / r, modulus) == 1) return false;
  }
  return true;
}

}  // namespace

UnitGroupStructure::UnitGroupStructure(u64 q) : q_(q), fact_(factorize(q)) {
  for (auto [p, e] : fact_.factors) {
    u64 pe = 1;
    for (unsigned i = 0; i < e; ++i) pe *= p;
    Local local{pe, comps_.size(), 0, {}};
    u64 rest = q / pe;
    // CRT lift: x = local value mod pe, 1 mod rest
    auto lift = [&](u64 v) -> u64 {
      if (rest == 1) return v % q;
      u64 inv = invmod(rest % pe, pe);
      // x = 1 + rest * ((v - 1) * inv mod pe)
      u64 t = mulmod((v + pe - 1) % pe, inv, pe);
      return (1 + mulmod(rest, t, q)) % q;
    };
    if (p == 2) {
      if (e == 1) {
        locals_.push_back(std::move(local));
        continue;
      }
      if (e == 2) {
        std::vector<u32> table(4, UINT32_MAX);
        table[1] = 0;
        table[3] = 1;
        local.tables.push_back(std::move(table));
        comps_.push_back({2, 4, lift(3), 2});
        local.count = 1;
      } else {
        std::vector<u32> sign(pe, UINT32_MAX), five(pe, UINT32_MAX);
        u64 half = pe / 4;
        u64 x = 1;
        for (u64 j = 0; j < half; ++j) {
          sign[x] = 0;
          five[x] = static_cast<u32>(j);
          sign[pe - x] = 1;
          five[pe - x] = static_cast<u32>(j);
          x = x * 5 % pe;
        }
        local.tables.push_back(std::move(sign));
        local.tables.push_back(std::move(five));
        comps_.push_back({2, pe, lift(pe - 1), 2});
        comps_.push_back({2, pe, lift(5), half});
        local.count = 2;
      }
    } else {
      u64 order = pe / p * (p - 1);
      auto order_factors = factorize(order);
      u64 g = 2;
      while (!is_primitive_root(g, pe, order, order_factors)) ++g;
      std::vector<u32> table(pe, UINT32_MAX);
      u64 x = 1;
      for (u64 j = 0; j < order; ++j) {
        table[x] = static_cast<u32>(j);
        x = mulmod(x, g, pe);
      }
      local.tables.push_back(std::move(table));
      comps_.push_back({p, pe, lift(g), order});
      local.count = 1;
    }
    locals_.push_back(std::move(local));
  }
  for (const auto& c : comps_) {
    phi_ *= c.order;
    exponent_ = lcm(exponent_, c.order);
  }
}

std::shared_ptr<const UnitGroupStructure> UnitGroupStructure::create(u64 q, u64 ceiling) {
  if (q == 0) throw Error(ErrorKind::InvalidArgument, "modulus must be positive");
  if (q > ceiling) {
    throw Error(ErrorKind::ModulusTooLarge, "q = " + std::to_string(q) + " exceeds ceiling " + std::to_string(ceiling));
  }
  return std::make_shared<const UnitGroupStructure>(q);
}

bool UnitGroupStructure::dlog(u64 n, std::span<u32> out) const noexcept {
  for (const auto& local : locals_) {
    u64 r = n % local.prime_power;
    for (std::size_t i = 0; i < local.count; ++i) {
      u32 v = local.tables[i][r];
      if (v == UINT32_MAX) return false;
      out[local.first_component + i] = v;
    }
    if (local.count == 0 && r % 2 == 0) return false;  // the factor 2 with exponent 1
  }
  return true;
}

u64 UnitGroupStructure::from_exponents(std::span<const u32> exps) const noexcept {
  u64 x = 1 % q_;
  for (std::size_t j = 0; j < comps_.size(); ++j) x = mulmod(x, powmod(comps_[j].generator, exps[j], q_), q_);
  return x;
}

}  // namespace grhcheck
