#include "grhcheck/characters.hpp"

#include <algorithm>
#include <cmath>
#include <map>
#include <mutex>
#include <numbers>
#include <sstream>
#include <stdexcept>

#include "grhcheck/error.hpp"

namespace grhcheck {

CharacterValue CharacterValue::root(u64 num, u64 den) noexcept {
  CharacterValue v;
  num %= den;
  u64 g = gcd(num, den);
  if (num == 0) g = den;
  v.num_ = num / g;
  v.den_ = den / g;
  return v;
}

std::optional<int> CharacterValue::as_sign() const noexcept {
  if (is_zero()) return 0;
  if (den_ == 1) return 1;
  if (den_ == 2) return -1;
  return std::nullopt;
}

std::complex<double> CharacterValue::to_complex() const noexcept {
  if (is_zero()) return {0.0, 0.0};
  if (den_ == 1) return {1.0, 0.0};
  if (den_ == 2) return {-1.0, 0.0};
  if (den_ == 4) return num_ == 1 ? std::complex<double>{0.0, 1.0} : std::complex<double>{0.0, -1.0};
  // reduce to the first half-turn so the argument stays small
  double angle = 2.0 * std::numbers::pi * static_cast<double>(num_) / static_cast<double>(den_);
  if (2 * num_ > den_) angle -= 2.0 * std::numbers::pi;
  return {std::cos(angle), std::sin(angle)};
}

CharacterValue CharacterValue::conj() const noexcept {
  if (is_zero()) return *this;
  return root(den_ - num_, den_);
}

CharacterValue CharacterValue::operator*(CharacterValue other) const noexcept {
  if (is_zero() || other.is_zero()) return zero();
  u64 d = lcm(den_, other.den_);
  return root(num_ * (d / den_) + other.num_ * (d / other.den_), d);
}

namespace {

using Poly = std::vector<i64>;

// Exact division of a by the monic polynomial b.
Poly poly_divide(Poly a, const Poly& b) {
  std::size_t db = b.size() - 1;
  if (a.size() < b.size()) return {0};
  Poly quotient(a.size() - db, 0);
  for (std::size_t i = a.size(); i-- > db;) {
    i64 c = a[i];
    quotient[i - db] = c;
    if (c == 0) continue;
    for (std::size_t j = 0; j <= db; ++j) a[i - db + j] -= c * b[j];
  }
  return quotient;
}

const Poly& cyclotomic(u64 n) {
  static std::mutex mutex;
  static std::map<u64, Poly> cache;
  {
    std::lock_guard lock(mutex);
    if (auto it = cache.find(n); it != cache.end()) return it->second;
  }
  // x^n - 1 divided by Phi_d for every proper divisor d
  Poly p(n + 1, 0);
  p[0] = -1;
  p[n] = 1;
  for (u64 d = 1; d < n; ++d) {
    if (n % d == 0) p = poly_divide(p, cyclotomic(d));
  }
  std::lock_guard lock(mutex);
  return cache.emplace(n, std::move(p)).first->second;
}

}  // namespace

CyclotomicSum::CyclotomicSum(u64 order) : order_(order), counts_(order, 0) {}

void CyclotomicSum::add(CharacterValue v) {
  if (v.is_zero()) return;
  if (order_ % v.denominator() != 0) throw std::logic_error("CyclotomicSum: value order does not divide sum order");
  counts_[v.numerator() * (order_ / v.denominator())] += 1;
  used_ = lcm(used_, v.denominator());
}

std::optional<i64> CyclotomicSum::as_integer() const {
  if (used_ == 1) return counts_[0];
  if (used_ == 2) return counts_[0] - counts_[order_ / 2];
  // every value added is a used_-th root of unity, so reduce modulo Phi_used
  thread_local u64 last_order = 0;
  thread_local const Poly* last = nullptr;
  if (last_order != used_) {
    last = &cyclotomic(used_);
    last_order = used_;
  }
  const Poly& phi = *last;
  std::size_t deg = phi.size() - 1;
  Poly rem(used_, 0);
  const u64 stride = order_ / used_;
  for (u64 i = 0; i < used_; ++i) rem[i] = counts_[i * stride];
  for (std::size_t i = rem.size(); i-- > deg;) {
    i64 c = rem[i];
    if (c == 0) continue;
    for (std::size_t j = 0; j <= deg; ++j) rem[i - deg + j] -= c * phi[j];
  }
  for (std::size_t i = 1; i < std::min(rem.size(), deg); ++i) {
    if (rem[i] != 0) return std::nullopt;
  }
  return rem.empty() ? 0 : rem[0];
}

namespace {

u64 local_conductor_odd(u64 p, u64 pe, u64 x) {
  if (x == 0) return 1;
  u64 order = pe / p * (p - 1);
  u64 phi_pf = p - 1;
  for (u64 pf = p;; pf *= p) {
    if (mulmod(x, phi_pf, order) == 0) return pf;
    phi_pf *= p;
    if (pf >= pe) return pe;
  }
}

}  // namespace

DirichletCharacter::DirichletCharacter(std::shared_ptr<const UnitGroupStructure> group, std::vector<u32> exponents)
    : group_(std::move(group)), exps_(std::move(exponents)) {
  auto comps = group_->components();
  if (exps_.size() != comps.size()) throw Error(ErrorKind::InvalidArgument, "exponent vector length mismatch");
  for (std::size_t j = 0; j < comps.size(); ++j) {
    exps_[j] %= static_cast<u32>(comps[j].order);
    order_ = lcm(order_, comps[j].order / gcd(exps_[j], comps[j].order));
  }
  if (group_->modulus() > 2) {
    auto v = (*this)(-1);
    parity_ = v.is_one() ? 0 : 1;
  }
  // conductor: product of local conductors over the prime powers of q
  conductor_ = 1;
  for (std::size_t j = 0; j < comps.size();) {
    const auto& c = comps[j];
    if (c.prime != 2) {
      conductor_ *= local_conductor_odd(c.prime, c.prime_power, exps_[j]);
      ++j;
    } else if (c.prime_power == 4) {
      if (exps_[j] != 0) conductor_ *= 4;
      ++j;
    } else {
      u32 sign = exps_[j], five = exps_[j + 1];
      u64 half = comps[j + 1].order;  // 2^(k-2)
      if (five == 0) {
        if (sign != 0) conductor_ *= 4;
      } else {
        u64 f = 8;
        for (u64 t = 2; (five * t) % half != 0; t *= 2) f *= 2;
        conductor_ *= f;
      }
      j += 2;
    }
  }
}

CharacterValue DirichletCharacter::at(u64 n) const {
  auto comps = group_->components();
  u32 logs[64];
  if (!group_->dlog(n, std::span<u32>(logs, comps.size()))) return CharacterValue::zero();
  u64 d = group_->exponent();
  u64 num = 0;
  for (std::size_t j = 0; j < comps.size(); ++j) {
    num = (num + mulmod(static_cast<u64>(exps_[j]) * (d / comps[j].order) % d, logs[j], d)) % d;
  }
  return CharacterValue::root(num, d);
}

CharacterValue DirichletCharacter::operator()(i64 n) const {
  auto q = static_cast<i64>(modulus());
  i64 r = n % q;
  if (r < 0) r += q;
  return at(static_cast<u64>(r));
}

DirichletCharacter DirichletCharacter::conj() const {
  auto comps = group_->components();
  std::vector<u32> e(exps_.size());
  for (std::size_t j = 0; j < e.size(); ++j) e[j] = static_cast<u32>((comps[j].order - exps_[j]) % comps[j].order);
  return DirichletCharacter(group_, std::move(e));
}

DirichletCharacter DirichletCharacter::operator*(const DirichletCharacter& other) const {
  if (other.modulus() != modulus()) throw Error(ErrorKind::InvalidArgument, "character moduli differ");
  auto comps = group_->components();
  std::vector<u32> e(exps_.size());
  for (std::size_t j = 0; j < e.size(); ++j) e[j] = static_cast<u32>((exps_[j] + other.exps_[j]) % comps[j].order);
  return DirichletCharacter(group_, std::move(e));
}

bool DirichletCharacter::operator==(const DirichletCharacter& other) const {
  return modulus() == other.modulus() && exps_ == other.exps_;
}

DirichletCharacter DirichletCharacter::primitive() const {
  if (conductor_ == modulus()) return *this;
  auto target = UnitGroupStructure::create(conductor_, std::max<u64>(conductor_, kDefaultModulusCeiling));
  auto comps = target->components();
  std::vector<u32> e(comps.size());
  u64 q = modulus();
  for (std::size_t j = 0; j < comps.size(); ++j) {
    u64 n = comps[j].generator;
    while (gcd(n, q) != 1) n += conductor_;
    auto v = at(n % q);
    // v has order dividing the component order
    u64 num = v.numerator() * (comps[j].order / v.denominator());
    e[j] = static_cast<u32>(num % comps[j].order);
  }
  return DirichletCharacter(std::move(target), std::move(e));
}

std::string DirichletCharacter::id() const {
  std::ostringstream out;
  out << modulus() << '[';
  for (std::size_t j = 0; j < exps_.size(); ++j) out << (j ? "," : "") << exps_[j];
  out << ']';
  return out.str();
}

std::vector<DirichletCharacter> character_group(const std::shared_ptr<const UnitGroupStructure>& group) {
  auto comps = group->components();
  std::vector<DirichletCharacter> out;
  out.reserve(group->order());
  std::vector<u32> e(comps.size(), 0);
  while (true) {
    out.emplace_back(group, e);
    std::size_t j = comps.size();
    while (j > 0) {
      --j;
      if (++e[j] < comps[j].order) break;
      e[j] = 0;
      if (j == 0) return out;
    }
    if (comps.empty()) return out;
  }
}

std::vector<DirichletCharacter> character_group(u64 q) { return character_group(UnitGroupStructure::create(q)); }

int kronecker(i64 a, i64 b) noexcept {
  static constexpr int kTab2[8] = {0, 1, 0, -1, 0, -1, 0, 1};
  if (b == 0) return (a == 1 || a == -1) ? 1 : 0;
  if ((a % 2 == 0) && (b % 2 == 0)) return 0;
  int v = 0;
  while (b % 2 == 0) {
    ++v;
    b /= 2;
  }
  int k = (v % 2 == 0) ? 1 : kTab2[static_cast<u64>(a) & 7];
  if (b < 0) {
    b = -b;
    if (a < 0) k = -k;
  }
  while (true) {
    // b odd and positive
    if (a == 0) return b > 1 ? 0 : k;
    v = 0;
    while (a % 2 == 0) {
      ++v;
      a /= 2;
    }
    if (v % 2 == 1) k *= kTab2[static_cast<u64>(b) & 7];
    if (static_cast<u64>(a) & static_cast<u64>(b) & 2) k = -k;
    i64 r = a < 0 ? -a : a;
    a = b % r;
    b = r;
  }
}

bool is_fundamental_discriminant(i64 d) {
  if (d == 0 || d == 1) return false;
  auto mod4 = [](i64 x) { return ((x % 4) + 4) % 4; };
  auto squarefree = [](i64 x) {
    u64 ax = static_cast<u64>(x < 0 ? -x : x);
    return ax != 0 && factorize(ax).squarefree();
  };
  if (mod4(d) == 1) return squarefree(d);
  if (mod4(d) == 0) {
    i64 m = d / 4;
    return (mod4(m) == 2 || mod4(m) == 3) && squarefree(m);
  }
  return false;
}

SubgroupSpec::SubgroupSpec(std::shared_ptr<const UnitGroupStructure> group, SubgroupKind kind)
    : group_(std::move(group)), kind_(kind), mask_(group_->modulus(), 0) {}

SubgroupSpec SubgroupSpec::kth_powers(std::shared_ptr<const UnitGroupStructure> group, u64 k) {
  if (k == 0) throw Error(ErrorKind::InvalidArgument, "k must be positive");
  SubgroupSpec h(std::move(group), SubgroupKind::KthPowers);
  h.k_ = k;
  auto comps = h.group_->components();
  std::vector<u64> step(comps.size());
  for (std::size_t j = 0; j < comps.size(); ++j) {
    step[j] = gcd(k, comps[j].order);
    h.gens_.push_back(powmod(comps[j].generator, k, h.modulus()));
  }
  std::vector<u32> logs(comps.size());
  for (u64 n = 0; n < h.modulus(); ++n) {
    if (!h.group_->dlog(n, logs)) continue;
    bool in = true;
    for (std::size_t j = 0; j < comps.size() && in; ++j) in = logs[j] % step[j] == 0;
    if (in) {
      h.mask_[n] = 1;
      ++h.size_;
    }
  }
  return h;
}

SubgroupSpec SubgroupSpec::generated_by(std::shared_ptr<const UnitGroupStructure> group, std::vector<u64> generators) {
  SubgroupSpec h(std::move(group), SubgroupKind::Generated);
  u64 q = h.modulus();
  for (u64& g : generators) {
    g %= q;
    if (!h.group_->is_unit(g)) throw Error(ErrorKind::InvalidArgument, "subgroup generator is not a unit");
  }
  h.gens_ = generators;
  std::vector<u64> frontier{1 % q};
  h.mask_[1 % q] = 1;
  h.size_ = 1;
  while (!frontier.empty()) {
    u64 x = frontier.back();
    frontier.pop_back();
    for (u64 g : generators) {
      u64 y = mulmod(x, g, q);
      if (!h.mask_[y]) {
        h.mask_[y] = 1;
        ++h.size_;
        frontier.push_back(y);
      }
    }
  }
  return h;
}

SubgroupSpec SubgroupSpec::trivial(std::shared_ptr<const UnitGroupStructure> group) {
  SubgroupSpec h(std::move(group), SubgroupKind::Trivial);
  h.mask_[1 % h.modulus()] = 1;
  h.size_ = 1;
  return h;
}

std::vector<u64> SubgroupSpec::elements() const {
  std::vector<u64> out;
  for (u64 n = 0; n < modulus(); ++n)
    if (mask_[n]) out.push_back(n);
  return out;
}

std::vector<u64> SubgroupSpec::coset(u64 a) const {
  u64 q = modulus();
  std::vector<u64> out;
  for (u64 x : elements()) out.push_back(mulmod(a % q, x, q));
  std::sort(out.begin(), out.end());
  return out;
}

std::vector<u64> SubgroupSpec::coset_representatives() const {
  u64 q = modulus();
  std::vector<std::uint8_t> seen(q, 0);
  std::vector<u64> reps;
  auto elems = elements();
  for (u64 a = 1; a < q || (q == 1 && a == 1); ++a) {
    u64 r = a % q;
    if (!group_->is_unit(r) || seen[r]) continue;
    reps.push_back(r);
    for (u64 x : elems) seen[mulmod(r, x, q)] = 1;
    if (q == 1) break;
  }
  return reps;
}

std::string SubgroupSpec::describe() const {
  switch (kind_) {
    case SubgroupKind::KthPowers: return k_ == 2 ? "squares" : "powers" + std::to_string(k_);
    case SubgroupKind::Trivial: return "trivial";
    case SubgroupKind::Generated: {
      std::string s = "gen";
      for (std::size_t i = 0; i < gens_.size(); ++i) s += (i ? "." : ":") + std::to_string(gens_[i]);
      return s;
    }
  }
  return "?";
}

std::vector<DirichletCharacter> annihilator(const SubgroupSpec& h) {
  std::vector<u64> gens;
  switch (h.kind()) {
    case SubgroupKind::Trivial: break;
    case SubgroupKind::KthPowers:
    case SubgroupKind::Generated: gens.assign(h.generators().begin(), h.generators().end()); break;
  }
  std::vector<DirichletCharacter> out;
  for (auto& chi : character_group(h.group_ptr())) {
    bool trivial = std::all_of(gens.begin(), gens.end(), [&](u64 g) { return chi.at(g).is_one(); });
    if (trivial) out.push_back(std::move(chi));
  }
  return out;
}

int coset_indicator_by_characters(const SubgroupSpec& h, std::span<const DirichletCharacter> chars, u64 a, u64 n) {
  u64 q = h.modulus();
  if (!h.group_ptr()->is_unit(a % q)) throw Error(ErrorKind::NonUnitCoset, "gcd(a, q) > 1");
  CyclotomicSum sum(h.group_ptr()->exponent());
  for (const auto& chi : chars) sum.add(chi.at(a % q).conj() * chi.at(n % q));
  auto value = sum.as_integer();
  auto index = static_cast<i64>(chars.size());
  if (!value || (*value != 0 && *value != index)) throw std::logic_error("coset character average is not 0 or h");
  return *value == index ? 1 : 0;
}

int coset_indicator_by_mask(const SubgroupSpec& h, u64 a, u64 n) {
  u64 q = h.modulus();
  if (!h.group_ptr()->is_unit(a % q)) throw Error(ErrorKind::NonUnitCoset, "gcd(a, q) > 1");
  if (!h.group_ptr()->is_unit(n % q)) return 0;
  return h.contains(mulmod(n % q, invmod(a % q, q), q)) ? 1 : 0;
}

int coset_indicator(const SubgroupSpec& h, u64 a, u64 n) {
  auto chars = annihilator(h);
  int by_chars = coset_indicator_by_characters(h, chars, a, n);
  int by_mask = coset_indicator_by_mask(h, a, n);
  if (by_chars != by_mask) throw std::logic_error("coset indicator routes disagree");
  return by_mask;
}

}  // namespace grhcheck
