#pragma once

#include <complex>
#include <cstdint>
#include <memory>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "grhcheck/arith.hpp"

namespace grhcheck {

using i64 = std::int64_t;

/// A character value held exactly: either 0 or e(num/den) with 0 <= num < den, gcd(num, den) = 1.
class CharacterValue {
 public:
  static CharacterValue zero() noexcept { return CharacterValue(); }
  static CharacterValue root(u64 num, u64 den) noexcept;
  static CharacterValue one() noexcept { return root(0, 1); }

  bool is_zero() const noexcept { return den_ == 0; }
  bool is_one() const noexcept { return den_ == 1; }
  u64 numerator() const noexcept { return num_; }
  u64 denominator() const noexcept { return den_; }

  /// +1 / -1 / 0 when the value is real, otherwise empty.
  std::optional<int> as_sign() const noexcept;
  std::complex<double> to_complex() const noexcept;

  CharacterValue conj() const noexcept;
  CharacterValue operator*(CharacterValue other) const noexcept;
  bool operator==(const CharacterValue&) const = default;

 private:
  CharacterValue() = default;
  u64 num_ = 0;
  u64 den_ = 0;
};

/// Exact sum of roots of unity of order dividing `order`, reduced modulo the cyclotomic polynomial.
class CyclotomicSum {
 public:
  explicit CyclotomicSum(u64 order);

  void add(CharacterValue v);
  /// The sum as an integer, when it is one.
  std::optional<i64> as_integer() const;

 private:
  u64 order_;
  u64 used_ = 1;
  std::vector<i64> counts_;
};

class DirichletCharacter {
 public:
  DirichletCharacter(std::shared_ptr<const UnitGroupStructure> group, std::vector<u32> exponents);

  u64 modulus() const noexcept { return group_->modulus(); }
  const UnitGroupStructure& group() const noexcept { return *group_; }
  const std::shared_ptr<const UnitGroupStructure>& group_ptr() const noexcept { return group_; }
  std::span<const u32> exponents() const noexcept { return exps_; }

  CharacterValue operator()(i64 n) const;
  CharacterValue at(u64 n) const;
  std::complex<double> value(i64 n) const { return (*this)(n).to_complex(); }

  u64 order() const noexcept { return order_; }
  /// 0 for even characters, 1 for odd ones.
  int parity() const noexcept { return parity_; }
  bool is_principal() const noexcept { return order_ == 1; }
  bool is_real() const noexcept { return order_ <= 2; }
  u64 conductor() const noexcept { return conductor_; }
  bool is_primitive() const noexcept { return conductor_ == modulus(); }

  /// The primitive character mod conductor() inducing this one.
  DirichletCharacter primitive() const;
  DirichletCharacter conj() const;
  DirichletCharacter operator*(const DirichletCharacter& other) const;
  bool operator==(const DirichletCharacter& other) const;

  /// "q[e1,e2,...]"
  std::string id() const;

 private:
  std::shared_ptr<const UnitGroupStructure> group_;
  std::vector<u32> exps_;
  u64 order_ = 1;
  int parity_ = 0;
  u64 conductor_ = 1;
};

/// All phi(q) characters, principal first, in lexicographic exponent order.
std::vector<DirichletCharacter> character_group(const std::shared_ptr<const UnitGroupStructure>& group);
std::vector<DirichletCharacter> character_group(u64 q);

/// Kronecker symbol (d/n), including n = 2, n <= 0, d < 0.
int kronecker(i64 d, i64 n) noexcept;

bool is_fundamental_discriminant(i64 d);

enum class SubgroupKind { KthPowers, Generated, Trivial };

class SubgroupSpec {
 public:
  static SubgroupSpec kth_powers(std::shared_ptr<const UnitGroupStructure> group, u64 k);
  static SubgroupSpec squares(std::shared_ptr<const UnitGroupStructure> group) { return kth_powers(std::move(group), 2); }
  static SubgroupSpec generated_by(std::shared_ptr<const UnitGroupStructure> group, std::vector<u64> generators);
  static SubgroupSpec trivial(std::shared_ptr<const UnitGroupStructure> group);

  u64 modulus() const noexcept { return group_->modulus(); }
  const std::shared_ptr<const UnitGroupStructure>& group_ptr() const noexcept { return group_; }
  SubgroupKind kind() const noexcept { return kind_; }
  u64 power() const noexcept { return k_; }
  std::span<const u64> generators() const noexcept { return gens_; }

  bool contains(u64 n) const noexcept { return mask_[n % modulus()] != 0; }
  u64 size() const noexcept { return size_; }
  u64 index() const noexcept { return group_->order() / size_; }
  bool proper() const noexcept { return index() > 1; }

  std::vector<u64> elements() const;
  /// Least element of each coset, ascending.
  std::vector<u64> coset_representatives() const;
  /// Residues of the coset aH, ascending.
  std::vector<u64> coset(u64 a) const;
  std::string describe() const;

 private:
  SubgroupSpec(std::shared_ptr<const UnitGroupStructure> group, SubgroupKind kind);

  std::shared_ptr<const UnitGroupStructure> group_;
  SubgroupKind kind_;
  u64 k_ = 0;
  std::vector<u64> gens_;
  std::vector<std::uint8_t> mask_;
  u64 size_ = 0;
};

/// Characters trivial on H; exactly index(H) of them.
std::vector<DirichletCharacter> annihilator(const SubgroupSpec& h);

/// [n in aH] from the character average (1/h) sum over the annihilator of conj(chi(a)) chi(n),
/// evaluated exactly in cyclotomic arithmetic.
int coset_indicator_by_characters(const SubgroupSpec& h, std::span<const DirichletCharacter> annihilator, u64 a, u64 n);
/// [n in aH] from the membership mask.
int coset_indicator_by_mask(const SubgroupSpec& h, u64 a, u64 n);
/// Both routes; throws std::logic_error if they disagree.
int coset_indicator(const SubgroupSpec& h, u64 a, u64 n);

}  // namespace grhcheck
