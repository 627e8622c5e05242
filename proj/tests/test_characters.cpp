#include <doctest.h>

#include <numeric>
#include <set>

#include "grhcheck/characters.hpp"
#include "grhcheck/error.hpp"
#include "oracles.hpp"

using namespace grhcheck;

namespace {

const DirichletCharacter& real_nonprincipal(const std::vector<DirichletCharacter>& chars) {
  for (const auto& c : chars)
    if (c.is_real() && !c.is_principal()) return c;
  throw std::logic_error("no real character");
}

}  // namespace

TEST_CASE("character_group examples") {
  auto c3 = character_group(3);
  CHECK(c3.size() == 2);
  CHECK(c3[0].is_principal());
  CHECK(c3[1].at(2).as_sign() == -1);

  auto c8 = character_group(8);
  CHECK(c8.size() == 4);
  for (const auto& c : c8) CHECK(c.is_real());

  auto c7 = character_group(7);
  CHECK(c7.size() == 6);
  int real_nonprincipal_count = 0;
  for (const auto& c : c7)
    if (c.is_real() && !c.is_principal()) ++real_nonprincipal_count;
  CHECK(real_nonprincipal_count == 1);
}

TEST_CASE("character evaluation examples") {
  auto c6 = character_group(6);
  CHECK(c6[0].at(5).is_one());
  for (const auto& c : c6) CHECK(c.at(3).is_zero());
  auto c7 = character_group(7);
  const auto& legendre = real_nonprincipal(c7);
  CHECK(legendre.at(3).as_sign() == -1);
  CHECK(oracle::euler_legendre(3, 7) == -1);
}

TEST_CASE("characters are multiplicative, parity and orders are consistent (q <= 120)") {
  for (u64 q = 3; q <= 120; ++q) {
    auto chars = character_group(q);
    REQUIRE(chars.size() == oracle::brute_phi(q));
    std::set<std::string> ids;
    for (const auto& c : chars) {
      ids.insert(c.id());
      for (u64 m = 0; m < q; ++m) {
        REQUIRE(c.at(m).is_zero() == (std::gcd(m, q) != 1));
        for (u64 n = 0; n < q; n += 3) REQUIRE(c.at(m * n % q) == c.at(m) * c.at(n));
      }
      CHECK(c.parity() == (c.at(q - 1).is_one() ? 0 : 1));
      // order: least m with chi^m principal
      DirichletCharacter power = c;
      u64 m = 1;
      while (!power.is_principal()) {
        power = power * c;
        ++m;
      }
      CHECK(m == c.order());
    }
    CHECK(ids.size() == chars.size());
  }
}

TEST_CASE("kronecker examples and agreement with a factoring oracle") {
  CHECK(kronecker(-4, 3) == -1);
  CHECK(kronecker(-7, 2) == 1);
  CHECK(oracle::euler_legendre(2, 7) == 1);
  for (i64 d = -60; d <= 60; ++d) CHECK(kronecker(d, 1) == 1);
  for (i64 d = -300; d <= 300; ++d)
    for (i64 n = -200; n <= 200; ++n) REQUIRE(kronecker(d, n) == oracle::kronecker_by_factoring(d, n));
}

TEST_CASE("fundamental discriminants") {
  CHECK(is_fundamental_discriminant(-3));
  CHECK(is_fundamental_discriminant(-4));
  CHECK(is_fundamental_discriminant(-7));
  CHECK(is_fundamental_discriminant(-8));
  CHECK_FALSE(is_fundamental_discriminant(-12));
  CHECK_FALSE(is_fundamental_discriminant(-16));
  CHECK(is_fundamental_discriminant(-20));
  CHECK(is_fundamental_discriminant(5));
  CHECK_FALSE(is_fundamental_discriminant(9));
  CHECK_FALSE(is_fundamental_discriminant(1));
}

TEST_CASE("kronecker(-q, .) is a primitive odd character mod q for fundamental -q <= 500") {
  for (u64 q = 3; q <= 500; ++q) {
    if (!is_fundamental_discriminant(-static_cast<i64>(q))) continue;
    auto chars = character_group(q);
    int matches = 0;
    for (const auto& c : chars) {
      if (!c.is_real()) continue;
      bool same = true;
      for (u64 n = 0; n < q && same; ++n) {
        auto s = c.at(n).as_sign();
        same = s && *s == kronecker(-static_cast<i64>(q), static_cast<i64>(n));
      }
      if (same) {
        ++matches;
        CHECK(c.is_primitive());
        CHECK(c.parity() == 1);
      }
    }
    CHECK_MESSAGE(matches == 1, "q = " << q);
  }
}

TEST_CASE("conductor examples and primitivization") {
  auto c12 = character_group(12);
  CHECK(c12[0].conductor() == 1);

  auto c6 = character_group(6);
  const auto& induced = real_nonprincipal(c6);
  CHECK(induced.conductor() == 3);
  auto prim = induced.primitive();
  CHECK(prim.modulus() == 3);
  CHECK(prim.is_primitive());
  for (u64 n = 1; n < 6; ++n)
    if (std::gcd(n, u64{6}) == 1) CHECK(prim.at(n) == induced.at(n));

  for (u64 p : {5u, 7u, 11u, 13u})
    for (const auto& c : character_group(p))
      if (!c.is_principal()) CHECK(c.conductor() == p);
}

TEST_CASE("conductor agrees with a divisor scan; primitivization is idempotent (q <= 200)") {
  for (u64 q = 3; q <= 200; ++q) {
    for (const auto& c : character_group(q)) {
      // least d | q with chi trivial on units n = 1 mod d
      u64 expected = q;
      for (u64 d = 1; d <= q; ++d) {
        if (q % d) continue;
        bool trivial = true;
        for (u64 n = 1; n < q && trivial; n += d)
          if (std::gcd(n, q) == 1 && !c.at(n).is_one()) trivial = false;
        if (trivial) {
          expected = d;
          break;
        }
      }
      REQUIRE(c.conductor() == expected);
      auto p = c.primitive();
      REQUIRE(p.modulus() == expected);
      REQUIRE(p.is_primitive());
      REQUIRE(p.primitive() == p);
      for (u64 n = 1; n < q; ++n)
        if (std::gcd(n, q) == 1) REQUIRE(p.at(n) == c.at(n));
    }
  }
}

TEST_CASE("full orthogonality, exact, q <= 200") {
  for (u64 q = 3; q <= 200; ++q) {
    auto chars = character_group(q);
    auto group = chars[0].group_ptr();
    std::vector<std::vector<CharacterValue>> table;
    for (const auto& c : chars) {
      table.emplace_back();
      for (u64 n = 0; n < q; ++n) table.back().push_back(c.at(n));
    }
    for (u64 a = 1; a < q; ++a) {
      if (!group->is_unit(a)) continue;
      for (u64 n = 1; n < q; ++n) {
        if (!group->is_unit(n)) continue;
        CyclotomicSum sum(group->exponent());
        for (const auto& row : table) sum.add(row[a].conj() * row[n]);
        auto v = sum.as_integer();
        REQUIRE(v.has_value());
        REQUIRE(*v == (a == n ? static_cast<i64>(chars.size()) : 0));
      }
    }
  }
}

TEST_CASE("subgroups and annihilators") {
  auto g7 = UnitGroupStructure::create(7);
  auto qr7 = SubgroupSpec::squares(g7);
  CHECK(qr7.elements() == std::vector<u64>{1, 2, 4});
  CHECK(qr7.index() == 2);
  auto ann7 = annihilator(qr7);
  CHECK(ann7.size() == 2);
  CHECK(ann7[0].is_principal());
  CHECK(ann7[1].is_real());

  auto full = SubgroupSpec::kth_powers(g7, 5);
  CHECK_FALSE(full.proper());
  CHECK(annihilator(full).size() == 1);

  auto g13 = UnitGroupStructure::create(13);
  auto cubes = SubgroupSpec::kth_powers(g13, 3);
  CHECK(cubes.elements() == std::vector<u64>{1, 5, 8, 12});
  auto ann13 = annihilator(cubes);
  CHECK(ann13.size() == 3);
  for (const auto& c : ann13) CHECK(3 % c.order() == 0);

  auto cubes7 = SubgroupSpec::kth_powers(g7, 3);
  CHECK(cubes7.elements() == std::vector<u64>{1, 6});
}

TEST_CASE("coset indicator examples") {
  auto g8 = UnitGroupStructure::create(8);
  auto t8 = SubgroupSpec::trivial(g8);
  CHECK(coset_indicator(t8, 3, 3) == 1);
  CHECK(coset_indicator(t8, 3, 5) == 0);
  auto g7 = UnitGroupStructure::create(7);
  auto qr7 = SubgroupSpec::squares(g7);
  CHECK(coset_indicator(qr7, 3, 5) == 1);
  try {
    coset_indicator(t8, 2, 5);
    FAIL("expected non-unit-coset");
  } catch (const Error& e) {
    CHECK(e.kind() == ErrorKind::NonUnitCoset);
  }
}

TEST_CASE("coset orthogonality over every cyclic subgroup, q <= 200") {
  for (u64 q = 3; q <= 200; ++q) {
    auto g = UnitGroupStructure::create(q);
    std::set<std::vector<u64>> seen;
    for (u64 gen = 1; gen < q; ++gen) {
      if (!g->is_unit(gen)) continue;
      auto h = SubgroupSpec::generated_by(g, {gen});
      if (!seen.insert(h.elements()).second) continue;
      REQUIRE(h.size() * h.index() == g->order());
      REQUIRE(h.contains(1));
      auto ann = annihilator(h);
      REQUIRE(ann.size() == h.index());
      if (q <= 100) {
        for (u64 a = 1; a < q; ++a) {
          if (!g->is_unit(a)) continue;
          for (u64 n = 1; n < q; ++n)
            REQUIRE(coset_indicator_by_characters(h, ann, a, n) == coset_indicator_by_mask(h, a, n));
        }
        continue;
      }
      // conj(chi(a)) chi(n) = chi(n a^-1): evaluate the exact average once per residue m = n a^-1
      std::vector<int> by_chars(q, 0);
      for (u64 m = 1; m < q; ++m) by_chars[m] = coset_indicator_by_characters(h, ann, 1, m);
      for (u64 a = 1; a < q; ++a) {
        if (!g->is_unit(a)) continue;
        u64 inv = invmod(a, q);
        for (u64 n = 1; n < q; ++n) REQUIRE(by_chars[n * inv % q] == coset_indicator_by_mask(h, a, n));
      }
    }
  }
}

TEST_CASE("subgroup closure and coset partition") {
  for (u64 q : {15u, 16u, 21u, 24u, 35u, 64u, 105u}) {
    auto g = UnitGroupStructure::create(q);
    for (u64 k = 2; k <= 4; ++k) {
      auto h = SubgroupSpec::kth_powers(g, k);
      auto el = h.elements();
      for (u64 x : el)
        for (u64 y : el) REQUIRE(h.contains(x * y % q));
      std::set<u64> covered;
      for (u64 r : h.coset_representatives())
        for (u64 n : h.coset(r)) REQUIRE(covered.insert(n).second);
      CHECK(covered.size() == g->order());
    }
  }
}
