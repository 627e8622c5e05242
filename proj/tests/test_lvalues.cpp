#include <doctest.h>

#include <cmath>
#include <numbers>

#include "grhcheck/error.hpp"
#include "grhcheck/lvalues.hpp"
#include "oracles.hpp"

using namespace grhcheck;

namespace {

constexpr double kPi = std::numbers::pi;

DirichletCharacter find_character(u64 q, std::vector<u32> exps) {
  for (auto& c : character_group(q))
    if (std::vector<u32>(c.exponents().begin(), c.exponents().end()) == exps) return c;
  throw std::logic_error("no such character");
}

DirichletCharacter real_primitive(u64 q) {
  for (auto& c : character_group(q))
    if (c.is_real() && c.is_primitive() && !c.is_principal()) return c;
  throw std::logic_error("no real primitive character");
}

// L(s, chi) = q^-s sum chi(a) zeta(s, a/q), for s away from 1
cplx l_function(const DirichletCharacter& chi, cplx s) {
  cplx sum = 0;
  double q = static_cast<double>(chi.modulus());
  for (u64 a = 1; a < chi.modulus(); ++a) sum += chi.value(static_cast<i64>(a)) * hurwitz_zeta(s, a / q);
  return std::pow(q, -s) * sum;
}

}  // namespace

TEST_CASE("L(1) examples") {
  auto chi7 = CharacterTable::kronecker_symbol(-7);
  auto l7 = L_at_1(chi7, LMethod::HurwitzEulerMaclaurin);
  CHECK(oracle::reduced_form_count(7) == 1);
  CHECK(std::abs(l7.value - cplx(kPi / std::sqrt(7.0))) < 1e-12);
  auto chi23 = CharacterTable::kronecker_symbol(-23);
  CHECK(oracle::reduced_form_count(23) == 3);
  CHECK(std::abs(L_at_1(chi23, LMethod::HurwitzEulerMaclaurin).value - cplx(3 * kPi / std::sqrt(23.0))) < 1e-12);

  auto chi5 = real_primitive(5);
  double golden = (1 + std::sqrt(5.0)) / 2;
  auto series = L_at_1(chi5, LMethod::DirichletSeries);
  CHECK(std::abs(series.value - cplx(2 / std::sqrt(5.0) * std::log(golden))) < 1e-8);
  CHECK(std::abs(L_at_1(chi5).value - series.value) < 1e-12);
  CHECK(L_at_1(chi5).character_id == chi5.id());
  CHECK(std::abs(L_at_1(chi5, LMethod::FiniteGauss).value - series.value) < 1e-12);

  try {
    L_at_1(character_group(5)[0]);
    FAIL("expected principal-character error");
  } catch (const Error& e) {
    CHECK(e.kind() == ErrorKind::PrincipalCharacter);
  }
}

TEST_CASE("L(1) and L'(1) match high-precision references") {
  struct Ref {
    u64 q;
    std::vector<u32> exps;
    cplx l, dl;
  };
  // L'(1, chi_-4) = (pi/4)(gamma + 2 log 2 + 3 log pi - 4 log Gamma(1/4))
  std::vector<Ref> refs = {
      {5, {2}, {0.43040894096400406, 0}, {0.3562406470307615, 0}},
      {4, {1}, {0.7853981633974483, 0}, {0.19290131679691244, 0}},
      {7, {1}, {0.8042057293867807, 0.39866669881887307}, {0.14361034321910282, -0.1736923025955411}},
  };
  for (const auto& r : refs) {
    auto chi = find_character(r.q, r.exps);
    auto s = l_series_at_one(chi);
    CHECK(std::abs(s.value - r.l) < 1e-12);
    CHECK(std::abs(s.derivative - r.dl) < 1e-12);
    CHECK(std::abs(s.log_derivative - r.dl / r.l) < 1e-12);
    CHECK(s.error_estimate < 1e-10);
  }
}

TEST_CASE("L'(1) agrees with a central difference of the Hurwitz L-function") {
  for (u64 q : {5u, 8u, 11u, 24u, 37u}) {
    for (const auto& chi : character_group(q)) {
      if (chi.is_principal()) continue;
      auto s = l_series_at_one(chi);
      double h = 1e-3;
      cplx plus = l_function(chi, 1 + h), minus = l_function(chi, 1 - h);
      cplx central = (plus - minus) / (2 * h);
      CHECK(std::abs(central - s.derivative) < 1e-5);
      CHECK(std::abs((plus + minus) / 2.0 - s.value) < 1e-5);
    }
  }
}

TEST_CASE("three L(1) methods agree for every non-principal character with q <= 60") {
  for (u64 q = 3; q <= 60; ++q) {
    for (const auto& chi : character_group(q)) {
      if (chi.is_principal()) continue;
      auto h = L_at_1(chi, LMethod::HurwitzEulerMaclaurin);
      auto d = L_at_1(chi, LMethod::DirichletSeries);
      REQUIRE(h.error_estimate <= 1e-10);
      REQUIRE(d.error_estimate <= 1e-10);
      REQUIRE(std::abs(h.value - d.value) <= 1e-10);
      if (chi.is_real() && chi.is_primitive()) {
        auto g = L_at_1(chi, LMethod::FiniteGauss);
        REQUIRE(std::abs(h.value - g.value) <= 1e-10);
      }
    }
  }
}

TEST_CASE("re_B identity, symmetry and positivity") {
  auto chi5 = real_primitive(5);
  double expected = 0.5 * std::log(5 / kPi) + 0.5 * digamma(0.5) + l_series_at_one(chi5).log_derivative.real();
  CHECK(std::abs(re_B(chi5) - expected) < 1e-14);
  CHECK(re_B(chi5) > 0);
  auto chi4 = find_character(4, {1});
  double expected4 = 0.5 * std::log(4 / kPi) + 0.5 * digamma(1.0) + l_series_at_one(chi4).log_derivative.real();
  CHECK(std::abs(re_B(chi4) - expected4) < 1e-14);
  CHECK(re_B(chi4) > 0);

  for (u64 q = 3; q <= 300; ++q) {
    for (const auto& chi : character_group(q)) {
      if (chi.is_principal() || !chi.is_primitive()) continue;
      double b = re_B(chi);
      REQUIRE_MESSAGE(b > 0, chi.id());
      REQUIRE(std::abs(b - re_B(chi.conj())) < 1e-10);
    }
  }
  CHECK_THROWS_AS(re_B(character_group(6)[1]), Error);
}

TEST_CASE("class number examples") {
  CHECK(class_number_bqf(7).h == 1);
  CHECK(class_number_bqf(23).h == 3);
  CHECK(class_number_bqf(8).h == 1);
  CHECK(class_number_via_formula(7).h == 1);
  CHECK(class_number_via_formula(163).h == 1);
  CHECK(class_number_via_formula(163).distance < 1e-9);
  try {
    class_number_bqf(12);
    FAIL("expected not-fundamental");
  } catch (const Error& e) {
    CHECK(e.kind() == ErrorKind::NotFundamental);
  }
  // nearest fundamental below 10^4
  u64 q = 10000;
  while (!is_fundamental_discriminant(-static_cast<i64>(q))) --q;
  CHECK(class_number_bqf(q).h == class_number_via_formula(q).h);
  CHECK(class_number_bqf(q).h == oracle::reduced_form_count(static_cast<long>(q)));
}

TEST_CASE("class numbers: reduced forms vs the class formula, all fundamental -q with 4 < q <= 10^4") {
  int count = 0;
  double worst = 0;
  for (u64 q = 5; q <= 10000; ++q) {
    if (!is_fundamental_discriminant(-static_cast<i64>(q))) continue;
    auto a = class_number_bqf(q);
    auto b = class_number_via_formula(q);
    REQUIRE(a.h == oracle::reduced_form_count(static_cast<long>(q)));
    REQUIRE_MESSAGE(a.h == b.h, "q = " << q);
    worst = std::max(worst, b.distance);
    ++count;
  }
  CHECK(count > 3000);
  CHECK(worst < 1e-8);
}
