#include <doctest.h>

#include <cmath>
#include <numbers>

#include "grhcheck/error.hpp"
#include "grhcheck/special.hpp"

using namespace grhcheck;

namespace {

constexpr double kPi = std::numbers::pi;
constexpr double kGamma = std::numbers::egamma;

// reference values computed with 30-digit arithmetic
struct GammaRef {
  double re, im, gre, gim;
};
constexpr GammaRef kGammaRefs[] = {
    {0.5, 0.0, 1.772453850905516, 0.0},
    {-1.5, 0.3, 1.5979272780754663, 0.343934638111282},
    {1.7, -12.0, 2.252108429748467e-07, -2.3087576528427863e-07},
    {0.2, 45.0, 1.5802872835050775e-31, 2.628034275406483e-32},
    {-1.9, 60.0, 1.4781655726087265e-45, -5.714650492478315e-46},
    {2.0, 0.001, 0.9999995881597438, 0.0004227842535215476},
};

struct HurwitzRef {
  double sre, sim, a, zre, zim, dre, dim;
};
constexpr HurwitzRef kHurwitzRefs[] = {
    {2.0, 0.0, 0.3333333333333333, 10.095597125427094, 0.0, 8.851535587472972, 0.0},
    {1.5, 0.0, 0.7, 3.4987277412050926, 0.0, -3.38906644372556, 0.0},
    {0.5, 14.134725, 1.0, 1.767429841384904e-08, -1.1102028930923116e-07, 0.7832964792987118, 0.12469991683135224},
    {1.0, 10.0, 0.25, 0.6105363181553188, 2.9028200235868256, 1.5660735257203964, 5.706017736969992},
    {3.0, -40.0, 0.9, -0.5260794408017093, 1.2395396171593958, -0.15430880004873765, 0.11688113369540908},
};

// a, -digamma(a), -gamma_1(a)
struct LaurentRef {
  double a, c0, c1;
};
constexpr LaurentRef kLaurentRefs[] = {
    {1.0, 0.5772156649015329, 0.07281584548367673},
    {0.5, 1.9635100260214235, 1.3534596808049415},
    {0.14285714285714285, 7.363980242224343, 13.62107052365825},
    {0.001, 1000.5755719318103, 6907.8273890448545},
    {0.8571428571428571, 0.8403958777306729, 0.21325927633191613},
};

}  // namespace

TEST_CASE("special constants") {
  const auto& c = special_constants();
  CHECK(std::abs(c.hadamard_b - (-0.0230957089661210338)) < 1e-12);
  CHECK(c.psi0_half == doctest::Approx(-2 * std::log(2.0) - kGamma).epsilon(1e-15));
  CHECK(std::abs(digamma(0.5) - c.psi0_half) < 1e-13);
  CHECK(std::abs(trigamma(0.5) - c.psi1_half) < 1e-12);
  CHECK(std::abs(digamma(1.0) - c.psi0_one) < 1e-13);
  CHECK(std::abs(trigamma(1.0) - c.psi1_one) < 1e-12);
  CHECK(c.zeta_two == doctest::Approx(kPi * kPi / 6).epsilon(1e-15));
}

TEST_CASE("complex gamma examples") {
  CHECK(std::abs(complex_gamma(0.5) - std::sqrt(kPi)) < 1e-14);
  CHECK(std::abs(complex_gamma(1.0) - 1.0) < 1e-14);
  double t = 1e-4;
  CHECK(std::abs(complex_gamma(cplx(0, t)).real() + kGamma) < 1e-3);
  for (int n = 0; n >= -4; --n) {
    try {
      complex_gamma(static_cast<double>(n));
      FAIL("expected pole");
    } catch (const Error& e) {
      CHECK(e.kind() == ErrorKind::Pole);
    }
  }
}

TEST_CASE("complex gamma matches high-precision references to 1e-12 relative") {
  for (const auto& r : kGammaRefs) {
    cplx got = complex_gamma(cplx(r.re, r.im));
    cplx want(r.gre, r.gim);
    CHECK_MESSAGE(std::abs(got - want) <= 1e-12 * std::abs(want), "z = " << r.re << "+" << r.im << "i");
  }
}

TEST_CASE("gamma reflection on the strip") {
  for (double x = -1.95; x <= 2.0; x += 0.15) {
    for (double y = -60; y <= 60; y += 7.5) {
      if (std::abs(y) < 1e-9 && std::abs(x - std::round(x)) < 1e-9) continue;
      cplx z(x, y);
      cplx lhs = complex_gamma(z) * complex_gamma(1.0 - z);
      cplx rhs = kPi / std::sin(kPi * z);
      REQUIRE(std::abs(lhs - rhs) <= 1e-10 * std::abs(rhs));
    }
  }
}

TEST_CASE("digamma and trigamma examples") {
  CHECK(std::abs(digamma(1.0) + kGamma) < 1e-14);
  CHECK(std::abs(trigamma(1.0) - kPi * kPi / 6) < 1e-13);
  CHECK(std::abs(digamma(2.0) - (1 - kGamma)) < 1e-14);
  CHECK_THROWS_AS(digamma(0.0), Error);
}

TEST_CASE("digamma/trigamma agree with difference quotients of log gamma") {
  auto lg = [](double x) { return std::log(std::abs(complex_gamma(x))); };
  for (double x = 0.3; x < 12; x += 0.37) {
    double h = 1e-4;
    double d1 = (lg(x + h) - lg(x - h)) / (2 * h);
    auto second = [&](double k) { return (lg(x + k) - 2 * lg(x) + lg(x - k)) / (k * k); };
    double d2 = (4 * second(1e-3) - second(2e-3)) / 3;
    CHECK(std::abs(digamma(x) - d1) < 1e-6);
    CHECK(std::abs(trigamma(x) - d2) < 1e-6 * std::max(1.0, trigamma(x)));
  }
}

TEST_CASE("hurwitz zeta examples") {
  CHECK(std::abs(hurwitz_zeta(2.0, 1.0) - kPi * kPi / 6) < 1e-12);
  CHECK(std::abs(hurwitz_zeta(2.0, 0.5) - kPi * kPi / 2) < 1e-12);
  try {
    hurwitz_zeta(1.0, 0.5);
    FAIL("expected pole");
  } catch (const Error& e) {
    CHECK(e.kind() == ErrorKind::Pole);
  }
}

TEST_CASE("hurwitz zeta and its derivative match references") {
  for (const auto& r : kHurwitzRefs) {
    cplx s(r.sre, r.sim);
    CHECK(std::abs(hurwitz_zeta(s, r.a, 0) - cplx(r.zre, r.zim)) < 1e-12);
    CHECK(std::abs(hurwitz_zeta(s, r.a, 1) - cplx(r.dre, r.dim)) < 1e-12);
  }
}

TEST_CASE("hurwitz identities") {
  for (double s : {1.5, 2.0, 3.0}) {
    cplx z = riemann_zeta(s);
    CHECK(std::abs(hurwitz_zeta(s, 0.5) - (std::pow(2.0, s) - 1) * z) < 1e-10);
    for (int q = 1; q <= 50; ++q) {
      cplx sum = 0;
      for (int a = 1; a <= q; ++a) sum += hurwitz_zeta(s, static_cast<double>(a) / q);
      REQUIRE(std::abs(sum - std::pow(static_cast<double>(q), s) * z) < 1e-10 * std::max(1.0, std::pow(q, s)));
    }
  }
}

TEST_CASE("laurent coefficients at s = 1") {
  for (const auto& r : kLaurentRefs) {
    auto l = hurwitz_laurent_at_one(r.a);
    CHECK(std::abs(l.constant - r.c0) < 1e-12 * std::max(1.0, r.c0));
    CHECK(std::abs(l.slope - r.c1) < 1e-12 * std::max(1.0, r.c1));
    CHECK(std::abs(l.constant + digamma(r.a)) < 1e-12 * std::max(1.0, r.c0));
  }
  // the regular part approaches the Laurent expansion near the pole
  const double s = 1 + 1e-5;
  const double eps = s - 1;
  for (double a : {0.2, 0.5, 1.0}) {
    auto l = hurwitz_laurent_at_one(a);
    double approx = 1 / eps + l.constant + l.slope * eps;
    CHECK(std::abs(hurwitz_zeta(s, a).real() - approx) < 1e-8);
  }
}

TEST_CASE("zeta on the 1-line") {
  try {
    zeta_1_plus_it(0.0);
    FAIL("expected pole");
  } catch (const Error& e) {
    CHECK(e.kind() == ErrorKind::Pole);
  }
  for (double t : {1.0, 10.0, 100.0}) {
    cplx z = zeta_1_plus_it(t);
    CHECK(std::isfinite(std::abs(z)));
    CHECK(std::abs(z) > 0);
    CHECK(std::abs(zeta_1_plus_it(-t) - std::conj(z)) < 1e-12);
  }
  // zeta(1 + 10i), 30-digit reference
  CHECK(std::abs(zeta_1_plus_it(10.0) - cplx(1.3902873132374014, -0.10978515306630206)) < 1e-10);
}
