#include <doctest.h>

#include <boost/multiprecision/cpp_bin_float.hpp>
#include <cmath>
#include <limits>
#include <random>
#include <vector>

#include "grhcheck/simd/reduce.hpp"

using namespace grhcheck;
using Wide = boost::multiprecision::cpp_bin_float_50;

namespace {

constexpr double kEps = std::numeric_limits<double>::epsilon();

struct Case {
  std::vector<double> a, b, c;
  double alpha;
};

Case random_case(std::mt19937_64& rng, std::size_t n, bool cancelling) {
  std::uniform_real_distribution<double> unit(-1.0, 1.0);
  std::uniform_int_distribution<int> expo(-20, 20);
  Case k;
  k.alpha = std::log(1.0 + n);
  for (std::size_t i = 0; i < n; ++i) {
    double x = std::ldexp(unit(rng), cancelling ? expo(rng) : 0);
    k.a.push_back(x);
    k.b.push_back(unit(rng));
    k.c.push_back(std::abs(unit(rng)) * k.alpha);
  }
  if (cancelling && n >= 2) {
    // append negated copies so the exact dot is tiny compared with its terms
    for (std::size_t i = 0; i < n; ++i) {
      k.a.push_back(-k.a[i] * (1 + kEps));
      k.b.push_back(k.b[i]);
      k.c.push_back(k.c[i]);
    }
  }
  return k;
}

// reference on the same rounded operands the kernels feed to the compensated sum
Wide exact_dot(const Case& k) {
  Wide s = 0;
  for (std::size_t i = 0; i < k.a.size(); ++i) s += Wide(k.a[i]) * Wide(k.b[i]);
  return s;
}

Wide exact_affine_dot(const Case& k) {
  Wide s = 0;
  for (std::size_t i = 0; i < k.a.size(); ++i) s += Wide(k.a[i] * k.b[i]) * Wide(k.alpha - k.c[i]);
  return s;
}

Wide exact_affine_sum(const Case& k) {
  Wide s = 0;
  for (std::size_t i = 0; i < k.a.size(); ++i) s += Wide(k.a[i]) * Wide(k.alpha - k.c[i]);
  return s;
}

double abs_mass(const Case& k) {
  double m = 0;
  for (std::size_t i = 0; i < k.a.size(); ++i) m += std::abs(k.a[i] * k.b[i]) * (k.alpha + std::abs(k.c[i]));
  return m;
}

// compensated dot bound: eps |s| + n^2 eps^2 sum |terms|
bool near(double got, const Wide& want, const Case& k) {
  double n = static_cast<double>(k.a.size());
  double w = static_cast<double>(want);
  double tol = kEps * std::abs(w) + (n * n + 4) * kEps * kEps * abs_mass(k) + 1e-300;
  return std::abs(got - w) <= tol;
}

}  // namespace

TEST_CASE("isa reporting") {
  auto isa = simd::active_isa();
  CHECK((isa == simd::Isa::Scalar || isa == simd::Isa::Avx2));
  if (isa == simd::Isa::Avx2) CHECK(simd::avx2_available());
  CHECK_FALSE(simd::isa_name(isa).empty());
}

TEST_CASE("scalar reference kernels are compensated") {
  std::mt19937_64 rng(3);
  for (std::size_t n : {0u, 1u, 3u, 4u, 7u, 64u, 1001u}) {
    for (bool cancel : {false, true}) {
      auto k = random_case(rng, n, cancel);
      CHECK(near(simd::scalar::dot(k.a, k.b), exact_dot(k), k));
      CHECK(near(simd::scalar::affine_dot(k.a, k.b, k.c, k.alpha), exact_affine_dot(k), k));
      CHECK(near(simd::scalar::affine_sum(k.a, k.c, k.alpha), exact_affine_sum(k), k));
    }
  }
}

#if defined(__x86_64__)
TEST_CASE("avx2 kernels are equivalent to the scalar reference") {
  if (!simd::avx2_available()) {
    MESSAGE("AVX2+FMA not available on this CPU; equivalence test skipped");
    return;
  }
  std::mt19937_64 rng(5);
  for (int trial = 0; trial < 200; ++trial) {
    std::size_t n = static_cast<std::size_t>(rng() % 3000);
    bool cancel = trial % 2 == 1;
    auto k = random_case(rng, n, cancel);
    double s_dot = simd::scalar::dot(k.a, k.b), v_dot = simd::avx2::dot(k.a, k.b);
    double s_ad = simd::scalar::affine_dot(k.a, k.b, k.c, k.alpha);
    double v_ad = simd::avx2::affine_dot(k.a, k.b, k.c, k.alpha);
    double s_as = simd::scalar::affine_sum(k.a, k.c, k.alpha);
    double v_as = simd::avx2::affine_sum(k.a, k.c, k.alpha);
    REQUIRE(near(v_dot, exact_dot(k), k));
    REQUIRE(near(v_ad, exact_affine_dot(k), k));
    REQUIRE(near(v_as, exact_affine_sum(k), k));
    double mass = abs_mass(k);
    double tol = 2 * kEps * std::abs(s_dot) + 1e-24 * mass;
    REQUIRE(std::abs(s_dot - v_dot) <= tol);
    REQUIRE(std::abs(s_ad - v_ad) <= 2 * kEps * std::abs(s_ad) + 1e-24 * mass);
    REQUIRE(std::abs(s_as - v_as) <= 2 * kEps * std::abs(s_as) + 1e-24 * mass);
  }
}
#endif

TEST_CASE("dispatched entry points match the active variant") {
  std::mt19937_64 rng(9);
  auto k = random_case(rng, 513, true);
  double want = simd::scalar::dot(k.a, k.b);
#if defined(__x86_64__)
  if (simd::active_isa() == simd::Isa::Avx2) want = simd::avx2::dot(k.a, k.b);
#endif
  CHECK(simd::dot(k.a, k.b) == want);
}
