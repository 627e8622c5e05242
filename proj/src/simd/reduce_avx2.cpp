// Compiled with -mavx2 -mfma; only reached after a CPUID check.

#include <immintrin.h>

#include <cmath>

#include "grhcheck/simd/reduce.hpp"

namespace grhcheck::simd::avx2 {

namespace {

struct Lanes {
  __m256d sum = _mm256_setzero_pd();
  __m256d carry = _mm256_setzero_pd();

  void add_product(__m256d x, __m256d y) noexcept {
    __m256d p = _mm256_mul_pd(x, y);
    __m256d ep = _mm256_fmsub_pd(x, y, p);
    __m256d t = _mm256_add_pd(sum, p);
    __m256d z = _mm256_sub_pd(t, sum);
    __m256d es = _mm256_add_pd(_mm256_sub_pd(sum, _mm256_sub_pd(t, z)), _mm256_sub_pd(p, z));
    sum = t;
    carry = _mm256_add_pd(carry, _mm256_add_pd(ep, es));
  }
};

struct Scalar {
  double sum = 0.0;
  double carry = 0.0;

  void add_product(double x, double y) noexcept {
    double p = x * y;
    double ep = std::fma(x, y, -p);
    add(p);
    carry += ep;
  }

  void add(double p) noexcept {
    double t = sum + p;
    double z = t - sum;
    carry += (sum - (t - z)) + (p - z);
    sum = t;
  }
};

double finish(const Lanes& lanes, Scalar tail) noexcept {
  alignas(32) double s[4];
  alignas(32) double c[4];
  _mm256_store_pd(s, lanes.sum);
  _mm256_store_pd(c, lanes.carry);
  for (int i = 0; i < 4; ++i) {
    tail.add(s[i]);
    tail.carry += c[i];
  }
  return tail.sum + tail.carry;
}

}  // namespace

double dot(std::span<const double> a, std::span<const double> b) noexcept {
  Lanes lanes;
  std::size_t n = a.size(), i = 0;
  for (; i + 4 <= n; i += 4) lanes.add_product(_mm256_loadu_pd(&a[i]), _mm256_loadu_pd(&b[i]));
  Scalar tail;
  for (; i < n; ++i) tail.add_product(a[i], b[i]);
  return finish(lanes, tail);
}

double affine_dot(std::span<const double> a, std::span<const double> b, std::span<const double> c, double alpha) noexcept {
  Lanes lanes;
  __m256d va = _mm256_set1_pd(alpha);
  std::size_t n = a.size(), i = 0;
  for (; i + 4 <= n; i += 4) {
    __m256d w = _mm256_mul_pd(_mm256_loadu_pd(&a[i]), _mm256_loadu_pd(&b[i]));
    lanes.add_product(w, _mm256_sub_pd(va, _mm256_loadu_pd(&c[i])));
  }
  Scalar tail;
  for (; i < n; ++i) tail.add_product(a[i] * b[i], alpha - c[i]);
  return finish(lanes, tail);
}

double affine_sum(std::span<const double> a, std::span<const double> c, double alpha) noexcept {
  Lanes lanes;
  __m256d va = _mm256_set1_pd(alpha);
  std::size_t n = a.size(), i = 0;
  for (; i + 4 <= n; i += 4) lanes.add_product(_mm256_loadu_pd(&a[i]), _mm256_sub_pd(va, _mm256_loadu_pd(&c[i])));
  Scalar tail;
  for (; i < n; ++i) tail.add_product(a[i], alpha - c[i]);
  return finish(lanes, tail);
}

}  // namespace grhcheck::simd::avx2
