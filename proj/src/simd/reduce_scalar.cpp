#include <cmath>

#include "grhcheck/simd/reduce.hpp"

namespace grhcheck::simd::scalar {

namespace {

struct Accumulator {
  double sum = 0.0;
  double carry = 0.0;

  void add_product(double x, double y) noexcept {
    double p = x * y;
    double ep = std::fma(x, y, -p);
    double t = sum + p;
    double z = t - sum;
    double es = (sum - (t - z)) + (p - z);
    sum = t;
    carry += ep + es;
  }

  double value() const noexcept { return sum + carry; }
};

}  // namespace

double dot(std::span<const double> a, std::span<const double> b) noexcept {
  Accumulator acc;
  for (std::size_t i = 0; i < a.size(); ++i) acc.add_product(a[i], b[i]);
  return acc.value();
}

double affine_dot(std::span<const double> a, std::span<const double> b, std::span<const double> c, double alpha) noexcept {
  Accumulator acc;
  for (std::size_t i = 0; i < a.size(); ++i) acc.add_product(a[i] * b[i], alpha - c[i]);
  return acc.value();
}

double affine_sum(std::span<const double> a, std::span<const double> c, double alpha) noexcept {
  Accumulator acc;
  for (std::size_t i = 0; i < a.size(); ++i) acc.add_product(a[i], alpha - c[i]);
  return acc.value();
}

}  // namespace grhcheck::simd::scalar
