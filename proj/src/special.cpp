#include "grhcheck/special.hpp"

#include <array>
#include <cmath>
#include <numbers>

#include "grhcheck/error.hpp"

namespace grhcheck {

namespace {

constexpr double kPi = std::numbers::pi;

// B_2, B_4, ..., B_26
constexpr std::array<double, 13> kBernoulli = {
    1.0 / 6.0,          -1.0 / 30.0,        1.0 / 42.0,         -1.0 / 30.0,   5.0 / 66.0,
    -691.0 / 2730.0,    7.0 / 6.0,          -3617.0 / 510.0,    43867.0 / 798.0,
    -174611.0 / 330.0,  854513.0 / 138.0,   -236364091.0 / 2730.0, 8553103.0 / 6.0};

constexpr int kEulerMaclaurinTerms = 12;
constexpr int kEulerMaclaurinShift = 30;

constexpr double kLanczosG = 7.0;
constexpr std::array<double, 9> kLanczos = {
    0.99999999999980993,  676.5203681218851,     -1259.1392167224028,
    771.32342877765313,   -176.61502916214059,   12.507343278686905,
    -0.13857109526572012, 9.9843695780195716e-6, 1.5056327351493116e-7};

// B_{2j} / (2j)!
double bernoulli_over_factorial(int j) {
  double f = 1.0;
  for (int i = 2; i <= 2 * j; ++i) f *= i;
  return kBernoulli[j - 1] / f;
}

}  // namespace

const SpecialConstants& special_constants() noexcept {
  static const SpecialConstants c = [] {
    SpecialConstants k{};
    k.euler_gamma = std::numbers::egamma;
    k.hadamard_b = 0.5 * std::log(4.0 * kPi) - 1.0 - 0.5 * k.euler_gamma;
    k.psi0_one = -k.euler_gamma;
    k.psi1_one = kPi * kPi / 6.0;
    k.psi0_half = -2.0 * std::numbers::ln2 - k.euler_gamma;
    k.psi1_half = kPi * kPi / 2.0;
    k.zeta_two = kPi * kPi / 6.0;
    return k;
  }();
  return c;
}

cplx complex_gamma(cplx z) {
  if (z.imag() == 0.0 && z.real() <= 0.0 && z.real() == std::floor(z.real())) {
    throw Error(ErrorKind::Pole, "Gamma has a pole at non-positive integers");
  }
  if (z.real() < 0.5) return kPi / (std::sin(kPi * z) * complex_gamma(1.0 - z));
  z -= 1.0;
  cplx x = kLanczos[0];
  for (std::size_t i = 1; i < kLanczos.size(); ++i) x += kLanczos[i] / (z + static_cast<double>(i));
  cplx t = z + kLanczosG + 0.5;
  return std::sqrt(2.0 * kPi) * std::exp((z + 0.5) * std::log(t) - t) * x;
}

double digamma(double x) {
  if (!(x > 0.0)) throw Error(ErrorKind::Domain, "digamma requires x > 0");
  double shift = 0.0;
  while (x < 10.0) {
    shift -= 1.0 / x;
    x += 1.0;
  }
  double inv2 = 1.0 / (x * x);
  double series = 0.0, pow = inv2;
  for (int k = 1; k <= 8; ++k) {
    series += kBernoulli[k - 1] / (2.0 * k) * pow;
    pow *= inv2;
  }
  return shift + std::log(x) - 0.5 / x - series;
}

double trigamma(double x) {
  if (!(x > 0.0)) throw Error(ErrorKind::Domain, "trigamma requires x > 0");
  double shift = 0.0;
  while (x < 10.0) {
    shift += 1.0 / (x * x);
    x += 1.0;
  }
  double inv = 1.0 / x, inv2 = inv * inv;
  double series = 0.0, pow = inv * inv2;
  for (int k = 1; k <= 8; ++k) {
    series += kBernoulli[k - 1] * pow;
    pow *= inv2;
  }
  return shift + inv + 0.5 * inv2 + series;
}

double polygamma(int order, double x) {
  if (order == 0) return digamma(x);
  if (order == 1) return trigamma(x);
  throw Error(ErrorKind::InvalidArgument, "polygamma order must be 0 or 1");
}

cplx hurwitz_zeta(cplx s, double a, int derivative_order) {
  if (derivative_order != 0 && derivative_order != 1) {
    throw Error(ErrorKind::InvalidArgument, "hurwitz_zeta derivative order must be 0 or 1");
  }
  if (!(a > 0.0 && a <= 1.0)) throw Error(ErrorKind::Domain, "hurwitz_zeta requires 0 < a <= 1");
  if (!(s.real() > 0.0)) throw Error(ErrorKind::Domain, "hurwitz_zeta requires Re s > 0");
  if (s == cplx(1.0, 0.0)) throw Error(ErrorKind::Pole, "hurwitz_zeta has a pole at s = 1");

  const int shift = kEulerMaclaurinShift + static_cast<int>(std::ceil(std::abs(s.imag())));
  const bool deriv = derivative_order == 1;
  cplx value = 0.0;
  for (int k = 0; k < shift; ++k) {
    double base = k + a;
    double lb = std::log(base);
    cplx term = std::exp(-s * lb);
    value += deriv ? -lb * term : term;
  }
  const double big = shift + a;
  const double lbig = std::log(big);
  const cplx big_pow = std::exp(-s * lbig);  // big^{-s}
  const cplx sm1 = s - 1.0;
  if (deriv) {
    cplx pole = big * big_pow / sm1;
    value += -lbig * pole - pole / sm1;
    value += -0.5 * lbig * big_pow;
  } else {
    value += big * big_pow / sm1 + 0.5 * big_pow;
  }
  // sum_j B_{2j}/(2j)! (s)_{2j-1} big^{-s-2j+1}
  cplx rising = s;          // (s)_{1}
  cplx rising_prime = 1.0;  // d/ds (s)_{1}
  cplx power = big_pow / big;
  const double inv_big2 = 1.0 / (big * big);
  for (int j = 1; j <= kEulerMaclaurinTerms; ++j) {
    double c = bernoulli_over_factorial(j);
    if (deriv) {
      value += c * (rising_prime - lbig * rising) * power;
    } else {
      value += c * rising * power;
    }
    for (int i = 0; i < 2; ++i) {
      cplx factor = s + static_cast<double>(2 * j - 1 + i);
      rising_prime = rising_prime * factor + rising;
      rising *= factor;
    }
    power *= inv_big2;
  }
  return value;
}

LaurentAtOne hurwitz_laurent_at_one(double a) {
  if (!(a > 0.0 && a <= 1.0)) throw Error(ErrorKind::Domain, "hurwitz_laurent_at_one requires 0 < a <= 1");
  const int shift = kEulerMaclaurinShift;
  double constant = 0.0, slope = 0.0;
  for (int k = 0; k < shift; ++k) {
    double base = k + a;
    double lb = std::log(base);
    constant += 1.0 / base;
    slope -= lb / base;
  }
  const double big = shift + a;
  const double lbig = std::log(big);
  // big^{1-s}/(s-1) - 1/(s-1) = -L + (s-1) L^2 / 2 + ...
  constant -= lbig;
  slope += 0.5 * lbig * lbig;
  constant += 0.5 / big;
  slope -= 0.5 * lbig / big;
  // at s = 1: (s)_{2j-1} = (2j-1)!, d/ds (s)_{2j-1} = (2j-1)! H_{2j-1}
  double harmonic = 1.0;
  double factorial = 1.0;
  double power = 1.0 / (big * big);
  for (int j = 1; j <= kEulerMaclaurinTerms; ++j) {
    double c = bernoulli_over_factorial(j);
    constant += c * factorial * power;
    slope += c * factorial * (harmonic - lbig) * power;
    for (int i = 0; i < 2; ++i) {
      double m = 2 * j + i;  // next factor of the rising factorial at s = 1
      factorial *= m;
      harmonic += 1.0 / m;
    }
    power /= big * big;
  }
  return {constant, slope};
}

cplx riemann_zeta(cplx s) { return hurwitz_zeta(s, 1.0, 0); }

cplx zeta_1_plus_it(double t) {
  if (t == 0.0) throw Error(ErrorKind::Pole, "zeta has a pole at s = 1");
  return riemann_zeta(cplx(1.0, t));
}

}  // namespace grhcheck
