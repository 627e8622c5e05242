#pragma once

#include <complex>

namespace grhcheck {

using cplx = std::complex<double>;

struct SpecialConstants {
  double euler_gamma;
  /// Hadamard constant of the completed zeta function: log(4 pi)/2 - 1 - gamma/2.
  double hadamard_b;
  double psi0_one;
  double psi1_one;
  double psi0_half;
  double psi1_half;
  double zeta_two;
};

const SpecialConstants& special_constants() noexcept;

/// Gamma(z) via the g = 7, n = 9 Lanczos series with reflection for Re z < 1/2.
/// Throws ErrorKind::Pole at non-positive integers.
cplx complex_gamma(cplx z);

double digamma(double x);
double trigamma(double x);
/// order 0: digamma, order 1: trigamma.
double polygamma(int order, double x);

/// Hurwitz zeta(s, a) (derivative_order 0) or its s-derivative (1), by Euler-Maclaurin
/// with shift N >= 30 and 12 Bernoulli corrections. Requires Re s > 0, s != 1, 0 < a <= 1.
cplx hurwitz_zeta(cplx s, double a, int derivative_order = 0);

/// zeta(s, a) = 1/(s-1) + constant + slope (s-1) + O((s-1)^2); constant = -digamma(a).
struct LaurentAtOne {
  double constant;
  double slope;
};
LaurentAtOne hurwitz_laurent_at_one(double a);

cplx riemann_zeta(cplx s);
cplx zeta_1_plus_it(double t);

}  // namespace grhcheck
