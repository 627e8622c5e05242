#pragma once

// Closed-form bound expressions. Natural logarithms throughout.

#include "grhcheck/arith.hpp"

namespace grhcheck {

struct Thm11Quantities {
  double a;      // A(q)
  double b;      // B(q)
  double bound;  // (log q + B(q))^2
};

/// A(q) = max(0, 2 log log q - 8/5 - sum_{p | q} log p/(p - 1)),
/// B(q) = max(0, 2 log log q + 3 + 2 omega(q) (log log q)^2/log q - 2 A(q)). Requires q >= 3.
Thm11Quantities thm11_quantities(u64 q);
Thm11Quantities thm11_quantities(const Factorization& f);

/// (log q)^2
double log_squared_bound(double q);

/// ((h - 1) log q + 3 (h + 1) + (5/2)(log log q)^2)^2
double thm14_formula(double q, double h);
inline constexpr double kThm14SmallPrime = 1e9;

/// (phi(q) log q)^2
double cor15_formula(u64 q);

struct Thm15Bounds {
  double upper_l;          // bound for |L(1, chi)|
  double upper_inverse_l;  // bound for 1/|L(1, chi)|
};
/// Requires q > e so that log log q > 0.
Thm15Bounds thm15_formulas(double q);

struct Cor16Bounds {
  double lower;
  double upper;
};
Cor16Bounds cor16_formulas(double q);

}  // namespace grhcheck
