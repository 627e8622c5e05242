#pragma once

// Even kernels K(s) on the strip, their Mellin transforms, and the constants that feed
// the subgroup bound X <= (c + o(1)) (log q)^2.

#include <functional>
#include <string>
#include <utility>
#include <vector>

#include "grhcheck/special.hpp"

namespace grhcheck {

enum class KernelKind { Fejer, Gamma, Custom };

/// A kernel is a bundle of evaluators; custom kernels supply the same pieces.
struct Kernel {
  KernelKind kind = KernelKind::Custom;
  std::string descriptor;
  double alpha = 0.0;  // Fejer only
  double delta = 0.0;  // strip half-width beyond 1/2
  /// K(it), real for even kernels
  std::function<double(double)> on_line;
  double at_half = 0.0;
  /// closed-form Mellin transform K~(u), u > 0
  std::function<double(double)> mellin;
  /// points in u where K~ has a kink (used to split quadrature)
  std::vector<double> mellin_kinks;
  /// |K(it)| <= decay_constant / (1 + t^2)
  double decay_constant = 0.0;
  /// truncation point for line integrals
  double line_cutoff = 0.0;
  /// int_T^inf |K(it)| dt (exact or an upper bound)
  std::function<double(double)> abs_tail;
  /// int_T^inf K(it) cos(omega t) dt, or 0 with |.| <= abs_tail(T) when not known
  std::function<double(double, double)> cos_tail;
  /// longest subinterval used when integrating along the line
  double line_step = 1.0;

  double line(double t) const { return on_line(t); }
  double mellin_at(double u) const;
};

/// K(s) = ((e^{alpha s} - e^{-alpha s})/s)^2, K~(u) = max(0, 2 alpha - |log u|).
Kernel fejer_kernel(double alpha);
/// K(s) = -(Gamma(s) + Gamma(-s)), K~(u) = 1 - e^{-1/u} - e^{-u}.
Kernel gamma_kernel();

/// Sine integral.
double sine_integral(double x);

struct QuadratureResult {
  double value = 0.0;
  double error = 0.0;
};

/// (1/2 pi) int |K(it)| dt, split at sign changes of K(it); abs error <= 1e-9 or throws.
QuadratureResult line_l1(const Kernel& k);
/// W(lambda) = int_0^lambda K~(u) du/sqrt(u); lambda may be +infinity.
QuadratureResult weighted_integral(const Kernel& k, double lambda);
/// (1/2 pi) int K(it) u^{it} dt evaluated numerically.
QuadratureResult mellin_numeric(const Kernel& k, double u);

struct MellinCheck {
  double u = 0.0;
  double numeric = 0.0;
  double closed_form = 0.0;
  double difference = 0.0;
  bool holds = false;  // |difference| <= 1e-6
};
MellinCheck mellin_numeric_check(const Kernel& k, double u);

/// h may be +infinity.
struct BoundConstant {
  double h = 0.0;
  double lambda = 0.0;
  std::string kernel;
  double c = 0.0;
  double denominator = 0.0;  // h W(lambda) - K(1/2)/2, or W(lambda) when h is infinite
  double l1 = 0.0;
  double weighted = 0.0;
};

/// c = lambda ((h - 1) L1 / (h W - K(1/2)/2))^2; throws NonpositiveDenominator.
BoundConstant prop62_constant(const Kernel& k, double lambda, double h);
/// Same with L1 already known.
BoundConstant prop62_constant(const Kernel& k, double lambda, double h, double l1);

struct LambdaRange {
  double lo = 1.0;
  double hi = 20.0;
};
/// Grid bracket (200 points) then Brent refinement; throws NoFeasibleLambda.
BoundConstant optimize_lambda(const Kernel& k, double h, LambdaRange range = {});

/// ((h - 1)/(2h - 1))^2, 1/4 at h = infinity.
double limit_constant(double h);
/// (1/4)(1 - 1/h)^2 (log 2h/(log 2h - 2))^2 for h >= 4.
double largeh_constant(double h);
/// 0.42 (h = 2), 0.49 (h = 3), 0.51 otherwise.
double alpha_table(double h);

}  // namespace grhcheck
