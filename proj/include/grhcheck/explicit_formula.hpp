#pragma once

// Weighted prime sums and their closed-form main terms. Every identity of the form
// lhs = main + theta * envelope is evaluated with theta solved for, never assumed.

#include <optional>
#include <string>

#include "grhcheck/characters.hpp"
#include "grhcheck/special.hpp"

namespace grhcheck {

/// sum_{n <= x} Lambda(n) log(x/n), optionally twisted by chi(n).
double cheb_log_sum(double x);
cplx cheb_log_sum(double x, const DirichletCharacter& chi);

/// sum_{n <= x} Lambda(n)/n (1 - n/x), optionally twisted.
double weighted_psi_sum(double x);
cplx weighted_psi_sum(double x, const DirichletCharacter& chi);

/// sum_{n <= x} Lambda(n)/(n log n) log(x/n)/log x, optionally twisted.
double loglog_sum(double x);
cplx loglog_sum(double x, const DirichletCharacter& chi);

enum class ErrorFamily { E, ETilde };

/// E_a(x) (family E) or the companion E~_a(x) (family ETilde), a = parity in {0, 1}.
double error_term(double x, int parity, ErrorFamily family);

/// Identities with a solved residual.
enum class Identity {
  PrimeLogSum,        // "2.1": sum Lambda log(x/n)
  TwistedLogSum,      // "2.2": Re S(x, chi), real-part form
  WeightedPsiSum,     // "2.4": sum Lambda/n (1 - n/x)
  LogLValue,          // "2.5": log |L(1, chi)|
  LogLogSum,          // "2.6": sum Lambda/(n log n) log(x/n)/log x
};

std::string identity_id(Identity id);

struct ExplicitFormulaReport {
  std::string lemma;
  double x = 0;
  std::optional<std::string> character;
  double lhs = 0;
  double main_terms = 0;
  double envelope = 0;
  double theta = 0;
  bool verdict = false;  // |theta| <= 1
};

/// Untwisted identities: PrimeLogSum, WeightedPsiSum (x > 1) and LogLogSum (x >= e).
ExplicitFormulaReport lemma_residual(Identity id, double x);

/// Re S(x, chi) = |Re B| (2 theta sqrt(x) + 2 theta + log x) + log(q/pi) log x / 2 + E~_a(x).
ExplicitFormulaReport lemma2_residual(double x, const DirichletCharacter& chi, double re_b);

/// log|L(1, chi)| against the twisted log-log sum, with L(1, chi) and |Re B| from the Hurwitz route.
ExplicitFormulaReport lemma25_residual(double x, const DirichletCharacter& chi);

/// Admissible |Re B(chi)| as theta runs over [-1, 1]:
/// |Re B| (1 + 2 theta/sqrt(x) + 1/x) = log(q/pi)(1 - 1/x)/2 - Re sum Lambda chi/n (1 - n/x) + E_a(x).
struct ThetaWindow {
  double x = 0;
  double numerator = 0;
  double lower = 0;
  double upper = 0;

  bool contains(double v, double tol = 0.0) const noexcept { return v >= lower - tol && v <= upper + tol; }
};
/// Throws DegenerateWindow when the right side is not positive (no positive |Re B| fits).
ThetaWindow lemma3_window(double x, const DirichletCharacter& chi);

/// Prime powers sharing a factor with m:
/// s1 = sum Lambda(n) log(x/n) <= omega(m) (log x)^2 / 2,
/// s2 = sum Lambda(n)/n (1 - n/x) <= sum_{p | m} log p/(p - 1).
struct CoprimeDefectSums {
  u64 m = 0;
  double x = 0;
  double s1 = 0, bound1 = 0;
  double s2 = 0, bound2 = 0;
  bool holds1 = false, holds2 = false;
};
CoprimeDefectSums lemma5_sums(double x, u64 m);

/// Re sum Lambda chi (1/(n log n) - 1/(x log x)) >= sum_{p^k <= x} Lambda(p^k) (-1)^k (...), x >= 100.
struct AlternatingComparison {
  double x = 0;
  double lhs = 0;
  double rhs = 0;
  bool holds = false;
};
AlternatingComparison lemma51_check(double x, const DirichletCharacter& chi);

/// Lower bound for the p = 2 contribution difference at chi(2) = -e(phi):
/// log 2 [sum_{k <= 5} (-1)^{k-1} (1 - cos k phi) w_k + (1 - cos phi) sum_{6 <= k <= K} k^2 min(0, (-1)^{k-1} w_k)],
/// w_k = 1/(2^k k log 2) - 1/(x log x), K = floor(log x / log 2).
double trig_poly_p2(double x, double phi);

struct TrigPolyCheck {
  double x = 0;
  std::size_t grid = 0;
  double min_value = 0;
  double argmin = 0;
  bool holds = false;
  std::string construction;
};
/// Evaluates trig_poly_p2 on `grid` equally spaced phi in [0, 2 pi]; holds when every value is >= -1e-15.
TrigPolyCheck trig_poly_check(double x, std::size_t grid);

/// |S(x, chi) - S(x, chi~)| against omega(q/q~) (log x)^2 / 2.
struct ImprimitiveGap {
  double x = 0;
  double gap = 0;
  double bound = 0;
  bool holds = false;
};
ImprimitiveGap imprimitive_gap(double x, const DirichletCharacter& chi);

}  // namespace grhcheck
