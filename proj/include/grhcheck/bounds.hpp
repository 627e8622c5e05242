#pragma once

// Explicit bound formulas paired with measured values (least primes, L-values, class
// numbers) as BoundReports.

#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "grhcheck/characters.hpp"
#include "grhcheck/formulas.hpp"
#include "grhcheck/parallel.hpp"
#include "grhcheck/search.hpp"

namespace grhcheck {

enum class Verdict { Pass, Fail, NotApplicable, NotFound };
std::string_view to_string(Verdict v) noexcept;

struct BoundReport {
  std::string formula_id;
  u64 q = 0;
  std::string target;
  std::optional<double> measured;
  double bound = 0.0;
  double margin = 0.0;  // bound - measured; bound - ceiling when nothing was found
  bool applicable = false;
  std::string conditions;
  Verdict verdict = Verdict::NotApplicable;
};

/// Least quadratic non-residue of a prime q >= 5 against (log q)^2, strict.
BoundReport cor12_report(u64 q);
/// Least prime outside H (not dividing q) against (log q + B(q))^2; applicable for q >= 3000.
BoundReport thm11_report(const SubgroupSpec& h, u64 ceiling = 0);
/// Same search against (log q)^2; applicable when q >= 3000 has no prime factor below (log q)^2.
BoundReport thm12_check(const SubgroupSpec& h, u64 ceiling = 0);
/// Least prime in aH: passes when <= 10^9 or <= the index-h formula; applicable for q >= 20000, h > 1.
BoundReport thm14_report(const SubgroupSpec& h, u64 a, u64 ceiling = 0);
double thm14_bound(double q, double h);
/// P(a, q) against (phi(q) log q)^2; applicable for q > 3.
BoundReport cor15_report(u64 q, u64 a, u64 ceiling = 0);
/// max_a P(a, q) against the same bound (target "ap:max").
BoundReport cor15_max_report(u64 q, u64 ceiling = 0);
double cor15_bound(u64 q);

Thm15Bounds thm15_bounds(double q);
/// |L(1, chi)| and 1/|L(1, chi)| for primitive chi; applicable for q >= 10^10.
std::vector<BoundReport> thm15_reports(const DirichletCharacter& chi);
/// |zeta(1 + it)| and its reciprocal; applicable for t >= 10^10.
std::vector<BoundReport> zeta_line_reports(double t);

struct ClassNumberBounds {
  double lower = 0.0;
  double upper = 0.0;
  double lower_floor = 0.0;  // floor(lower)
};
/// Throws NotFundamental unless -q is a fundamental discriminant.
ClassNumberBounds cor16_bounds(u64 q);
/// The formulas alone, for any real q > e.
ClassNumberBounds cor16_bounds_real(double q);
/// Lower and upper reports; the class number is measured by reduced forms for q <= 10^7.
std::vector<BoundReport> cor16_reports(u64 q);

struct ElementaryFacts {
  u64 q = 0;
  u64 phi = 0;
  unsigned omega = 0;
  bool applicable = false;  // q > 20000
  bool phi_at_least_4156 = false;
  bool two_omega_le_q37 = false;  // 2^omega <= q^{3/7}
  bool phi_ge_q56 = false;        // phi >= q^{5/6}
  bool all() const noexcept { return phi_at_least_4156 && two_omega_le_q37 && phi_ge_q56; }
};
ElementaryFacts section43_elementary(u64 q);

/// Subgroup selector for range verification.
struct VerifyParams {
  u64 qmin = 0;
  u64 qmax = 0;
  u64 power = 2;  // H = k-th powers
  u64 coset = 0;  // representative a for thm14 (0: every coset other than H)
  u64 ceiling = 0;
  unsigned workers = 1;
  ProgressFn progress;
};

/// Known ids: cor12, thm11, thm12, thm14, cor15, cor15-all, cor16.
bool known_formula(std::string_view id);
/// One report per (q, target) in ascending q then target order.
std::vector<BoundReport> verify(std::string_view formula_id, const VerifyParams& params);

}  // namespace grhcheck
