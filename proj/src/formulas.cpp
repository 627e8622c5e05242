#include "grhcheck/formulas.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>

#include "grhcheck/error.hpp"

namespace grhcheck {

namespace {

constexpr double kPi = std::numbers::pi;

double loglog(double q) {
  if (!(q > std::numbers::e)) throw Error(ErrorKind::Domain, "log log q needs q > e");
  return std::log(std::log(q));
}

// log log q - log 2 + 1/2 + 1/log log q
double thm15_core(double q) {
  double ll = loglog(q);
  return ll - std::numbers::ln2 + 0.5 + 1.0 / ll;
}

}  // namespace

Thm11Quantities thm11_quantities(const Factorization& f) {
  if (f.n < 3) throw Error(ErrorKind::Domain, "subgroup bound quantities need q >= 3");
  const double lq = std::log(static_cast<double>(f.n));
  const double ll = std::log(lq);
  double prime_sum = 0.0;
  for (auto [p, e] : f.factors) prime_sum += std::log(static_cast<double>(p)) / static_cast<double>(p - 1);
  Thm11Quantities r;
  r.a = std::max(0.0, 2 * ll - 1.6 - prime_sum);
  r.b = std::max(0.0, 2 * ll + 3 + 2 * f.omega() * ll * ll / lq - 2 * r.a);
  r.bound = (lq + r.b) * (lq + r.b);
  return r;
}

Thm11Quantities thm11_quantities(u64 q) { return thm11_quantities(factorize(q)); }

double log_squared_bound(double q) {
  double l = std::log(q);
  return l * l;
}

double thm14_formula(double q, double h) {
  double lq = std::log(q);
  double ll = std::log(lq);
  double inner = (h - 1) * lq + 3 * (h + 1) + 2.5 * ll * ll;
  return inner * inner;
}

double cor15_formula(u64 q) {
  double v = static_cast<double>(euler_phi(q)) * std::log(static_cast<double>(q));
  return v * v;
}

Thm15Bounds thm15_formulas(double q) {
  const double eg = std::exp(std::numbers::egamma);
  const double core = thm15_core(q);
  const double ll = loglog(q);
  return {2 * eg * core, 12 * eg / (kPi * kPi) * (core + 14 * ll / std::log(q))};
}

Cor16Bounds cor16_formulas(double q) {
  const double eg = std::exp(std::numbers::egamma);
  const double core = thm15_core(q);
  const double ll = loglog(q);
  const double rq = std::sqrt(q);
  return {kPi / (12 * eg) * rq / (core + 14 * ll / std::log(q)), 2 * eg / kPi * rq * core};
}

}  // namespace grhcheck
