#include "grhcheck/explicit_formula.hpp"

#include <cmath>
#include <numbers>
#include <vector>

#include "grhcheck/error.hpp"
#include "grhcheck/lvalues.hpp"
#include "grhcheck/simd/reduce.hpp"

namespace grhcheck {

namespace {

constexpr double kPi = std::numbers::pi;
constexpr double kEulerGamma = std::numbers::egamma;
constexpr double kLn2 = std::numbers::ln2;
constexpr double kSeriesTol = 1e-16;
constexpr long kSeriesMinTerms = 10;
constexpr long kSeriesMaxTerms = 10'000'000;

// sum_{k >= first} term(k), stopped once |term| < 1e-16 after at least ten terms
template <class Term>
double series(long first, Term&& term) {
  double sum = 0.0, carry = 0.0;
  for (long k = first; k < first + kSeriesMaxTerms; ++k) {
    double t = term(k);
    double y = t - carry;
    double s = sum + y;
    carry = (s - sum) - y;
    sum = s;
    if (k - first + 1 >= kSeriesMinTerms && std::abs(t) < kSeriesTol) break;
  }
  return sum;
}

double abs_b() { return std::abs(special_constants().hadamard_b); }

void require_x(double x, double min, const char* what) {
  if (!(x > min)) throw Error(ErrorKind::Domain, std::string(what) + " needs x > " + std::to_string(min));
}

struct PrimePowers {
  std::shared_ptr<const PrimePowerTable> table;
  std::size_t count;

  std::span<const double> lambda() const { return table->lambda().first(count); }
  std::span<const double> n() const { return table->n().first(count); }
  std::span<const double> log_n() const { return table->log_n().first(count); }
  std::span<const double> lambda_over_n() const { return table->lambda_over_n().first(count); }
  std::span<const double> lambda_over_n_log_n() const { return table->lambda_over_n_log_n().first(count); }
  std::span<const u64> value() const { return table->value().first(count); }
};

PrimePowers prime_powers(double x) {
  auto t = PrimePowerTable::shared(static_cast<u64>(std::max(2.0, std::floor(x))));
  return {t, t->count_upto(x)};
}

// chi(n) over the prime powers n <= x
struct Twist {
  std::vector<double> re, im;
};

Twist twist(const PrimePowers& pp, const DirichletCharacter& chi) {
  Twist t;
  t.re.resize(pp.count);
  t.im.resize(pp.count);
  auto values = pp.value();
  for (std::size_t i = 0; i < pp.count; ++i) {
    auto v = chi.at(values[i] % chi.modulus());
    if (v.is_zero()) continue;
    if (auto s = v.as_sign()) {
      t.re[i] = *s;
    } else {
      auto z = v.to_complex();
      t.re[i] = z.real();
      t.im[i] = z.imag();
    }
  }
  return t;
}

ExplicitFormulaReport finish(std::string lemma, double x, double lhs, double main, double envelope) {
  ExplicitFormulaReport r;
  r.lemma = std::move(lemma);
  r.x = x;
  r.lhs = lhs;
  r.main_terms = main;
  r.envelope = envelope;
  r.theta = (lhs - main) / envelope;
  r.verdict = std::abs(r.theta) <= 1.0;
  return r;
}

double log_q_over_pi(const DirichletCharacter& chi) { return std::log(static_cast<double>(chi.modulus()) / kPi); }

}  // namespace

double cheb_log_sum(double x) {
  if (!(x > 1)) return 0.0;
  auto pp = prime_powers(x);
  return simd::affine_sum(pp.lambda(), pp.log_n(), std::log(x));
}

cplx cheb_log_sum(double x, const DirichletCharacter& chi) {
  if (!(x > 1)) return 0.0;
  auto pp = prime_powers(x);
  auto t = twist(pp, chi);
  double lx = std::log(x);
  return {simd::affine_dot(t.re, pp.lambda(), pp.log_n(), lx), simd::affine_dot(t.im, pp.lambda(), pp.log_n(), lx)};
}

double weighted_psi_sum(double x) {
  if (!(x > 1)) return 0.0;
  auto pp = prime_powers(x);
  return simd::affine_sum(pp.lambda_over_n(), pp.n(), x) / x;
}

cplx weighted_psi_sum(double x, const DirichletCharacter& chi) {
  if (!(x > 1)) return 0.0;
  auto pp = prime_powers(x);
  auto t = twist(pp, chi);
  return cplx(simd::affine_dot(t.re, pp.lambda_over_n(), pp.n(), x), simd::affine_dot(t.im, pp.lambda_over_n(), pp.n(), x)) / x;
}

double loglog_sum(double x) {
  if (!(x >= 2)) return 0.0;
  auto pp = prime_powers(x);
  double lx = std::log(x);
  return simd::affine_sum(pp.lambda_over_n_log_n(), pp.log_n(), lx) / lx;
}

cplx loglog_sum(double x, const DirichletCharacter& chi) {
  if (!(x >= 2)) return 0.0;
  auto pp = prime_powers(x);
  auto t = twist(pp, chi);
  double lx = std::log(x);
  return cplx(simd::affine_dot(t.re, pp.lambda_over_n_log_n(), pp.log_n(), lx),
              simd::affine_dot(t.im, pp.lambda_over_n_log_n(), pp.log_n(), lx)) /
         lx;
}

double error_term(double x, int parity, ErrorFamily family) {
  require_x(x, 1.0, "error_term");
  if (parity != 0 && parity != 1) throw Error(ErrorKind::InvalidArgument, "parity must be 0 or 1");
  const double lx = std::log(x);
  const double inv = 1.0 / x;
  const double g = kEulerGamma;
  if (family == ErrorFamily::E) {
    if (parity == 0) {
      double s = series(1, [&](long k) { return std::pow(x, -2.0 * k - 1) / (2.0 * k * (2.0 * k + 1)); });
      return -kLn2 - 0.5 * g * (1 - inv) + (lx + 1) * inv - s;
    }
    double s = series(0, [&](long k) { return std::pow(x, -2.0 * k - 2) / ((2.0 * k + 1) * (2.0 * k + 2)); });
    return -s - 0.5 * g * (1 - inv) + kLn2 * inv;
  }
  if (parity == 0) {
    double s = series(1, [&](long k) { return std::pow(x, -2.0 * k) / (4.0 * k * k); });
    return kPi * kPi / 24 - 0.5 * g * lx - 0.5 * lx * lx - s;
  }
  double s = series(0, [&](long k) { return std::pow(x, -2.0 * k - 1) / ((2.0 * k + 1) * (2.0 * k + 1)); });
  return kPi * kPi / 8 - (kLn2 + 0.5 * g) * lx - s;
}

std::string identity_id(Identity id) {
  switch (id) {
    case Identity::PrimeLogSum: return "2.1";
    case Identity::TwistedLogSum: return "2.2";
    case Identity::WeightedPsiSum: return "2.4";
    case Identity::LogLValue: return "2.5";
    case Identity::LogLogSum: return "2.6";
  }
  return "?";
}

ExplicitFormulaReport lemma_residual(Identity id, double x) {
  const double b = abs_b();
  const double g = kEulerGamma;
  switch (id) {
    case Identity::PrimeLogSum: {
      require_x(x, 1.0, "the prime log-sum identity");
      double lx = std::log(x);
      double s = series(1, [&](long k) { return (1 - std::pow(x, -2.0 * k)) / (4.0 * k * k); });
      double main = x - std::log(2 * kPi) * lx - 1 + s;
      return finish(identity_id(id), x, cheb_log_sum(x), main, 2 * b * (std::sqrt(x) + 1));
    }
    case Identity::WeightedPsiSum: {
      require_x(x, 1.0, "the weighted psi identity");
      double s = series(1, [&](long n) { return std::pow(x, -2.0 * n - 1) / (2.0 * n * (2.0 * n + 1)); });
      double main = std::log(x) - (1 + g) + std::log(2 * kPi) / x - s;
      return finish(identity_id(id), x, weighted_psi_sum(x), main, 2 * b / std::sqrt(x));
    }
    case Identity::LogLogSum: {
      if (!(x >= std::numbers::e)) throw Error(ErrorKind::Domain, "the log-log identity needs x >= e");
      double lx = std::log(x);
      double main = std::log(lx) + g - 1 + g / lx;
      double env = 2 * b / (std::sqrt(x) * lx * lx) + 1 / (3 * x * x * x * lx * lx);
      return finish(identity_id(id), x, loglog_sum(x), main, env);
    }
    default:
      throw Error(ErrorKind::InvalidArgument, "identity " + identity_id(id) + " needs a character");
  }
}

ExplicitFormulaReport lemma2_residual(double x, const DirichletCharacter& chi, double re_b) {
  require_x(x, 1.0, "the twisted log-sum identity");
  if (chi.is_principal() || !chi.is_primitive()) {
    throw Error(ErrorKind::InvalidArgument, "the twisted log-sum identity needs a primitive non-principal character");
  }
  const double lx = std::log(x);
  const double b = std::abs(re_b);
  double lhs = cheb_log_sum(x, chi).real();
  double main = b * lx + 0.5 * log_q_over_pi(chi) * lx + error_term(x, chi.parity(), ErrorFamily::ETilde);
  auto r = finish(identity_id(Identity::TwistedLogSum), x, lhs, main, b * (2 * std::sqrt(x) + 2));
  r.character = chi.id();
  return r;
}

ExplicitFormulaReport lemma25_residual(double x, const DirichletCharacter& chi) {
  if (!(x >= 2)) throw Error(ErrorKind::Domain, "the log L identity needs x >= 2");
  const double lx = std::log(x);
  const double b = re_B(chi);
  double lhs = std::log(std::abs(L_at_1(chi).value));
  double constant = 0.5 * log_q_over_pi(chi) + 0.5 * digamma((1.0 + chi.parity()) / 2.0);
  double main = loglog_sum(x, chi).real() + constant / lx - b / lx;
  double env = 2 * b / (std::sqrt(x) * lx * lx) + 2 / (x * lx * lx);
  auto r = finish(identity_id(Identity::LogLValue), x, lhs, main, env);
  r.character = chi.id();
  return r;
}

ThetaWindow lemma3_window(double x, const DirichletCharacter& chi) {
  require_x(x, 1.0, "the Re B window");
  if (chi.is_principal() || !chi.is_primitive()) {
    throw Error(ErrorKind::InvalidArgument, "the Re B window needs a primitive non-principal character");
  }
  ThetaWindow w;
  w.x = x;
  w.numerator = 0.5 * (1 - 1 / x) * log_q_over_pi(chi) - weighted_psi_sum(x, chi).real() +
                error_term(x, chi.parity(), ErrorFamily::E);
  if (!(w.numerator > 0)) {
    throw Error(ErrorKind::DegenerateWindow,
                "Re B window at x = " + std::to_string(x) + " has non-positive right side " + std::to_string(w.numerator));
  }
  const double r = 1 / std::sqrt(x);
  w.lower = w.numerator / ((1 + r) * (1 + r));
  w.upper = w.numerator / ((1 - r) * (1 - r));
  return w;
}

CoprimeDefectSums lemma5_sums(double x, u64 m) {
  if (m < 3) throw Error(ErrorKind::Domain, "m must be at least 3");
  if (!(x >= 2)) throw Error(ErrorKind::Domain, "x must be at least 2");
  CoprimeDefectSums r;
  r.m = m;
  r.x = x;
  auto f = factorize(m);
  const double lx = std::log(x);
  for (auto [p, e] : f.factors) {
    const double lp = std::log(static_cast<double>(p));
    r.bound2 += lp / static_cast<double>(p - 1);
    for (double pk = static_cast<double>(p); pk <= x; pk *= static_cast<double>(p)) {
      r.s1 += lp * (lx - std::log(pk));
      r.s2 += lp / pk * (1 - pk / x);
    }
  }
  r.bound1 = 0.5 * f.omega() * lx * lx;
  r.holds1 = r.s1 <= r.bound1;
  r.holds2 = r.s2 <= r.bound2;
  return r;
}

AlternatingComparison lemma51_check(double x, const DirichletCharacter& chi) {
  if (!(x >= 100)) throw Error(ErrorKind::Domain, "the alternating comparison needs x >= 100");
  auto pp = prime_powers(x);
  auto t = twist(pp, chi);
  const double cut = 1 / (x * std::log(x));
  std::vector<double> sign(pp.count), ones(pp.count, 1.0);
  auto powers = pp.table->power();
  for (std::size_t i = 0; i < pp.count; ++i) sign[i] = powers[i] % 2 == 0 ? 1.0 : -1.0;
  // lambda * (1/(n log n) - cut) = lambda/(n log n) - lambda * cut
  auto weighted = [&](std::span<const double> w) {
    return simd::dot(w, pp.lambda_over_n_log_n()) - cut * simd::dot(w, pp.lambda());
  };
  AlternatingComparison r;
  r.x = x;
  r.lhs = weighted(t.re);
  r.rhs = weighted(sign);
  r.holds = r.lhs >= r.rhs;
  (void)ones;
  return r;
}

double trig_poly_p2(double x, double phi) {
  const double cut = 1 / (x * std::log(x));
  const int big_k = static_cast<int>(std::floor(std::log(x) / kLn2 + 1e-12));
  double head = 0.0, tail = 0.0;
  for (int k = 1; k <= big_k; ++k) {
    double w = 1 / (std::ldexp(1.0, k) * k * kLn2) - cut;
    double signed_w = (k % 2 == 1) ? w : -w;
    if (k <= 5) {
      head += signed_w * (1 - std::cos(k * phi));
    } else {
      tail += static_cast<double>(k) * k * std::min(0.0, signed_w);
    }
  }
  return kLn2 * (head + (1 - std::cos(phi)) * tail);
}

TrigPolyCheck trig_poly_check(double x, std::size_t grid) {
  if (!(x >= 100)) throw Error(ErrorKind::Domain, "the p = 2 polynomial check needs x >= 100");
  if (grid < 2) throw Error(ErrorKind::InvalidArgument, "grid needs at least two points");
  TrigPolyCheck r;
  r.x = x;
  r.grid = grid;
  r.min_value = INFINITY;
  for (std::size_t i = 0; i < grid; ++i) {
    double phi = 2 * kPi * static_cast<double>(i) / static_cast<double>(grid - 1);
    double v = trig_poly_p2(x, phi);
    if (v < r.min_value) {
      r.min_value = v;
      r.argmin = phi;
    }
  }
  r.holds = r.min_value >= -1e-15;
  r.construction =
      "log2*[sum_{k<=5} (-1)^(k-1)(1-cos k phi) w_k + (1-cos phi) sum_{6<=k<=K} k^2 min(0,(-1)^(k-1) w_k)], "
      "w_k = 1/(2^k k log 2) - 1/(x log x), K = floor(log x/log 2)";
  return r;
}

ImprimitiveGap imprimitive_gap(double x, const DirichletCharacter& chi) {
  ImprimitiveGap r;
  r.x = x;
  auto prim = chi.primitive();
  r.gap = std::abs(cheb_log_sum(x, chi) - cheb_log_sum(x, prim));
  u64 ratio = chi.modulus() / chi.conductor();
  double lx = x > 1 ? std::log(x) : 0.0;
  r.bound = 0.5 * factorize(ratio).omega() * lx * lx;
  r.holds = r.gap <= r.bound * (1 + 1e-12) + 1e-12;
  return r;
}

}  // namespace grhcheck
