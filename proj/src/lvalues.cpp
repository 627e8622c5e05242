#include "grhcheck/lvalues.hpp"

#include <cmath>
#include <limits>
#include <numbers>

#include "grhcheck/error.hpp"
#include "grhcheck/simd/reduce.hpp"

namespace grhcheck {

namespace {

constexpr double kPi = std::numbers::pi;
constexpr double kEps = std::numeric_limits<double>::epsilon();
constexpr u64 kSeriesBlocks = 64;

bool is_principal(const CharacterTable& t) {
  for (u64 a = 0; a < t.modulus; ++a) {
    bool unit = gcd(a, t.modulus) == 1;
    double want = unit ? 1.0 : 0.0;
    if (t.re[a] != want || t.im[a] != 0.0) return false;
  }
  return true;
}

bool is_real(const CharacterTable& t) {
  for (double v : t.im)
    if (v != 0.0) return false;
  return true;
}

double abs_sum(std::span<const double> v) {
  double s = 0.0;
  for (double x : v) s += std::abs(x);
  return s;
}

void require_nonprincipal(const CharacterTable& t) {
  if (t.modulus < 3 || is_principal(t)) throw Error(ErrorKind::PrincipalCharacter, "L(1, chi) needs a non-principal character");
}

cplx dot_complex(const CharacterTable& t, std::span<const double> w) {
  return {simd::dot(t.re, w), simd::dot(t.im, w)};
}

LValueResult hurwitz(const CharacterTable& t) {
  const u64 q = t.modulus;
  std::vector<double> c0(q, 0.0);
  for (u64 a = 1; a < q; ++a)
    if (t.re[a] != 0.0 || t.im[a] != 0.0) c0[a] = -digamma(static_cast<double>(a) / q);
  cplx value = dot_complex(t, c0) / static_cast<double>(q);
  double err = 8 * kEps * abs_sum(c0) / q + 1e-15;
  return {{}, value, LMethod::HurwitzEulerMaclaurin, err};
}

LValueResult finite_gauss(const CharacterTable& t) {
  if (!is_real(t)) throw Error(ErrorKind::InvalidArgument, "the finite formula needs a real character");
  const u64 q = t.modulus;
  const double dq = static_cast<double>(q);
  std::vector<double> w(q, 0.0);
  double value;
  if (t.parity == 1) {
    for (u64 a = 1; a < q; ++a) w[a] = static_cast<double>(a);
    value = -kPi / (dq * std::sqrt(dq)) * simd::dot(t.re, w);
  } else {
    for (u64 a = 1; a < q; ++a) w[a] = std::log(std::sin(kPi * static_cast<double>(a) / dq));
    value = -simd::dot(t.re, w) / std::sqrt(dq);
  }
  double scale = t.parity == 1 ? kPi / (dq * std::sqrt(dq)) : 1.0 / std::sqrt(dq);
  double err = 8 * kEps * scale * abs_sum(w) + 1e-15;
  return {{}, value, LMethod::FiniteGauss, err};
}

// sum_k f(k), f(k) = sum_a chi(a)/(kq + a): K blocks directly, the rest by Euler-Maclaurin.
LValueResult dirichlet_series(const CharacterTable& t) {
  const u64 q = t.modulus;
  const double dq = static_cast<double>(q);
  cplx head = 0.0;
  std::vector<double> w(q, 0.0);
  for (u64 k = 0; k < kSeriesBlocks; ++k) {
    for (u64 a = 1; a < q; ++a) w[a] = 1.0 / (static_cast<double>(k) * dq + static_cast<double>(a));
    w[0] = k == 0 ? 0.0 : 1.0 / (static_cast<double>(k) * dq);
    head += dot_complex(t, w);
  }
  const double big = static_cast<double>(kSeriesBlocks);
  // derivatives f^(m)(K) = sum chi(a) (-1)^m m! q^m / (Kq + a)^(m+1), m = 0..7
  cplx deriv[8];
  std::vector<double> base(q), logs(q);
  for (u64 a = 0; a < q; ++a) {
    base[a] = big * dq + static_cast<double>(a);
    logs[a] = std::log(base[a]);
  }
  double fact = 1.0;
  for (int m = 0; m < 8; ++m) {
    if (m > 0) fact *= m;
    for (u64 a = 0; a < q; ++a) w[a] = std::pow(dq, m) / std::pow(base[a], m + 1);
    deriv[m] = dot_complex(t, w) * ((m % 2 ? -1.0 : 1.0) * fact);
  }
  cplx integral = -dot_complex(t, logs) / dq;
  cplx tail = integral + 0.5 * deriv[0] - deriv[1] / 12.0 + deriv[3] / 720.0 - deriv[5] / 30240.0;
  double err = std::abs(deriv[7]) / 1209600.0 + 64 * kEps * (std::abs(head) + abs_sum(t.re) + abs_sum(t.im));
  return {{}, head + tail, LMethod::DirichletSeries, err};
}

}  // namespace

std::string_view to_string(LMethod m) noexcept {
  switch (m) {
    case LMethod::HurwitzEulerMaclaurin: return "hurwitz-euler-maclaurin";
    case LMethod::FiniteGauss: return "finite-gauss-formula";
    case LMethod::DirichletSeries: return "dirichlet-series";
  }
  return "unknown";
}

LMethod parse_lmethod(std::string_view name) {
  if (name == "hurwitz" || name == "hurwitz-euler-maclaurin") return LMethod::HurwitzEulerMaclaurin;
  if (name == "gauss" || name == "finite-gauss" || name == "finite-gauss-formula") return LMethod::FiniteGauss;
  if (name == "series" || name == "dirichlet-series") return LMethod::DirichletSeries;
  throw Error(ErrorKind::InvalidArgument, "unknown L-value method: " + std::string(name));
}

std::string_view to_string(ClassNumberMethod m) noexcept {
  return m == ClassNumberMethod::BqfCount ? "bqf-count" : "class-formula";
}

CharacterTable CharacterTable::from(const DirichletCharacter& chi) {
  CharacterTable t;
  t.modulus = chi.modulus();
  t.parity = chi.parity();
  t.re.assign(t.modulus, 0.0);
  t.im.assign(t.modulus, 0.0);
  for (u64 a = 0; a < t.modulus; ++a) {
    auto v = chi.at(a);
    if (v.is_zero()) continue;
    if (auto s = v.as_sign()) {
      t.re[a] = *s;
    } else {
      auto z = v.to_complex();
      t.re[a] = z.real();
      t.im[a] = z.imag();
    }
  }
  return t;
}

CharacterTable CharacterTable::kronecker_symbol(i64 d) {
  CharacterTable t;
  t.modulus = static_cast<u64>(d < 0 ? -d : d);
  t.parity = d < 0 ? 1 : 0;
  t.re.assign(t.modulus, 0.0);
  t.im.assign(t.modulus, 0.0);
  for (u64 a = 1; a < t.modulus; ++a) t.re[a] = kronecker(d, static_cast<i64>(a));
  return t;
}

LValueResult L_at_1(const CharacterTable& chi, LMethod method, std::string id) {
  require_nonprincipal(chi);
  LValueResult r;
  switch (method) {
    case LMethod::HurwitzEulerMaclaurin: r = hurwitz(chi); break;
    case LMethod::FiniteGauss: r = finite_gauss(chi); break;
    case LMethod::DirichletSeries: r = dirichlet_series(chi); break;
  }
  r.character_id = std::move(id);
  return r;
}

LValueResult L_at_1(const DirichletCharacter& chi, LMethod method) {
  if (chi.is_principal()) throw Error(ErrorKind::PrincipalCharacter, "L(1, chi) needs a non-principal character");
  if (method == LMethod::FiniteGauss && !(chi.is_real() && chi.is_primitive())) {
    throw Error(ErrorKind::InvalidArgument, "the finite formula needs a real primitive character");
  }
  return L_at_1(CharacterTable::from(chi), method, chi.id());
}

LSeriesAtOne l_series_at_one(const CharacterTable& t) {
  require_nonprincipal(t);
  const u64 q = t.modulus;
  const double dq = static_cast<double>(q);
  std::vector<double> c0(q, 0.0), c1(q, 0.0);
  for (u64 a = 1; a < q; ++a) {
    if (t.re[a] == 0.0 && t.im[a] == 0.0) continue;
    auto l = hurwitz_laurent_at_one(static_cast<double>(a) / dq);
    c0[a] = l.constant;
    c1[a] = l.slope;
  }
  cplx big_c0 = dot_complex(t, c0), big_c1 = dot_complex(t, c1);
  LSeriesAtOne r;
  r.value = big_c0 / dq;
  r.derivative = (big_c1 - std::log(dq) * big_c0) / dq;
  r.log_derivative = big_c1 / big_c0 - std::log(dq);
  r.error_estimate = 8 * kEps * (abs_sum(c1) + std::log(dq) * abs_sum(c0)) / dq + 1e-14;
  return r;
}

LSeriesAtOne l_series_at_one(const DirichletCharacter& chi) {
  if (chi.is_principal()) throw Error(ErrorKind::PrincipalCharacter, "L(1, chi) needs a non-principal character");
  return l_series_at_one(CharacterTable::from(chi));
}

double re_B(const DirichletCharacter& chi) {
  if (chi.is_principal()) throw Error(ErrorKind::PrincipalCharacter, "B(chi) needs a non-principal character");
  if (!chi.is_primitive()) throw Error(ErrorKind::InvalidArgument, "B(chi) needs a primitive character");
  const double q = static_cast<double>(chi.modulus());
  auto s = l_series_at_one(chi);
  return 0.5 * std::log(q / kPi) + 0.5 * digamma((1.0 + chi.parity()) / 2.0) + s.log_derivative.real();
}

namespace {

void require_class_number_domain(u64 q) {
  if (q > static_cast<u64>(std::numeric_limits<i64>::max())) throw Error(ErrorKind::Domain, "q out of range");
  if (!is_fundamental_discriminant(-static_cast<i64>(q))) {
    throw Error(ErrorKind::NotFundamental, "-" + std::to_string(q) + " is not a fundamental discriminant");
  }
  if (q <= 4) throw Error(ErrorKind::Domain, "class number routines require q > 4");
}

}  // namespace

ClassNumberResult class_number_bqf(u64 q) {
  require_class_number_domain(q);
  long h = 0;
  // reduced: |b| <= a <= c, b >= 0 if |b| = a or a = c; a <= sqrt(q/3)
  for (u64 a = 1; 3 * a * a <= q; ++a) {
    const i64 ia = static_cast<i64>(a);
    for (i64 b = -ia + 1; b <= ia; ++b) {
      // b has the parity of q
      if (((b % 2) + 2) % 2 != static_cast<i64>(q % 2)) continue;
      u64 num = static_cast<u64>(b * b) + q;
      if (num % (4 * a) != 0) continue;
      u64 c = num / (4 * a);
      if (c < a) continue;
      if (c == a && b < 0) continue;
      ++h;
    }
  }
  return {q, h, ClassNumberMethod::BqfCount};
}

ClassNumberResult class_number_via_formula(u64 q) {
  require_class_number_domain(q);
  auto t = CharacterTable::kronecker_symbol(-static_cast<i64>(q));
  auto l = L_at_1(t, LMethod::HurwitzEulerMaclaurin);
  double raw = std::sqrt(static_cast<double>(q)) / kPi * l.value.real();
  double h = std::round(raw);
  double dist = std::abs(raw - h);
  if (dist >= 0.25 || h < 1) {
    throw Error(ErrorKind::RoundingAmbiguous, "class formula value " + std::to_string(raw) + " is not near an integer");
  }
  return {q, static_cast<long>(h), ClassNumberMethod::ClassFormula, raw, dist};
}

}  // namespace grhcheck
