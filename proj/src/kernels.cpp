#include "grhcheck/kernels.hpp"

#include <algorithm>
#include <boost/math/quadrature/gauss_kronrod.hpp>
#include <boost/math/tools/minima.hpp>
#include <boost/math/tools/roots.hpp>
#include <cmath>
#include <complex>
#include <limits>
#include <numbers>

#include "grhcheck/error.hpp"

namespace grhcheck {

namespace {

constexpr double kPi = std::numbers::pi;
constexpr double kInf = std::numeric_limits<double>::infinity();
constexpr double kLineTol = 1e-9;
constexpr double kWeightedTol = 1e-10;

using GK = boost::math::quadrature::gauss_kronrod<double, 61>;

template <class F>
QuadratureResult integrate(F&& f, double a, double b) {
  QuadratureResult r;
  if (!(b > a)) return r;
  r.value = GK::integrate(f, a, b, 8, 1e-12, &r.error);
  return r;
}

// integrate f over [a, b] split at the sorted points in cuts and at most `step` apart
template <class F>
QuadratureResult integrate_split(F&& f, double a, double b, std::vector<double> cuts, double step) {
  cuts.push_back(a);
  cuts.push_back(b);
  std::sort(cuts.begin(), cuts.end());
  QuadratureResult total;
  double left = a;
  for (double c : cuts) {
    if (c <= left) continue;
    double right = std::min(c, b);
    int pieces = std::max(1, static_cast<int>(std::ceil((right - left) / step)));
    for (int i = 0; i < pieces; ++i) {
      double x0 = left + (right - left) * i / pieces;
      double x1 = i + 1 == pieces ? right : left + (right - left) * (i + 1) / pieces;
      auto r = integrate(f, x0, x1);
      total.value += r.value;
      total.error += r.error;
    }
    left = right;
    if (left >= b) break;
  }
  return total;
}

// int_T^inf cos(omega t)/t^2 dt
double cos_over_t2_tail(double omega, double t) {
  omega = std::abs(omega);
  if (omega == 0) return 1 / t;
  return std::cos(omega * t) / t - omega * (kPi / 2 - sine_integral(omega * t));
}

// sign changes of K(it) on (0, T], refined by TOMS 748
std::vector<double> line_roots(const Kernel& k, double cutoff) {
  std::vector<double> roots;
  const double h = 0.01;
  double prev_t = 0.0, prev = k.line(0.0);
  for (double t = h; t <= cutoff; t += h) {
    double v = k.line(t);
    if ((prev < 0 && v > 0) || (prev > 0 && v < 0)) {
      std::uintmax_t iters = 200;
      auto tol = [](double a, double b) { return std::abs(b - a) <= 1e-15 * std::max(1.0, std::abs(a)); };
      auto [lo, hi] = boost::math::tools::toms748_solve([&](double x) { return k.line(x); }, prev_t, t, prev, v, tol, iters);
      roots.push_back(0.5 * (lo + hi));
    }
    prev_t = t;
    prev = v;
  }
  return roots;
}

double gamma_line(double t) {
  if (t == 0) return 2 * std::numbers::egamma;
  // Gamma(it) = Gamma(1 + it)/(it)
  cplx g = complex_gamma(cplx(1.0, t)) / cplx(0.0, t);
  return -2 * g.real();
}

double gamma_mellin(double u) {
  if (u <= 1) return -std::expm1(-u) - std::exp(-1 / u);
  return -std::expm1(-1 / u) - std::exp(-u);
}

// |Gamma(it)| <= sqrt(2 pi/(0.99 t)) e^{-pi t/2} for t >= 1
double gamma_abs_tail(double t) {
  t = std::max(t, 1.0);
  return 2 * std::sqrt(2 * kPi / (0.99 * t)) * (2 / kPi) * std::exp(-kPi * t / 2);
}

std::string format_alpha(double alpha) {
  char buf[64];
  std::snprintf(buf, sizeof buf, "fejer(alpha=%.17g)", alpha);
  return buf;
}

}  // namespace

double Kernel::mellin_at(double u) const {
  if (!(u > 0)) throw Error(ErrorKind::Domain, "Mellin transform needs u > 0");
  return mellin(u);
}

double sine_integral(double x) {
  if (x < 0) return -sine_integral(-x);
  if (x == 0) return 0.0;
  if (x <= 4) {
    double term = x, sum = x, x2 = x * x;
    for (int k = 1; k < 60; ++k) {
      term *= -x2 / ((2.0 * k) * (2.0 * k + 1));
      double add = term / (2.0 * k + 1);
      sum += add;
      if (std::abs(add) < 1e-18 * std::abs(sum)) break;
    }
    return sum;
  }
  // E1(ix) by modified Lentz on its continued fraction
  const double tiny = 1e-300;
  cplx b(1.0, x), c = 1.0 / tiny, d = 1.0 / b, h = d;
  for (int i = 2; i < 100000; ++i) {
    double a = -static_cast<double>(i - 1) * (i - 1);
    b += 2.0;
    d = 1.0 / (a * d + b);
    c = b + a / c;
    cplx del = c * d;
    h *= del;
    if (std::abs(del - 1.0) < 1e-16) break;
  }
  h *= cplx(std::cos(x), -std::sin(x));
  return kPi / 2 + h.imag();
}

Kernel fejer_kernel(double alpha) {
  if (!(alpha > 0)) throw Error(ErrorKind::Domain, "Fejer kernel needs alpha > 0");
  Kernel k;
  k.kind = KernelKind::Fejer;
  k.descriptor = format_alpha(alpha);
  k.alpha = alpha;
  k.delta = 1.0;  // entire; any strip works
  k.on_line = [alpha](double t) {
    if (t == 0) return 4 * alpha * alpha;
    double s = 2 * std::sin(alpha * t) / t;
    return s * s;
  };
  double e = std::exp(alpha / 2) - std::exp(-alpha / 2);
  k.at_half = 4 * e * e;
  k.mellin = [alpha](double u) { return std::max(0.0, 2 * alpha - std::abs(std::log(u))); };
  k.mellin_kinks = {std::exp(-2 * alpha), 1.0, std::exp(2 * alpha)};
  k.decay_constant = 4 * (1 + alpha * alpha);
  k.line_cutoff = std::max(20.0, 40 * kPi / alpha);
  k.line_step = std::min(1.0, kPi / (4 * alpha));
  // (2 sin(alpha t)/t)^2 = (2 - 2 cos(2 alpha t))/t^2
  k.abs_tail = [alpha](double t) { return 2 / t - 2 * cos_over_t2_tail(2 * alpha, t); };
  k.cos_tail = [alpha](double t, double w) {
    return 2 * cos_over_t2_tail(w, t) - cos_over_t2_tail(2 * alpha + w, t) - cos_over_t2_tail(2 * alpha - w, t);
  };
  return k;
}

Kernel gamma_kernel() {
  static const Kernel cached = [] {
    Kernel k;
    k.kind = KernelKind::Gamma;
    k.descriptor = "gamma";
    k.delta = 0.5;  // holomorphic for |Re s| < 1
    k.on_line = gamma_line;
    k.at_half = std::sqrt(kPi);
    k.mellin = gamma_mellin;
    k.mellin_kinks = {1.0};
    double worst = 0;
    for (int i = 0; i <= 1000; ++i) {
      double t = i * 0.01;
      worst = std::max(worst, (1 + t * t) * std::abs(gamma_line(t)));
    }
    k.decay_constant = 1.05 * worst;
    k.line_cutoff = 60.0;
    k.line_step = 0.5;
    k.abs_tail = gamma_abs_tail;
    k.cos_tail = [](double, double) { return 0.0; };
    return k;
  }();
  return cached;
}

QuadratureResult line_l1(const Kernel& k) {
  const double cutoff = k.line_cutoff;
  auto roots = line_roots(k, cutoff);
  auto r = integrate_split([&](double t) { return std::abs(k.line(t)); }, 0.0, cutoff, roots, k.line_step);
  double tail = k.abs_tail(cutoff);
  QuadratureResult out;
  out.value = (r.value + (k.kind == KernelKind::Gamma ? 0.0 : tail)) / kPi;
  out.error = r.error / kPi + (k.kind == KernelKind::Gamma ? tail / kPi : 0.0);
  if (!(out.error <= kLineTol)) {
    throw Error(ErrorKind::QuadratureToleranceNotMet, k.descriptor + " line L1 error " + std::to_string(out.error));
  }
  return out;
}

QuadratureResult weighted_integral(const Kernel& k, double lambda) {
  if (lambda < 0 || std::isnan(lambda)) throw Error(ErrorKind::Domain, "weighted integral needs lambda > 0");
  QuadratureResult total;
  if (lambda == 0) return total;
  // u = v^2 on [0, min(lambda, 1)]
  std::vector<double> cuts_a, cuts_b;
  for (double u : k.mellin_kinks) {
    if (u > 0 && u < 1) cuts_a.push_back(std::sqrt(u));
    if (u > 1) cuts_b.push_back(1 / std::sqrt(u));
  }
  double top = std::sqrt(std::min(lambda, 1.0));
  auto a = integrate_split([&](double v) { return v == 0 ? 0.0 : 2 * k.mellin(v * v); }, 0.0, top, cuts_a, 0.1);
  total.value += a.value;
  total.error += a.error;
  if (lambda > 1) {
    // u = 1/v^2 on (1, lambda]; K~(u) = K~(1/u)
    double bottom = std::isinf(lambda) ? 0.0 : 1 / std::sqrt(lambda);
    auto f = [&](double v) {
      if (v == 0) return k.kind == KernelKind::Fejer ? 0.0 : 2.0;  // K~(w)/w -> 1 for the gamma kernel
      return 2 * k.mellin(v * v) / (v * v);
    };
    auto b = integrate_split(f, bottom, 1.0, cuts_b, 0.1);
    total.value += b.value;
    total.error += b.error;
  }
  if (!(total.error <= kWeightedTol)) {
    throw Error(ErrorKind::QuadratureToleranceNotMet, k.descriptor + " weighted integral error " + std::to_string(total.error));
  }
  return total;
}

QuadratureResult mellin_numeric(const Kernel& k, double u) {
  if (!(u > 0)) throw Error(ErrorKind::Domain, "Mellin check needs u > 0");
  const double w = std::log(u);
  const double cutoff = k.line_cutoff;
  double step = std::min(k.line_step, kPi / (2 * (std::abs(w) + 1)));
  auto r = integrate_split([&](double t) { return k.line(t) * std::cos(w * t); }, 0.0, cutoff, {}, step);
  QuadratureResult out;
  out.value = (r.value + k.cos_tail(cutoff, w)) / kPi;
  out.error = r.error / kPi + (k.kind == KernelKind::Fejer ? 0.0 : k.abs_tail(cutoff) / kPi);
  return out;
}

MellinCheck mellin_numeric_check(const Kernel& k, double u) {
  MellinCheck m;
  m.u = u;
  auto r = mellin_numeric(k, u);
  if (!(r.error <= 1e-8)) {
    throw Error(ErrorKind::QuadratureToleranceNotMet, k.descriptor + " Mellin quadrature error " + std::to_string(r.error));
  }
  m.numeric = r.value;
  m.closed_form = k.mellin_at(u);
  m.difference = m.numeric - m.closed_form;
  m.holds = std::abs(m.difference) <= 1e-6;
  return m;
}

BoundConstant prop62_constant(const Kernel& k, double lambda, double h, double l1) {
  if (!(lambda > 0)) throw Error(ErrorKind::Domain, "lambda must be positive");
  if (!(h >= 2)) throw Error(ErrorKind::Domain, "h must be at least 2");
  BoundConstant b;
  b.h = h;
  b.lambda = lambda;
  b.kernel = k.descriptor;
  b.l1 = l1;
  b.weighted = weighted_integral(k, lambda).value;
  if (std::isinf(h)) {
    b.denominator = b.weighted;
    if (!(b.denominator > 0)) throw Error(ErrorKind::NonpositiveDenominator, "W(lambda) <= 0");
    b.c = lambda * l1 * l1 / (b.weighted * b.weighted);
    return b;
  }
  b.denominator = h * b.weighted - k.at_half / 2;
  if (!(b.denominator > 0)) {
    throw Error(ErrorKind::NonpositiveDenominator,
                "h W(lambda) - K(1/2)/2 = " + std::to_string(b.denominator) + " at lambda = " + std::to_string(lambda));
  }
  double r = (h - 1) * l1 / b.denominator;
  b.c = lambda * r * r;
  return b;
}

BoundConstant prop62_constant(const Kernel& k, double lambda, double h) {
  return prop62_constant(k, lambda, h, line_l1(k).value);
}

BoundConstant optimize_lambda(const Kernel& k, double h, LambdaRange range) {
  if (!(range.lo > 0 && range.hi > range.lo)) throw Error(ErrorKind::InvalidArgument, "bad lambda range");
  const double l1 = line_l1(k).value;
  auto c_at = [&](double lambda) {
    try {
      return prop62_constant(k, lambda, h, l1).c;
    } catch (const Error& e) {
      if (e.kind() == ErrorKind::NonpositiveDenominator) return kInf;
      throw;
    }
  };
  constexpr int kGrid = 200;
  std::vector<double> grid(kGrid), values(kGrid);
  for (int i = 0; i < kGrid; ++i) {
    grid[i] = range.lo + (range.hi - range.lo) * i / (kGrid - 1);
    values[i] = c_at(grid[i]);
  }
  auto best = std::min_element(values.begin(), values.end()) - values.begin();
  if (std::isinf(values[best])) {
    throw Error(ErrorKind::NoFeasibleLambda, k.descriptor + " has no lambda with positive denominator in range");
  }
  double a = grid[std::max<long>(0, best - 1)];
  double b = grid[std::min<long>(kGrid - 1, best + 1)];
  auto [lambda, c] = boost::math::tools::brent_find_minima(c_at, a, b, 40);
  return prop62_constant(k, lambda, h, l1);
}

double limit_constant(double h) {
  if (std::isinf(h) && h > 0) return 0.25;
  if (!(h >= 2)) throw Error(ErrorKind::Domain, "h must be at least 2");
  double r = (h - 1) / (2 * h - 1);
  return r * r;
}

double largeh_constant(double h) {
  if (!(h >= 4) || std::isinf(h)) throw Error(ErrorKind::Domain, "large-h constant needs finite h >= 4");
  double l = std::log(2 * h);
  if (!(l > 2)) throw Error(ErrorKind::Domain, "large-h constant needs log(2h) > 2");
  double a = 1 - 1 / h, b = l / (l - 2);
  return 0.25 * a * a * b * b;
}

double alpha_table(double h) {
  if (!(h >= 2)) throw Error(ErrorKind::Domain, "h must be at least 2");
  if (h == 2) return 0.42;
  if (h == 3) return 0.49;
  return 0.51;
}

}  // namespace grhcheck
