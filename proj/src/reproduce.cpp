#include "grhcheck/reproduce.hpp"

#include <algorithm>
#include <chrono>
#include <cmath>
#include <functional>
#include <limits>
#include <numbers>
#include <ostream>
#include <sstream>

#include "grhcheck/bounds.hpp"
#include "grhcheck/error.hpp"
#include "grhcheck/explicit_formula.hpp"
#include "grhcheck/kernels.hpp"
#include "grhcheck/lvalues.hpp"

namespace grhcheck {

namespace {

constexpr double kInf = std::numeric_limits<double>::infinity();

std::string f(double x) { return format_double(x); }

CriterionResult make(int n, std::string anchor, std::string title) {
  CriterionResult r;
  r.number = n;
  r.anchor = std::move(anchor);
  r.title = std::move(title);
  return r;
}

// max measured/bound over pass-or-fail reports
CriterionResult from_reports(CriterionResult r, const std::vector<BoundReport>& reports, bool strict) {
  double worst = 0;
  std::size_t bad = 0, checked = 0;
  u64 worst_q = 0;
  for (auto& rep : reports) {
    if (rep.verdict == Verdict::NotApplicable) continue;
    ++checked;
    if (rep.verdict != Verdict::Pass) ++bad;
    if (rep.measured) {
      double ratio = *rep.measured / rep.bound;
      if (ratio > worst) {
        worst = ratio;
        worst_q = rep.q;
      }
    }
  }
  r.measured = worst;
  r.threshold = 1.0;
  r.margin = 1.0 - worst;
  r.passed = bad == 0 && checked > 0 && (strict ? worst < 1 : worst <= 1);
  r.detail = std::to_string(checked) + " moduli, " + std::to_string(bad) + " not passing, worst ratio at q=" +
             std::to_string(worst_q);
  return r;
}

CriterionResult c1(const ReproduceOptions& o) {
  VerifyParams p;
  p.qmin = 5;
  p.qmax = 3000;
  p.workers = o.workers;
  return from_reports(make(1, "cor12", "least quadratic non-residue < (log q)^2 for primes 5 <= q <= 3000"),
                      verify("cor12", p), true);
}

CriterionResult c2(const ReproduceOptions& o) {
  VerifyParams p;
  p.qmin = 4;
  p.qmax = o.extended ? 20000 : 2000;
  p.workers = o.workers;
  return from_reports(make(2, "cor15", "P(a,q) <= (phi(q) log q)^2 for 4 <= q <= " + std::to_string(p.qmax)),
                      verify("cor15", p), false);
}

CriterionResult c3(const ReproduceOptions&) {
  auto r = make(3, "gamma-l1", "gamma-kernel line constant in [0.291, 0.292]");
  auto l1 = line_l1(gamma_kernel());
  r.measured = l1.value;
  r.threshold = 0.292;
  r.margin = std::min(l1.value - 0.291, 0.292 - l1.value);
  r.passed = r.margin >= 0 && l1.error <= 1e-9;
  r.detail = "quadrature error " + f(l1.error);
  return r;
}

CriterionResult c4(const ReproduceOptions&) {
  auto r = make(4, "alpha", "kernel constants 0.42 / 0.49 / 0.51 at lambda 8.35 / 6.55 / 3.9");
  auto g = gamma_kernel();
  struct Case {
    double h, lambda, published;
  };
  double worst = 0;
  bool ok = true;
  std::ostringstream d;
  for (auto [h, lambda, published] : {Case{2, 8.35, 0.42}, Case{3, 6.55, 0.49}, Case{kInf, 3.9, 0.51}}) {
    double c = prop62_constant(g, lambda, h).c;
    auto best = optimize_lambda(g, h, {1, 20});
    worst = std::max(worst, std::abs(c - published));
    ok = ok && std::abs(c - published) <= 0.01 && best.c >= c - 0.005;
    d << "h=" << f(h) << " c=" << f(c) << " opt lambda=" << f(best.lambda) << " c*=" << f(best.c) << "; ";
  }
  r.measured = worst;
  r.threshold = 0.01;
  r.margin = 0.01 - worst;
  r.passed = ok;
  r.detail = d.str();
  return r;
}

CriterionResult c5(const ReproduceOptions&) {
  auto r = make(5, "fejer", "Fejer kernel closed forms (L1, W(1), Mellin)");
  double worst = 0;  // error / tolerance
  for (double alpha : {0.5, 1.0, 2.0, 4.0}) {
    auto k = fejer_kernel(alpha);
    worst = std::max(worst, std::abs(line_l1(k).value - 2 * alpha) / 1e-8);
    worst = std::max(worst, std::abs(weighted_integral(k, 1).value - (4 * alpha - 4 + 4 * std::exp(-alpha))) / 1e-10);
    for (int i = -12; i <= 12; ++i) {
      double lu = 3 * alpha * i / 12.0;
      worst = std::max(worst, std::abs(mellin_numeric_check(k, std::exp(lu)).difference) / 1e-6);
    }
  }
  r.measured = worst;
  r.threshold = 1;
  r.margin = 1 - worst;
  r.passed = worst <= 1;
  r.detail = "largest error as a fraction of its tolerance";
  return r;
}

CriterionResult c6(const ReproduceOptions&) {
  auto r = make(6, "mellin-inversion", "int_0^inf K~(u) du/sqrt(u) = K(1/2), both kernels");
  auto g = gamma_kernel();
  double wg = weighted_integral(g, kInf).value;
  double worst = std::abs(wg - std::sqrt(std::numbers::pi));
  for (double alpha : {0.5, 1.0, 2.0, 4.0}) {
    auto k = fejer_kernel(alpha);
    worst = std::max(worst, std::abs(weighted_integral(k, kInf).value - k.at_half));
  }
  r.measured = worst;
  r.threshold = 1e-6;
  r.margin = 1e-6 - worst;
  r.passed = worst <= 1e-6;
  r.detail = "gamma: " + f(wg) + " vs sqrt(pi)";
  return r;
}

CriterionResult c7(const ReproduceOptions& o) {
  auto r = make(7, "classnum", "class numbers by reduced forms = class number formula, 4 < q <= 10^4");
  std::vector<u64> qs;
  for (u64 q = 5; q <= 10000; ++q)
    if (is_fundamental_discriminant(-static_cast<i64>(q))) qs.push_back(q);
  struct Out {
    bool equal;
    double distance;
  };
  auto outs = parallel_map(qs.size(), o.workers, [&](std::size_t i) {
    auto a = class_number_bqf(qs[i]);
    auto b = class_number_via_formula(qs[i]);
    return Out{a.h == b.h, b.distance};
  });
  std::size_t mismatches = 0;
  double worst = 0;
  for (auto& x : outs) {
    mismatches += !x.equal;
    worst = std::max(worst, x.distance);
  }
  r.measured = worst;
  r.threshold = 0.05;
  r.margin = 0.05 - worst;
  r.passed = mismatches == 0 && worst < 0.05;
  r.detail = std::to_string(qs.size()) + " discriminants, " + std::to_string(mismatches) + " mismatches";
  return r;
}

CriterionResult c8(const ReproduceOptions&) {
  auto r = make(8, "cor16", "class number lower bound at q = 10^11 is at least 9052");
  auto b = cor16_bounds_real(1e11);
  r.measured = b.lower;
  r.threshold = 9052;
  r.margin = b.lower - 9052;
  r.passed = b.lower >= 9052;
  r.detail = "upper " + f(b.upper);
  return r;
}

CriterionResult c9(const ReproduceOptions& o) {
  auto r = make(9, "explicit-formula", "|theta| <= 1 across the explicit-formula identities");
  double worst = 0;
  std::string worst_at;
  std::size_t count = 0;
  for (auto id : {Identity::PrimeLogSum, Identity::WeightedPsiSum, Identity::LogLogSum}) {
    for (double x : {10.0, 1e2, 1e3, 1e4, 1e5, 1e6}) {
      double t = std::abs(lemma_residual(id, x).theta);
      ++count;
      if (t > worst) {
        worst = t;
        worst_at = identity_id(id) + " x=" + f(x);
      }
    }
  }
  struct Out {
    double theta = 0;
    std::string at;
    std::size_t count = 0;
  };
  std::vector<u64> qs;
  for (u64 q = 3; q <= 300; ++q) qs.push_back(q);
  auto outs = parallel_map(qs.size(), o.workers, [&](std::size_t i) {
    Out out;
    for (auto& chi : character_group(qs[i])) {
      if (chi.is_principal() || !chi.is_primitive()) continue;
      double b = re_B(chi);
      for (double x : {50.0, 100.0, 1e3, 1e4}) {
        auto note = [&](double t, const char* id) {
          ++out.count;
          if (std::abs(t) > out.theta) {
            out.theta = std::abs(t);
            out.at = std::string(id) + " " + chi.id() + " x=" + f(x);
          }
        };
        note(lemma2_residual(x, chi, b).theta, "2.2");
        // theta that places |Re B| in the window's defining identity
        auto w = lemma3_window(x, chi);
        note((w.numerator / b - 1 - 1 / x) * std::sqrt(x) / 2, "2.3");
        note(lemma25_residual(x, chi).theta, "2.5");
      }
    }
    return out;
  });
  for (auto& x : outs) {
    count += x.count;
    if (x.theta > worst) {
      worst = x.theta;
      worst_at = x.at;
    }
  }
  r.measured = worst;
  r.threshold = 1;
  r.margin = 1 - worst;
  r.passed = worst <= 1;
  r.detail = std::to_string(count) + " residuals, largest at " + worst_at;
  return r;
}

CriterionResult c10(const ReproduceOptions&) {
  auto r = make(10, "3.1", "coprime-defect sums within their bounds, 3 <= m <= 200");
  double worst = 0;
  bool ok = true;
  for (u64 m = 3; m <= 200; ++m) {
    for (double x : {10.0, 100.0, 1000.0}) {
      auto s = lemma5_sums(x, m);
      ok = ok && s.holds1 && s.holds2;
      worst = std::max(worst, s.s1 / s.bound1);
      worst = std::max(worst, s.s2 / s.bound2);
    }
  }
  r.measured = worst;
  r.threshold = 1;
  r.margin = 1 - worst;
  r.passed = ok && worst <= 1;
  r.detail = "largest left/right ratio";
  return r;
}

CriterionResult c11(const ReproduceOptions&) {
  auto r = make(11, "method-floor", "c >= ((h-1)/(2h-1))^2 over kernels, lambda in [0.5, 20], h grid");
  std::vector<Kernel> kernels = {gamma_kernel(), fejer_kernel(0.5), fejer_kernel(1), fejer_kernel(2)};
  double worst = kInf;
  std::size_t feasible = 0;
  for (auto& k : kernels) {
    double l1 = line_l1(k).value;
    for (double h : {2.0, 3.0, 4.0, 10.0, 100.0, kInf}) {
      for (int i = 0; i <= 78; ++i) {
        double lambda = 0.5 + 0.25 * i;
        try {
          auto b = prop62_constant(k, lambda, h, l1);
          ++feasible;
          worst = std::min(worst, b.c - limit_constant(h));
        } catch (const Error& e) {
          if (e.kind() != ErrorKind::NonpositiveDenominator) throw;
        }
      }
    }
  }
  r.measured = worst;
  r.threshold = 0;
  r.margin = worst;
  r.passed = feasible > 0 && worst >= 0;
  r.detail = std::to_string(feasible) + " feasible (kernel, lambda, h) points; measured is min c - floor";
  return r;
}

}  // namespace

std::vector<CriterionResult> run_criteria(const ReproduceOptions& opts) {
  using Fn = CriterionResult (*)(const ReproduceOptions&);
  const Fn steps[] = {c1, c2, c3, c4, c5, c6, c7, c8, c9, c10, c11};
  std::vector<CriterionResult> out;
  for (auto step : steps) {
    auto start = std::chrono::steady_clock::now();
    CriterionResult r;
    try {
      r = step(opts);
    } catch (const std::exception& e) {
      r = make(static_cast<int>(out.size()) + 1, "error", "criterion raised an error");
      r.passed = false;
      r.detail = e.what();
    }
    r.seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    if (opts.log) *opts.log << "criterion " << r.number << " done in " << r.seconds << " s\n" << std::flush;
    out.push_back(std::move(r));
  }
  return out;
}

CriterionResult check_determinism(const ReproduceOptions& opts, const std::string& reference) {
  auto r = make(12, "determinism", "byte-identical CSV across runs and worker counts");
  auto start = std::chrono::steady_clock::now();
  ReproduceOptions one = opts, many = opts;
  one.workers = 1;
  many.workers = std::max(2u, opts.workers);
  std::string a = reference.empty() ? criteria_csv(run_criteria(many)) : reference;
  std::string b = criteria_csv(run_criteria(one));
  r.passed = a == b;
  r.measured = r.passed ? 0 : 1;
  r.threshold = 0;
  r.margin = -r.measured;
  r.detail = "workers 1 vs " + std::to_string(many.workers) + ", " + std::to_string(a.size()) + " bytes";
  r.seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
  return r;
}

Table criteria_table(const std::vector<CriterionResult>& results) {
  Table t;
  t.columns = {"criterion", "anchor", "title", "measured", "threshold", "margin", "verdict", "detail"};
  for (auto& r : results) {
    t.add({static_cast<std::int64_t>(r.number), r.anchor, r.title, r.measured, r.threshold, r.margin,
           std::string(r.passed ? "pass" : "fail"), r.detail});
  }
  return t;
}

std::string criteria_csv(const std::vector<CriterionResult>& results) {
  std::ostringstream s;
  write_table(s, criteria_table(results), OutputFormat::Csv);
  return s.str();
}

}  // namespace grhcheck
