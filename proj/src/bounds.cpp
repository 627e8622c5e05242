#include "grhcheck/bounds.hpp"

#include <cmath>
#include <limits>
#include <numbers>

#include "grhcheck/error.hpp"
#include "grhcheck/lvalues.hpp"
#include "grhcheck/special.hpp"

namespace grhcheck {

namespace {

constexpr double kThm11Threshold = 3000;
constexpr double kThm14Threshold = 20000;
constexpr double kLValueThreshold = 1e10;
constexpr u64 kClassNumberMeasureLimit = 10'000'000;
constexpr double kZetaMeasureLimit = 1e4;

enum class Side { Upper, UpperStrict, Lower };

BoundReport make(std::string id, u64 q, std::string target, std::optional<double> measured, double bound,
                 bool applicable, std::string conditions, Side side = Side::Upper) {
  BoundReport r;
  r.formula_id = std::move(id);
  r.q = q;
  r.target = std::move(target);
  r.measured = measured;
  r.bound = bound;
  r.applicable = applicable;
  r.conditions = std::move(conditions);
  if (!measured) {
    r.margin = std::numeric_limits<double>::quiet_NaN();
    r.verdict = Verdict::NotApplicable;
    return r;
  }
  double m = *measured;
  r.margin = side == Side::Lower ? m - bound : bound - m;
  bool ok = side == Side::UpperStrict ? m < bound : side == Side::Upper ? m <= bound : m >= bound;
  r.verdict = !applicable ? Verdict::NotApplicable : ok ? Verdict::Pass : Verdict::Fail;
  return r;
}

// measured = least prime from a search; a search that exhausted a ceiling at or above the
// bound is itself a failure
BoundReport from_search(std::string id, const SearchResult& s, double bound, bool applicable, std::string conditions,
                        Side side = Side::Upper) {
  if (s.found()) {
    return make(std::move(id), s.modulus, s.descriptor, static_cast<double>(*s.prime), bound, applicable,
                std::move(conditions), side);
  }
  auto r = make(std::move(id), s.modulus, s.descriptor, std::nullopt, bound, applicable, std::move(conditions));
  r.margin = bound - static_cast<double>(s.ceiling);
  if (!r.conditions.empty()) r.conditions += "; ";
  r.conditions += "no prime <= " + std::to_string(s.ceiling);
  r.verdict = applicable && static_cast<double>(s.ceiling) >= bound ? Verdict::Fail : Verdict::NotFound;
  return r;
}

std::string flag(const char* name, bool value) { return std::string(name) + (value ? "=yes" : "=no"); }

u64 least_prime_factor(const Factorization& f) { return f.factors.empty() ? 0 : f.factors.front().first; }

std::vector<u64> q_values(const VerifyParams& p, u64 floor) {
  std::vector<u64> qs;
  for (u64 q = std::max(p.qmin, floor); q <= p.qmax; ++q) qs.push_back(q);
  return qs;
}

}  // namespace

std::string_view to_string(Verdict v) noexcept {
  switch (v) {
    case Verdict::Pass: return "pass";
    case Verdict::Fail: return "fail";
    case Verdict::NotApplicable: return "not-applicable";
    case Verdict::NotFound: return "not-found";
  }
  return "?";
}

BoundReport cor12_report(u64 q) {
  const double bound = log_squared_bound(static_cast<double>(q));
  if (q < 5 || !is_prime(q)) {
    return make("cor12", q, "outside:squares", std::nullopt, bound, false, "prime q >= 5 required");
  }
  return from_search("cor12", least_qnr(q), bound, true, "q prime >= 5", Side::UpperStrict);
}

BoundReport thm11_report(const SubgroupSpec& h, u64 ceiling) {
  const u64 q = h.modulus();
  auto quant = thm11_quantities(h.group_ptr()->factorization());
  bool big = static_cast<double>(q) >= kThm11Threshold;
  std::string cond = flag("q>=3000", big) + "; A=" + std::to_string(quant.a) + "; B=" + std::to_string(quant.b);
  if (!h.proper()) return make("thm11", q, "outside:" + h.describe(), std::nullopt, quant.bound, false, cond + "; H=G");
  return from_search("thm11", least_prime_outside_subgroup(h, ceiling), quant.bound, big, cond);
}

BoundReport thm12_check(const SubgroupSpec& h, u64 ceiling) {
  const u64 q = h.modulus();
  const double bound = log_squared_bound(static_cast<double>(q));
  bool big = static_cast<double>(q) >= kThm11Threshold;
  u64 lpf = least_prime_factor(h.group_ptr()->factorization());
  bool rough = lpf == 0 || static_cast<double>(lpf) >= bound;
  std::string cond = flag("q>=3000", big) + "; " + flag("no-prime-factor-below-bound", rough);
  if (!h.proper()) return make("thm12", q, "outside:" + h.describe(), std::nullopt, bound, false, cond + "; H=G");
  return from_search("thm12", least_prime_outside_subgroup(h, ceiling), bound, big && rough, cond);
}

double thm14_bound(double q, double h) { return thm14_formula(q, h); }

BoundReport thm14_report(const SubgroupSpec& h, u64 a, u64 ceiling) {
  const u64 q = h.modulus();
  const double formula = thm14_formula(static_cast<double>(q), static_cast<double>(h.index()));
  const double bound = std::max(kThm14SmallPrime, formula);
  bool big = static_cast<double>(q) >= kThm14Threshold;
  std::string cond = flag("q>=20000", big) + "; " + flag("h>1", h.proper()) + "; formula=" + std::to_string(formula) +
                     "; passes at <= 1e9 or <= formula";
  return from_search("thm14", least_prime_in_coset(h, a, ceiling), bound, big && h.proper(), cond);
}

double cor15_bound(u64 q) { return cor15_formula(q); }

BoundReport cor15_report(u64 q, u64 a, u64 ceiling) {
  const double bound = cor15_formula(q);
  return from_search("cor15", least_prime_in_ap(q, a, ceiling), bound, q > 3, flag("q>3", q > 3));
}

BoundReport cor15_max_report(u64 q, u64 ceiling) {
  const double bound = cor15_formula(q);
  auto all = least_primes_in_all_progressions(q, ceiling);
  const SearchResult* worst = nullptr;
  for (auto& s : all) {
    if (!s.found()) {
      worst = &s;
      break;
    }
    if (!worst || *s.prime > *worst->prime) worst = &s;
  }
  auto r = from_search("cor15", *worst, bound, q > 3, flag("q>3", q > 3) + "; worst " + worst->descriptor);
  r.target = "ap:max";
  return r;
}

Thm15Bounds thm15_bounds(double q) { return thm15_formulas(q); }

std::vector<BoundReport> thm15_reports(const DirichletCharacter& chi) {
  if (!chi.is_primitive()) throw Error(ErrorKind::InvalidArgument, "the L(1) bounds need a primitive character");
  const u64 q = chi.modulus();
  auto b = thm15_formulas(static_cast<double>(q));
  double l = std::abs(L_at_1(chi).value);
  bool big = static_cast<double>(q) >= kLValueThreshold;
  std::string cond = flag("q>=1e10", big);
  return {make("thm15-upper", q, "chi=" + chi.id(), l, b.upper_l, big, cond),
          make("thm15-inverse", q, "chi=" + chi.id(), 1 / l, b.upper_inverse_l, big, cond)};
}

std::vector<BoundReport> zeta_line_reports(double t) {
  auto b = thm15_formulas(t);
  bool big = t >= kLValueThreshold;
  std::optional<double> z;
  if (t <= kZetaMeasureLimit) z = std::abs(zeta_1_plus_it(t));
  std::optional<double> inv;
  if (z) inv = 1 / *z;
  std::string cond = flag("t>=1e10", big);
  if (!z) cond += "; |zeta(1+it)| not evaluated above t = 1e4";
  u64 tq = static_cast<u64>(std::llround(t));
  char target[64];
  std::snprintf(target, sizeof target, "t=%.17g", t);
  return {make("zeta-upper", tq, target, z, b.upper_l, big, cond),
          make("zeta-inverse", tq, target, inv, b.upper_inverse_l, big, cond)};
}

ClassNumberBounds cor16_bounds_real(double q) {
  auto f = cor16_formulas(q);
  return {f.lower, f.upper, std::floor(f.lower)};
}

ClassNumberBounds cor16_bounds(u64 q) {
  if (!is_fundamental_discriminant(-static_cast<i64>(q))) {
    throw Error(ErrorKind::NotFundamental, "-" + std::to_string(q) + " is not a fundamental discriminant");
  }
  return cor16_bounds_real(static_cast<double>(q));
}

std::vector<BoundReport> cor16_reports(u64 q) {
  auto b = cor16_bounds(q);
  bool big = static_cast<double>(q) >= kLValueThreshold;
  std::optional<double> h;
  std::string cond = flag("q>=1e10", big);
  if (q > 4 && q <= kClassNumberMeasureLimit) {
    h = static_cast<double>(class_number_bqf(q).h);
  } else {
    cond += "; class number not computed";
  }
  return {make("cor16-lower", q, "h(-q)", h, b.lower, big, cond, Side::Lower),
          make("cor16-upper", q, "h(-q)", h, b.upper, big, cond)};
}

ElementaryFacts section43_elementary(u64 q) {
  if (q < 2) throw Error(ErrorKind::Domain, "q must be at least 2");
  auto f = factorize(q);
  ElementaryFacts e;
  e.q = q;
  e.phi = f.phi();
  e.omega = f.omega();
  e.applicable = q > 20000;
  const double lq = std::log(static_cast<double>(q));
  e.phi_at_least_4156 = e.phi >= 4156;
  // compare in logs: omega log 2 <= (3/7) log q, log phi >= (5/6) log q
  e.two_omega_le_q37 = e.omega * std::numbers::ln2 <= 3.0 / 7.0 * lq;
  e.phi_ge_q56 = std::log(static_cast<double>(e.phi)) >= 5.0 / 6.0 * lq;
  return e;
}

bool known_formula(std::string_view id) {
  for (auto k : {"cor12", "thm11", "thm12", "thm14", "cor15", "cor15-all", "cor16"})
    if (id == k) return true;
  return false;
}

std::vector<BoundReport> verify(std::string_view id, const VerifyParams& p) {
  if (!known_formula(id)) throw Error(ErrorKind::InvalidArgument, "unknown formula id " + std::string(id));
  if (p.qmax < p.qmin) throw Error(ErrorKind::InvalidArgument, "empty q range");
  const std::string fid(id);

  std::vector<u64> qs;
  if (fid == "cor12") {
    for (u64 q = std::max<u64>(p.qmin, 5); q <= p.qmax; ++q)
      if (is_prime(q)) qs.push_back(q);
  } else if (fid == "cor16") {
    for (u64 q = std::max<u64>(p.qmin, 5); q <= p.qmax; ++q)
      if (is_fundamental_discriminant(-static_cast<i64>(q))) qs.push_back(q);
  } else {
    qs = q_values(p, 3);
  }

  auto per_q = [&](std::size_t i) -> std::vector<BoundReport> {
    const u64 q = qs[i];
    if (fid == "cor12") return {cor12_report(q)};
    if (fid == "cor16") return cor16_reports(q);
    if (fid == "cor15") return {cor15_max_report(q, p.ceiling)};
    if (fid == "cor15-all") {
      std::vector<BoundReport> out;
      const double bound = cor15_formula(q);
      for (auto& s : least_primes_in_all_progressions(q, p.ceiling)) {
        out.push_back(from_search("cor15", s, bound, q > 3, flag("q>3", q > 3)));
      }
      return out;
    }
    auto group = UnitGroupStructure::create(q);
    auto h = SubgroupSpec::kth_powers(group, p.power);
    if (fid == "thm11") return {thm11_report(h, p.ceiling)};
    if (fid == "thm12") return {thm12_check(h, p.ceiling)};
    // thm14
    std::vector<BoundReport> out;
    if (!h.proper()) return out;
    if (p.coset != 0) {
      if (group->is_unit(p.coset % q)) out.push_back(thm14_report(h, p.coset % q, p.ceiling));
      return out;
    }
    for (u64 a : h.coset_representatives()) {
      if (h.contains(a)) continue;
      out.push_back(thm14_report(h, a, p.ceiling));
    }
    return out;
  };

  auto nested = parallel_map(qs.size(), p.workers, per_q, p.progress);
  std::vector<BoundReport> flat;
  for (auto& v : nested)
    for (auto& r : v) flat.push_back(std::move(r));
  return flat;
}

}  // namespace grhcheck
