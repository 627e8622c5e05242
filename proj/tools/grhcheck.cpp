// grhcheck: scans, single evaluations, kernel constants, residual checks and the acceptance checklist.

#include <CLI11.hpp>

#include <charconv>
#include <cmath>
#include <cstdlib>
#include <fstream>
#include <iostream>
#include <limits>
#include <memory>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include "grhcheck/bounds.hpp"
#include "grhcheck/characters.hpp"
#include "grhcheck/error.hpp"
#include "grhcheck/explicit_formula.hpp"
#include "grhcheck/kernels.hpp"
#include "grhcheck/lvalues.hpp"
#include "grhcheck/report.hpp"
#include "grhcheck/reproduce.hpp"

using namespace grhcheck;

namespace {

constexpr int kUsage = 1;
constexpr double kInf = std::numeric_limits<double>::infinity();

struct UsageError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

struct Global {
  std::string format = "csv";
  std::string out;
  unsigned workers = 1;
  u64 ceiling = 0;
  double tolerance = 0.0;  // slack added to every pass/fail comparison the CLI makes itself
};

// Accepts plain integers and exact scientific notation such as 1e11.
double parse_number(const std::string& s) {
  double v = 0;
  auto [p, ec] = std::from_chars(s.data(), s.data() + s.size(), v);
  if (ec != std::errc() || p != s.data() + s.size()) throw UsageError("not a number: " + s);
  return v;
}

u64 parse_u64(const std::string& s) {
  u64 v = 0;
  auto [p, ec] = std::from_chars(s.data(), s.data() + s.size(), v);
  if (ec == std::errc() && p == s.data() + s.size()) return v;
  double d = parse_number(s);
  if (d < 0 || d != std::floor(d) || d >= 1.8e19) throw UsageError("not a non-negative integer: " + s);
  return static_cast<u64>(d);
}

double parse_h(const std::string& s) {
  if (s == "inf" || s == "infinity" || s == "oo") return kInf;
  return parse_number(s);
}

std::vector<double> parse_list(const std::string& s) {
  std::vector<double> out;
  std::stringstream in(s);
  std::string item;
  while (std::getline(in, item, ',')) out.push_back(parse_number(item));
  if (out.empty()) throw UsageError("empty list");
  return out;
}

// "Q", "A..B" or --qmin/--qmax
std::pair<u64, u64> q_range(const std::string& q, const std::string& qmin, const std::string& qmax) {
  u64 lo = 0, hi = 0;
  if (!q.empty()) {
    auto dots = q.find("..");
    if (dots == std::string::npos) {
      lo = hi = parse_u64(q);
    } else {
      lo = parse_u64(q.substr(0, dots));
      hi = parse_u64(q.substr(dots + 2));
    }
  } else {
    if (qmax.empty()) throw UsageError("give --q or --qmax");
    lo = qmin.empty() ? 1 : parse_u64(qmin);
    hi = parse_u64(qmax);
  }
  if (lo == 0 || lo > hi) throw UsageError("empty q range");
  return {lo, hi};
}

// squares | powers:K | gen:A,B,... | trivial
SubgroupSpec subgroup(u64 q, const std::string& sel) {
  auto g = UnitGroupStructure::create(q);
  if (sel == "squares") return SubgroupSpec::squares(g);
  if (sel == "trivial") return SubgroupSpec::trivial(g);
  if (sel.rfind("powers:", 0) == 0) return SubgroupSpec::kth_powers(g, parse_u64(sel.substr(7)));
  if (sel.rfind("gen:", 0) == 0) {
    std::vector<u64> gens;
    for (double x : parse_list(sel.substr(4))) gens.push_back(static_cast<u64>(x));
    return SubgroupSpec::generated_by(g, gens);
  }
  throw UsageError("unknown subgroup selector: " + sel);
}

u64 subgroup_power(const std::string& sel) {
  if (sel == "squares") return 2;
  if (sel.rfind("powers:", 0) == 0) return parse_u64(sel.substr(7));
  throw UsageError("range scans take --subgroup squares or powers:K");
}

class Output {
 public:
  explicit Output(const Global& g) : format_(parse_format(g.format)) {
    if (!g.out.empty()) {
      file_ = std::make_unique<std::ofstream>(g.out, std::ios::binary);
      if (!*file_) throw std::runtime_error("cannot open " + g.out);
    }
  }
  std::ostream& stream() { return file_ ? *file_ : std::cout; }
  OutputFormat format() const { return format_; }
  void table(const Table& t) {
    write_table(stream(), t, format_);
    stream().flush();
    if (!stream()) throw std::runtime_error("write failed");
  }
  // free text for the human format only
  void note(const std::string& line) {
    if (format_ == OutputFormat::Human) stream() << line << '\n';
  }

 private:
  OutputFormat format_;
  std::unique_ptr<std::ofstream> file_;
};

ProgressFn progress_bar(const char* label) {
  return [label, last = std::make_shared<std::size_t>(0)](std::size_t done, std::size_t total) {
    std::size_t pct = total ? done * 100 / total : 100;
    if (pct == *last && done != total) return;
    *last = pct;
    std::cerr << '\r' << label << ' ' << done << '/' << total << (done == total ? "\n" : "") << std::flush;
  };
}

int emit_reports(Output& out, const std::vector<BoundReport>& reports) {
  out.table(bound_report_table(reports));
  if (out.format() == OutputFormat::Human) {
    for (auto& r : reports)
      if (!r.conditions.empty()) out.note("  " + r.formula_id + " q=" + std::to_string(r.q) + ": " + r.conditions);
  }
  return summarize(reports).exit_status();
}

int verdict_status(bool all_pass) { return all_pass ? 0 : 2; }

std::string verdict(bool ok) { return ok ? "pass" : "fail"; }

std::vector<DirichletCharacter> select_characters(u64 q, const std::string& chi, bool primitive_nonprincipal) {
  std::vector<DirichletCharacter> out;
  for (auto& c : character_group(q)) {
    if (!chi.empty()) {
      if (c.id() == chi || c.id() == std::to_string(q) + "[" + chi + "]") out.push_back(c);
      continue;
    }
    if (primitive_nonprincipal && (c.is_principal() || !c.is_primitive())) continue;
    out.push_back(c);
  }
  if (out.empty()) throw UsageError("no matching character mod " + std::to_string(q));
  return out;
}

// ---- scan ----------------------------------------------------------------------------------

struct ScanArgs {
  std::string target, q, qmin, qmax, subgroup = "squares";
  u64 coset = 0;
};

int cmd_scan(const Global& g, const ScanArgs& a) {
  static const std::vector<std::pair<std::string, std::string>> ids = {
      {"qnr", "cor12"},      {"subgroup", "thm11"}, {"rough", "thm12"},  {"coset", "thm14"},
      {"ap", "cor15"},       {"ap-all", "cor15-all"}, {"classnum", "cor16"}};
  std::string fid;
  for (auto& [name, id] : ids)
    if (a.target == name || a.target == id) fid = id;
  if (fid.empty()) throw UsageError("unknown scan target: " + a.target);
  Output out(g);
  auto [lo, hi] = q_range(a.q, a.qmin, a.qmax);
  VerifyParams p;
  p.qmin = lo;
  p.qmax = hi;
  p.power = subgroup_power(a.subgroup);
  p.coset = a.coset;
  p.ceiling = g.ceiling;
  p.workers = g.workers;
  p.progress = progress_bar(fid.c_str());
  return emit_reports(out, verify(fid, p));
}

// ---- eval ----------------------------------------------------------------------------------

struct EvalArgs {
  std::string id, q, h = "2", t, subgroup = "squares", chi;
  std::optional<u64> a;
};

int eval_alpha(Output& out, const EvalArgs& a) {
  double h = parse_h(a.h);
  auto best = optimize_lambda(gamma_kernel(), h);
  Table t;
  t.columns = {"h", "lambda_star", "c_star", "floor", "denominator"};
  t.add({h, best.lambda, best.c, limit_constant(h), best.denominator});
  out.table(t);
  out.note("  least prime outside H <= (c + o(1)) (log q)^2 for index h");
  return 0;
}

int eval_class_bounds(Output& out, double q) {
  auto b = cor16_bounds_real(q);
  Table t;
  t.columns = {"formula_id", "q", "lower", "upper", "lower_floor"};
  t.add({std::string("cor16"), q, b.lower, b.upper, b.lower_floor});
  out.table(t);
  out.note("  " + format_double(b.lower) + " <= h(-q) <= " + format_double(b.upper));
  return 0;
}

int eval_elementary(Output& out, u64 q) {
  auto f = section43_elementary(q);
  Table t;
  t.columns = {"q", "phi", "omega", "applicable", "phi>=4156", "2^omega<=q^(3/7)", "phi>=q^(5/6)", "verdict"};
  std::string v = !f.applicable ? "not-applicable" : f.all() ? "pass" : "fail";
  t.add({static_cast<std::int64_t>(q), static_cast<std::int64_t>(f.phi), static_cast<std::int64_t>(f.omega),
         f.applicable, f.phi_at_least_4156, f.two_omega_le_q37, f.phi_ge_q56, v});
  out.table(t);
  return v == "fail" ? 2 : 0;
}

int cmd_eval(const Global& g, const EvalArgs& a) {
  Output out(g);
  const std::string& id = a.id;
  if (id == "alpha") return eval_alpha(out, a);
  if (id == "thm15" && !a.t.empty()) return emit_reports(out, zeta_line_reports(parse_number(a.t)));
  if (a.q.empty()) throw UsageError("eval " + id + " needs --q");
  if (id == "cor16") {
    double qd = parse_number(a.q);
    u64 q = static_cast<u64>(qd);
    bool fundamental = qd == std::floor(qd) && qd < 9e18 && is_fundamental_discriminant(-static_cast<i64>(q));
    if (!fundamental) return eval_class_bounds(out, qd);
    return emit_reports(out, cor16_reports(q));
  }
  u64 q = parse_u64(a.q);
  if (id == "cor12") return emit_reports(out, {cor12_report(q)});
  if (id == "thm11") return emit_reports(out, {thm11_report(subgroup(q, a.subgroup), g.ceiling)});
  if (id == "thm12") return emit_reports(out, {thm12_check(subgroup(q, a.subgroup), g.ceiling)});
  if (id == "thm14") {
    if (!a.a) throw UsageError("eval thm14 needs --a");
    return emit_reports(out, {thm14_report(subgroup(q, a.subgroup), *a.a, g.ceiling)});
  }
  if (id == "cor15") {
    return emit_reports(out, {a.a ? cor15_report(q, *a.a, g.ceiling) : cor15_max_report(q, g.ceiling)});
  }
  if (id == "thm15") {
    std::vector<BoundReport> reports;
    for (auto& chi : select_characters(q, a.chi, true)) {
      auto r = thm15_reports(chi);
      reports.insert(reports.end(), r.begin(), r.end());
    }
    return emit_reports(out, reports);
  }
  if (id == "sec43") return eval_elementary(out, q);
  throw UsageError("unknown formula id: " + id);
}

// ---- kernel --------------------------------------------------------------------------------

struct KernelArgs {
  std::string kind = "gamma";
  double alpha = 1.0;
  bool l1 = false, optimize = false;
  std::optional<double> lambda;
  std::optional<std::string> h;
  std::optional<double> mellin_u;
};

int cmd_kernel(const Global& g, const KernelArgs& a) {
  Output out(g);
  Kernel k = a.kind == "gamma" ? gamma_kernel() : a.kind == "fejer" ? fejer_kernel(a.alpha) : throw UsageError("kernel is gamma or fejer");
  Table t;
  t.columns = {"kernel", "quantity", "value", "error"};
  auto row = [&](const char* name, double v, std::optional<double> err = {}) {
    Cell e = err ? Cell(*err) : Cell(std::monostate{});
    t.add({k.descriptor, std::string(name), v, e});
  };
  row("K(1/2)", k.at_half);
  bool any = a.l1 || a.optimize || a.lambda || a.mellin_u;
  std::optional<QuadratureResult> l1;
  if (a.l1 || !any || a.lambda || a.optimize) {
    l1 = line_l1(k);
    row("line_l1", l1->value, l1->error);
  }
  if (a.lambda) {
    auto w = weighted_integral(k, *a.lambda);
    row("W(lambda)", w.value, w.error);
    if (a.h) {
      auto c = prop62_constant(k, *a.lambda, parse_h(*a.h), l1->value);
      row("c", c.c);
      row("denominator", c.denominator);
    }
  }
  if (a.optimize) {
    double h = parse_h(a.h.value_or("2"));
    auto best = optimize_lambda(k, h);
    row("lambda_star", best.lambda);
    row("c_star", best.c);
    row("floor", limit_constant(h));
  }
  if (a.mellin_u) {
    auto m = mellin_numeric_check(k, *a.mellin_u);
    row("mellin_numeric", m.numeric, m.difference);
    row("mellin_closed_form", m.closed_form);
  }
  out.table(t);
  return 0;
}

// ---- lemma ---------------------------------------------------------------------------------

struct LemmaArgs {
  std::string id, x = "100", q, chi;
  std::vector<u64> m;
  std::size_t grid = 2000;
};

int cmd_lemma(const Global& g, const LemmaArgs& a) {
  Output out(g);
  auto xs = parse_list(a.x);
  const double tol = g.tolerance;
  bool all = true;
  Table t;
  auto residual_table = [&] {
    t.columns = {"lemma", "x", "character", "lhs", "main", "envelope", "theta", "verdict"};
  };
  auto add_residual = [&](const ExplicitFormulaReport& r) {
    bool ok = std::abs(r.theta) <= 1 + tol;
    all = all && ok;
    Cell chi = r.character ? Cell(*r.character) : Cell(std::monostate{});
    t.add({r.lemma, r.x, chi, r.lhs, r.main_terms, r.envelope, r.theta, verdict(ok)});
  };
  auto characters = [&] {
    if (a.q.empty()) throw UsageError("lemma " + a.id + " needs --q");
    return select_characters(parse_u64(a.q), a.chi, true);
  };

  static const std::vector<std::pair<std::string, Identity>> plain = {
      {"2.1", Identity::PrimeLogSum}, {"2.4", Identity::WeightedPsiSum}, {"2.6", Identity::LogLogSum}};
  for (auto& [name, ident] : plain) {
    if (a.id != name) continue;
    residual_table();
    for (double x : xs) add_residual(lemma_residual(ident, x));
    out.table(t);
    return verdict_status(all);
  }
  if (a.id == "2.2" || a.id == "2.5") {
    residual_table();
    for (auto& chi : characters()) {
      double b = a.id == "2.2" ? re_B(chi) : 0.0;
      for (double x : xs) add_residual(a.id == "2.2" ? lemma2_residual(x, chi, b) : lemma25_residual(x, chi));
    }
  } else if (a.id == "2.3") {
    t.columns = {"x", "character", "lower", "upper", "abs_re_B", "verdict"};
    for (auto& chi : characters()) {
      double b = re_B(chi);
      for (double x : xs) {
        auto w = lemma3_window(x, chi);
        bool ok = w.contains(b, tol);
        all = all && ok;
        t.add({x, chi.id(), w.lower, w.upper, b, verdict(ok)});
      }
    }
  } else if (a.id == "3.1") {
    if (a.m.empty()) throw UsageError("lemma 3.1 needs --m");
    t.columns = {"m", "x", "s1", "bound1", "s2", "bound2", "verdict"};
    for (u64 m : a.m) {
      for (double x : xs) {
        auto s = lemma5_sums(x, m);
        bool ok = s.s1 <= s.bound1 + tol && s.s2 <= s.bound2 + tol;
        all = all && ok;
        t.add({static_cast<std::int64_t>(m), x, s.s1, s.bound1, s.s2, s.bound2, verdict(ok)});
      }
    }
  } else if (a.id == "5.1") {
    t.columns = {"x", "character", "lhs", "rhs", "verdict"};
    for (auto& chi : characters()) {
      for (double x : xs) {
        auto c = lemma51_check(x, chi);
        bool ok = c.holds || c.lhs >= c.rhs - tol;
        all = all && ok;
        t.add({x, chi.id(), c.lhs, c.rhs, verdict(ok)});
      }
    }
  } else if (a.id == "trig") {
    t.columns = {"x", "grid", "min_value", "argmin", "construction", "verdict"};
    for (double x : xs) {
      auto c = trig_poly_check(x, a.grid);
      bool ok = c.holds || c.min_value >= -tol;
      all = all && ok;
      t.add({x, static_cast<std::int64_t>(c.grid), c.min_value, c.argmin, c.construction, verdict(ok)});
    }
  } else if (a.id == "gap") {
    t.columns = {"x", "character", "gap", "bound", "verdict"};
    if (a.q.empty()) throw UsageError("lemma gap needs --q");
    for (auto& chi : select_characters(parse_u64(a.q), a.chi, false)) {
      if (chi.is_principal()) continue;
      for (double x : xs) {
        auto r = imprimitive_gap(x, chi);
        bool ok = r.holds || r.gap <= r.bound + tol;
        all = all && ok;
        t.add({x, chi.id(), r.gap, r.bound, verdict(ok)});
      }
    }
  } else {
    throw UsageError("unknown lemma id: " + a.id + " (2.1-2.6, 3.1, 5.1, trig, gap)");
  }
  out.table(t);
  return verdict_status(all);
}

// ---- lvalue / classnum ---------------------------------------------------------------------

struct LValueArgs {
  std::string q, chi, method = "hurwitz";
  bool primitive_only = false;
};

int cmd_lvalue(const Global& g, const LValueArgs& a) {
  Output out(g);
  if (a.q.empty()) throw UsageError("lvalue needs --q");
  u64 q = parse_u64(a.q);
  LMethod method = parse_lmethod(a.method);
  Table t;
  t.columns = {"character", "conductor", "parity", "method", "re", "im", "abs", "error_estimate"};
  for (auto& chi : select_characters(q, a.chi, false)) {
    if (chi.is_principal() && a.chi.empty()) continue;
    if (a.primitive_only && !chi.is_primitive()) continue;
    // the finite formula covers real primitive characters only
    if (method == LMethod::FiniteGauss && a.chi.empty() && (!chi.is_real() || !chi.is_primitive())) continue;
    auto r = L_at_1(chi, method);
    t.add({chi.id(), static_cast<std::int64_t>(chi.conductor()), static_cast<std::int64_t>(chi.parity()),
           std::string(to_string(r.method)), r.value.real(), r.value.imag(), std::abs(r.value), r.error_estimate});
  }
  out.table(t);
  return 0;
}

struct ClassArgs {
  std::string q, qmin, qmax;
};

int cmd_classnum(const Global& g, const ClassArgs& a) {
  Output out(g);
  auto [lo, hi] = q_range(a.q, a.qmin, a.qmax);
  std::vector<u64> qs;
  for (u64 q = std::max<u64>(lo, 5); q <= hi; ++q)
    if (is_fundamental_discriminant(-static_cast<i64>(q))) qs.push_back(q);
  if (qs.empty()) throw UsageError("no fundamental discriminants -q in range");
  struct Row {
    ClassNumberResult bqf, formula;
  };
  auto rows = parallel_map(
      qs.size(), g.workers, [&](std::size_t i) { return Row{class_number_bqf(qs[i]), class_number_via_formula(qs[i])}; },
      progress_bar("classnum"));
  Table t;
  t.columns = {"q", "h_forms", "h_formula", "raw", "distance", "verdict"};
  bool all = true;
  for (auto& r : rows) {
    bool ok = r.bqf.h == r.formula.h && r.formula.distance < 0.05 + g.tolerance;
    all = all && ok;
    t.add({static_cast<std::int64_t>(r.bqf.q), static_cast<std::int64_t>(r.bqf.h),
           static_cast<std::int64_t>(r.formula.h), r.formula.raw_value, r.formula.distance, verdict(ok)});
  }
  out.table(t);
  return verdict_status(all);
}

// ---- reproduce-paper -----------------------------------------------------------------------

struct ReproduceArgs {
  bool extended = false;
  bool skip_determinism = false;
};

int cmd_reproduce(const Global& g, const ReproduceArgs& a) {
  Output out(g);
  ReproduceOptions opts;
  opts.workers = g.workers;
  opts.extended = a.extended;
  opts.log = &std::cerr;
  auto results = run_criteria(opts);
  if (!a.skip_determinism) {
    auto csv = criteria_csv(results);
    // criterion 12 needs a multi-worker reference; the first run is one only if workers > 1
    results.push_back(check_determinism(opts, g.workers > 1 ? csv : std::string{}));
  }
  out.table(criteria_table(results));
  bool all = true;
  for (auto& r : results) all = all && r.passed;
  return verdict_status(all);
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Numerical checks for explicit least-prime and L(1) bounds"};
  app.set_help_flag("--help", "print help");
  app.require_subcommand(1);
  app.fallthrough();
  Global g;
  app.add_option("--format", g.format, "csv | json | json-lines | human")->capture_default_str();
  app.add_option("--out", g.out, "write data to this file instead of stdout");
  app.add_option("--workers", g.workers, "worker threads")->check(CLI::Range(1u, 1024u))->capture_default_str();
  app.add_option("--ceiling", g.ceiling, "search ceiling override (0: default)");
  app.add_option("--tolerance", g.tolerance, "slack on pass/fail comparisons")->check(CLI::NonNegativeNumber);

  ScanArgs scan;
  auto* s = app.add_subcommand("scan", "verify a bound across a range of moduli");
  s->add_option("target", scan.target, "qnr | subgroup | rough | coset | ap | ap-all | classnum")->required();
  s->add_option("--q", scan.q, "Q or A..B");
  s->add_option("--qmin", scan.qmin);
  s->add_option("--qmax", scan.qmax);
  s->add_option("--subgroup", scan.subgroup, "squares | powers:K")->capture_default_str();
  s->add_option("--coset", scan.coset, "coset representative (0: every nontrivial coset)");

  EvalArgs eval;
  auto* e = app.add_subcommand("eval", "evaluate one bound");
  e->add_option("id", eval.id, "cor12 | thm11 | thm12 | thm14 | cor15 | thm15 | cor16 | alpha | sec43")->required();
  e->add_option("--q", eval.q);
  e->add_option("--a", eval.a, "residue class");
  e->add_option("--h", eval.h, "index for alpha (number or inf)")->capture_default_str();
  e->add_option("--t", eval.t, "height for the zeta(1+it) variant");
  e->add_option("--subgroup", eval.subgroup, "squares | powers:K | gen:A,B | trivial")->capture_default_str();
  e->add_option("--chi", eval.chi, "character id (exponent list)");

  KernelArgs kern;
  auto* k = app.add_subcommand("kernel", "kernel integrals and bound constants");
  k->add_option("kind", kern.kind, "gamma | fejer")->capture_default_str();
  k->add_option("--alpha", kern.alpha, "Fejer parameter")->check(CLI::PositiveNumber)->capture_default_str();
  k->add_flag("--l1", kern.l1, "line integral of |K|");
  k->add_flag("--optimize", kern.optimize, "minimise c over lambda");
  k->add_option("--lambda", kern.lambda, "evaluate W(lambda)");
  k->add_option("--h", kern.h, "index (number or inf)");
  k->add_option("--mellin", kern.mellin_u, "compare numeric and closed-form Mellin weight at u");

  LemmaArgs lem;
  auto* l = app.add_subcommand("lemma", "explicit-formula residuals");
  l->add_option("id", lem.id, "2.1 .. 2.6 | 3.1 | 5.1 | trig | gap")->required();
  l->add_option("--x", lem.x, "comma-separated x values")->capture_default_str();
  l->add_option("--q", lem.q);
  l->add_option("--chi", lem.chi, "character id (exponent list)");
  l->add_option("--m", lem.m, "moduli for 3.1")->delimiter(',');
  l->add_option("--grid", lem.grid, "phase grid for trig")->capture_default_str();

  LValueArgs lv;
  auto* v = app.add_subcommand("lvalue", "L(1, chi) for characters mod q");
  v->add_option("--q", lv.q)->required();
  v->add_option("--chi", lv.chi, "character id (exponent list)");
  v->add_option("--method", lv.method, "hurwitz | gauss | series")->capture_default_str();
  v->add_flag("--primitive", lv.primitive_only);

  ClassArgs cn;
  auto* c = app.add_subcommand("classnum", "h(-q) by reduced forms and by the class number formula");
  c->add_option("--q", cn.q, "Q or A..B");
  c->add_option("--qmin", cn.qmin);
  c->add_option("--qmax", cn.qmax);

  ReproduceArgs rp;
  auto* r = app.add_subcommand("reproduce-paper", "run every acceptance criterion and print the checklist");
  r->add_flag("--extended", rp.extended, "progression scan up to q = 20000");
  r->add_flag("--skip-determinism", rp.skip_determinism, "omit the rerun comparison");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& err) {
    int code = app.exit(err);
    return code == 0 ? 0 : kUsage;
  }

  try {
    parse_format(g.format);
    if (*s) return cmd_scan(g, scan);
    if (*e) return cmd_eval(g, eval);
    if (*k) return cmd_kernel(g, kern);
    if (*l) return cmd_lemma(g, lem);
    if (*v) return cmd_lvalue(g, lv);
    if (*c) return cmd_classnum(g, cn);
    if (*r) return cmd_reproduce(g, rp);
  } catch (const UsageError& err) {
    std::cerr << "usage error: " << err.what() << '\n';
    return kUsage;
  } catch (const Error& err) {
    std::cerr << "error: " << err.what() << '\n';
    bool usage = err.kind() == ErrorKind::InvalidArgument || err.kind() == ErrorKind::Domain ||
                 err.kind() == ErrorKind::NotFundamental || err.kind() == ErrorKind::ImproperSubgroup ||
                 err.kind() == ErrorKind::NonUnitCoset || err.kind() == ErrorKind::ModulusTooLarge;
    return usage ? kUsage : 2;
  } catch (const std::exception& err) {
    std::cerr << "error: " << err.what() << '\n';
    return kUsage;
  }
  return kUsage;
}
