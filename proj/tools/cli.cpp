#include "cli.hpp"

#include <cstdio>
#include <cstdlib>
#include <memory>
#include <optional>

#include <CLI11.hpp>
#include <json.hpp>

#include "hsum/audit.hpp"
#include "hsum/catalog.hpp"
#include "hsum/error.hpp"
#include "hsum/eta_engine.hpp"
#include "hsum/eta_spec.hpp"
#include "hsum/mzv_numeric.hpp"
#include "hsum/mzv_rewrite.hpp"
#include "hsum/parse.hpp"
#include "hsum/series.hpp"
#include "hsum/verify.hpp"

namespace hsum::cli {

namespace {

constexpr int kExitFail = 1;
constexpr int kExitUsage = 2;

struct Options {
  std::optional<double> tol;
  std::optional<std::int64_t> max_terms;
  std::string cache;
  bool json = false;
  bool timing = false;
  unsigned threads = 0;

  std::string positional;
  std::string u;
  int start = 1;
  std::optional<int> k, l, q, n;
};

std::string value_line(double value, double bound) {
  char buf[96];
  std::snprintf(buf, sizeof buf, "%.12g ± %g", value, bound);
  return buf;
}

nlohmann::ordered_json num(double x) { return std::strtod(fmt12(x).c_str(), nullptr); }

void add_common(CLI::App* sub, Options& o, bool evaluates) {
  sub->add_flag("--json", o.json, "JSON output");
  if (!evaluates) return;
  sub->add_option("--tol", o.tol, "absolute tolerance")->check(CLI::Range(1e-10, 1e-2));
  sub->add_option("--max-terms", o.max_terms, "term budget")->check(CLI::PositiveNumber);
  sub->add_option("--cache", o.cache, "zeta cache file (default: $HSUM_CACHE)");
}

int eval_mzv(const Options& o, std::ostream& out) {
  const double tol = o.tol.value_or(1e-8);
  Composition I = Composition::parse(o.positional);
  ZetaEvaluator ev(default_zeta_evaluator());
  if (o.max_terms) ev = ZetaEvaluator(nullptr, *o.max_terms);
  NumericValue v = o.max_terms ? ev.zeta_value(I, tol) : zeta_value(I, tol);
  if (o.json) {
    nlohmann::ordered_json j{{"composition", I.str()}, {"value", num(v.value)}, {"bound", num(v.error_bound)},
                             {"tol", tol}, {"terms", v.terms_used}};
    out << j.dump(2) << "\n";
  } else {
    out << value_line(v.value, tol) << "\n";
  }
  return 0;
}

int eval_eta(const Options& o, std::ostream& out) {
  const double tol = o.tol.value_or(1e-8);
  EtaSpec spec = EtaSpec::parse(o.positional);
  LhsSum lhs = parse_lhs(o.u.empty() ? "1" : o.u, spec, o.start);
  SeriesOptions so;
  if (o.max_terms) so.max_terms = *o.max_terms;
  NumericValue v = eta_numeric(lhs, tol, so);
  if (o.json) {
    nlohmann::ordered_json j{{"spec", spec.str()}, {"u", o.u.empty() ? "1" : o.u}, {"start", o.start},
                             {"value", num(v.value)}, {"bound", num(v.error_bound)}, {"tol", tol},
                             {"terms", v.terms_used}};
    out << j.dump(2) << "\n";
  } else {
    out << value_line(v.value, tol) << "\n";
  }
  return 0;
}

int reduce_eta(const Options& o, std::ostream& out) {
  EtaSpec spec = EtaSpec::parse(o.positional);
  std::string s = combo_str(partial_fraction_reduce(spec));
  if (o.json)
    out << nlohmann::ordered_json{{"spec", spec.str()}, {"combo", s}}.dump(2) << "\n";
  else
    out << s << "\n";
  return 0;
}

int eta_symbolic(const Options& o, std::ostream& out) {
  EtaSpec spec = EtaSpec::parse(o.positional);
  EtaResult r = lhs_symbolic(parse_lhs(o.u.empty() ? "1" : o.u, spec, o.start));
  r.symbolic = simplify(r.symbolic);
  if (o.json) {
    nlohmann::ordered_json res = nlohmann::ordered_json::array();
    for (const auto& x : r.residual)
      res.push_back({{"coef", to_string(x.coef)}, {"spec", x.spec.str()}, {"comp", x.comp.str()}});
    out << nlohmann::ordered_json{{"symbolic", r.symbolic.str()}, {"residual", res}}.dump(2) << "\n";
  } else {
    out << r.str() << "\n";
  }
  return 0;
}

int verify_one(const Options& o, std::ostream& out) {
  Params p;
  if (o.k) p["k"] = *o.k;
  if (o.l) p["l"] = *o.l;
  if (o.q) p["q"] = *o.q;
  if (o.n) p["n"] = *o.n;
  Identity id = instantiate(o.positional, p);
  if (o.max_terms) id.max_terms = *o.max_terms;
  std::vector<Report> reports{verify(id, o.tol)};
  out << (o.json ? reports_json(reports, o.timing) : reports_table(reports, o.timing));
  return all_pass(reports) ? 0 : kExitFail;
}

int verify_every(const Options& o, std::ostream& out) {
  auto reports = verify_all(o.tol, o.threads);
  out << (o.json ? reports_json(reports, o.timing) : reports_table(reports, o.timing));
  return all_pass(reports) ? 0 : kExitFail;
}

int audit(const Options& o, std::ostream& out) {
  auto entries = audit_boundaries();
  out << (o.json ? audit_json(entries) : audit_table(entries));
  return 0;
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Harmonic-number series and multiple zeta values", "hsum"};
  app.require_subcommand(1);
  Options o;

  auto* mzv = app.add_subcommand("eval-mzv", "evaluate zeta(I), e.g. eval-mzv 3,1");
  mzv->add_option("composition", o.positional)->required();
  add_common(mzv, o, true);

  auto* eta = app.add_subcommand("eval-eta", "evaluate the series eta_spec(u), e.g. eval-eta 0,1,1 --u e3 --start 0");
  eta->add_option("spec", o.positional)->required();
  eta->add_option("--u", o.u, "numerator, e.g. 'h2*e1' or 'h1@+1*e2'");
  eta->add_option("--start", o.start, "first n (0 or 1)")->check(CLI::IsMember({0, 1}));
  add_common(eta, o, true);

  auto* red = app.add_subcommand("reduce-eta", "partial-fraction reduction of an eta spec");
  red->add_option("spec", o.positional)->required();
  add_common(red, o, false);

  auto* sym = app.add_subcommand("eta-symbolic", "symbolic value of eta_spec(u) in multiple zeta values");
  sym->add_option("spec", o.positional)->required();
  sym->add_option("--u", o.u, "numerator");
  sym->add_option("--start", o.start, "first n (0 or 1)")->check(CLI::IsMember({0, 1}));
  add_common(sym, o, false);

  auto* ver = app.add_subcommand("verify", "verify one identity family");
  ver->add_option("family", o.positional)->required();
  ver->add_option("--k", o.k);
  ver->add_option("--l", o.l);
  ver->add_option("--q", o.q);
  ver->add_option("--n", o.n);
  ver->add_flag("--timing", o.timing, "include runtimes");
  add_common(ver, o, true);

  auto* all = app.add_subcommand("verify-all", "verify every registered family over its sweep");
  all->add_option("--threads", o.threads, "worker threads (0 = all cores)");
  all->add_flag("--timing", o.timing, "include runtimes");
  add_common(all, o, false);
  all->add_option("--tol", o.tol, "override every family tolerance")->check(CLI::Range(1e-10, 1e-2));
  all->add_option("--cache", o.cache, "zeta cache file (default: $HSUM_CACHE)");

  auto* aud = app.add_subcommand("audit", "check printed boundary and sign cases against the oracle");
  add_common(aud, o, false);
  aud->add_option("--cache", o.cache, "zeta cache file (default: $HSUM_CACHE)");

  std::vector<std::string> rev(args.rbegin(), args.rend());
  try {
    app.parse(rev);
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return 0;
  } catch (const CLI::ParseError& e) {
    err << "hsum: " << e.what() << "\n\n" << app.help();
    return kExitUsage;
  }

  std::unique_ptr<ZetaCache> cache;
  std::string cache_path = o.cache;
  if (cache_path.empty())
    if (const char* env = std::getenv("HSUM_CACHE")) cache_path = env;

  try {
    if (!cache_path.empty()) {
      cache = std::make_unique<ZetaCache>(cache_path);
      set_default_zeta_cache(cache.get());
    }
    int rc = 0;
    if (*mzv) rc = eval_mzv(o, out);
    else if (*eta) rc = eval_eta(o, out);
    else if (*red) rc = reduce_eta(o, out);
    else if (*sym) rc = eta_symbolic(o, out);
    else if (*ver) rc = verify_one(o, out);
    else if (*all) rc = verify_every(o, out);
    else if (*aud) rc = audit(o, out);
    set_default_zeta_cache(nullptr);
    return rc;
  } catch (const InvalidArgument& e) {
    set_default_zeta_cache(nullptr);
    err << "hsum: " << e.what() << "\n\n" << app.help();
    return kExitUsage;
  } catch (const Error& e) {
    set_default_zeta_cache(nullptr);
    err << "hsum: " << e.what() << "\n";
    return kExitFail;
  }
}

}  // namespace hsum::cli
