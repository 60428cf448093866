#include "hsum/mzv_numeric.hpp"

#include <cmath>
#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <limits>
#include <set>
#include <sstream>

#include "hsum/error.hpp"
#include "hsum/qsym.hpp"
#include "hsum/specialize.hpp"

namespace hsum {

namespace {

constexpr const char* kCacheHeader = "MZVCACHE 1";

std::string hex_double(double x) {
  char buf[64];
  std::snprintf(buf, sizeof buf, "%a", x);
  return buf;
}

}  // namespace

ZetaCache::ZetaCache(std::filesystem::path file) : file_(std::move(file)) { load(); }

void ZetaCache::load() {
  std::ifstream in(*file_);
  if (!in) return;
  std::string line;
  if (!std::getline(in, line)) return;
  if (line != kCacheHeader) throw InvalidArgument("cache file " + file_->string() + " has an unknown header");
  while (std::getline(in, line)) {
    if (line.empty()) continue;
    std::vector<std::string> f;
    std::stringstream ss(line);
    for (std::string piece; std::getline(ss, piece, ';');) f.push_back(piece);
    if (f.size() != 5) continue;  // torn trailing write
    try {
      NumericValue v{std::strtod(f[2].c_str(), nullptr), std::strtod(f[3].c_str(), nullptr), std::stoll(f[4])};
      entries_.try_emplace({Composition::parse(f[0]).str(), std::stoi(f[1])}, v);
    } catch (const std::exception&) {
      continue;
    }
  }
}

std::optional<NumericValue> ZetaCache::find(const std::string& comp, int tol_exponent) const {
  std::shared_lock lock(mutex_);
  auto it = entries_.find({comp, tol_exponent});
  if (it == entries_.end()) return std::nullopt;
  return it->second;
}

void ZetaCache::insert(const std::string& comp, int tol_exponent, const NumericValue& v) {
  std::unique_lock lock(mutex_);
  auto [it, inserted] = entries_.try_emplace({comp, tol_exponent}, v);
  if (!inserted || !file_) return;
  const bool fresh = !std::filesystem::exists(*file_) || std::filesystem::file_size(*file_) == 0;
  std::ofstream out(*file_, std::ios::app);
  if (!out) return;
  if (fresh) out << kCacheHeader << '\n';
  out << comp << ';' << tol_exponent << ';' << hex_double(v.value) << ';' << hex_double(v.error_bound) << ';'
      << v.terms_used << '\n';
}

std::size_t ZetaCache::size() const {
  std::shared_lock lock(mutex_);
  return entries_.size();
}

int tolerance_exponent(double tol) {
  if (!(tol > 0)) throw InvalidArgument("tolerance must be positive");
  // small slack so 1e-8 maps to 8 despite representation error
  return static_cast<int>(std::ceil(-std::log10(tol) - 1e-9));
}

std::vector<double> zeta_partial_sums(const Composition& I, const std::vector<std::int64_t>& ns) {
  SpecializationStream<double> s(QSym::monomial(I.reversed()));
  std::vector<double> out;
  out.reserve(ns.size());
  for (auto n : ns) {
    while (static_cast<std::int64_t>(s.n()) < n) s.advance();
    out.push_back(s.value());
  }
  return out;
}

double zeta_tail_bound(const Composition& I, std::int64_t N) {
  if (!is_admissible(I)) throw NotAdmissible("zeta(" + I.str() + ") diverges");
  const double a = I.front() - 1;
  const double x = static_cast<double>(N);
  const double L = 1.0 + std::log(x);
  const double base = std::pow(x, -a) / a;
  double J = base;  // m = 0
  for (std::size_t m = 1; m < I.depth(); ++m) J = std::pow(L, static_cast<double>(m)) * base + (m / a) * J;
  return J;
}

NumericValue ZetaEvaluator::compute(const Composition& I, double target) const {
  SpecializationStream<double> stream(QSym::monomial(I.reversed()));
  auto advance_to = [&](std::int64_t n) {
    while (static_cast<std::int64_t>(stream.n()) < n) stream.advance();
    return stream.value();
  };
  AccelerationOptions opt;
  opt.w = I.front();
  opt.d = static_cast<int>(I.depth()) - 1;
  opt.tol = target;
  opt.max_terms = max_terms_;
  std::vector<Sample> trace;
  NumericValue v;
  try {
    v = accelerate(advance_to, opt, &trace);
  } catch (const ConvergenceError& e) {
    throw ConvergenceError("zeta(" + I.str() + "): " + e.what());
  }
  const double partial = trace.back().partial_sum;
  const double correction = v.value - partial;
  const double tail = zeta_tail_bound(I, v.terms_used);
  if (correction < -target || correction > tail + target) {
    std::ostringstream msg;
    msg << "zeta(" << I.str() << "): extrapolated tail " << correction << " outside rigorous range [0, " << tail
        << "]";
    throw ConvergenceError(msg.str());
  }
  return v;
}

namespace {

Composition faster_of_dual_pair(const Composition& I) {
  const Composition T = tau(I);
  if (T.front() != I.front()) return T.front() > I.front() ? T : I;
  if (T.depth() != I.depth()) return T.depth() < I.depth() ? T : I;
  return std::min(I, T);
}

}  // namespace

NumericValue ZetaEvaluator::zeta_value(const Composition& I, double tol) const {
  if (!is_admissible(I)) throw NotAdmissible("zeta(" + I.str() + ") requires an admissible composition");
  if (!(tol >= kMinZetaTolerance)) throw InvalidArgument("zeta_value: tolerance must be at least 1e-12");
  const int e = tolerance_exponent(tol);
  const Composition J = use_duality_ ? faster_of_dual_pair(I) : I;
  const std::string key = J.str();
  if (cache_)
    if (auto hit = cache_->find(key, e)) return *hit;
  NumericValue v = compute(J, std::pow(10.0, -e));
  if (cache_) cache_->insert(key, e, v);
  return v;
}

NumericValue ZetaEvaluator::expr_value(const MzvExpr& expr, double tol) const {
  if (!(tol >= kMinZetaTolerance)) throw InvalidArgument("expr_value: tolerance must be at least 1e-12");
  // coarse pass for magnitudes, then split tol by first-order sensitivity
  std::map<Composition, double> sens;
  for (const auto& [m, c] : expr.terms())
    for (const auto& I : m) sens.emplace(I, 0.0);
  if (sens.empty()) return {to_double(expr.constant_term()), 0.0, 0};
  std::map<Composition, double> coarse;
  for (const auto& [I, s] : sens) coarse.emplace(I, std::fabs(zeta_value(I, 1e-6).value) + 1e-6);
  for (const auto& [m, c] : expr.terms())
    for (std::size_t i = 0; i < m.size(); ++i) {
      double others = std::fabs(to_double(c));
      for (std::size_t j = 0; j < m.size(); ++j)
        if (j != i) others *= coarse.at(m[j]);
      sens.at(m[i]) += others;
    }
  double total_sens = 0;
  for (const auto& [I, s] : sens) total_sens += s;
  const double per_zeta = std::max(tol / (2 * total_sens), kMinZetaTolerance);

  std::map<Composition, NumericValue> values;
  for (const auto& [I, s] : sens) values.emplace(I, zeta_value(I, per_zeta));

  CompensatedSum total;
  double bound = 0;
  std::int64_t terms = 0;
  for (const auto& [m, c] : expr.terms()) {
    const double cd = to_double(c);
    double prod = 1, abs_prod = 1, abs_upper = 1;
    for (const auto& I : m) {
      const auto& v = values.at(I);
      prod *= v.value;
      abs_prod *= std::fabs(v.value);
      abs_upper *= std::fabs(v.value) + v.error_bound;
    }
    total.add(cd * prod);
    bound += std::fabs(cd) * (abs_upper - abs_prod);
  }
  for (const auto& [I, v] : values) terms = std::max(terms, v.terms_used);
  const double value = total.value();
  // conversion of coefficients and products to binary64
  bound += 16 * std::numeric_limits<double>::epsilon() * std::fabs(value);
  if (bound > tol) {
    std::ostringstream msg;
    msg << "expression bound " << bound << " exceeds tolerance " << tol;
    throw ConvergenceError(msg.str());
  }
  return {value, bound, terms};
}

namespace {

ZetaCache& in_memory_cache() {
  static ZetaCache cache;
  return cache;
}

}  // namespace

ZetaEvaluator& default_zeta_evaluator() {
  static ZetaEvaluator evaluator(&in_memory_cache());
  return evaluator;
}

void set_default_zeta_cache(ZetaCache* cache) {
  default_zeta_evaluator() = ZetaEvaluator(cache ? cache : &in_memory_cache());
}

NumericValue zeta_value(const Composition& I, double tol) { return default_zeta_evaluator().zeta_value(I, tol); }

NumericValue expr_value(const MzvExpr& e, double tol) { return default_zeta_evaluator().expr_value(e, tol); }

}  // namespace hsum
