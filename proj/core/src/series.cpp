#include "hsum/series.hpp"

#include <algorithm>
#include <cmath>
#include <memory>
#include <sstream>

#include "hsum/error.hpp"
#include "hsum/specialize.hpp"

namespace hsum {

LhsDescriptor::LhsDescriptor(std::vector<Factor> f, EtaSpec s, int start_n)
    : factors(std::move(f)), spec(std::move(s)), start(start_n) {
  if (start != 0 && start != 1) throw InvalidArgument("series start must be 0 or 1");
  if (start == 0 && spec[0] != 0) throw InvalidArgument("series from n = 0 needs s_1 = 0, got eta[" + spec.str() + "]");
  for (const auto& x : factors)
    if (x.offset != 0 && x.offset != 1) throw InvalidArgument("factor offset must be 0 or 1");
}

std::string LhsDescriptor::str() const {
  std::string out = "eta[" + spec.str() + "](";
  if (factors.empty()) out += "1";
  for (std::size_t i = 0; i < factors.size(); ++i) {
    if (i) out += " * ";
    const bool wrap = factors[i].u.terms().size() > 1;
    out += wrap ? "(" + factors[i].u.str() + ")" : factors[i].u.str();
    if (factors[i].offset) out += "@+1";
  }
  out += ")";
  if (start == 0) out += " from n=0";
  return out;
}

int log_degree(const LhsDescriptor& d) {
  int total = 0;
  for (const auto& f : d.factors) {
    int best = 0;
    for (const auto& [I, c] : f.u.terms()) {
      int ones = 0;
      for (auto it = I.parts().rbegin(); it != I.parts().rend() && *it == 1; ++it) ++ones;
      best = std::max(best, ones);
    }
    total += best;
  }
  return total;
}

namespace {

// Largest total nesting over the factors; bounds the log power at any order.
int nesting_depth(const LhsDescriptor& d) {
  int total = 0;
  for (const auto& f : d.factors) total += static_cast<int>(f.u.max_depth());
  return total;
}

// Streams term values t_n for n = start, start+1, ... in binary64.
class TermStream {
 public:
  explicit TermStream(const LhsDescriptor& d) : spec_(d.spec.exponents().begin(), d.spec.exponents().end()) {
    for (const auto& f : d.factors) {
      streams_.push_back(std::make_unique<SpecializationStream<double>>(f.u));
      if (f.offset) streams_.back()->advance();
    }
    n_ = d.start;
    if (n_ == 1)
      for (auto& s : streams_) s->advance();
  }

  // Term at the current n, then step to n+1.
  double next() {
    double numer = 1.0;
    for (auto& s : streams_) numer *= s->value();
    double inv = 1.0;
    for (std::size_t i = 0; i < spec_.size(); ++i) {
      if (spec_[i] == 0) continue;
      const double r = 1.0 / static_cast<double>(n_ + static_cast<std::int64_t>(i));
      for (int k = 0; k < spec_[i]; ++k) inv *= r;
    }
    for (auto& s : streams_) s->advance();
    ++n_;
    return numer * inv;
  }

 private:
  std::vector<int> spec_;
  std::vector<std::unique_ptr<SpecializationStream<double>>> streams_;
  std::int64_t n_;
};

}  // namespace

std::vector<double> float_partial_sums(const LhsDescriptor& d, const std::vector<std::int64_t>& ns) {
  TermStream terms(d);
  CompensatedSum sum;
  std::int64_t last = d.start - 1;
  std::vector<double> out;
  for (auto N : ns) {
    for (; last < N; ++last) sum.add(terms.next());
    out.push_back(sum.value());
  }
  return out;
}

Rational exact_partial_sum(const LhsDescriptor& d, std::int64_t N) {
  std::vector<SpecializationStream<Rational>> streams;
  for (const auto& f : d.factors) {
    streams.emplace_back(f.u);
    if (f.offset) streams.back().advance();
  }
  if (d.start == 1)
    for (auto& s : streams) s.advance();
  Rational total = 0;
  for (std::int64_t n = d.start; n <= N; ++n) {
    Rational t = 1;
    for (auto& s : streams) t *= s.value();
    for (std::size_t i = 0; i < d.spec.length(); ++i)
      if (d.spec[i]) t /= rational_pow(Rational(n + static_cast<long>(i)), static_cast<unsigned long>(d.spec[i]));
    total += t;
    for (auto& s : streams) s.advance();
  }
  return total;
}

NumericValue eta_numeric(const LhsDescriptor& d, double tol, const SeriesOptions& opt) {
  if (!(tol >= kMinSeriesTolerance)) throw InvalidArgument("eta_numeric: tolerance must be at least 1e-10");
  TermStream terms(d);
  CompensatedSum sum;
  std::int64_t last = d.start - 1;
  auto advance_to = [&](std::int64_t N) {
    for (; last < N; ++last) sum.add(terms.next());
    return sum.value();
  };
  AccelerationOptions a;
  a.w = d.spec.weight();
  a.d = log_degree(d);
  a.max_log_degree = nesting_depth(d);
  a.tol = tol;
  a.max_terms = opt.max_terms;
  a.base = std::max<std::int64_t>(1000, 200 * a.d);
  try {
    return accelerate(advance_to, a);
  } catch (const ConvergenceError& e) {
    throw ConvergenceError(d.str() + ": " + e.what());
  }
}

NumericValue eta_numeric(const LhsSum& sum, double tol, const SeriesOptions& opt) {
  double weight = 0;
  for (const auto& w : sum) weight += std::fabs(to_double(w.coef));
  NumericValue out;
  CompensatedSum total;
  for (const auto& w : sum) {
    const double c = to_double(w.coef);
    auto v = eta_numeric(w.lhs, std::max(tol / weight, kMinSeriesTolerance), opt);
    total.add(c * v.value);
    out.error_bound += std::fabs(c) * v.error_bound;
    out.terms_used = std::max(out.terms_used, v.terms_used);
  }
  out.value = total.value();
  return out;
}

std::string lhs_str(const LhsSum& sum) {
  std::string out;
  bool first = true;
  for (const auto& w : sum) {
    Rational c = w.coef;
    if (!first) {
      out += c < 0 ? " - " : " + ";
      if (c < 0) c = -c;
    } else if (c < 0) {
      out += "-";
      c = -c;
    }
    first = false;
    if (c != 1) out += to_string(c) + "*";
    out += w.lhs.str();
  }
  return first ? "0" : out;
}

}  // namespace hsum
