#include "hsum/extrapolate.hpp"

#include <Eigen/Dense>
#include <algorithm>
#include <cmath>
#include <limits>
#include <sstream>

#include "hsum/error.hpp"

namespace hsum {

namespace {

using Mat = Eigen::Matrix<long double, Eigen::Dynamic, Eigen::Dynamic>;
using Vec = Eigen::Matrix<long double, Eigen::Dynamic, 1>;

constexpr int kMaxPowerGroups = 4;
constexpr int kMinColumns = 10;

// Tail columns (a, j) for N^-a (ln N)^j: increasing a from w-1, and within
// one power decreasing j, the log degree growing by one per power up to dmax.
std::vector<std::pair<int, int>> column_layout(int w, int d, int dmax, int count) {
  std::vector<std::pair<int, int>> cols;
  for (int m = 0; static_cast<int>(cols.size()) < count; ++m)
    for (int j = std::min(d + m, dmax); j >= 0 && static_cast<int>(cols.size()) < count; --j)
      cols.emplace_back(w - 1 + m, j);
  return cols;
}

// Least-squares limit using the constant column plus the given tail columns.
long double fit_limit(std::span<const Sample> s, const std::vector<std::pair<int, int>>& cols) {
  const auto rows = static_cast<Eigen::Index>(s.size());
  long double lmin = std::numeric_limits<long double>::max(), lmax = -lmin, lsum = 0;
  for (const auto& x : s) {
    long double l = std::log(static_cast<long double>(x.n));
    lmin = std::min(lmin, l);
    lmax = std::max(lmax, l);
    lsum += l;
  }
  const long double lmid = lsum / static_cast<long double>(rows);
  const long double lscale = std::max((lmax - lmin) / 2, 1.0L);
  const long double n0 = std::exp(lmid);

  const auto ncols = static_cast<Eigen::Index>(cols.size()) + 1;
  Mat X(rows, ncols);
  Vec y(rows);
  for (Eigen::Index r = 0; r < rows; ++r) {
    const long double n = s[static_cast<std::size_t>(r)].n;
    const long double l = (std::log(n) - lmid) / lscale;
    X(r, 0) = 1;
    for (std::size_t c = 0; c < cols.size(); ++c) {
      const auto [a, j] = cols[c];
      X(r, static_cast<Eigen::Index>(c) + 1) =
          -std::pow(n / n0, static_cast<long double>(-a)) * std::pow(l, static_cast<long double>(j));
    }
    y(r) = s[static_cast<std::size_t>(r)].partial_sum;
  }
  // equilibrate columns so the rank test sees collinearity, not scale
  for (Eigen::Index c = 1; c < X.cols(); ++c) {
    const long double m = X.col(c).cwiseAbs().maxCoeff();
    if (m > 0) X.col(c) /= m;
  }
  Eigen::ColPivHouseholderQR<Mat> qr(X);
  qr.setThreshold(1e-15L);
  if (qr.rank() < X.cols()) throw SingularFit("extrapolation design matrix is rank deficient");
  Vec sol = qr.solve(y);
  return sol(0);
}

}  // namespace

NumericValue extrapolate_logfit(std::span<const Sample> samples, int w, int d, int dmax) {
  if (w < 2) throw InvalidArgument("extrapolate_logfit: weight must be at least 2");
  if (d < 0) throw InvalidArgument("extrapolate_logfit: log degree must be nonnegative");
  if (dmax < d) dmax = d;
  if (samples.size() < static_cast<std::size_t>(d) + 2)
    throw InvalidArgument("extrapolate_logfit: need at least d+2 samples");
  for (std::size_t i = 1; i < samples.size(); ++i)
    if (!(samples[i].n > samples[i - 1].n)) throw InvalidArgument("extrapolate_logfit: sample points must increase");

  const bool constant = std::all_of(samples.begin(), samples.end(),
                                    [&](const Sample& x) { return x.partial_sum == samples.front().partial_sum; });
  if (constant) return {samples.front().partial_sum, 0.0, static_cast<std::int64_t>(samples.back().n)};

  // Largest well-conditioned fit, compared with a smaller one.
  const int cap = std::max(kMaxPowerGroups * (d + 1), kMinColumns);
  for (int top = std::min(static_cast<int>(samples.size()) - 1, cap); top >= 2; --top) {
    const auto cols = column_layout(w, d, dmax, top);
    // drop as many columns as a full group at the highest power holds
    const int group = std::min(d + cols.back().first - (w - 1), dmax) + 1;
    const int prev = top - group >= group ? top - group : top - 1;
    try {
      const long double hi = fit_limit(samples, cols);
      const long double lo = fit_limit(samples, std::vector(cols.begin(), cols.begin() + prev));
      return {static_cast<double>(hi), static_cast<double>(std::fabs(hi - lo)),
              static_cast<std::int64_t>(samples.back().n)};
    } catch (const SingularFit&) {
    }
  }
  throw SingularFit("extrapolation design matrix is rank deficient");
}

std::vector<std::int64_t> sample_schedule(std::int64_t base, std::int64_t max_terms) {
  std::vector<std::int64_t> out;
  for (int j = 0;; ++j) {
    auto n = static_cast<std::int64_t>(std::llround(static_cast<double>(base) * std::pow(2.0, j / 2.0)));
    if (n > max_terms) break;
    if (out.empty() || n > out.back()) out.push_back(n);
  }
  return out;
}

NumericValue accelerate(const std::function<double(std::int64_t)>& advance_to, const AccelerationOptions& opt,
                        std::vector<Sample>* trace) {
  if (opt.base < 1) throw InvalidArgument("accelerate: base must be positive");
  const auto schedule = sample_schedule(opt.base, opt.max_terms);
  constexpr std::size_t kFirstCheck = 6;  // base * 2^3
  std::vector<Sample> samples;
  double previous = std::numeric_limits<double>::quiet_NaN();
  double best_bound = std::numeric_limits<double>::infinity();
  for (std::size_t j = 0; j < schedule.size(); ++j) {
    samples.push_back({static_cast<double>(schedule[j]), advance_to(schedule[j])});
    if (trace) trace->push_back(samples.back());
    if (j < kFirstCheck || j % 2 != 0 || samples.size() < static_cast<std::size_t>(opt.d) + 2)
      continue;
    NumericValue fit;
    try {
      fit = extrapolate_logfit(samples, opt.w, opt.d, opt.max_log_degree);
    } catch (const SingularFit&) {
      continue;
    }
    double bound = 2 * fit.error_bound;
    if (!std::isnan(previous)) bound = std::max(bound, 2 * std::fabs(fit.value - previous));
    else bound = std::numeric_limits<double>::infinity();
    bound += 64 * std::numeric_limits<double>::epsilon() * std::fabs(fit.value);
    previous = fit.value;
    best_bound = std::min(best_bound, bound);
    if (bound <= opt.tol) return {fit.value, bound, schedule[j]};
  }
  std::ostringstream msg;
  msg << "tolerance " << opt.tol << " not reached within " << opt.max_terms << " terms (best bound " << best_bound
      << ")";
  throw ConvergenceError(msg.str());
}

}  // namespace hsum
