#pragma once

#include <cstdint>
#include <functional>
#include <span>
#include <vector>

namespace hsum {

struct NumericValue {
  double value = 0.0;
  double error_bound = 0.0;  // absolute
  std::int64_t terms_used = 0;
};

struct Sample {
  double n;
  double partial_sum;
};

// Fits S_N = S - sum_a sum_j c_{a,j} N^{-a} (ln N)^j by least squares and
// returns S. Powers run a = w-1, w, ...; the log degree is d at a = w-1 and
// grows by one per power up to dmax (dmax < d means d). The bound is the
// change between the largest fit and the one without its highest power.
NumericValue extrapolate_logfit(std::span<const Sample> samples, int w, int d, int dmax = -1);

struct AccelerationOptions {
  int w = 2;
  int d = 0;
  int max_log_degree = -1;  // log degree of subleading powers; -1 keeps d
  double tol = 1e-8;
  std::int64_t max_terms = 2'000'000;
  std::int64_t base = 1000;
};

// Drives a series to tolerance. advance_to(N) must return the partial sum
// of the first N terms (N increasing between calls). Partial sums are
// sampled at round(base * 2^(j/2)); a fit is attempted at every doubling.
// Throws ConvergenceError when max_terms is exhausted first.
NumericValue accelerate(const std::function<double(std::int64_t)>& advance_to, const AccelerationOptions& opt,
                        std::vector<Sample>* trace = nullptr);

// Sample points of the schedule above that do not exceed max_terms.
std::vector<std::int64_t> sample_schedule(std::int64_t base, std::int64_t max_terms);

}  // namespace hsum
