#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "hsum/eta_spec.hpp"
#include "hsum/extrapolate.hpp"
#include "hsum/qsym.hpp"
#include "hsum/rational.hpp"

namespace hsum {

inline constexpr double kMinSeriesTolerance = 1e-10;
inline constexpr std::int64_t kDefaultSeriesBudget = 1'000'000;

// Quasi-symmetric factor specialized at prefix length n + offset.
struct Factor {
  QSym u;
  int offset = 0;  // 0 or 1
};

// sum_{n >= start} prod_f f.u(1, ..., 1/(n + f.offset)) / (n^{s_1} (n+1)^{s_2} ...)
struct LhsDescriptor {
  std::vector<Factor> factors;
  EtaSpec spec;
  int start = 1;  // 0 or 1; 0 needs s_1 = 0

  LhsDescriptor(std::vector<Factor> f, EtaSpec s, int start_n = 1);
  std::string str() const;
};

// Rational linear combination of series, e.g. eta_{0,2}(h_3) + eta_3(h_2).
struct WeightedLhs {
  Rational coef;
  LhsDescriptor lhs;
};
using LhsSum = std::vector<WeightedLhs>;

// Power of ln n in the growth of the numerator: the sum over factors of the
// largest number of trailing 1s in a supporting composition.
int log_degree(const LhsDescriptor& d);

struct SeriesOptions {
  std::int64_t max_terms = kDefaultSeriesBudget;
};

NumericValue eta_numeric(const LhsDescriptor& d, double tol, const SeriesOptions& opt = {});
NumericValue eta_numeric(const LhsSum& sum, double tol, const SeriesOptions& opt = {});

// Partial sums over n = start, ..., N for each requested N (increasing).
std::vector<double> float_partial_sums(const LhsDescriptor& d, const std::vector<std::int64_t>& ns);
Rational exact_partial_sum(const LhsDescriptor& d, std::int64_t N);

std::string lhs_str(const LhsSum& sum);

}  // namespace hsum
