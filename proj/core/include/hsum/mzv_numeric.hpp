#pragma once

#include <cstdint>
#include <filesystem>
#include <map>
#include <mutex>
#include <optional>
#include <shared_mutex>
#include <string>
#include <vector>

#include "hsum/composition.hpp"
#include "hsum/extrapolate.hpp"
#include "hsum/mzv_expr.hpp"

namespace hsum {

inline constexpr double kMinZetaTolerance = 1e-12;
inline constexpr std::int64_t kDefaultZetaBudget = 2'000'000;

// Key: canonical composition text and tolerance exponent e (tol = 10^-e).
// Records are write-once; an optional file makes them persistent:
//   MZVCACHE 1
//   3,1;8;0x1.15165p-2;0x1.3p-30;128000
class ZetaCache {
 public:
  ZetaCache() = default;
  explicit ZetaCache(std::filesystem::path file);

  std::optional<NumericValue> find(const std::string& comp, int tol_exponent) const;
  void insert(const std::string& comp, int tol_exponent, const NumericValue& v);
  std::size_t size() const;
  const std::optional<std::filesystem::path>& file() const { return file_; }

 private:
  void load();
  mutable std::shared_mutex mutex_;
  std::map<std::pair<std::string, int>, NumericValue> entries_;
  std::optional<std::filesystem::path> file_;
};

// Tolerance exponent ceil(-log10 tol); the evaluation always targets 10^-e.
int tolerance_exponent(double tol);

// Partial sums M_{rev I}(1, ..., 1/N) at each requested N (increasing).
std::vector<double> zeta_partial_sums(const Composition& I, const std::vector<std::int64_t>& ns);

// Rigorous bound on zeta(I) - S_N from the integral of (1+ln x)^(k-1) x^-i1.
double zeta_tail_bound(const Composition& I, std::int64_t N);

class ZetaEvaluator {
 public:
  // With use_duality, zeta(I) is summed from whichever of I and tau(I)
  // converges faster (larger first part, then smaller depth).
  explicit ZetaEvaluator(ZetaCache* cache = nullptr, std::int64_t max_terms = kDefaultZetaBudget,
                         bool use_duality = true)
      : cache_(cache), max_terms_(max_terms), use_duality_(use_duality) {}

  NumericValue zeta_value(const Composition& I, double tol) const;
  NumericValue expr_value(const MzvExpr& e, double tol) const;

  std::int64_t max_terms() const { return max_terms_; }

 private:
  NumericValue compute(const Composition& I, double tol) const;
  ZetaCache* cache_;
  std::int64_t max_terms_;
  bool use_duality_;
};

// Process-wide evaluator with an in-memory cache.
ZetaEvaluator& default_zeta_evaluator();
// Not safe while evaluations are running; nullptr restores the in-memory cache.
void set_default_zeta_cache(ZetaCache* cache);

NumericValue zeta_value(const Composition& I, double tol);
NumericValue expr_value(const MzvExpr& e, double tol);

}  // namespace hsum
