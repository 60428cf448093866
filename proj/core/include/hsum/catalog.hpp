#pragma once

#include <cstdint>
#include <functional>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "hsum/mzv_expr.hpp"
#include "hsum/series.hpp"

namespace hsum {

using Params = std::map<std::string, int>;

std::string params_str(const Params& p);

struct Identity {
  std::string family;
  Params params;
  LhsSum lhs;
  MzvExpr rhs;
  double tol;
  std::int64_t max_terms;
};

struct IdentityFamily {
  std::string name;
  std::vector<std::string> param_names;
  std::string statement;  // human-readable form of the identity
  // Empty when params are valid, else the reason.
  std::function<std::optional<std::string>(const Params&)> check;
  std::function<LhsSum(const Params&)> lhs;
  std::function<MzvExpr(const Params&)> rhs;
  // Box of parameter values exercised by verify-all, cut down by `check`
  // and by the LHS weight bound.
  std::map<std::string, std::pair<int, int>> sweep_box;
  int sweep_max_weight = 8;
  double tol = 1e-6;
  std::int64_t max_terms = kDefaultSeriesBudget;
};

// Families in registry order.
const std::vector<IdentityFamily>& registry();
const IdentityFamily& find_family(const std::string& name);

std::vector<Params> sweep(const IdentityFamily& family);

// Missing parameters take their value from the first sweep tuple.
Identity instantiate(const std::string& family, const Params& params);

// Right-hand side of a registered family.
MzvExpr closed_form(const std::string& family, const Params& params);

// Weight of the numerator plus denominator of the heaviest LHS series.
int lhs_weight(const LhsSum& lhs);

}  // namespace hsum
