#pragma once

#include <string>
#include <vector>

#include "hsum/composition.hpp"
#include "hsum/eta_spec.hpp"
#include "hsum/mzv_expr.hpp"
#include "hsum/qsym.hpp"
#include "hsum/series.hpp"

namespace hsum {

// coef * eta_spec(M_comp) with no symbolic rule.
struct Residual {
  Rational coef;
  EtaSpec spec;
  Composition comp;
};

struct EtaResult {
  MzvExpr symbolic;
  std::vector<Residual> residual;

  bool complete() const { return residual.empty(); }
  EtaResult& operator+=(const EtaResult& o);
  EtaResult& operator*=(const Rational& c);
  std::string str() const;
};

EtaResult eta_on_M(const EtaSpec& spec, const Composition& I);
EtaResult eta_on_qsym(const EtaSpec& spec, const QSym& u);

// Symbolic value of a full series descriptor: offset factors are expanded
// through M_I(x_1..x_{n+1}) = M_I(x_1..x_n) + M_{I-}(x_1..x_n) x_{n+1}^{i_last}
// and an n = 0 term is added for series starting at 0.
EtaResult lhs_symbolic(const LhsDescriptor& d);
EtaResult lhs_symbolic(const LhsSum& sum);

// Symbolic part through expr_value, residuals through eta_numeric.
NumericValue eta_result_value(const EtaResult& r, double tol, const SeriesOptions& opt = {});

}  // namespace hsum
