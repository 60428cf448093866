#pragma once

#include <string_view>
#include <vector>

#include "hsum/eta_spec.hpp"
#include "hsum/mzv_expr.hpp"
#include "hsum/qsym.hpp"
#include "hsum/series.hpp"

namespace hsum {

// Expressions in e<k>, h<k>, p<k>, N[n,m], M[i1,...], rationals, '*', '+',
// '-' and parentheses. Accepts the output of QSym::str().
QSym parse_qsym(std::string_view text);

// As parse_qsym, but a factor may carry the suffix "@+1" (specialized at
// n+1 instead of n). Terms sharing the same shifted part are merged, one
// series per distinct shifted part.
LhsSum parse_lhs(std::string_view u, const EtaSpec& spec, int start);

// "3/2*z[4] - 1/2*z[2]*z[2] + 5/4"
MzvExpr parse_mzv_expr(std::string_view text);

// "1/2*eta[1,1] - 1/2*eta[0,1,1]"
EtaCombo parse_eta_combo(std::string_view text);

}  // namespace hsum
