#include "hsum/eta_engine.hpp"

#include <algorithm>
#include <cmath>

#include "hsum/error.hpp"
#include "hsum/mzv_numeric.hpp"

namespace hsum {

EtaResult& EtaResult::operator+=(const EtaResult& o) {
  symbolic += o.symbolic;
  for (const auto& r : o.residual) {
    auto it = std::find_if(residual.begin(), residual.end(),
                           [&](const Residual& x) { return x.spec == r.spec && x.comp == r.comp; });
    if (it == residual.end()) {
      residual.push_back(r);
    } else {
      it->coef += r.coef;
      if (it->coef == 0) residual.erase(it);
    }
  }
  return *this;
}

EtaResult& EtaResult::operator*=(const Rational& c) {
  symbolic *= c;
  if (c == 0) residual.clear();
  for (auto& r : residual) r.coef *= c;
  return *this;
}

std::string EtaResult::str() const {
  std::string out = symbolic.str();
  for (const auto& r : residual) {
    Rational c = r.coef;
    out += c < 0 ? " - " : " + ";
    if (c < 0) c = -c;
    if (c != 1) out += to_string(c) + "*";
    out += "eta[" + r.spec.str() + "](M[" + r.comp.str() + "])";
  }
  return out;
}

namespace {

// z[head, i_j, ..., i_1]
MzvExpr z_front(int head, const Composition& I) { return MzvExpr::zeta(Composition{head}.concat(I.reversed())); }

// z[i_j, ..., i_1]
MzvExpr z_rev(const Composition& I) { return MzvExpr::zeta(I.reversed()); }

MzvExpr eta_p(int p, const Composition& I) {
  if (I.empty()) return MzvExpr::zeta(Composition{p});
  return z_front(p, I) + z_front(p + I.back(), I.without_last());
}

MzvExpr eta_0p(int p, const Composition& I) {
  if (I.empty()) return MzvExpr::zeta(Composition{p}) - MzvExpr(1);
  return z_front(p, I);
}

MzvExpr eta_11(const Composition& I) {
  if (I.empty()) return MzvExpr(1);
  return z_front(I.back() + 1, I.without_last());
}

MzvExpr eta_011(const Composition& I) {
  if (I.empty()) return MzvExpr(Rational(1, 2));
  if (I.depth() == 1 && I[0] == 1) return MzvExpr(1);
  if (I.back() == 1) return eta_011(I.without_last());
  return z_rev(I) - eta_011(I.with_last(I.back() - 1));
}

// T = eta_{0,2} - eta_{0,0,2}
MzvExpr t_rec(const Composition& I) {
  if (I.empty()) return MzvExpr(Rational(1, 4));
  if (I.depth() == 1 && I[0] == 1) return MzvExpr(2) - MzvExpr::zeta(Composition{2});
  if (I.back() > 1) {
    Composition lowered = I.with_last(I.back() - 1);
    return z_rev(I) - eta_011(lowered) - t_rec(lowered);
  }
  Composition head = I.without_last();
  return eta_011(head) - z_front(2, head) + t_rec(head);
}

EtaResult irreducible_on_M(const EtaSpec& spec, const Composition& I) {
  EtaResult r;
  const auto s = spec.exponents();
  if (s.size() == 1) {
    r.symbolic = eta_p(s[0], I);
  } else if (s.size() == 2 && s[0] == 0) {
    r.symbolic = eta_0p(s[1], I);
  } else if (spec == EtaSpec{1, 1}) {
    r.symbolic = eta_11(I);
  } else if (spec == EtaSpec{0, 1, 1}) {
    r.symbolic = eta_011(I);
  } else if (spec == EtaSpec{0, 0, 2}) {
    r.symbolic = eta_0p(2, I) - t_rec(I);
  } else {
    r.residual.push_back({1, spec, I});
  }
  return r;
}

}  // namespace

EtaResult eta_on_M(const EtaSpec& spec, const Composition& I) {
  EtaResult out;
  for (const auto& [s, c] : partial_fraction_reduce(spec)) {
    EtaResult part = irreducible_on_M(s, I);
    part *= c;
    out += part;
  }
  return out;
}

EtaResult eta_on_qsym(const EtaSpec& spec, const QSym& u) {
  EtaResult out;
  for (const auto& [I, c] : u.terms()) {
    EtaResult part = eta_on_M(spec, I);
    part *= c;
    out += part;
  }
  return out;
}

EtaResult lhs_symbolic(const LhsDescriptor& d) {
  QSym plain = QSym::scalar(1), shifted = QSym::scalar(1);
  bool any_shift = false;
  for (const auto& f : d.factors) {
    if (f.offset) {
      shifted = shifted * f.u;
      any_shift = true;
    } else {
      plain = plain * f.u;
    }
  }
  EtaResult out = eta_on_qsym(d.spec, plain * shifted);
  if (any_shift) {
    for (const auto& [I, c] : shifted.terms()) {
      if (I.empty()) continue;
      std::vector<int> s(d.spec.exponents().begin(), d.spec.exponents().end());
      if (s.size() < 2) s.resize(2, 0);
      s[1] += I.back();
      EtaResult part = eta_on_qsym(EtaSpec(s), plain * QSym::monomial(I.without_last()));
      part *= c;
      out += part;
    }
  }
  if (d.start == 0) {
    Rational shifted_at_one = 0;
    for (const auto& [I, c] : shifted.terms())
      if (I.depth() <= 1) shifted_at_one += c;
    Rational term = plain.constant_term() * (any_shift ? shifted_at_one : shifted.constant_term());
    for (std::size_t i = 1; i < d.spec.length(); ++i)
      term /= rational_pow(Rational(static_cast<long>(i)), static_cast<unsigned long>(d.spec[i]));
    out.symbolic += MzvExpr(term);
  }
  return out;
}

EtaResult lhs_symbolic(const LhsSum& sum) {
  EtaResult out;
  for (const auto& w : sum) {
    EtaResult part = lhs_symbolic(w.lhs);
    part *= w.coef;
    out += part;
  }
  return out;
}

NumericValue eta_result_value(const EtaResult& r, double tol, const SeriesOptions& opt) {
  const double share = r.residual.empty() ? tol : tol / 2;
  NumericValue out;
  if (!r.symbolic.is_zero()) out = expr_value(r.symbolic, std::max(share, kMinZetaTolerance));
  if (r.residual.empty()) return out;
  double weight = 0;
  for (const auto& x : r.residual) weight += std::fabs(to_double(x.coef));
  const double each = std::max(share / weight, kMinSeriesTolerance);
  for (const auto& x : r.residual) {
    LhsDescriptor d({Factor{QSym::monomial(x.comp), 0}}, x.spec, 1);
    auto v = eta_numeric(d, each, opt);
    const double c = to_double(x.coef);
    out.value += c * v.value;
    out.error_bound += std::fabs(c) * v.error_bound;
    out.terms_used = std::max(out.terms_used, v.terms_used);
  }
  return out;
}

}  // namespace hsum
