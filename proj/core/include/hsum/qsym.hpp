#pragma once

#include <map>
#include <string>

#include "hsum/composition.hpp"
#include "hsum/rational.hpp"

namespace hsum {

// Element of QSym in the monomial basis M_I. Zero coefficients are never stored.
class QSym {
 public:
  using Terms = std::map<Composition, Rational>;

  QSym() = default;
  static QSym scalar(const Rational& c);
  static QSym monomial(const Composition& I, const Rational& c = 1);

  const Terms& terms() const { return terms_; }
  Rational coeff(const Composition& I) const;
  Rational constant_term() const { return coeff(Composition{}); }
  bool is_zero() const { return terms_.empty(); }

  // max weight over the support; 0 for scalars and for zero
  int degree() const;
  bool is_homogeneous() const;
  // Largest depth in the support.
  std::size_t max_depth() const;

  void add_term(const Composition& I, const Rational& c);

  QSym& operator+=(const QSym& o);
  QSym& operator-=(const QSym& o);
  QSym& operator*=(const Rational& c);
  friend QSym operator+(QSym a, const QSym& b) { return a += b; }
  friend QSym operator-(QSym a, const QSym& b) { return a -= b; }
  friend QSym operator*(QSym a, const Rational& c) { return a *= c; }
  friend QSym operator*(const Rational& c, QSym a) { return a *= c; }
  friend QSym operator*(const QSym& a, const QSym& b);
  friend bool operator==(const QSym&, const QSym&) = default;

  // "c*M[i1,...,ik] + ..."; zero prints as "0".
  std::string str() const;

 private:
  Terms terms_;
};

QSym monomial_qsym(const Composition& I);
QSym quasi_shuffle(const QSym& u, const QSym& v);

QSym elementary(int k);
QSym complete(int k);
QSym powersum(int k);
QSym monomial_symmetric(const Partition& lambda);
// Sum of M_I over compositions of n with m parts. N(0,0) = 1, N(n,0) = 0 for n >= 1.
QSym n_sum(int n, int m);

bool is_symmetric(const QSym& u);

}  // namespace hsum
