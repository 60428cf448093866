#pragma once

#include <map>
#include <span>
#include <string>
#include <vector>

#include "hsum/qsym.hpp"
#include "hsum/rational.hpp"

namespace hsum {

// Polynomial in y_1, y_2, ... where y_r stands for p_r. A monomial is its
// exponent vector (entry r-1 is the power of y_r), trailing zeros trimmed.
class PowerSumPoly {
 public:
  using Exponents = std::vector<int>;
  using Terms = std::map<Exponents, Rational>;

  PowerSumPoly() = default;
  static PowerSumPoly constant(const Rational& c);
  static PowerSumPoly variable(int r);

  const Terms& terms() const { return terms_; }
  Rational coeff(Exponents e) const;
  void add_term(Exponents e, const Rational& c);

  PowerSumPoly& operator+=(const PowerSumPoly& o);
  PowerSumPoly& operator*=(const Rational& c);
  friend PowerSumPoly operator+(PowerSumPoly a, const PowerSumPoly& b) { return a += b; }
  friend PowerSumPoly operator-(PowerSumPoly a, const PowerSumPoly& b);
  friend PowerSumPoly operator*(const PowerSumPoly& a, const PowerSumPoly& b);
  friend PowerSumPoly operator*(PowerSumPoly a, const Rational& c) { return a *= c; }
  friend bool operator==(const PowerSumPoly&, const PowerSumPoly&) = default;

  // y[r-1] is the value of y_r; missing variables read as 0.
  Rational evaluate(std::span<const Rational> y) const;
  // Substitute p_r for y_r inside QSym.
  QSym to_qsym() const;

  std::string str() const;

 private:
  Terms terms_;
};

enum class PQKind { P, Q };

// e_n = P_n(p_1..p_n), h_n = Q_n(p_1..p_n); P_0 = Q_0 = 1.
PowerSumPoly pq_poly(PQKind kind, int n);

// Rejects non-symmetric input with NotSymmetric.
PowerSumPoly to_powersum_poly(const QSym& u);

}  // namespace hsum
