#pragma once

#include <map>
#include <string>
#include <vector>

#include "hsum/composition.hpp"
#include "hsum/rational.hpp"

namespace hsum {

// Sorted multiset of admissible compositions; empty means the constant term.
using ZetaMonomial = std::vector<Composition>;

// Polynomial over Q in formal symbols z[I], I admissible. z[i1,...,ik] is
// the sum over n1 > n2 > ... > nk >= 1 of prod n_j^{-i_j}.
class MzvExpr {
 public:
  using Terms = std::map<ZetaMonomial, Rational>;

  MzvExpr() = default;
  MzvExpr(const Rational& c);  // NOLINT: constants convert implicitly
  MzvExpr(int c) : MzvExpr(Rational(c)) {}  // NOLINT
  static MzvExpr zeta(const Composition& I, const Rational& c = 1);
  static MzvExpr zeta(std::initializer_list<int> parts) { return zeta(Composition(parts)); }

  const Terms& terms() const { return terms_; }
  Rational coeff(ZetaMonomial m) const;  // any factor order
  Rational constant_term() const { return coeff({}); }
  bool is_zero() const { return terms_.empty(); }
  bool is_constant() const;
  // Every monomial has at most one zeta factor.
  bool is_linear() const;
  bool is_homogeneous() const;
  // Weights present in the support.
  std::vector<int> weights() const;

  void add_term(ZetaMonomial m, const Rational& c);

  MzvExpr& operator+=(const MzvExpr& o);
  MzvExpr& operator-=(const MzvExpr& o);
  MzvExpr& operator*=(const Rational& c);
  MzvExpr operator-() const { return *this * Rational(-1); }
  friend MzvExpr operator+(MzvExpr a, const MzvExpr& b) { return a += b; }
  friend MzvExpr operator-(MzvExpr a, const MzvExpr& b) { return a -= b; }
  friend MzvExpr operator*(MzvExpr a, const Rational& c) { return a *= c; }
  friend MzvExpr operator*(const Rational& c, MzvExpr a) { return a *= c; }
  friend MzvExpr operator*(const MzvExpr& a, const MzvExpr& b);
  friend bool operator==(const MzvExpr&, const MzvExpr&) = default;

  // "-1/2*z[2]*z[2] + 3/2*z[4] + 5/4"; parse_mzv_expr reads it back.
  std::string str() const;

 private:
  Terms terms_;
};

int monomial_weight(const ZetaMonomial& m);

enum class AggregateFlavor { All, NotStartingWithTwo, StartsWith, EndsWithOne };

// S_{n,k}, S^T_{n,k}, S^{[j]}_{n,k} or S^R_{n,k}.
struct AggregateSpec {
  int weight;
  int depth;
  AggregateFlavor flavor = AggregateFlavor::All;
  int first_part = 0;  // used by StartsWith

  static AggregateSpec all(int n, int k) { return {n, k, AggregateFlavor::All, 0}; }
  static AggregateSpec t(int n, int k) { return {n, k, AggregateFlavor::NotStartingWithTwo, 0}; }
  static AggregateSpec starts_with(int n, int k, int j) { return {n, k, AggregateFlavor::StartsWith, j}; }
  static AggregateSpec r(int n, int k) { return {n, k, AggregateFlavor::EndsWithOne, 0}; }
};

MzvExpr expand_aggregate(const AggregateSpec& a);

}  // namespace hsum
