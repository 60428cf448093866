#include <gtest/gtest.h>

#include "hsum/error.hpp"
#include "hsum/mzv_numeric.hpp"
#include "hsum/mzv_rewrite.hpp"
#include "oracles.hpp"

using namespace hsum;

namespace {

MzvExpr z(std::initializer_list<int> I, Rational c = 1) { return MzvExpr::zeta(Composition(I), c); }

double value(const MzvExpr& e) { return expr_value(e, 5e-10).value; }

std::vector<Composition> admissible_upto(int maxw) {
  std::vector<Composition> out;
  for (int w = 2; w <= maxw; ++w)
    for (const auto& I : enumerate_compositions(w))
      if (is_admissible(I)) out.push_back(I);
  return out;
}

bool homogeneous_of(const MzvExpr& e, int w) {
  auto ws = e.weights();
  return ws.size() == 1 && ws.front() == w;
}

}  // namespace

TEST(MzvExpr, Algebra) {
  MzvExpr e = z({3}) * z({2}) + Rational(5, 4);
  EXPECT_EQ(e.constant_term(), Rational(5, 4));
  EXPECT_EQ(e.coeff({Composition{3}, Composition{2}}), 1);
  EXPECT_EQ(e.coeff({Composition{2}, Composition{3}}), 1);  // monomials are sorted multisets
  EXPECT_FALSE(e.is_linear());
  EXPECT_FALSE(e.is_homogeneous());
  EXPECT_TRUE((e - e).is_zero());
  EXPECT_TRUE(MzvExpr(Rational(2)).is_constant());
  EXPECT_THROW(MzvExpr::zeta(Composition{1, 2}), NotAdmissible);
  EXPECT_EQ(monomial_weight({Composition{3}, Composition{2, 1}}), 6);
}

TEST(MzvExpr, TextForm) {
  EXPECT_EQ((z({4}, Rational(3, 2)) - z({2}) * z({2}, Rational(1, 2)) + Rational(5, 4)).str(),
            "-1/2*z[2]*z[2] + 3/2*z[4] + 5/4");
  EXPECT_EQ(MzvExpr().str(), "0");
}

TEST(Aggregate, Examples) {
  EXPECT_EQ(expand_aggregate(AggregateSpec::all(5, 2)), z({4, 1}) + z({3, 2}) + z({2, 3}));
  EXPECT_EQ(expand_aggregate(AggregateSpec::t(5, 2)), z({4, 1}) + z({3, 2}));
  EXPECT_EQ(expand_aggregate(AggregateSpec::all(4, 3)), z({2, 1, 1}));
  EXPECT_EQ(expand_aggregate(AggregateSpec::starts_with(5, 2, 2)), z({2, 3}));
  EXPECT_EQ(expand_aggregate(AggregateSpec::r(5, 2)), z({4, 1}));
  EXPECT_THROW(expand_aggregate(AggregateSpec::all(4, 4)), InvalidArgument);
}

TEST(Aggregate, FlavorsPartitionTheWhole) {
  for (int n = 3; n <= 8; ++n)
    for (int k = 1; k <= n - 1; ++k) {
      MzvExpr split = expand_aggregate(AggregateSpec::t(n, k));
      if (k >= 1 && n - 2 >= k - 1) split += expand_aggregate(AggregateSpec::starts_with(n, k, 2));
      EXPECT_EQ(split, expand_aggregate(AggregateSpec::all(n, k))) << n << "," << k;
      MzvExpr by_first;
      for (int j = 2; j <= n - k + 1; ++j) by_first += expand_aggregate(AggregateSpec::starts_with(n, k, j));
      EXPECT_EQ(by_first, expand_aggregate(AggregateSpec::all(n, k)));
    }
}

// S^T_{n,k} and S^R_{n,n-k} are exchanged by duality.
TEST(Aggregate, DualityExchangesTAndR) {
  for (int n = 3; n <= 8; ++n)
    for (int k = 1; k <= n - 1; ++k)
      EXPECT_EQ(dual_canonicalize(expand_aggregate(AggregateSpec::t(n, k))),
                dual_canonicalize(expand_aggregate(AggregateSpec::r(n, n - k))))
          << n << "," << k;
}

TEST(Aggregate, SumTheorem) {
  for (int n = 2; n <= 7; ++n)
    for (int k = 1; k <= n - 1; ++k)
      EXPECT_NEAR(value(expand_aggregate(AggregateSpec::all(n, k))), oracle::zeta_single(n), 1e-9) << n << "," << k;
}

TEST(Duality, Examples) {
  EXPECT_EQ(dual_canonicalize(z({2, 1})), z({3}));
  EXPECT_EQ(dual_canonicalize(z({3, 1})), z({3, 1}));
  EXPECT_EQ(dual_canonicalize(z({2}) + 5), z({2}) + 5);
  EXPECT_EQ(dual_canonicalize(z({2, 1, 1}) * z({2, 1})), z({4}) * z({3}));
}

TEST(Duality, Properties) {
  for (const auto& I : admissible_upto(8)) {
    const auto r = dual_representative(I);
    EXPECT_TRUE(r == I || r == oracle::word_dual(I));
    EXPECT_EQ(dual_representative(oracle::word_dual(I)), r);
    MzvExpr e = MzvExpr::zeta(I, Rational(3, 7));
    EXPECT_EQ(dual_canonicalize(dual_canonicalize(e)), dual_canonicalize(e));
  }
  for (const auto& I : admissible_upto(7))
    EXPECT_NEAR(value(dual_canonicalize(MzvExpr::zeta(I))), value(MzvExpr::zeta(I)), 1e-9) << I.str();
}

TEST(Derivation, Examples) {
  EXPECT_EQ(derivation_relation(Composition{2}), std::make_pair(z({3}), z({2, 1})));
  EXPECT_EQ(derivation_relation(Composition{3}), std::make_pair(z({4}), z({3, 1}) + z({2, 2})));
  EXPECT_EQ(derivation_relation(Composition{2, 1}), std::make_pair(z({3, 1}) + z({2, 2}), z({2, 1, 1})));
  EXPECT_THROW(derivation_relation(Composition{1, 2}), NotAdmissible);
}

TEST(Derivation, HoldsNumerically) {
  for (const auto& I : admissible_upto(5)) {
    auto [lhs, rhs] = derivation_relation(I);
    EXPECT_TRUE(homogeneous_of(lhs, I.weight() + 1));
    EXPECT_TRUE(homogeneous_of(rhs, I.weight() + 1));
    EXPECT_NEAR(value(lhs), value(rhs), 1e-9) << I.str();
  }
}

TEST(Euler, Examples) {
  EXPECT_EQ(euler_reduce(z({2, 1})), z({3}));
  EXPECT_EQ(euler_reduce(z({3, 1})), z({4}, Rational(3, 2)) - z({2}) * z({2}, Rational(1, 2)));
  EXPECT_EQ(euler_reduce(z({4, 1}, 2)), z({5}, 4) + Rational(kEulerSumSign) * z({3}) * z({2}) * Rational(2));
  EXPECT_EQ(euler_reduce(z({3, 2}) + 1), z({3, 2}) + 1);
}

TEST(Euler, SignIsTheNumericalOne) {
  EXPECT_NEAR(value(euler_formula(3)), oracle::z4 / 4, 1e-10);
  EXPECT_GT(std::abs(value(euler_formula(3, +1)) - oracle::z4 / 4), 1.0);
  for (int n = 2; n <= 7; ++n) {
    auto r = euler_reduce(MzvExpr::zeta(Composition{n, 1}));
    EXPECT_TRUE(homogeneous_of(r, n + 1));
    for (const auto& [m, c] : r.terms())
      for (const auto& I : m) EXPECT_EQ(I.depth(), 1u);
    EXPECT_NEAR(value(r), value(MzvExpr::zeta(Composition{n, 1})), 1e-9) << n;
  }
}

TEST(HeightOne, Examples) {
  EXPECT_EQ(height_one_reduce(1, 1), z({2}));
  EXPECT_EQ(height_one_reduce(2, 1), z({3}));
  EXPECT_EQ(height_one_reduce(2, 2), euler_reduce(z({3, 1})));
  EXPECT_NEAR(value(height_one_reduce(2, 2)), 0.2705808084, 1e-9);
  EXPECT_THROW(height_one_reduce(7, 6), OutOfRange);
  EXPECT_THROW(height_one_reduce(0, 2), InvalidArgument);
}

TEST(HeightOne, MatchesDirectEvaluation) {
  for (int m = 1; m <= 5; ++m)
    for (int n = 1; m + n <= 6; ++n) {
      std::vector<int> parts{m + 1};
      parts.insert(parts.end(), n - 1, 1);
      const Composition I(parts);
      auto r = height_one_reduce(m, n);
      EXPECT_TRUE(homogeneous_of(r, m + n));
      EXPECT_NEAR(value(r), value(MzvExpr::zeta(I)), 1e-8) << I.str();
    }
}

// zeta(m+1, 1^{n-1}) = zeta(n+1, 1^{m-1}) by duality
TEST(HeightOne, SymmetricInMAndN) {
  for (int m = 1; m <= 6; ++m)
    for (int n = 1; m + n <= 12; ++n) EXPECT_EQ(height_one_reduce(m, n), height_one_reduce(n, m)) << m << "," << n;
}

TEST(Products, Examples) {
  EXPECT_EQ(expand_products(z({2}) * z({2})), z({2, 2}, 2) + z({4}));
  EXPECT_EQ(expand_products(z({2}) * z({3})), z({2, 3}) + z({3, 2}) + z({5}));
  EXPECT_EQ(expand_products(z({4})), z({4}));
  EXPECT_EQ(expand_products(MzvExpr(3)), MzvExpr(3));
}

TEST(Products, LinearAndValuePreserving) {
  std::vector<MzvExpr> samples{z({2}) * z({2}) * z({2}), z({2, 1}) * z({3}), z({3, 1}) * z({2}, -2) + 1,
                               z({2}) * z({2, 1, 1}), z({2}) * z({2}) - z({4}, Rational(5, 2))};
  for (const auto& e : samples) {
    auto r = expand_products(e);
    EXPECT_TRUE(r.is_linear()) << r.str();
    EXPECT_EQ(r.weights(), e.weights());
    EXPECT_NEAR(value(r), value(e), 1e-9) << e.str();
  }
}

TEST(Simplify, ValuePreservingAndIdempotent) {
  std::vector<MzvExpr> samples{z({2, 1, 1}), z({4, 1}) + z({2, 1, 1, 1}), z({3, 1}) * z({2}), z({2, 2, 1}) - 3};
  for (const auto& e : samples) {
    auto r = simplify(e);
    EXPECT_EQ(simplify(r), r);
    EXPECT_NEAR(value(r), value(e), 1e-9) << e.str();
  }
  EXPECT_EQ(simplify(z({2, 1, 1})), z({4}));
}
