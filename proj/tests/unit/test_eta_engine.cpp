#include <gtest/gtest.h>

#include <algorithm>

#include "hsum/error.hpp"
#include "hsum/eta_engine.hpp"
#include "hsum/mzv_numeric.hpp"
#include "hsum/mzv_rewrite.hpp"
#include "oracles.hpp"

using namespace hsum;

namespace {

MzvExpr z(std::initializer_list<int> I, Rational c = 1) { return MzvExpr::zeta(Composition(I), c); }

double series(const EtaSpec& s, const QSym& u, double tol = 1e-8) {
  return eta_numeric(LhsDescriptor({{u, 0}}, s), tol).value;
}

double symbolic_value(const EtaSpec& s, const QSym& u) { return eta_result_value(eta_on_qsym(s, u), 1e-8).value; }

// Reducible specs of length <= 4 and weight 3..4.
std::vector<EtaSpec> reducible_specs() {
  std::vector<EtaSpec> out;
  for (int a = 0; a <= 4; ++a)
    for (int b = 0; b <= 4; ++b)
      for (int c = 0; c <= 4; ++c)
        for (int d = 0; d <= 4; ++d) {
          std::vector<int> s{a, b, c, d};
          int w = a + b + c + d;
          if (w < 2 || w > 4) continue;
          while (!s.empty() && s.back() == 0) s.pop_back();
          EtaSpec e(s);
          if (!e.is_irreducible() && std::find(out.begin(), out.end(), e) == out.end()) out.push_back(e);
        }
  return out;
}

}  // namespace

TEST(EtaSpec, Basics) {
  EtaSpec s{0, 1, 1, 0};
  EXPECT_EQ(s.length(), 3u);
  EXPECT_EQ(s.str(), "0,1,1");
  EXPECT_EQ(s.weight(), 2);
  EXPECT_EQ(EtaSpec::parse("0, 2"), (EtaSpec{0, 2}));
  EXPECT_TRUE((EtaSpec{1, 1}).is_irreducible());
  EXPECT_TRUE((EtaSpec{0, 0, 3}).is_irreducible());
  EXPECT_FALSE((EtaSpec{2, 1}).is_irreducible());
  EXPECT_THROW(EtaSpec({1, -1, 2}), InvalidArgument);
  EXPECT_THROW(EtaSpec({0, 1}), InvalidArgument);
}

TEST(EtaOnM, Examples) {
  EXPECT_EQ(eta_on_M(EtaSpec{1, 1}, Composition{1}).symbolic, z({2}));
  EXPECT_EQ(eta_on_M(EtaSpec{0, 1, 1}, Composition{1}).symbolic, MzvExpr(1));
  EXPECT_EQ(eta_on_M(EtaSpec{2}, Composition{}).symbolic, z({2}));
  EXPECT_EQ(eta_on_M(EtaSpec{0, 1, 1}, Composition{2}).symbolic, z({2}) - 1);
  EXPECT_TRUE(eta_on_M(EtaSpec{2}, Composition{2, 1}).complete());
}

TEST(EtaOnM, UncoveredSpecsAreResiduals) {
  auto r = eta_on_M(EtaSpec{0, 0, 3}, Composition{2});
  ASSERT_EQ(r.residual.size(), 1u);
  EXPECT_EQ(r.residual[0].spec, (EtaSpec{0, 0, 3}));
  EXPECT_EQ(r.residual[0].comp, Composition{2});
  EXPECT_TRUE(r.symbolic.is_zero());
  EXPECT_NEAR(eta_result_value(r, 1e-8).value, series(EtaSpec{0, 0, 3}, QSym::monomial({2})), 2e-8);
}

TEST(EtaOnQSym, Examples) {
  auto e2h2 = eta_on_qsym(EtaSpec{2}, elementary(2) * complete(2));
  ASSERT_TRUE(e2h2.complete());
  EXPECT_NEAR(expr_value(e2h2.symbolic, 1e-9).value, 10 * oracle::z6 + 0.5 * oracle::z3 * oracle::z3, 1e-8);
  EXPECT_EQ(eta_on_qsym(EtaSpec{0, 1, 1}, elementary(4)).symbolic, MzvExpr(1));
  auto n42 = eta_on_qsym(EtaSpec{1, 1}, n_sum(4, 2)).symbolic;
  EXPECT_EQ(n42, expand_aggregate(AggregateSpec::all(5, 2)));
  EXPECT_NEAR(expr_value(n42, 1e-10).value, oracle::z5, 1e-9);
  auto diff = eta_on_qsym(EtaSpec{2}, powersum(1) * powersum(1)).symbolic -
              eta_on_qsym(EtaSpec{1, 1}, powersum(1) * powersum(1)).symbolic;
  EXPECT_NEAR(expr_value(diff, 1e-10).value, 4.25 * oracle::z4 - 3 * oracle::z3, 1e-9);
}

TEST(EtaOnQSym, ElementaryUnderZeroOneOne) {
  for (int n = 1; n <= 6; ++n) EXPECT_EQ(eta_on_qsym(EtaSpec{0, 1, 1}, elementary(n)).symbolic, MzvExpr(1)) << n;
}

// h_n is the sum of N(n,k); each eta_{1,1}(N(n,k)) is a weight-(n+1) sum theorem aggregate
TEST(EtaOnQSym, CompleteUnderOneOne) {
  for (int n = 1; n <= 6; ++n) {
    auto r = eta_on_qsym(EtaSpec{1, 1}, complete(n));
    ASSERT_TRUE(r.complete());
    EXPECT_NEAR(expr_value(r.symbolic, 1e-10).value, n * oracle::zeta_single(n + 1), 1e-9) << n;
    MzvExpr got;
    for (int k = 1; k <= n; ++k) got += expand_aggregate(AggregateSpec::all(n + 1, k));
    EXPECT_EQ(r.symbolic, got) << n;
  }
}

TEST(EtaOnQSym, SymbolicMatchesNumeric) {
  const std::vector<EtaSpec> specs{{2}, {1, 1}, {0, 1, 1}, {3}, {0, 2}, {0, 3}, {0, 0, 2}, {2, 1}, {1, 2}, {1, 1, 1}};
  std::vector<QSym> us;
  for (int w = 0; w <= 4; ++w)
    for (const auto& I : enumerate_compositions(w)) us.push_back(QSym::monomial(I));
  for (int j = 0; j <= 4; ++j)
    for (int l = 0; j + l <= 4; ++l)
      if (j && l) us.push_back(elementary(j) * complete(l));
  for (const auto& s : specs)
    for (const auto& u : us) EXPECT_NEAR(symbolic_value(s, u), series(s, u), 1e-6) << s.str() << " on " << u.str();
}

TEST(PartialFractions, Examples) {
  EXPECT_EQ(partial_fraction_reduce(EtaSpec{2, 1}), (EtaCombo{{EtaSpec{2}, 1}, {EtaSpec{1, 1}, -1}}));
  EXPECT_EQ(partial_fraction_reduce(EtaSpec{1, 1, 1}),
            (EtaCombo{{EtaSpec{1, 1}, Rational(1, 2)}, {EtaSpec{0, 1, 1}, Rational(-1, 2)}}));
  EXPECT_EQ(partial_fraction_reduce(EtaSpec{1, 2}), (EtaCombo{{EtaSpec{1, 1}, 1}, {EtaSpec{0, 2}, -1}}));
  EXPECT_EQ(partial_fraction_reduce(EtaSpec{0, 3}), (EtaCombo{{EtaSpec{0, 3}, 1}}));
  EXPECT_EQ(combo_str(partial_fraction_reduce(EtaSpec{1, 1, 1})), "1/2*eta[1,1] - 1/2*eta[0,1,1]");
}

TEST(PartialFractions, OutputIsIrreducible) {
  for (const auto& s : reducible_specs())
    for (const auto& [t, c] : partial_fraction_reduce(s)) {
      EXPECT_TRUE(t.is_irreducible()) << s.str() << " -> " << t.str();
      EXPECT_LE(t.weight(), s.weight());
      EXPECT_NE(c, 0);
    }
}

TEST(PartialFractions, Sound) {
  const std::vector<QSym> us{QSym::scalar(1), powersum(1), elementary(2)};
  for (const auto& s : reducible_specs())
    for (const auto& u : us) {
      double combo = 0;
      for (const auto& [t, c] : partial_fraction_reduce(s)) combo += to_double(c) * series(t, u, 1e-9);
      EXPECT_NEAR(combo, series(s, u), 1e-6) << s.str() << " on " << u.str();
    }
}

TEST(LhsSymbolic, ShiftedFactorsAndZeroStart) {
  std::vector<LhsDescriptor> ds{
      LhsDescriptor({{powersum(1), 0}, {powersum(1), 1}}, EtaSpec{0, 2}, 0),
      LhsDescriptor({{complete(2), 1}}, EtaSpec{0, 2}, 0),
      LhsDescriptor({{elementary(2), 0}, {complete(1), 1}}, EtaSpec{0, 3}, 0),
      LhsDescriptor({{elementary(3), 0}}, EtaSpec{0, 1, 1}, 0),
  };
  for (const auto& d : ds) {
    auto r = lhs_symbolic(d);
    EXPECT_NEAR(eta_result_value(r, 1e-8).value, eta_numeric(d, 1e-8).value, 1e-7) << d.str();
  }
  EXPECT_NEAR(expr_value(lhs_symbolic(ds[0]).symbolic, 1e-10).value, 3 * oracle::z4, 1e-9);
}

TEST(LengthTwoExample, Value) {
  auto u = powersum(1) * powersum(1);
  EXPECT_NEAR(series(EtaSpec{2}, u) - series(EtaSpec{1, 1}, u), 4.25 * oracle::z4 - 3 * oracle::z3, 2e-8);
}
