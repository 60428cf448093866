#include "hsum/mzv_rewrite.hpp"

#include <map>

#include "hsum/error.hpp"
#include "hsum/qsym.hpp"

namespace hsum {

Composition dual_representative(const Composition& I) {
  Composition d = tau(I);
  if (d.depth() != I.depth()) return d.depth() < I.depth() ? d : I;
  return d < I ? d : I;
}

namespace {

// Apply f to every zeta factor of every monomial, f returning an MzvExpr.
template <class F>
MzvExpr substitute(const MzvExpr& e, F&& f) {
  MzvExpr out;
  for (const auto& [m, c] : e.terms()) {
    MzvExpr term(c);
    for (const auto& I : m) term = term * f(I);
    out += term;
  }
  return out;
}

}  // namespace

MzvExpr dual_canonicalize(const MzvExpr& e) {
  return substitute(e, [](const Composition& I) { return MzvExpr::zeta(dual_representative(I)); });
}

std::pair<MzvExpr, MzvExpr> derivation_relation(const Composition& I) {
  if (!is_admissible(I)) throw NotAdmissible("derivation relation needs an admissible composition, got (" + I.str() + ")");
  MzvExpr lhs, rhs;
  std::vector<int> parts(I.parts().begin(), I.parts().end());
  for (std::size_t j = 0; j < parts.size(); ++j) {
    auto raised = parts;
    ++raised[j];
    lhs += MzvExpr::zeta(Composition(raised));
    for (int p = 1; p <= parts[j] - 1; ++p) {
      std::vector<int> split(parts.begin(), parts.begin() + static_cast<long>(j));
      split.push_back(parts[j] - p + 1);
      split.push_back(p);
      split.insert(split.end(), parts.begin() + static_cast<long>(j) + 1, parts.end());
      rhs += MzvExpr::zeta(Composition(split));
    }
  }
  return {lhs, rhs};
}

MzvExpr euler_formula(int n, int sign) {
  if (n < 2) throw InvalidArgument("Euler's formula needs n >= 2");
  MzvExpr out = MzvExpr::zeta(Composition{n + 1}, ratio(n, 2));
  for (int i = 1; i <= n - 2; ++i)
    out += MzvExpr::zeta(Composition{n - i}) * MzvExpr::zeta(Composition{i + 1}) * Rational(sign, 2);
  return out;
}

MzvExpr euler_reduce(const MzvExpr& e) {
  return substitute(e, [](const Composition& I) {
    if (I.depth() == 2 && I.back() == 1) return euler_formula(I.front());
    return MzvExpr::zeta(I);
  });
}

namespace {

// Bivariate series in s, t truncated to s^a t^b with a <= m, b <= n.
class Bivariate {
 public:
  Bivariate(int m, int n) : m_(m), n_(n), c_((m + 1) * (n + 1)) {}
  MzvExpr& at(int a, int b) { return c_[a * (n_ + 1) + b]; }
  const MzvExpr& at(int a, int b) const { return c_[a * (n_ + 1) + b]; }
  Bivariate operator*(const Bivariate& o) const {
    Bivariate r(m_, n_);
    for (int a = 0; a <= m_; ++a)
      for (int b = 0; b <= n_; ++b) {
        if (at(a, b).is_zero()) continue;
        for (int a2 = 0; a + a2 <= m_; ++a2)
          for (int b2 = 0; b + b2 <= n_; ++b2)
            if (!o.at(a2, b2).is_zero()) r.at(a + a2, b + b2) += at(a, b) * o.at(a2, b2);
      }
    return r;
  }

 private:
  int m_, n_;
  std::vector<MzvExpr> c_;
};

}  // namespace

MzvExpr height_one_reduce(int m, int n, int bound) {
  if (m < 1 || n < 1) throw InvalidArgument("height_one_reduce needs m, n >= 1");
  if (m + n > bound)
    throw OutOfRange("height_one_reduce: m + n = " + std::to_string(m + n) + " exceeds truncation bound " +
                     std::to_string(bound));
  // A = sum_j z[j]/j (s^j + t^j - (s+t)^j); only mixed terms s^a t^b with
  // a, b >= 1 survive inside the truncation box.
  Bivariate A(m, n);
  for (int a = 1; a <= m; ++a)
    for (int b = 1; b <= n; ++b) {
      int j = a + b;
      A.at(a, b) = MzvExpr::zeta(Composition{j}, -Rational(binomial(j, a)) / j);
    }
  // exp(A) - 1; A has total degree >= 2
  Bivariate power = A;
  Bivariate sum = A;
  for (int k = 2; 2 * k <= m + n; ++k) {
    power = power * A;
    for (int a = 0; a <= m; ++a)
      for (int b = 0; b <= n; ++b)
        if (!power.at(a, b).is_zero()) sum.at(a, b) += power.at(a, b) * Rational(BigInt(1), factorial(k));
  }
  return sum.at(m, n) * Rational(-1);
}

MzvExpr expand_products(const MzvExpr& e) {
  MzvExpr out;
  for (const auto& [m, c] : e.terms()) {
    if (m.size() <= 1) {
      out.add_term(m, c);
      continue;
    }
    QSym prod = QSym::scalar(1);
    for (const auto& I : m) prod = prod * QSym::monomial(I.reversed());
    for (const auto& [K, k] : prod.terms()) out.add_term({K.reversed()}, c * k);
  }
  return out;
}

namespace {

bool is_height_one(const Composition& I) {
  for (std::size_t i = 1; i < I.depth(); ++i)
    if (I[i] != 1) return false;
  return true;
}

}  // namespace

MzvExpr simplify(const MzvExpr& e) {
  MzvExpr cur = e;
  for (int iter = 0; iter < 8; ++iter) {
    MzvExpr next = substitute(dual_canonicalize(cur), [](const Composition& I) {
      if (I.depth() >= 2 && is_height_one(I) && I.weight() <= kHeightOneBound)
        return height_one_reduce(I.front() - 1, static_cast<int>(I.depth()));
      return MzvExpr::zeta(I);
    });
    if (next == cur) break;
    cur = std::move(next);
  }
  return cur;
}

}  // namespace hsum
