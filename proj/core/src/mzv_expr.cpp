#include "hsum/mzv_expr.hpp"

#include <algorithm>
#include <set>

#include "hsum/error.hpp"

namespace hsum {

int monomial_weight(const ZetaMonomial& m) {
  int w = 0;
  for (const auto& I : m) w += I.weight();
  return w;
}

MzvExpr::MzvExpr(const Rational& c) { add_term({}, c); }

MzvExpr MzvExpr::zeta(const Composition& I, const Rational& c) {
  if (!is_admissible(I)) throw NotAdmissible("z[" + I.str() + "] is not admissible");
  MzvExpr e;
  e.add_term({I}, c);
  return e;
}

Rational MzvExpr::coeff(ZetaMonomial m) const {
  std::sort(m.begin(), m.end());
  auto it = terms_.find(m);
  return it == terms_.end() ? Rational(0) : it->second;
}

bool MzvExpr::is_constant() const {
  return terms_.empty() || (terms_.size() == 1 && terms_.begin()->first.empty());
}

bool MzvExpr::is_linear() const {
  return std::all_of(terms_.begin(), terms_.end(), [](const auto& t) { return t.first.size() <= 1; });
}

bool MzvExpr::is_homogeneous() const { return weights().size() <= 1; }

std::vector<int> MzvExpr::weights() const {
  std::set<int> w;
  for (const auto& [m, c] : terms_) w.insert(monomial_weight(m));
  return {w.begin(), w.end()};
}

void MzvExpr::add_term(ZetaMonomial m, const Rational& c) {
  if (c == 0) return;
  for (const auto& I : m)
    if (!is_admissible(I)) throw NotAdmissible("z[" + I.str() + "] is not admissible");
  std::sort(m.begin(), m.end());
  auto [it, inserted] = terms_.try_emplace(std::move(m), c);
  if (!inserted) {
    it->second += c;
    if (it->second == 0) terms_.erase(it);
  }
}

MzvExpr& MzvExpr::operator+=(const MzvExpr& o) {
  for (const auto& [m, c] : o.terms_) add_term(m, c);
  return *this;
}

MzvExpr& MzvExpr::operator-=(const MzvExpr& o) {
  for (const auto& [m, c] : o.terms_) add_term(m, -c);
  return *this;
}

MzvExpr& MzvExpr::operator*=(const Rational& c) {
  if (c == 0) {
    terms_.clear();
    return *this;
  }
  for (auto& [m, v] : terms_) v *= c;
  return *this;
}

MzvExpr operator*(const MzvExpr& a, const MzvExpr& b) {
  MzvExpr out;
  for (const auto& [ma, ca] : a.terms_) {
    for (const auto& [mb, cb] : b.terms_) {
      ZetaMonomial m = ma;
      m.insert(m.end(), mb.begin(), mb.end());
      out.add_term(std::move(m), ca * cb);
    }
  }
  return out;
}

std::string MzvExpr::str() const {
  if (terms_.empty()) return "0";
  std::string out;
  bool first = true;
  // nonconstant monomials first, constant term last
  auto emit = [&](const ZetaMonomial& m, Rational c) {
    if (!first) {
      out += c < 0 ? " - " : " + ";
      if (c < 0) c = -c;
    } else if (c < 0) {
      out += "-";
      c = -c;
    }
    first = false;
    if (m.empty()) {
      out += to_string(c);
      return;
    }
    if (c != 1) out += to_string(c) + "*";
    for (std::size_t i = 0; i < m.size(); ++i) {
      if (i) out += "*";
      out += "z[" + m[i].str() + "]";
    }
  };
  for (const auto& [m, c] : terms_)
    if (!m.empty()) emit(m, c);
  if (auto it = terms_.find({}); it != terms_.end()) emit(it->first, it->second);
  return out;
}

MzvExpr expand_aggregate(const AggregateSpec& a) {
  if (a.depth < 1 || a.depth > a.weight - 1)
    throw InvalidArgument("aggregate requires 1 <= depth <= weight - 1, got weight " + std::to_string(a.weight) +
                          ", depth " + std::to_string(a.depth));
  MzvExpr out;
  for (const auto& I : enumerate_compositions(a.weight, a.depth)) {
    if (!is_admissible(I)) continue;
    switch (a.flavor) {
      case AggregateFlavor::All:
        break;
      case AggregateFlavor::NotStartingWithTwo:
        if (I.front() == 2) continue;
        break;
      case AggregateFlavor::StartsWith:
        if (I.front() != a.first_part) continue;
        break;
      case AggregateFlavor::EndsWithOne:
        if (I.back() != 1) continue;
        break;
    }
    out.add_term({I}, 1);
  }
  return out;
}

}  // namespace hsum
