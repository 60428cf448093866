#include "hsum/powersum_poly.hpp"

#include <algorithm>

#include "hsum/error.hpp"

namespace hsum {

namespace {

void trim(PowerSumPoly::Exponents& e) {
  while (!e.empty() && e.back() == 0) e.pop_back();
}

}  // namespace

PowerSumPoly PowerSumPoly::constant(const Rational& c) {
  PowerSumPoly p;
  p.add_term({}, c);
  return p;
}

PowerSumPoly PowerSumPoly::variable(int r) {
  if (r < 1) throw InvalidArgument("power-sum variable index must be positive");
  Exponents e(static_cast<std::size_t>(r), 0);
  e.back() = 1;
  PowerSumPoly p;
  p.add_term(std::move(e), 1);
  return p;
}

Rational PowerSumPoly::coeff(Exponents e) const {
  trim(e);
  auto it = terms_.find(e);
  return it == terms_.end() ? Rational(0) : it->second;
}

void PowerSumPoly::add_term(Exponents e, const Rational& c) {
  if (c == 0) return;
  trim(e);
  auto [it, inserted] = terms_.try_emplace(std::move(e), c);
  if (!inserted) {
    it->second += c;
    if (it->second == 0) terms_.erase(it);
  }
}

PowerSumPoly& PowerSumPoly::operator+=(const PowerSumPoly& o) {
  for (const auto& [e, c] : o.terms_) add_term(e, c);
  return *this;
}

PowerSumPoly& PowerSumPoly::operator*=(const Rational& c) {
  if (c == 0) {
    terms_.clear();
    return *this;
  }
  for (auto& [e, v] : terms_) v *= c;
  return *this;
}

PowerSumPoly operator-(PowerSumPoly a, const PowerSumPoly& b) {
  for (const auto& [e, c] : b.terms_) a.add_term(e, -c);
  return a;
}

PowerSumPoly operator*(const PowerSumPoly& a, const PowerSumPoly& b) {
  PowerSumPoly out;
  for (const auto& [ea, ca] : a.terms_) {
    for (const auto& [eb, cb] : b.terms_) {
      PowerSumPoly::Exponents e(std::max(ea.size(), eb.size()), 0);
      for (std::size_t i = 0; i < ea.size(); ++i) e[i] += ea[i];
      for (std::size_t i = 0; i < eb.size(); ++i) e[i] += eb[i];
      out.add_term(std::move(e), ca * cb);
    }
  }
  return out;
}

Rational PowerSumPoly::evaluate(std::span<const Rational> y) const {
  Rational total = 0;
  for (const auto& [e, c] : terms_) {
    Rational m = c;
    for (std::size_t r = 0; r < e.size() && m != 0; ++r) {
      if (e[r] == 0) continue;
      if (r >= y.size()) {
        m = 0;
        break;
      }
      m *= rational_pow(y[r], static_cast<unsigned long>(e[r]));
    }
    total += m;
  }
  return total;
}

QSym PowerSumPoly::to_qsym() const {
  QSym out;
  for (const auto& [e, c] : terms_) {
    QSym m = QSym::scalar(c);
    for (std::size_t r = 0; r < e.size(); ++r)
      for (int k = 0; k < e[r]; ++k) m = m * powersum(static_cast<int>(r) + 1);
    out += m;
  }
  return out;
}

std::string PowerSumPoly::str() const {
  if (terms_.empty()) return "0";
  // total degree descending, then exponent vector descending
  std::vector<const Terms::value_type*> order;
  for (const auto& t : terms_) order.push_back(&t);
  auto degree = [](const Exponents& e) {
    int d = 0;
    for (std::size_t r = 0; r < e.size(); ++r) d += e[r] * static_cast<int>(r + 1);
    return d;
  };
  std::sort(order.begin(), order.end(), [&](auto* x, auto* y) {
    int dx = degree(x->first), dy = degree(y->first);
    if (dx != dy) return dx > dy;
    return x->first > y->first;
  });
  std::string out;
  bool first = true;
  for (auto* t : order) {
    Rational c = t->second;
    if (!first) {
      out += c < 0 ? " - " : " + ";
      if (c < 0) c = -c;
    } else if (c < 0) {
      out += "-";
      c = -c;
    }
    first = false;
    std::string mono;
    for (std::size_t r = 0; r < t->first.size(); ++r) {
      int p = t->first[r];
      if (p == 0) continue;
      if (!mono.empty()) mono += "*";
      mono += "y" + std::to_string(r + 1);
      if (p > 1) mono += "^" + std::to_string(p);
    }
    if (mono.empty()) {
      out += to_string(c);
    } else {
      if (c != 1) out += to_string(c) + "*";
      out += mono;
    }
  }
  return out;
}

PowerSumPoly pq_poly(PQKind kind, int n) {
  if (n < 0) throw InvalidArgument("pq_poly: n must be nonnegative");
  PowerSumPoly out;
  for (const auto& lambda : enumerate_partitions(n)) {
    auto m = lambda.multiplicities();
    Rational c = 1;
    int even_parts = 0;
    for (std::size_t r = 0; r < m.size(); ++r) {
      c /= Rational(factorial(m[r]) * rational_pow(Rational(static_cast<long>(r + 1)), static_cast<unsigned long>(m[r])));
      if ((r + 1) % 2 == 0) even_parts += m[r];
    }
    if (kind == PQKind::P && even_parts % 2 == 1) c = -c;
    out.add_term(m, c);
  }
  return out;
}

PowerSumPoly to_powersum_poly(const QSym& u) {
  if (!is_symmetric(u)) throw NotSymmetric("to_powersum_poly: element is not symmetric: " + u.str());
  // Peel off the partition with the most parts: p_lambda has leading term
  // (prod m_r!) m_lambda, and all other terms of p_lambda have fewer parts.
  PowerSumPoly out;
  QSym rest = u;
  while (!rest.is_zero()) {
    const Composition* best = nullptr;
    for (const auto& [I, c] : rest.terms())
      if (!best || I.depth() > best->depth()) best = &I;
    Partition lambda = sorted_partition(*best);
    auto m = lambda.multiplicities();
    Rational lead = 1;
    for (int k : m) lead *= Rational(factorial(k));
    Rational c = rest.coeff(lambda.rearrangements().front()) / lead;
    PowerSumPoly mono;
    mono.add_term(m.empty() ? PowerSumPoly::Exponents{} : m, c);
    rest -= mono.to_qsym();
    out += mono;
  }
  return out;
}

}  // namespace hsum
