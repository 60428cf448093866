#include "hsum/qsym.hpp"

#include <algorithm>
#include <set>
#include <vector>

#include "hsum/error.hpp"

namespace hsum {

QSym QSym::scalar(const Rational& c) {
  QSym q;
  q.add_term(Composition{}, c);
  return q;
}

QSym QSym::monomial(const Composition& I, const Rational& c) {
  QSym q;
  q.add_term(I, c);
  return q;
}

Rational QSym::coeff(const Composition& I) const {
  auto it = terms_.find(I);
  return it == terms_.end() ? Rational(0) : it->second;
}

int QSym::degree() const {
  int d = 0;
  for (const auto& [I, c] : terms_) d = std::max(d, I.weight());
  return d;
}

bool QSym::is_homogeneous() const {
  if (terms_.empty()) return true;
  const int w = terms_.begin()->first.weight();
  return std::all_of(terms_.begin(), terms_.end(), [w](const auto& t) { return t.first.weight() == w; });
}

std::size_t QSym::max_depth() const {
  std::size_t d = 0;
  for (const auto& [I, c] : terms_) d = std::max(d, I.depth());
  return d;
}

void QSym::add_term(const Composition& I, const Rational& c) {
  if (c == 0) return;
  auto [it, inserted] = terms_.try_emplace(I, c);
  if (!inserted) {
    it->second += c;
    if (it->second == 0) terms_.erase(it);
  }
}

QSym& QSym::operator+=(const QSym& o) {
  for (const auto& [I, c] : o.terms_) add_term(I, c);
  return *this;
}

QSym& QSym::operator-=(const QSym& o) {
  for (const auto& [I, c] : o.terms_) add_term(I, -c);
  return *this;
}

QSym& QSym::operator*=(const Rational& c) {
  if (c == 0) {
    terms_.clear();
    return *this;
  }
  for (auto& [I, v] : terms_) v *= c;
  return *this;
}

namespace {

using Word = std::vector<int>;
using WordCounts = std::map<Word, long>;

// Stuffle of two words: take from a, from b, or merge both heads.
void stuffle_rec(const Word& a, std::size_t ia, const Word& b, std::size_t ib, Word& prefix,
                 WordCounts& out) {
  if (ia == a.size() || ib == b.size()) {
    Word w = prefix;
    w.insert(w.end(), a.begin() + static_cast<long>(ia), a.end());
    w.insert(w.end(), b.begin() + static_cast<long>(ib), b.end());
    ++out[w];
    return;
  }
  prefix.push_back(a[ia]);
  stuffle_rec(a, ia + 1, b, ib, prefix, out);
  prefix.back() = b[ib];
  stuffle_rec(a, ia, b, ib + 1, prefix, out);
  prefix.back() = a[ia] + b[ib];
  stuffle_rec(a, ia + 1, b, ib + 1, prefix, out);
  prefix.pop_back();
}

}  // namespace

QSym operator*(const QSym& a, const QSym& b) {
  QSym out;
  for (const auto& [I, ci] : a.terms()) {
    Word wa(I.parts().begin(), I.parts().end());
    for (const auto& [J, cj] : b.terms()) {
      Word wb(J.parts().begin(), J.parts().end());
      WordCounts counts;
      Word prefix;
      stuffle_rec(wa, 0, wb, 0, prefix, counts);
      const Rational c = ci * cj;
      for (auto& [w, n] : counts) out.add_term(Composition(w), c * n);
    }
  }
  return out;
}

std::string QSym::str() const {
  if (terms_.empty()) return "0";
  std::string out;
  bool first = true;
  // print higher weight first, then descending lexicographic
  std::vector<const Terms::value_type*> order;
  for (const auto& t : terms_) order.push_back(&t);
  std::sort(order.begin(), order.end(), [](auto* x, auto* y) {
    if (x->first.weight() != y->first.weight()) return x->first.weight() > y->first.weight();
    return x->first > y->first;
  });
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
    if (t->first.empty()) {
      out += to_string(c);
    } else {
      if (c != 1) out += to_string(c) + "*";
      out += "M[" + t->first.str() + "]";
    }
  }
  return out;
}

QSym monomial_qsym(const Composition& I) { return QSym::monomial(I); }

QSym quasi_shuffle(const QSym& u, const QSym& v) { return u * v; }

QSym elementary(int k) {
  if (k < 0) throw InvalidArgument("elementary: index must be nonnegative");
  return QSym::monomial(Composition(std::vector<int>(static_cast<std::size_t>(k), 1)));
}

QSym complete(int k) {
  if (k < 0) throw InvalidArgument("complete: index must be nonnegative");
  QSym q;
  for (const auto& I : enumerate_compositions(k)) q.add_term(I, 1);
  return q;
}

QSym powersum(int k) {
  if (k < 1) throw InvalidArgument("powersum: index must be positive");
  return QSym::monomial(Composition{k});
}

QSym monomial_symmetric(const Partition& lambda) {
  QSym q;
  for (const auto& I : lambda.rearrangements()) q.add_term(I, 1);
  return q;
}

QSym n_sum(int n, int m) {
  if (n < 0 || m < 0 || m > n) throw InvalidArgument("N(n,m) requires 0 <= m <= n");
  QSym q;
  if (m == 0) {
    if (n == 0) q.add_term(Composition{}, 1);
    return q;
  }
  for (const auto& I : enumerate_compositions(n, m)) q.add_term(I, 1);
  return q;
}

bool is_symmetric(const QSym& u) {
  std::set<Partition> seen;
  for (const auto& [I, c] : u.terms()) {
    Partition lambda = sorted_partition(I);
    if (!seen.insert(lambda).second) continue;
    for (const auto& J : lambda.rearrangements())
      if (u.coeff(J) != c) return false;
  }
  return true;
}

}  // namespace hsum
