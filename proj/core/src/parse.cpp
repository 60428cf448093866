#include "hsum/parse.hpp"

#include <cctype>
#include <algorithm>
#include <functional>
#include <string>
#include <type_traits>

#include "hsum/error.hpp"

namespace hsum {

namespace {

template <class V>
V from_rational(const Rational& c) {
  if constexpr (std::is_same_v<V, QSym>)
    return QSym::scalar(c);
  else
    return V(c);
}

// Recursive descent over
//   expr   := [+|-] term {(+|-) term}
//   term   := factor {* factor}
//   factor := int [/ int] | ( expr ) | atom
// V supplies the arithmetic; atom() reads generator names.
template <class V>
class Parser {
 public:
  using Atom = std::function<V(Parser&, char)>;
  using Mul = std::function<V(const V&, const V&)>;

  Parser(std::string_view text, Atom atom, Mul mul) : text_(text), atom_(std::move(atom)), mul_(std::move(mul)) {}

  V parse() {
    V v = expr();
    skip();
    if (pos_ != text_.size()) fail("unexpected '" + std::string(1, text_[pos_]) + "'");
    return v;
  }

  [[noreturn]] void fail(const std::string& why) const {
    throw ParseError("cannot parse '" + std::string(text_) + "' at position " + std::to_string(pos_) + ": " + why);
  }

  void skip() {
    while (pos_ < text_.size() && std::isspace(static_cast<unsigned char>(text_[pos_]))) ++pos_;
  }

  bool eat(char c) {
    skip();
    if (pos_ < text_.size() && text_[pos_] == c) {
      ++pos_;
      return true;
    }
    return false;
  }

  void expect(char c) {
    if (!eat(c)) fail(std::string("expected '") + c + "'");
  }

  bool eat_word(std::string_view w) {
    skip();
    if (text_.substr(pos_, w.size()) == w) {
      pos_ += w.size();
      return true;
    }
    return false;
  }

  int integer() {
    skip();
    std::size_t start = pos_;
    while (pos_ < text_.size() && std::isdigit(static_cast<unsigned char>(text_[pos_]))) ++pos_;
    if (start == pos_) fail("expected an integer");
    if (pos_ - start > 9) fail("integer too large");
    return std::stoi(std::string(text_.substr(start, pos_ - start)));
  }

  // "[a,b,...]", possibly empty
  std::vector<int> bracket_list() {
    expect('[');
    std::vector<int> out;
    if (eat(']')) return out;
    do {
      out.push_back(integer());
    } while (eat(','));
    expect(']');
    return out;
  }

 private:
  V expr() {
    bool neg = false;
    if (eat('-'))
      neg = true;
    else
      eat('+');
    V v = term();
    if (neg) v = mul_(from_rational<V>(Rational(-1)), v);
    for (;;) {
      if (eat('+'))
        v = v + term();
      else if (eat('-'))
        v = v + mul_(from_rational<V>(Rational(-1)), term());
      else
        return v;
    }
  }

  V term() {
    V v = factor();
    while (eat('*')) v = mul_(v, factor());
    return v;
  }

  V factor() {
    skip();
    if (pos_ >= text_.size()) fail("unexpected end of input");
    char c = text_[pos_];
    if (std::isdigit(static_cast<unsigned char>(c))) {
      BigInt num(std::to_string(integer()));
      BigInt den(1);
      if (eat('/')) {
        den = integer();
        if (den == 0) fail("zero denominator");
      }
      Rational q(num, den);
      q.canonicalize();
      return from_rational<V>(q);
    }
    if (eat('(')) {
      V v = expr();
      expect(')');
      return v;
    }
    ++pos_;
    return atom_(*this, c);
  }

  std::string_view text_;
  std::size_t pos_ = 0;
  Atom atom_;
  Mul mul_;
};

template <class V>
V qsym_generator(Parser<V>& p, char c, std::function<V(QSym)> wrap) {
  switch (c) {
    case 'e': return wrap(elementary(p.integer()));
    case 'h': return wrap(complete(p.integer()));
    case 'p': {
      int k = p.integer();
      if (k < 1) p.fail("p0 is not defined");
      return wrap(powersum(k));
    }
    case 'N': {
      auto a = p.bracket_list();
      if (a.size() != 2) p.fail("N takes two indices");
      return wrap(n_sum(a[0], a[1]));
    }
    case 'M': {
      auto a = p.bracket_list();
      for (int x : a)
        if (x < 1) p.fail("M indices must be positive");
      return wrap(QSym::monomial(Composition(a)));
    }
    default: p.fail(std::string("unknown generator '") + c + "'");
  }
}

// Sum of coef * unshifted * shifted, kept as separate products.
struct UTerm {
  QSym base;
  QSym shifted;
};

struct UPoly {
  std::vector<UTerm> terms;
  UPoly() = default;
  explicit UPoly(const Rational& c) { terms.push_back({QSym::scalar(c), QSym::scalar(1)}); }
  friend UPoly operator+(UPoly a, const UPoly& b) {
    a.terms.insert(a.terms.end(), b.terms.begin(), b.terms.end());
    return a;
  }
};

UPoly upoly_mul(const UPoly& a, const UPoly& b) {
  UPoly out;
  for (const auto& x : a.terms)
    for (const auto& y : b.terms) out.terms.push_back({x.base * y.base, x.shifted * y.shifted});
  return out;
}

UPoly parse_upoly(std::string_view text) {
  Parser<UPoly>::Atom atom = [](Parser<UPoly>& p, char c) {
    UPoly v = qsym_generator<UPoly>(p, c, [](QSym u) {
      UPoly r;
      r.terms.push_back({std::move(u), QSym::scalar(1)});
      return r;
    });
    if (p.eat_word("@+1"))
      for (auto& t : v.terms) std::swap(t.base, t.shifted);
    return v;
  };
  return Parser<UPoly>(text, atom, upoly_mul).parse();
}

}  // namespace

QSym parse_qsym(std::string_view text) {
  Parser<QSym>::Atom atom = [](Parser<QSym>& p, char c) {
    return qsym_generator<QSym>(p, c, [](QSym u) { return u; });
  };
  return Parser<QSym>(text, atom, [](const QSym& a, const QSym& b) { return a * b; }).parse();
}

LhsSum parse_lhs(std::string_view u, const EtaSpec& spec, int start) {
  UPoly poly = parse_upoly(u);
  // group by shifted part
  std::vector<std::pair<QSym, QSym>> groups;  // shifted, accumulated base
  for (auto& t : poly.terms) {
    if (t.base.is_zero() || t.shifted.is_zero()) continue;
    auto it = std::find_if(groups.begin(), groups.end(), [&](const auto& g) { return g.first == t.shifted; });
    if (it == groups.end())
      groups.emplace_back(t.shifted, t.base);
    else
      it->second += t.base;
  }
  LhsSum out;
  for (auto& [shifted, base] : groups) {
    if (base.is_zero()) continue;
    std::vector<Factor> factors{Factor{base, 0}};
    if (!(shifted == QSym::scalar(1))) factors.push_back(Factor{shifted, 1});
    out.push_back({1, LhsDescriptor(std::move(factors), spec, start)});
  }
  if (out.empty()) out.push_back({1, LhsDescriptor({Factor{QSym{}, 0}}, spec, start)});
  return out;
}

MzvExpr parse_mzv_expr(std::string_view text) {
  Parser<MzvExpr>::Atom atom = [](Parser<MzvExpr>& p, char c) -> MzvExpr {
    if (c != 'z') p.fail(std::string("unknown symbol '") + c + "'");
    auto a = p.bracket_list();
    Composition I;
    try {
      I = Composition(a);
    } catch (const InvalidArgument& e) {
      p.fail(e.what());
    }
    if (!is_admissible(I)) p.fail("z[" + I.str() + "] is not admissible");
    return MzvExpr::zeta(I);
  };
  return Parser<MzvExpr>(text, atom, [](const MzvExpr& a, const MzvExpr& b) { return a * b; }).parse();
}

namespace {

// Linear combination plus a scalar part, so that products with a scalar work.
struct ComboValue {
  EtaCombo combo;
  Rational scalar;
  ComboValue() = default;
  explicit ComboValue(const Rational& c) : scalar(c) {}
  friend ComboValue operator+(ComboValue a, const ComboValue& b) {
    for (const auto& [s, c] : b.combo) a.combo[s] += c;
    a.scalar += b.scalar;
    return a;
  }
};

}  // namespace

EtaCombo parse_eta_combo(std::string_view text) {
  Parser<ComboValue>::Atom atom = [](Parser<ComboValue>& p, char c) {
    if (c != 'e' || !p.eat_word("ta")) p.fail("expected eta[...]");
    ComboValue v;
    try {
      v.combo[EtaSpec(p.bracket_list())] = 1;
    } catch (const InvalidArgument& e) {
      p.fail(e.what());
    }
    return v;
  };
  Parser<ComboValue>::Mul mul = [](const ComboValue& a, const ComboValue& b) {
    if (!a.combo.empty() && !b.combo.empty()) throw ParseError("eta combinations are linear");
    const ComboValue& lin = a.combo.empty() ? b : a;
    const Rational& c = a.combo.empty() ? a.scalar : b.scalar;
    ComboValue out;
    for (const auto& [s, x] : lin.combo) out.combo[s] = x * c;
    out.scalar = lin.scalar * c;
    return out;
  };
  Parser<ComboValue> p(text, atom, mul);
  ComboValue v = p.parse();
  if (v.scalar != 0) throw ParseError("eta combination has a constant term: '" + std::string(text) + "'");
  EtaCombo out;
  for (auto& [s, c] : v.combo)
    if (c != 0) out.emplace(s, c);
  return out;
}

}  // namespace hsum
