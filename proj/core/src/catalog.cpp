#include "hsum/catalog.hpp"

#include <algorithm>

#include "hsum/error.hpp"
#include "hsum/mzv_rewrite.hpp"

namespace hsum {

std::string params_str(const Params& p) {
  std::string out;
  for (const auto& [k, v] : p) {
    if (!out.empty()) out += ",";
    out += k + "=" + std::to_string(v);
  }
  return out;
}

int lhs_weight(const LhsSum& lhs) {
  int best = 0;
  for (const auto& w : lhs) {
    int total = w.lhs.spec.weight();
    for (const auto& f : w.lhs.factors) total += f.u.degree();
    best = std::max(best, total);
  }
  return best;
}

namespace {

MzvExpr z(int n) { return MzvExpr::zeta(Composition{n}); }
MzvExpr z(std::vector<int> parts) { return MzvExpr::zeta(Composition(std::move(parts))); }
Rational binom(long n, long k) { return Rational(binomial(n, k)); }

MzvExpr s_t(int n, int k) { return expand_aggregate(AggregateSpec::t(n, k)); }
MzvExpr s_r(int n, int k) { return expand_aggregate(AggregateSpec::r(n, k)); }

Factor f(QSym u, int offset = 0) { return Factor{std::move(u), offset}; }

LhsSum single(EtaSpec spec, int start, std::vector<Factor> factors) {
  return {WeightedLhs{1, LhsDescriptor(std::move(factors), std::move(spec), start)}};
}

EtaSpec ones(int q) { return EtaSpec(std::vector<int>(static_cast<std::size_t>(q), 1)); }

EtaSpec zero_then_ones(int q) {
  std::vector<int> s(static_cast<std::size_t>(q) + 1, 1);
  s[0] = 0;
  return EtaSpec(s);
}

using Check = std::function<std::optional<std::string>(const Params&)>;

// Every named parameter present and within [lower, 40].
Check at_least(std::map<std::string, int> lower) {
  return [lower](const Params& p) -> std::optional<std::string> {
    for (const auto& [name, lo] : lower) {
      auto it = p.find(name);
      if (it == p.end()) return "missing parameter " + name;
      if (it->second < lo) return name + " must be at least " + std::to_string(lo);
      if (it->second > 40) return name + " must be at most 40";
    }
    return std::nullopt;
  };
}

Check no_params() {
  return [](const Params&) -> std::optional<std::string> { return std::nullopt; };
}

int k_of(const Params& p) { return p.at("k"); }
int l_of(const Params& p) { return p.at("l"); }
int q_of(const Params& p) { return p.at("q"); }

// Right-hand sides shared between families.

MzvExpr ch2_rhs(int k, int l) {
  if (l == 0) return MzvExpr(1);
  if (l == 1) {
    MzvExpr out(1);
    for (int j = 0; j <= k - 1; ++j) out += z(k + 1 - j);
    return out;
  }
  MzvExpr out = -z(l);
  for (int j = 0; j <= k; ++j) out += z(k + l - j) * binom(k + l - j, k + 1 - j);
  return out;
}

MzvExpr pn2_rhs(int k) {
  MzvExpr out = z(k + 2) * ratio(k + 3, 2);
  for (int j = 2; j <= k; ++j) out += z(j) * z(k + 2 - j) * Rational(kEulerSumSign, 2);
  return out;
}

MzvExpr eta111_rhs(int k, int l) {
  if (l == 0) return (z(k + 1) - MzvExpr(1)) * Rational(1, 2);
  if (l == 1) {
    MzvExpr out = z(k + 2) * Rational(k + 2) - MzvExpr(1);
    for (int j = 0; j <= k - 1; ++j) out -= z(k + 1 - j);
    return out * Rational(1, 2);
  }
  MzvExpr out = z(k + l + 1) * binom(k + l + 1, k + 1) + z(l);
  for (int j = 0; j <= k; ++j) out -= z(k + l - j) * binom(k + l - j, k + 1 - j);
  return out * Rational(1, 2);
}

MzvExpr alternating_tail(int k) {
  MzvExpr out((k - 1) % 2 == 0 ? 1 : -1);
  for (int i = 0; i <= k - 2; ++i) out += z(k - i) * Rational(i % 2 == 0 ? 1 : -1);
  return out;
}

MzvExpr eta2eh_rhs(int j, int n) {
  if (j == 0) return z(n + 2) * Rational(n + 1);
  MzvExpr out = z(n + 2) * binom(n + 1, j + 1);
  for (int p = j; p <= n; ++p) out += s_t(n + 2, p) * binom(p - 1, j - 1);
  return out;
}

std::vector<IdentityFamily> build_registry() {
  std::vector<IdentityFamily> r;
  auto add = [&r](IdentityFamily fam) { r.push_back(std::move(fam)); };

  add({"eulers", {"k"}, "sum H_n/n^k: 2 zeta(3) for k=2, 5/4 zeta(4) for k=3",
       [](const Params& p) -> std::optional<std::string> {
         auto it = p.find("k");
         if (it == p.end()) return "missing parameter k";
         if (it->second != 2 && it->second != 3) return "k must be 2 or 3";
         return std::nullopt;
       },
       [](const Params& p) { return single(EtaSpec{k_of(p)}, 1, {f(powersum(1))}); },
       [](const Params& p) { return k_of(p) == 2 ? z(3) * Rational(2) : z(4) * Rational(5, 4); },
       {{"k", {2, 3}}}});

  add({"cho-P", {"k"}, "sum_{n>=0} P_k(H_n,...)/((n+1)(n+2)) = 1", at_least({{"k", 1}}),
       [](const Params& p) { return single(EtaSpec{0, 1, 1}, 0, {f(elementary(k_of(p)))}); },
       [](const Params&) { return MzvExpr(1); }, {{"k", {1, 6}}}});

  add({"cho-Q", {"k"}, "sum H_n P_k(H_n,...)/((n+1)(n+2)) = 1 + zeta(2) + ... + zeta(k+1)", at_least({{"k", 1}}),
       [](const Params& p) { return single(EtaSpec{0, 1, 1}, 1, {f(powersum(1)), f(elementary(k_of(p)))}); },
       [](const Params& p) {
         MzvExpr out(1);
         for (int j = 2; j <= k_of(p) + 1; ++j) out += z(j);
         return out;
       },
       {{"k", {1, 5}}}});

  add({"ch2", {"k", "l"}, "sum_{n>=0} Q_l P_k/((n+1)(n+2))", at_least({{"k", 0}, {"l", 0}}),
       [](const Params& p) {
         return single(EtaSpec{0, 1, 1}, 0, {f(complete(l_of(p))), f(elementary(k_of(p)))});
       },
       [](const Params& p) { return ch2_rhs(k_of(p), l_of(p)); }, {{"k", {0, 6}}, {"l", {0, 6}}}});

  add({"qpnn1", {"k", "l"}, "sum Q_l P_k/(n(n+1)) = C(k+l+1,k+1) zeta(k+l+1)",
       [](const Params& p) -> std::optional<std::string> {
         if (auto e = at_least({{"k", 0}, {"l", 0}})(p)) return e;
         if (k_of(p) == 0)
           return "k = 0 is outside the audited validity range: the M-basis oracle gives l*zeta(l+1), the "
                  "closed form (l+1)*zeta(l+1); see the qpnn1-k0 audit entry";
         return std::nullopt;
       },
       [](const Params& p) { return single(EtaSpec{1, 1}, 1, {f(complete(l_of(p))), f(elementary(k_of(p)))}); },
       [](const Params& p) {
         int k = k_of(p), l = l_of(p);
         return z(k + l + 1) * binom(k + l + 1, k + 1);
       },
       {{"k", {1, 6}}, {"l", {0, 5}}}});

  add({"qn2", {"k"}, "sum Q_k(H_n,...)/n^2 = (k+1) zeta(k+2)", at_least({{"k", 0}}),
       [](const Params& p) { return single(EtaSpec{2}, 1, {f(complete(k_of(p)))}); },
       [](const Params& p) { return z(k_of(p) + 2) * Rational(k_of(p) + 1); }, {{"k", {0, 6}}}});

  add({"pn2", {"k"}, "sum P_k(H_n,...)/n^2 = (k+3)/2 zeta(k+2) - 1/2 sum_{j=2}^k zeta(j) zeta(k+2-j)",
       [](const Params& p) -> std::optional<std::string> {
         if (auto e = at_least({{"k", 0}})(p)) return e;
         if (k_of(p) == 0) return "k = 0 is outside the validity range: the sum is zeta(2), not 3/2 zeta(2)";
         return std::nullopt;
       },
       [](const Params& p) { return single(EtaSpec{2}, 1, {f(elementary(k_of(p)))}); },
       [](const Params& p) { return pn2_rhs(k_of(p)); }, {{"k", {1, 6}}}});

  add({"off", {"k", "l"}, "sum_{n>=0} Q_l(H_{n+1},...) P_k(H_n,...)/(n+1)^2 = C(l+k+1,l) zeta(l+k+2)",
       at_least({{"k", 0}, {"l", 0}}),
       [](const Params& p) {
         return single(EtaSpec{0, 2}, 0, {f(complete(l_of(p)), 1), f(elementary(k_of(p)))});
       },
       [](const Params& p) { return z(k_of(p) + l_of(p) + 2) * binom(k_of(p) + l_of(p) + 1, l_of(p)); },
       {{"k", {0, 6}}, {"l", {0, 6}}}});

  add({"eta111", {"k", "l"}, "sum Q_l P_k/(n(n+1)(n+2)) = 1/2[C(k+l+1,k+1) zeta(k+l+1) - sum_{j=0}^k C(k+l-j,k+1-j) zeta(k+l-j) + zeta(l)] for l >= 2",
       [](const Params& p) -> std::optional<std::string> {
         if (auto e = at_least({{"k", 0}, {"l", 0}})(p)) return e;
         if (k_of(p) == 0)
           return "k = 0 is outside the audited validity range (inherited from the qpnn1 boundary); see the "
                  "eta111-k0 audit entries";
         return std::nullopt;
       },
       [](const Params& p) {
         return single(EtaSpec{1, 1, 1}, 1, {f(complete(l_of(p))), f(elementary(k_of(p)))});
       },
       [](const Params& p) { return eta111_rhs(k_of(p), l_of(p)); }, {{"k", {1, 5}}, {"l", {0, 5}}}});

  add({"spiess", {"k", "q"}, "sum_{n>=0} P_k/((n+1)...(n+q)) = 1/((q-1)! (q-1)^(k+1))",
       at_least({{"k", 0}, {"q", 2}}),
       [](const Params& p) { return single(zero_then_ones(q_of(p)), 0, {f(elementary(k_of(p)))}); },
       [](const Params& p) {
         const int q = q_of(p);
         return MzvExpr(Rational(BigInt(1), factorial(q - 1)) /
                        rational_pow(Rational(q - 1), static_cast<unsigned long>(k_of(p) + 1)));
       },
       {{"k", {0, 4}}, {"q", {2, 5}}}, 9, 1e-8, 4'000'000});

  add({"tail", {"k", "q"}, "sum P_k/(n(n+1)...(n+q-1)) = (zeta(k+1) - sum_{j=1}^{q-2} j^-(k+1))/(q-1)!",
       at_least({{"k", 1}, {"q", 2}}),
       [](const Params& p) { return single(ones(q_of(p)), 1, {f(elementary(k_of(p)))}); },
       [](const Params& p) {
         const int k = k_of(p), q = q_of(p);
         MzvExpr out = z(k + 1);
         for (int j = 1; j <= q - 2; ++j) out -= MzvExpr(rational_pow(Rational(1, j), static_cast<unsigned long>(k + 1)));
         return out * Rational(BigInt(1), factorial(q - 1));
       },
       {{"k", {1, 5}}, {"q", {2, 5}}}});

  add({"so-cor", {"k"}, "sum H_n^(k)/((n+1)(n+2)) = sum_{i=0}^{k-2} (-1)^i zeta(k-i) + (-1)^(k-1)",
       at_least({{"k", 2}}),
       [](const Params& p) { return single(EtaSpec{0, 1, 1}, 1, {f(powersum(k_of(p)))}); },
       [](const Params& p) { return alternating_tail(k_of(p)); }, {{"k", {2, 6}}}});

  add({"omp", {"k"}, "eta_{0,1,1}(p_k) = zeta(k) - zeta(k-1) + ... + (-1)^k zeta(2) + (-1)^(k+1)",
       at_least({{"k", 1}}),
       [](const Params& p) { return single(EtaSpec{0, 1, 1}, 1, {f(powersum(k_of(p)))}); },
       [](const Params& p) { return alternating_tail(k_of(p)); }, {{"k", {1, 6}}}});

  add({"eta3peh-p", {"k"}, "sum H_n^(k)/n^3 = zeta(k+3) + zeta(3,k)", at_least({{"k", 1}}),
       [](const Params& p) { return single(EtaSpec{3}, 1, {f(powersum(k_of(p)))}); },
       [](const Params& p) { return z(k_of(p) + 3) + z({3, k_of(p)}); }, {{"k", {1, 5}}}});

  add({"eta3peh-e", {"k"}, "sum P_k(H_n,...)/n^3 = zeta(k+2,1) + zeta(k+1,1,1)", at_least({{"k", 1}}),
       [](const Params& p) { return single(EtaSpec{3}, 1, {f(elementary(k_of(p)))}); },
       [](const Params& p) { return z({k_of(p) + 2, 1}) + z({k_of(p) + 1, 1, 1}); }, {{"k", {1, 5}}}});

  add({"eta3peh-h", {"k"}, "sum Q_k(H_n,...)/n^3 = zeta(k+3) + sum_{j=2}^{k+1} S^T_{k+3,j}", at_least({{"k", 1}}),
       [](const Params& p) { return single(EtaSpec{3}, 1, {f(complete(k_of(p)))}); },
       [](const Params& p) {
         const int k = k_of(p);
         MzvExpr out = z(k + 3);
         for (int j = 2; j <= k + 1; ++j) out += s_t(k + 3, j);
         return out;
       },
       {{"k", {1, 5}}}});

  add({"eta02pe-p", {"k"}, "sum H_n^(k)/(n+1)^2 = zeta(2,k)", at_least({{"k", 1}}),
       [](const Params& p) { return single(EtaSpec{0, 2}, 1, {f(powersum(k_of(p)))}); },
       [](const Params& p) { return z({2, k_of(p)}); }, {{"k", {1, 6}}}});

  add({"eta02pe-e", {"k"}, "sum P_k(H_n,...)/(n+1)^2 = zeta(k+2)", at_least({{"k", 1}}),
       [](const Params& p) { return single(EtaSpec{0, 2}, 1, {f(elementary(k_of(p)))}); },
       [](const Params& p) { return z(k_of(p) + 2); }, {{"k", {1, 6}}}});

  add({"hsq-remark", {}, "sum H_n^2/(n+1)^2 = 11/4 zeta(4)", no_params(),
       [](const Params&) { return single(EtaSpec{0, 2}, 1, {f(powersum(1)), f(powersum(1))}); },
       [](const Params&) { return z(4) * Rational(11, 4); }, {}});

  add({"h-pair", {"k"}, "eta_{0,2}(h_{k+1}) + eta_3(h_k) = (k+2) zeta(k+3)", at_least({{"k", 0}}),
       [](const Params& p) {
         const int k = k_of(p);
         return LhsSum{WeightedLhs{1, LhsDescriptor({f(complete(k + 1))}, EtaSpec{0, 2}, 1)},
                       WeightedLhs{1, LhsDescriptor({f(complete(k))}, EtaSpec{3}, 1)}};
       },
       [](const Params& p) { return z(k_of(p) + 3) * Rational(k_of(p) + 2); }, {{"k", {0, 5}}}});

  add({"eta02eh", {"k", "l"},
       "sum_{n>=0} Q_l P_k/(n+1)^2 = C(l+k+1,k+1) zeta(l+k+2) - sum_{p=k}^{l+k-1} C(p,k) S^R_{l+k+2,l+k+1-p}",
       at_least({{"k", 0}, {"l", 0}}),
       [](const Params& p) { return single(EtaSpec{0, 2}, 0, {f(complete(l_of(p))), f(elementary(k_of(p)))}); },
       [](const Params& p) {
         const int k = k_of(p), l = l_of(p);
         MzvExpr out = z(l + k + 2) * binom(l + k + 1, k + 1);
         for (int q = k; q <= l + k - 1; ++q) out -= s_r(l + k + 2, l + k + 1 - q) * binom(q, k);
         return out;
       },
       {{"k", {0, 6}}, {"l", {0, 6}}}});

  add({"eta02sc-1", {"k"}, "sum_{n>=0} H_n P_k/(n+1)^2 = (k+2) zeta(k+3) - zeta(k+2,1)", at_least({{"k", 1}}),
       [](const Params& p) { return single(EtaSpec{0, 2}, 0, {f(powersum(1)), f(elementary(k_of(p)))}); },
       [](const Params& p) { return z(k_of(p) + 3) * Rational(k_of(p) + 2) - z({k_of(p) + 2, 1}); },
       {{"k", {1, 5}}}});

  add({"eta02sc-2", {"k"},
       "sum (H_n^2 + H_n^(2)) P_k/(2 (n+1)^2) = C(k+3,2) zeta(k+4) - (k+2) zeta(k+3,1) - zeta(k+2,2)",
       at_least({{"k", 1}}),
       [](const Params& p) { return single(EtaSpec{0, 2}, 1, {f(complete(2)), f(elementary(k_of(p)))}); },
       [](const Params& p) {
         const int k = k_of(p);
         return z(k + 4) * binom(k + 3, 2) - z({k + 3, 1}) * Rational(k + 2) - z({k + 2, 2});
       },
       {{"k", {1, 4}}}});

  add({"cof-remark", {}, "sum H_n^4/(n+1)^2 = 859/24 zeta(6) + 3 zeta(3)^2", no_params(),
       [](const Params&) {
         return single(EtaSpec{0, 2}, 1, {f(powersum(1)), f(powersum(1)), f(powersum(1)), f(powersum(1))});
       },
       [](const Params&) { return z(6) * Rational(859, 24) + z(3) * z(3) * Rational(3); }, {}, 8, 1e-5,
       4'000'000});

  add({"eta2-en1h1", {"n"}, "eta_2(e_{n-1} h_1) = zeta(n,2) + n zeta(n+1,1) + (n+1) zeta(n+2)",
       at_least({{"n", 2}}),
       [](const Params& p) {
         return single(EtaSpec{2}, 1, {f(elementary(p.at("n") - 1)), f(complete(1))});
       },
       [](const Params& p) {
         const int n = p.at("n");
         return z({n, 2}) + z({n + 1, 1}) * Rational(n) + z(n + 2) * Rational(n + 1);
       },
       {{"n", {2, 6}}}});

  add({"eta002-e", {"k"}, "eta_{0,0,2}(e_k) = zeta(2) + ... + zeta(k+2) - (k+1)", at_least({{"k", 1}}),
       [](const Params& p) { return single(EtaSpec{0, 0, 2}, 1, {f(elementary(k_of(p)))}); },
       [](const Params& p) {
         MzvExpr out(-(k_of(p) + 1));
         for (int j = 2; j <= k_of(p) + 2; ++j) out += z(j);
         return out;
       },
       {{"k", {1, 6}}}});

  add({"eta002-p", {"k"},
       "eta_{0,0,2}(p_k) = zeta(2,k) + sum_{j=0}^{k-3} (-1)^(j+1) (j+1) zeta(k-j) - (-1)^k k zeta(2) + (-1)^k (k+1)",
       at_least({{"k", 1}}),
       [](const Params& p) { return single(EtaSpec{0, 0, 2}, 1, {f(powersum(k_of(p)))}); },
       [](const Params& p) {
         const int k = k_of(p);
         const int sk = k % 2 == 0 ? 1 : -1;
         MzvExpr out = z({2, k}) - z(2) * Rational(sk * k) + MzvExpr(sk * (k + 1));
         for (int j = 0; j <= k - 3; ++j) out += z(k - j) * Rational((j % 2 == 0 ? -1 : 1) * (j + 1));
         return out;
       },
       {{"k", {1, 6}}}});

  add({"length2-example", {}, "sum H_n^2/(n^2 (n+1)) = 17/4 zeta(4) - 3 zeta(3)", no_params(),
       [](const Params&) { return single(EtaSpec{2, 1}, 1, {f(powersum(1)), f(powersum(1))}); },
       [](const Params&) { return z(4) * Rational(17, 4) - z(3) * Rational(3); }, {}});

  add({"eta2eh", {"k", "l"},
       "eta_2(e_k h_l) = (n+1) zeta(n+2) for k=0, else sum_{p=k}^n C(p-1,k-1) S^T_{n+2,p} + C(n+1,k+1) zeta(n+2), "
       "n=k+l",
       at_least({{"k", 0}, {"l", 0}}),
       [](const Params& p) { return single(EtaSpec{2}, 1, {f(elementary(k_of(p))), f(complete(l_of(p)))}); },
       [](const Params& p) { return eta2eh_rhs(k_of(p), k_of(p) + l_of(p)); }, {{"k", {0, 6}}, {"l", {0, 6}}}});

  add({"off-proof", {"k", "l"},
       "sum_{j=3}^{l+2} sum_{n>=0} e_k h_{2+l-j}/(n+1)^j = sum_{p=k}^{l+k-1} C(p,k) S^T_{l+k+2,p+1}",
       at_least({{"k", 0}, {"l", 1}}),
       [](const Params& p) {
         const int k = k_of(p), l = l_of(p);
         LhsSum out;
         for (int j = 3; j <= l + 2; ++j)
           out.push_back({1, LhsDescriptor({f(elementary(k)), f(complete(2 + l - j))}, EtaSpec{0, j}, 0)});
         return out;
       },
       [](const Params& p) {
         const int k = k_of(p), l = l_of(p);
         MzvExpr out;
         for (int q = k; q <= l + k - 1; ++q) out += s_t(l + k + 2, q + 1) * binom(q, k);
         return out;
       },
       {{"k", {0, 5}}, {"l", {1, 5}}}});

  add({"spiess-base", {"q"}, "sum 1/(n(n+1)...(n+q-1)) = 1/((q-1)! (q-1))", at_least({{"q", 2}}),
       [](const Params& p) { return single(ones(q_of(p)), 1, {}); },
       [](const Params& p) {
         const int q = q_of(p);
         return MzvExpr(Rational(BigInt(1), factorial(q - 1)) / Rational(q - 1));
       },
       {{"q", {2, 7}}}});

  return r;
}

}  // namespace

const std::vector<IdentityFamily>& registry() {
  static const std::vector<IdentityFamily> families = build_registry();
  return families;
}

const IdentityFamily& find_family(const std::string& name) {
  for (const auto& fam : registry())
    if (fam.name == name) return fam;
  throw UnknownFamily("unknown identity family '" + name + "'");
}

std::vector<Params> sweep(const IdentityFamily& family) {
  std::vector<Params> tuples{{}};
  for (const auto& [name, range] : family.sweep_box) {
    std::vector<Params> next;
    for (const auto& p : tuples)
      for (int v = range.first; v <= range.second; ++v) {
        Params q = p;
        q[name] = v;
        next.push_back(std::move(q));
      }
    tuples = std::move(next);
  }
  std::vector<Params> out;
  for (auto& p : tuples) {
    if (family.check(p)) continue;
    if (lhs_weight(family.lhs(p)) > family.sweep_max_weight) continue;
    out.push_back(std::move(p));
  }
  return out;
}

namespace {

Params complete_params(const IdentityFamily& family, const Params& given) {
  for (const auto& [name, v] : given)
    if (std::find(family.param_names.begin(), family.param_names.end(), name) == family.param_names.end())
      throw InvalidArgument("family " + family.name + " has no parameter '" + name + "'");
  Params p = given;
  bool missing = false;
  for (const auto& name : family.param_names) missing |= !p.count(name);
  if (missing) {
    auto defaults = sweep(family);
    if (!defaults.empty())
      for (const auto& name : family.param_names) p.try_emplace(name, defaults.front().at(name));
  }
  if (auto why = family.check(p)) throw OutOfRange(family.name + " (" + params_str(p) + "): " + *why);
  return p;
}

}  // namespace

Identity instantiate(const std::string& name, const Params& params) {
  const auto& family = find_family(name);
  Params p = complete_params(family, params);
  return {family.name, p, family.lhs(p), family.rhs(p), family.tol, family.max_terms};
}

MzvExpr closed_form(const std::string& name, const Params& params) {
  const auto& family = find_family(name);
  return family.rhs(complete_params(family, params));
}

}  // namespace hsum
