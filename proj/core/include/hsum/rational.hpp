#pragma once

#include <gmpxx.h>

#include <string>
#include <string_view>

namespace hsum {

using Rational = mpq_class;
using BigInt = mpz_class;

// "p/q" or "p"; canonical (reduced, positive denominator).
std::string to_string(const Rational& q);
Rational parse_rational(std::string_view text);
// num/den reduced; mpq_class(num, den) alone does not reduce.
Rational ratio(long num, long den);

BigInt binomial(long n, long k);  // 0 outside 0 <= k <= n
BigInt factorial(long n);
Rational rational_pow(const Rational& base, unsigned long exponent);

double to_double(const Rational& q);

}  // namespace hsum
