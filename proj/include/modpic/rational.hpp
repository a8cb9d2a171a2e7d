#pragma once

#include <gmpxx.h>

#include <string>
#include <string_view>

namespace modpic {

using Integer = mpz_class;
using Rational = mpq_class;

// Builds p/q in lowest terms with positive denominator.
Rational make_rational(long p, long q = 1);
Rational make_rational(const Integer& p, const Integer& q);

// "p" or "p/q"; throws ParseError on anything else (including q = 0).
Rational parse_rational(std::string_view text);
std::string to_string(const Rational& q);
std::string to_string(const Integer& z);

bool is_integral(const Rational& q);

Integer factorial(long k);
Integer binomial(long n, long k);

}  // namespace modpic
