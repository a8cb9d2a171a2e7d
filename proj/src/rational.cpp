#include "modpic/rational.hpp"

#include <cctype>

#include "modpic/errors.hpp"

namespace modpic {

Rational make_rational(long p, long q) {
  return make_rational(Integer(p), Integer(q));
}

Rational make_rational(const Integer& p, const Integer& q) {
  if (q == 0) throw OutOfRange("rational with zero denominator");
  Rational r(p, q);
  r.canonicalize();
  return r;
}

namespace {

bool is_integer_literal(std::string_view s) {
  if (s.empty()) return false;
  std::size_t start = (s[0] == '-' || s[0] == '+') ? 1 : 0;
  if (start == s.size()) return false;
  for (std::size_t k = start; k < s.size(); ++k)
    if (!std::isdigit(static_cast<unsigned char>(s[k]))) return false;
  return true;
}

Integer integer_from(std::string_view s) {
  if (!s.empty() && s[0] == '+') s.remove_prefix(1);
  return Integer(std::string(s), 10);
}

}  // namespace

Rational parse_rational(std::string_view text) {
  auto slash = text.find('/');
  if (slash == std::string_view::npos) {
    if (!is_integer_literal(text))
      throw ParseError("malformed rational '" + std::string(text) + "'");
    return Rational(integer_from(text));
  }
  auto num = text.substr(0, slash);
  auto den = text.substr(slash + 1);
  if (!is_integer_literal(num) || !is_integer_literal(den) || den[0] == '-' ||
      den[0] == '+')
    throw ParseError("malformed rational '" + std::string(text) + "'");
  Integer q = integer_from(den);
  if (q == 0) throw ParseError("zero denominator in '" + std::string(text) + "'");
  return make_rational(integer_from(num), q);
}

std::string to_string(const Rational& q) { return q.get_str(10); }

std::string to_string(const Integer& z) { return z.get_str(10); }

bool is_integral(const Rational& q) { return q.get_den() == 1; }

Integer factorial(long k) {
  if (k < 0) throw OutOfRange("factorial of a negative integer");
  Integer out;
  mpz_fac_ui(out.get_mpz_t(), static_cast<unsigned long>(k));
  return out;
}

Integer binomial(long n, long k) {
  if (k < 0 || n < 0 || k > n) return 0;
  Integer out;
  mpz_bin_uiui(out.get_mpz_t(), static_cast<unsigned long>(n),
               static_cast<unsigned long>(k));
  return out;
}

}  // namespace modpic
