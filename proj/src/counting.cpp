#include "modpic/counting.hpp"

#include <algorithm>
#include <numeric>

#include "modpic/errors.hpp"

namespace modpic {

Integer catalan(long k) {
  if (k < 0) throw OutOfRange("catalan index must be nonnegative");
  return factorial(2 * k) / (factorial(k) * factorial(k + 1));
}

Integer a_count(long g, long m, long n) {
  if (g < 0 || m < 1 || n < 1) throw OutOfRange("a_count needs g ≥ 0 and m, n ≥ 1");
  const long twice_d = g + m + n - 1;
  if (twice_d % 2 != 0)
    throw ParityError("2d = " + std::to_string(twice_d) + " has no integer solution");
  const long d = twice_d / 2;
  if (d < 1) throw OutOfRange("a_count needs d ≥ 1");
  const long lo = std::max(0L, m + n - d - 1);
  const long hi = std::min({m - 1, n - 1, d});
  Rational sum = 0;
  for (long j = lo; j <= hi; ++j) {
    Integer den = factorial(d - m - n + j + 1) * factorial(d - j);
    sum += Rational(Integer(m + n - 2 * j - 1), den);
  }
  sum.canonicalize();
  Rational total = Rational(factorial(g) * Integer(n * n - 1)) * sum;
  if (!is_integral(total) || total < 0)
    throw Error("a_count(" + std::to_string(g) + "," + std::to_string(m) + "," +
                std::to_string(n) + ") is not a nonnegative integer: " + to_string(total));
  return total.get_num();
}

Integer a_count_by_degree(long g, long d, long n) {
  return a_count(g, 2 * d - g - n + 1, n);
}

Integer plucker_total(long g, long r, long d) {
  return Integer(r + 1) * (Integer(d) + Integer(r) * Integer(g - 1));
}

void RamificationSeq::validate(long r, long d) const {
  if (static_cast<long>(z.size()) != r + 1)
    throw OutOfRange("ramification sequence must have length r+1");
  for (std::size_t k = 0; k < z.size(); ++k) {
    if (z[k] < 0 || z[k] > d - r) throw OutOfRange("ramification entry outside [0, d−r]");
    if (k > 0 && z[k] < z[k - 1]) throw OutOfRange("ramification sequence must be nondecreasing");
  }
}

long beta_weight(const RamificationSeq& s) { return std::accumulate(s.z.begin(), s.z.end(), 0L); }

Feasibility elliptic_tail_feasible(const SeriesParams& p, const std::vector<RamificationSeq>& zs) {
  long used = 0;
  for (const auto& z : zs) {
    z.validate(p.r, p.d);
    used += beta_weight(z);
  }
  const long budget = (p.r + 1) * (p.d - p.r) - p.g * p.r;
  if (budget != p.slack()) throw Error("spine budget differs from the Brill-Noether slack");
  return {used <= budget, budget - used};
}

OddCheck odd_genus_pair_check(long g) {
  if (g % 2 == 0) throw ParityError("odd_genus_pair_check needs odd g");
  if (g < 3) throw OutOfRange("odd_genus_pair_check needs g ≥ 3");
  OddCheck out;
  out.lhs = a_count(g, 1, 3);
  out.rhs = Integer(6 * g) * catalan((g + 1) / 2);
  out.nonzero = out.lhs != out.rhs;
  out.scale = Rational(factorial((g + 1) / 2) * factorial((g + 3) / 2), 6 * factorial(g));
  out.scale.canonicalize();
  if (Rational(out.lhs) * out.scale != Rational((g - 1) * (g + 1)) ||
      Rational(out.rhs) * out.scale != Rational(g * (g + 1)))
    throw Error("odd-genus reduction fails at g = " + std::to_string(g));
  return out;
}

EvenCheck even_genus_pair_check(long g) {
  if (g % 2 != 0) throw ParityError("even_genus_pair_check needs even g");
  if (g < 4) throw OutOfRange("even_genus_pair_check needs g ≥ 4");
  EvenCheck out;
  out.lhs = a_count(g, 2, 3) + a_count(g, 3, 2);
  out.rhs = a_count(g, 1, 2) + a_count(g, 1, 4);
  out.difference = out.lhs - out.rhs;
  out.nonzero = out.difference != 0;
  const Rational expected(48 * factorial(g), factorial(g / 2 - 1) * factorial(g / 2 + 2));
  if (Rational(out.difference) != make_rational(expected.get_num(), expected.get_den()))
    throw Error("even-genus reduction fails at g = " + std::to_string(g));
  return out;
}

}  // namespace modpic
