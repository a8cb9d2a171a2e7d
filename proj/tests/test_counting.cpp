#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "modpic/counting.hpp"
#include "modpic/errors.hpp"
#include "oracles.hpp"

using namespace modpic;

TEST_CASE("catalan numbers") {
  CHECK(catalan(0) == 1);
  CHECK(catalan(3) == 5);
  CHECK(catalan(6) == 132);
  for (long k = 0; k <= 30; ++k) CHECK(catalan(k) == oracle::choose(2 * k, k) / (k + 1));
  CHECK_THROWS_AS((catalan(-1)), OutOfRange);
}

TEST_CASE("A-count values") {
  CHECK(a_count(5, 1, 3) == 120);
  CHECK(a_count(5, 1, 3) == 24 * binomial(5, 4));
  CHECK(a_count(4, 2, 3) == 96);
  CHECK(a_count(4, 3, 2) == 36);
  CHECK(a_count(4, 1, 2) == 24);
  CHECK(a_count(4, 1, 4) == 60);
  CHECK_THROWS_AS((a_count(4, 1, 3)), ParityError);
  CHECK_THROWS_AS((a_count(4, 0, 3)), OutOfRange);
  CHECK(a_count_by_degree(4, 4, 3) == a_count(4, 2, 3));
}

TEST_CASE("A-count agrees with direct evaluation") {
  for (long g = 0; g <= 24; ++g)
    for (long m = 1; m <= 7; ++m)
      for (long n = 1; n <= 7; ++n) {
        if ((g + m + n - 1) % 2 != 0 || g + m + n - 1 < 2) continue;
        const auto v = a_count(g, m, n);
        CHECK(oracle::Q(v) == oracle::a_count(g, m, n));
        CHECK(v >= 0);
      }
  for (long g = 3; g <= 41; g += 2) CHECK(a_count(g, 1, 3) == 24 * oracle::choose(g, (g + 3) / 2));
}

TEST_CASE("odd and even nonvanishing checks") {
  const auto odd = odd_genus_pair_check(5);
  CHECK(odd.lhs == 120);
  CHECK(odd.rhs == 150);
  CHECK(odd.nonzero);
  CHECK(odd.scale == make_rational(1, 5));
  CHECK(Rational(odd.lhs) * odd.scale == 24);
  CHECK(Rational(odd.rhs) * odd.scale == 30);
  CHECK_THROWS_AS((odd_genus_pair_check(4)), ParityError);

  const auto even = even_genus_pair_check(4);
  CHECK(even.lhs == 132);
  CHECK(even.rhs == 84);
  CHECK(even.difference == 48);
  CHECK(even.nonzero);
  CHECK_THROWS_AS((even_genus_pair_check(5)), ParityError);

  for (long g = 3; g <= 41; g += 2) CHECK(odd_genus_pair_check(g).nonzero);
  for (long g = 4; g <= 40; g += 2) {
    const auto c = even_genus_pair_check(g);
    CHECK(c.nonzero);
    // 33g versus 33g − 48 after scaling by g!/((g/2−1)!(g/2+2)!).
    oracle::Q scale(oracle::fact(g), oracle::fact(g / 2 - 1) * oracle::fact(g / 2 + 2));
    scale.canonicalize();
    CHECK(oracle::Q(c.difference) == (33 * g - (33 * g - 48)) * scale);
  }
}

TEST_CASE("Plücker totals and budgets") {
  CHECK(plucker_total(3, 1, 2) == 8);
  for (long r = 1; r <= 20; ++r)
    for (long d = 1; d <= 20; ++d) {
      CHECK(plucker_total(0, r, d) == (r + 1) * (d - r));
      for (long g = 0; g <= 40; g += 5) {
        CHECK(Integer((r + 1) * (2 * d + r * (g - 2)) - (r + 1) * (d - r)) == plucker_total(g, r, d));
        CHECK((r + 1) * (d - r) - g * r == SeriesParams{g, r, d}.slack());
      }
    }
  for (long g = 3; g <= 41; g += 2) CHECK(plucker_total(g, 1, (g + 3) / 2) - 1 == 3 * g);

  CHECK(beta_weight({{0, 0}}) == 0);
  CHECK(beta_weight({{0, 1}}) == 1);
  CHECK(beta_weight({{1, 2, 3}}) == 6);
  const RamificationSeq decreasing{{2, 1}}, short_seq{{0, 1}};
  CHECK_THROWS_AS((decreasing.validate(1, 5)), OutOfRange);
  CHECK_THROWS_AS((short_seq.validate(2, 5)), OutOfRange);

  const SeriesParams p{4, 1, 4};  // slack a = 2
  CHECK(p.slack() == 2);
  auto f = elliptic_tail_feasible(p, {});
  CHECK(f.feasible);
  CHECK(f.slack == 2);
  f = elliptic_tail_feasible(p, {{{0, 3}}});
  CHECK(!f.feasible);
  CHECK(f.slack == -1);
  for (long g = 1; g <= 40; ++g)
    for (long r = 1; r <= 4; ++r)
      for (long d = r + 1; d <= g + r + 6; ++d) {
        const SeriesParams q{g, r, d};
        const long a = q.slack();
        if (a < -1 || a > 5 || a + 1 > d - r) continue;
        std::vector<long> z(static_cast<std::size_t>(r + 1), 0);
        z.back() = a + 1;
        const auto res = elliptic_tail_feasible(q, {{z}});
        CHECK(!res.feasible);
        CHECK(res.slack == -1);
      }
}
