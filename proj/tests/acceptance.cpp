// Prints one PASS/FAIL line per acceptance criterion; exit status 1 if any fails.

#include <chrono>
#include <functional>
#include <iostream>
#include <sstream>

#include "modpic/counting.hpp"
#include "modpic/families.hpp"
#include "modpic/maps.hpp"
#include "modpic/subspace.hpp"
#include "oracles.hpp"
#include "properties.hpp"

using namespace modpic;

namespace {

struct Result {
  bool pass = true;
  std::ostringstream detail;

  void require(bool ok, const std::string& what) {
    if (!ok && pass) detail << "first failure: " << what << "; ";
    pass = pass && ok;
  }
};

DivisorClass pi_bn(int g) { return forgetful_pullback(g, 1, 1).apply(bn_class(g)); }

Result a1() {
  Result r;
  for (int g = 3; g <= 40; ++g)
    r.require(elliptic_tails_pullback(g).apply(weierstrass_class(g)).is_zero(),
              "fprime*W, g=" + std::to_string(g));
  r.detail << "f'*W = 0 for 3 <= g <= 40";
  return r;
}

Result a2() {
  Result r;
  for (int g = 3; g <= 40; ++g)
    r.require(elliptic_tails_pullback(g).apply(pi_bn(g)).is_zero(),
              "fprime*pi*BN, g=" + std::to_string(g));
  r.detail << "f'*(pi_1*BN) = 0 for 3 <= g <= 40";
  return r;
}

Result a3() {
  Result r;
  const DivisorClass w2 = reduce_genus2(weierstrass_class(2));
  for (int g = 4; g <= 40; ++g)
    r.require(reduce_genus2(genus2_tail_pullback(g, 1).apply(weierstrass_class(g))) == w2,
              "g'*W, g=" + std::to_string(g));
  r.detail << "g'*W_g = W_2 for 4 <= g <= 40";
  return r;
}

Result a4() {
  Result r;
  const DivisorClass w2 = reduce_genus2(weierstrass_class(2));
  Readings plus;
  plus.g2_sign = 1;
  for (int g = 4; g <= 40; ++g) {
    const DivisorClass bn = pi_bn(g);
    r.require(reduce_genus2(genus2_tail_pullback(g, 1).apply(bn)) ==
                  make_rational(2 * (g - 2), 3) * w2,
              "g'*pi*BN, g=" + std::to_string(g));
    r.require(!in_span_w2(genus2_tail_pullback(g, 1, plus).apply(bn)),
              "plus sign unexpectedly in span, g=" + std::to_string(g));
  }
  r.detail << "g'*(pi_1*BN) = 2(g-2)/3 W_2 for 4 <= g <= 40; plus sign leaves span{W_2} for every g";
  return r;
}

Result a5() {
  Result r;
  for (int g = 4; g <= 30; ++g) {
    const auto c = bn_space_n1(g);
    r.require(c.pass && c.dimension == 2, "bn_space_n1, g=" + std::to_string(g));
  }
  r.detail << "dim K_1 = 2 containing W and pi_1*BN for 4 <= g <= 30";
  return r;
}

Result a6() {
  Result r;
  for (int g = 4; g <= 30; ++g) {
    const auto c = theta_rank_certificate(g, 1);
    r.require(c.pass && c.rank == static_cast<std::size_t>(g - 2), "theta n=1, g=" + std::to_string(g));
  }
  for (int g = 4; g <= 15; ++g) {
    const auto c = theta_rank_certificate(g, 2);
    r.require(c.pass && c.rank == static_cast<std::size_t>(g - 1), "theta n=2, g=" + std::to_string(g));
  }
  r.detail << "theta rank g-2 at n=1 (4 <= g <= 30), full at n=2 (4 <= g <= 15)";
  return r;
}

Result a7() {
  Result r;
  struct Case {
    long g, m, n, value;
  };
  for (const auto& c : {Case{5, 1, 3, 120}, Case{4, 2, 3, 96}, Case{4, 3, 2, 36}, Case{4, 1, 2, 24},
                        Case{4, 1, 4, 60}}) {
    r.require(a_count(c.g, c.m, c.n) == c.value, "a_count value");
    r.require(oracle::a_count(c.g, c.m, c.n) == c.value, "oracle a_count value");
  }
  const auto e4 = even_genus_pair_check(4);
  r.require(e4.lhs == 132 && e4.rhs == 84 && e4.difference == 48, "even check g=4");
  for (long g = 3; g <= 41; g += 2) {
    r.require(a_count(g, 1, 3) == 24 * oracle::choose(g, (g + 3) / 2), "A(g,1,3), g=" + std::to_string(g));
    const auto c = odd_genus_pair_check(g);
    r.require(c.nonzero && Rational(c.lhs) * c.scale == (g - 1) * (g + 1) &&
                  Rational(c.rhs) * c.scale == g * (g + 1),
              "odd reduction, g=" + std::to_string(g));
  }
  for (long g = 4; g <= 40; g += 2) {
    const auto c = even_genus_pair_check(g);
    oracle::Q expected(48 * oracle::fact(g), oracle::fact(g / 2 - 1) * oracle::fact(g / 2 + 2));
    expected.canonicalize();
    r.require(c.nonzero && oracle::Q(c.difference) == expected, "even difference, g=" + std::to_string(g));
  }
  r.detail << "A-count values, A(g,1,3) identity, odd reduction, even difference";
  return r;
}

Result a8() {
  Result r;
  for (int h = 1; h <= 10; ++h)
    for (int s = 2; s <= 6; ++s) {
      const MarkSet S = MarkSet::interval(1, s);
      const auto f = attach_family(S, h, {});
      const SpaceId sp = f.ambient();
      auto delta = [&](MarkSet T) { return BasisElement::delta(canonical_boundary(sp, 0, T)); };
      r.require(intersect(f, delta(S)) == 2 - s, "2-|S|");
      if (s >= 3)
        for (int x : S.marks()) r.require(intersect(f, delta(S.without(x))) == 1, "+1 row");
      for (int i : S.marks()) r.require(intersect(f, BasisElement::omega(i)) == 0, "omega 0");
    }
  for (int g = 3; g <= 40; ++g) {
    ThetaClass theta1(g, 1, g);
    theta1.add(1, MarkSet{1}, 1);
    r.require(pair(fiber_family(g + 1, g + 1), theta1) == g, "fiber theta_1, g=" + std::to_string(g));
  }
  r.detail << "attach goldens 2 <= |S| <= 6, g <= 10; fiber theta_1 degree g";
  return r;
}

Result a9() {
  Result r;
  std::size_t pairs = 0;
  for (int g = 3; g <= 12; ++g) {
    const auto fp = elliptic_tails_pullback(g);
    for (const auto& f : elliptic_catalog(g, 1)) {
      const auto profile = intersection_profile(f);
      for (const auto& b : canonical_basis({g, 1})) {
        ++pairs;
        r.require(forward_pair(f, DivisorClass::of({g, 1}, b)) == pair(profile, fp.table().at(b)),
                  "cross-oracle " + f.label + " g=" + std::to_string(g));
      }
    }
  }
  r.detail << pairs << " family/basis pairs agree for 3 <= g <= 12";
  return r;
}

Result a10() {
  Result r;
  for (int g = 4; g <= 15; ++g) {
    const auto c = bn_space_general(g, 2);
    r.require(c.pass && c.dimension == 4, "dim K_2, g=" + std::to_string(g));
  }
  for (int g = 4; g <= 10; ++g) {
    const auto c = bn_space_general(g, 3);
    r.require(c.pass && c.dimension == 7, "dim K_3, g=" + std::to_string(g));
  }
  r.detail << "dim 4 at n=2 (4 <= g <= 15), dim 7 at n=3 (4 <= g <= 10)";
  return r;
}

Result a11() {
  Result r;
  auto pairs = [](int n, const std::function<Rational(MarkSet)>& f) {
    std::map<MarkSet, Rational> m;
    for (MarkSet S : subsets_of_size(n, 2)) m[S] = f(S);
    return m;
  };
  const auto ones = showtriv_propagate(3, pairs(3, [](MarkSet) { return Rational(1); }));
  r.require(ones.unique && ones.values.at({1, 2, 3}) == 3, "all ones");
  for (int n = 2; n <= 8; ++n) {
    const auto zero = showtriv_propagate(n, pairs(n, [](MarkSet) { return Rational(0); }));
    bool all_zero = zero.unique;
    for (const auto& [S, v] : zero.values) all_zero = all_zero && v == 0;
    r.require(all_zero, "zero propagates to zero, n=" + std::to_string(n));
  }
  const auto ind = showtriv_propagate(4, pairs(4, [](MarkSet S) { return Rational(S == MarkSet{1, 2} ? 1 : 0); }));
  r.require(ind.unique && ind.values.at({1, 2, 3}) == 1 && ind.values.at({1, 3, 4}) == 0 &&
                ind.values.at({1, 2, 3, 4}) == 1,
            "indicator of {1,2}");
  r.detail << "three worked examples, uniqueness, zero input gives zero";
  return r;
}

Result a12() {
  Result r;
  const props::Outcome outcomes[] = {
      props::canonicalization_idempotent(1000, 11), props::psi_omega_round_trip(1000, 12),
      props::pullback_composition(1000, 13), props::bubble_after_forgetful(1000, 14),
      props::serialization_round_trip(1000, 15)};
  int total = 0;
  for (const auto& o : outcomes) {
    r.require(o.ok() && o.cases == 1000, o.first_failure);
    total += o.cases;
  }
  r.detail << total << " randomized cases across 5 properties";
  return r;
}

}  // namespace

int main() {
  const std::pair<const char*, Result (*)()> criteria[] = {
      {"A1", a1}, {"A2", a2}, {"A3", a3}, {"A4", a4},   {"A5", a5},   {"A6", a6},
      {"A7", a7}, {"A8", a8}, {"A9", a9}, {"A10", a10}, {"A11", a11}, {"A12", a12}};
  int failed = 0;
  for (const auto& [name, run] : criteria) {
    const auto start = std::chrono::steady_clock::now();
    Result r;
    try {
      r = run();
    } catch (const std::exception& e) {
      r.pass = false;
      r.detail << "error: " << e.what();
    }
    const double s = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    std::cout << name << ' ' << (r.pass ? "PASS" : "FAIL") << "  " << r.detail.str() << "  ["
              << s << " s]" << std::endl;
    failed += !r.pass;
  }
  return failed == 0 ? 0 : 1;
}
