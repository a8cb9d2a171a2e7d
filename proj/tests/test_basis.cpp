#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "modpic/class_io.hpp"
#include "modpic/divisor_class.hpp"
#include "modpic/errors.hpp"

using namespace modpic;

namespace {

DivisorClass delta(SpaceId sp, int i, MarkSet S, Rational c = 1) {
  DivisorClass d(sp);
  d.add_boundary(i, S, c);
  return d;
}

DivisorClass lambda(SpaceId sp, Rational c = 1) { return DivisorClass::of(sp, BasisElement::lambda(), c); }

}  // namespace

TEST_CASE("rationals parse and print in lowest terms") {
  CHECK(to_string(parse_rational("6/4")) == "3/2");
  CHECK(to_string(parse_rational("-10/5")) == "-2");
  CHECK(parse_rational("7") == 7);
  CHECK_THROWS_AS((parse_rational("1/0")), ParseError);
  CHECK_THROWS_AS((parse_rational("1.5")), ParseError);
  CHECK_THROWS_AS((parse_rational("")), ParseError);
  CHECK(binomial(5, 7) == 0);
  CHECK(factorial(10) == 3628800);
}

TEST_CASE("space validation") {
  CHECK_NOTHROW((SpaceId{0, 3}.validate()));
  CHECK_THROWS_AS((SpaceId{0, 2}.validate()), OutOfRange);
  CHECK_THROWS_AS((SpaceId{-1, 2}.validate()), OutOfRange);
  CHECK_NOTHROW((SpaceId{3, 0}.validate()));
}

TEST_CASE("canonical boundary representatives") {
  CHECK(canonical_boundary({5, 1}, 4, {1}) == BoundaryIndex{1, {}});
  CHECK(canonical_boundary({4, 1}, 2, {1}) == BoundaryIndex{2, {}});
  CHECK(canonical_boundary({4, 1}, 2, {}) == BoundaryIndex{2, {}});
  CHECK_THROWS_AS((canonical_boundary({3, 0}, 0, {})), InvalidBoundary);
  CHECK_THROWS_AS((canonical_boundary({3, 2}, 3, {1})), InvalidBoundary);
  CHECK_THROWS_AS((canonical_boundary({0, 5}, 0, {1, 2, 3, 4})), InvalidBoundary);
  // On M̄_{0,m} the side without the largest mark is kept.
  CHECK(canonical_boundary({0, 5}, 0, {3, 4, 5}) == BoundaryIndex{0, {1, 2}});
  CHECK(canonical_boundary({4, 0}, 2, {}) == BoundaryIndex{2, {}});
}

TEST_CASE("basis dimension is 2 + n + #boundary indices for g >= 1") {
  for (int g = 1; g <= 6; ++g)
    for (int n = 0; n <= 4; ++n) {
      const SpaceId sp{g, n};
      CHECK(canonical_basis(sp).size() == 2 + static_cast<std::size_t>(n) + boundary_indices(sp).size());
    }
  CHECK(canonical_basis({0, 4}).size() == 3);
  CHECK(canonical_basis({0, 5}).size() == 10);
  // Brute-force count of unordered stable pairs {(i,S),(g−i,S^c)} on M̄_{3,2}.
  int stable = 0;
  for (int i = 0; i <= 3; ++i)
    for (std::uint64_t bits = 0; bits < 4; ++bits)
      stable += is_stable_boundary({3, 2}, i, MarkSet::from_bits(bits));
  CHECK(boundary_indices({3, 2}).size() == static_cast<std::size_t>(stable / 2));
}

TEST_CASE("class arithmetic") {
  const SpaceId sp{3, 0};
  DivisorClass a = lambda(sp, 3) + delta(sp, 1, {}, -2);
  CHECK((a + (-1) * a).is_zero());
  CHECK(combine(1, a, 0, lambda(sp)) == a);
  CHECK(combine(make_rational(2, 3), lambda(sp, 3), 0, a) == lambda(sp, 2));
  CHECK_THROWS_AS((a + lambda({3, 1})), SpaceMismatch);
  CHECK(delta(sp, 2, {}) == delta(sp, 1, {}));
  CHECK(a.terms().size() == 2);
}

TEST_CASE("psi classes expand into omega and boundary terms") {
  CHECK(psi_class({3, 1}, 1) == DivisorClass::of({3, 1}, BasisElement::omega(1)));
  CHECK(psi_class({3, 2}, 1) ==
        DivisorClass::of({3, 2}, BasisElement::omega(1)) + delta({3, 2}, 0, {1, 2}));
  CHECK(psi_class({3, 3}, 2) == DivisorClass::of({3, 3}, BasisElement::omega(2)) +
                                    delta({3, 3}, 0, {1, 2}) + delta({3, 3}, 0, {2, 3}) +
                                    delta({3, 3}, 0, {1, 2, 3}));
}

TEST_CASE("psi_to_omega agrees with a brute-force enumeration") {
  for (int g = 1; g <= 3; ++g)
    for (int n = 1; n <= 5; ++n) {
      const SpaceId sp{g, n};
      for (int i = 1; i <= n; ++i) {
        DivisorClass expected = DivisorClass::of(sp, BasisElement::omega(i));
        for (std::uint64_t bits = 0; bits < (1u << n); ++bits) {
          const MarkSet S = MarkSet::from_bits(bits);
          if (S.contains(i) && S.size() >= 2 && is_stable_boundary(sp, 0, S)) expected.add_boundary(0, S, 1);
        }
        std::map<BasisElement, Rational> terms{{BasisElement::psi(i), 1}};
        CHECK(psi_to_omega(sp, terms) == expected);
        CHECK(omega_to_psi(expected) == terms);
      }
    }
}

TEST_CASE("named classes") {
  CHECK(bn_class(3) == lambda({3, 0}, 6) + DivisorClass::of({3, 0}, BasisElement::delta_irr(), make_rational(-2, 3)) +
                           delta({3, 0}, 1, {}, -2));
  CHECK(bn_class(4) == lambda({4, 0}, 7) +
                           DivisorClass::of({4, 0}, BasisElement::delta_irr(), make_rational(-5, 6)) +
                           delta({4, 0}, 1, {}, -3) + delta({4, 0}, 2, {}, -4));
  CHECK_THROWS_AS((bn_class(2)), OutOfRange);
  for (int g = 3; g <= 20; ++g) CHECK(bn_class(g).coefficient(BasisElement::lambda()) == g + 3);

  const SpaceId s2{2, 1};
  CHECK(weierstrass_class(2) == DivisorClass::of(s2, BasisElement::omega(1), 3) - lambda(s2) -
                                    delta(s2, 1, {}));
  const SpaceId s3{3, 1};
  CHECK(weierstrass_class(3) == DivisorClass::of(s3, BasisElement::omega(1), 6) - lambda(s3) -
                                    delta(s3, 1, {1}, 3) - delta(s3, 2, {1}, 1));
  CHECK_THROWS_AS((weierstrass_class(1)), OutOfRange);
  for (int g = 2; g <= 20; ++g) {
    CHECK(weierstrass_class(g).coefficient(BasisElement::omega(1)) == g * (g + 1) / 2);
    CHECK(weierstrass_class(g).coefficient(BasisElement::lambda()) == -1);
  }
}

TEST_CASE("epsilon classes against enumeration") {
  for (int m = 4; m <= 8; ++m)
    for (int i = 2; i <= m - 2; ++i) {
      const SpaceId sp{0, m};
      DivisorClass expected(sp);
      Rational total = 0;
      for (std::uint64_t bits = 0; bits < (1u << m); ++bits) {
        const MarkSet S = MarkSet::from_bits(bits);
        if (S.size() == i) {
          expected.add_boundary(0, S, 1);
          total += 1;
        }
      }
      const auto e = epsilon_class(m, i);
      CHECK(e == expected);
      Rational sum = 0;
      for (const auto& [b, c] : e.terms()) {
        CHECK(!b.boundary.S.contains(m));
        sum += c;
      }
      CHECK(sum == total);
    }
  CHECK(epsilon_class(5, 2).terms().size() == 10);
  CHECK(epsilon_class(4, 2).terms().size() == 3);
  const auto e42 = epsilon_class(4, 2);
  for (const auto& [b, c] : e42.terms()) CHECK(c == 2);
  CHECK_THROWS_AS((epsilon_class(4, 3)), InvalidBoundary);
}

TEST_CASE("class files") {
  const SpaceId sp{3, 0};
  const DivisorClass d = lambda(sp, 6) + delta(sp, 1, {}, -2);
  CHECK(serialize(d) == R"({"g":3,"n":0,"coeffs":{"lambda":"6","delta:1:{}":"-2"}})");
  CHECK(parse_class(serialize(d)) == d);

  const auto from_psi = parse_class(R"({"g":3,"n":2,"coeffs":{"psi:1":"1"}})");
  CHECK(from_psi == psi_class({3, 2}, 1));
  // A stable but non-canonical index is accepted and canonicalized.
  CHECK(parse_class(R"({"g":5,"n":1,"coeffs":{"delta:4:{1}":"1/2"}})") ==
        delta({5, 1}, 1, {}, make_rational(1, 2)));

  CHECK_THROWS_AS((parse_class(R"({"g":3,"n":1,"coeffs":{"delta:0:{1}":"1"}})")), ParseError);
  CHECK_THROWS_AS((parse_class(R"({"g":3,"n":1,"coeffs":{"mu":"1"}})")), ParseError);
  CHECK_THROWS_AS((parse_class(R"({"g":3,"n":1,"coeffs":{"lambda":1}})")), ParseError);
  CHECK_THROWS_AS((parse_class(R"({"g":3,"n":1,"coeffs":{},"x":0})")), ParseError);
  CHECK_THROWS_AS((parse_class(R"({"g":3,"n":2,"coeffs":{"delta:0:{2,1}":"1"}})")), ParseError);
  CHECK_THROWS_AS((parse_class(R"({"g":3,"n":0,"coeffs":{}})", SpaceId{3, 1})), ParseError);
  CHECK_THROWS_AS((parse_class("not json")), ParseError);
}
