#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "modpic/errors.hpp"
#include "modpic/family_io.hpp"
#include "modpic/families.hpp"
#include "oracles.hpp"

using namespace modpic;

namespace {

BasisElement d0(SpaceId sp, MarkSet S) { return BasisElement::delta(canonical_boundary(sp, 0, S)); }

ThetaClass theta(int g, int i) {
  ThetaClass t(g, 1, g);
  t.add(i, MarkSet{1}, 1);
  return t;
}

std::size_t oracle_rank(const RationalMatrix& m) {
  std::vector<std::vector<oracle::Q>> rows;
  for (std::size_t r = 0; r < m.rows(); ++r) rows.push_back(m.row(r));
  return oracle::rank(rows);
}

}  // namespace

TEST_CASE("fiber families") {
  for (int m = 4; m <= 9; ++m)
    for (int k = 1; k <= m; ++k) {
      const auto f = fiber_family(m, k);
      const SpaceId sp{0, m};
      for (int j = 1; j <= m; ++j)
        if (j != k) CHECK(intersect(f, d0(sp, {j, k})) == 1);
      for (int s = 3; s <= m - 2; ++s)
        for (MarkSet S : subsets_of_size(m, s)) {
          const MarkSet Sc = MarkSet::all(m) - S;
          if (Sc.size() == 2 && Sc.contains(k)) continue;
          CHECK(intersect(f, d0(sp, S)) == 0);
        }
      CHECK(intersect(f, BasisElement::psi(k)) == m - 3);
    }
  for (int g = 3; g <= 12; ++g) CHECK(pair(fiber_family(g + 1, g + 1), theta(g, 1)) == g);
  CHECK_THROWS_AS((fiber_family(5, 6)), InvalidMark);
  CHECK_THROWS_AS((fiber_family(5, 0)), InvalidMark);
  // A 1×1 pairing matrix.
  const auto m = pairing_matrix({fiber_family(7, 7)}, std::vector<ThetaClass>{theta(6, 1)});
  CHECK(m.rows() == 1);
  CHECK(m(0, 0) == 6);
}

TEST_CASE("two-component family with a moving tail point") {
  const int g = 8, i = 4;
  const SpaceId sp{0, g + 1};
  const auto f = two_component_family(sp, {0, MarkSet::interval(1, i).with(g + 1)},
                                      {0, MarkSet::interval(i + 1, g)}, MovingPoint::mark(1));
  CHECK(pair(f, theta(g, 1)) == 1);
  CHECK(pair(f, theta(g, i - 1)) == 1);
  CHECK(pair(f, theta(g, i)) == -1);
  CHECK(pair(f, theta(g, g - 2)) == i - 1);
  for (int k = 2; k < g - 2; ++k)
    if (k != i && k != i - 1) CHECK(pair(f, theta(g, k)) == 0);
  CHECK_THROWS_AS((two_component_family(sp, {0, MarkSet::interval(1, i).with(g + 1)},
                                       {0, MarkSet::interval(i + 1, g)}, MovingPoint::mark(6))),
                  InvalidFamily);
}

TEST_CASE("attach families reproduce the relation row") {
  for (int h = 1; h <= 10; ++h)
    for (int s = 2; s <= 6; ++s)
      for (int extra = 0; extra <= 2; ++extra) {
        const MarkSet S = MarkSet::interval(1, s);
        const MarkSet fixed = extra ? MarkSet::interval(s + 1, s + extra) : MarkSet{};
        const auto f = attach_family(S, h, fixed);
        const SpaceId sp = f.ambient();
        for (const auto& b : canonical_basis(sp)) {
          Integer expected = 0;
          if (b.kind == Kind::Boundary && b.boundary.i == 0) {
            if (b.boundary.S == S) expected = 2 - s;
            else if (b.boundary.S.subset_of(S) && b.boundary.S.size() == s - 1) expected = 1;
          }
          CHECK(intersect(f, b) == expected);
        }
      }
  const auto f = attach_family({1, 2, 3}, 3, {});
  CHECK(intersect(f, d0(f.ambient(), {1, 2, 3})) == -1);
  CHECK_THROWS_AS((attach_family({1}, 3, {2})), InvalidFamily);
}

TEST_CASE("family validation") {
  TestFamily f;
  f.tree = {{0, 5}, {{0, {1, 2, 3}}, {0, {4, 5}}}, {{0, 1}}};
  f.moving = MovingPoint::mark(1);
  CHECK_NOTHROW((f.validate()));
  auto bad = f;
  bad.moving = MovingPoint::mark(4);
  CHECK_THROWS_AS((bad.validate()), InvalidFamily);
  bad = f;
  bad.tree.components[0].genus = 1;
  CHECK_THROWS_AS((bad.validate()), InvalidFamily);  // genus sum and rational base
  bad = f;
  bad.tree.edges.push_back({0, 1});
  CHECK_THROWS_AS((bad.validate()), InvalidFamily);
  bad = f;
  bad.tree.components[1].marks = {4};
  CHECK_THROWS_AS((bad.validate()), InvalidFamily);  // unstable and missing mark
  bad = f;
  bad.moving = MovingPoint::node(3);
  CHECK_THROWS_AS((bad.validate()), InvalidFamily);
}

TEST_CASE("pairing is linear and mismatches are rejected") {
  const auto f = fiber_family(6, 2);
  const SpaceId sp{0, 6};
  DivisorClass a(sp), b(sp);
  a.add_boundary(0, {1, 2}, 3);
  b.add_boundary(0, {2, 5}, make_rational(1, 2));
  b.add_boundary(0, {1, 3, 4}, 7);
  CHECK(pair(f, a + make_rational(5, 3) * b) == pair(f, a) + make_rational(5, 3) * pair(f, b));
  CHECK_THROWS_AS((pair(f, weierstrass_class(3))), SpaceMismatch);
}

TEST_CASE("independence catalogs have full rank") {
  for (int g = 4; g <= 10; ++g) {
    std::vector<ThetaClass> cols;
    for (int i = 1; i <= g - 2; ++i) cols.push_back(theta(g, i));
    const auto m = pairing_matrix(theta_catalog(g), cols);
    CHECK(rank(m) == static_cast<std::size_t>(g - 2));
    CHECK(oracle_rank(m) == static_cast<std::size_t>(g - 2));
  }
  const int g = 6;
  std::vector<ThetaClass> cols;
  for (int i = 1; i <= g - 1; ++i) {
    ThetaClass t(g, 2, g);
    t.add(i, MarkSet{1}, 1);
    cols.push_back(t);
  }
  const auto m = pairing_matrix(elliptic_catalog(g, 2), cols);
  CHECK(rank(m) == static_cast<std::size_t>(g - 1));
  CHECK(oracle_rank(m) == static_cast<std::size_t>(g - 1));
}

TEST_CASE("forward families") {
  for (int g = 3; g <= 8; ++g) {
    for (const auto& f : elliptic_catalog(g, 1)) {
      const auto fw = forward_family(f, g, 1);
      CHECK(fw.ambient() == SpaceId{g, 1});
      CHECK(forward_pair(f, DivisorClass::of({g, 1}, BasisElement::lambda())) == 0);
      CHECK(forward_pair(f, DivisorClass::of({g, 1}, BasisElement::delta_irr())) == 0);
    }
    CHECK(forward_pair(fiber_family(g + 1, g + 1), weierstrass_class(g)) == 0);
  }
  CHECK_THROWS_AS((forward_pair(fiber_family(5, 5), weierstrass_class(3))), SpaceMismatch);
}

TEST_CASE("family files and pairing reports") {
  const auto f = two_component_family({0, 6}, {0, {1, 2, 6}}, {0, {3, 4, 5}}, MovingPoint::node(0));
  const auto doc = to_json(f);
  const auto back = family_from_json(doc);
  CHECK(back.tree.components == f.tree.components);
  CHECK(back.tree.edges == f.tree.edges);
  CHECK(back.moving == f.moving);
  CHECK(parse_family(doc.dump()).label == f.label);
  CHECK_THROWS_AS((parse_family(R"({"g":0})")), ParseError);
  CHECK_THROWS_AS((parse_family(R"({"g":0,"n":4,"components":[{"genus":0,"marks":[1,2,3,4]}],"edges":[],"base":0,"moving":{"node":0}})")),
                  ParseError);
  CHECK_THROWS_AS((parse_family(R"({"g":0,"n":4,"components":[{"genus":0,"marks":[1,2,3,4]}],"edges":[],"base":0,"moving":{"mark":7}})")),
                  InvalidFamily);

  RationalMatrix m(0, 2);
  m.append_row({Rational(1), make_rational(-1, 2)});
  CHECK(matrix_csv(m, {"F"}, {"a", "b"}) == "family,\"a\",\"b\"\n\"F\",1,-1/2\n");
  CHECK(matrix_json(m, {"F"}, {"a", "b"}).dump() ==
        R"({"rows":["F"],"cols":["a","b"],"entries":[["1","-1/2"]]})");
}
