#pragma once

#include <map>
#include <string>
#include <utility>
#include <vector>

#include "modpic/divisor_class.hpp"
#include "modpic/linalg.hpp"
#include "modpic/maps.hpp"

namespace modpic {

struct Component {
  int genus = 0;
  MarkSet marks;
  bool operator==(const Component&) const = default;
};

// Dual graph of a stable curve with only separating nodes.
struct ComponentTree {
  SpaceId ambient;
  std::vector<Component> components;
  std::vector<std::pair<int, int>> edges;

  // Throws InvalidFamily unless the graph is a tree, genera sum to
  // ambient.g, the marks partition {1..n} and every component is stable.
  void validate() const;

  // Total genus and marks of the part of the tree reached from `start`
  // without crossing `blocked` (an adjacent component).
  std::pair<int, MarkSet> branch(int start, int blocked) const;
  int valence(int component) const;
};

// The special point that moves along the base component.
struct MovingPoint {
  enum class Kind { Mark, NodeEnd } kind = Kind::Mark;
  int index = 0;  // mark label, or edge index for NodeEnd

  static MovingPoint mark(int m) { return {Kind::Mark, m}; }
  static MovingPoint node(int edge) { return {Kind::NodeEnd, edge}; }
  bool operator==(const MovingPoint&) const = default;
};

// One-parameter family: the tree is constant except that `moving` runs over
// the rational base component, bubbling off a P^1 each time it meets another
// special point of the base.
struct TestFamily {
  ComponentTree tree;
  int base = 0;
  MovingPoint moving;
  std::string label;

  void validate() const;
  SpaceId ambient() const { return tree.ambient; }
};

// Intersection numbers of a family with every boundary class and every ψ_i.
// Zero entries are omitted.
struct IntersectionProfile {
  SpaceId ambient;
  std::map<BoundaryIndex, Integer> boundary;
  std::map<int, Integer> psi;

  // λ and δ_0 pair to 0; ω_i = ψ_i − Σ_{S∋i} δ_{0;S}.
  Integer value(const BasisElement& b) const;
};

IntersectionProfile intersection_profile(const TestFamily& f);
Integer intersect(const TestFamily& f, const BasisElement& b);
Rational pair(const TestFamily& f, const DivisorClass& d);
Rational pair(const IntersectionProfile& p, const DivisorClass& d);
// Pairing with an S_g-invariant class on M̄_{0,g+n} without expanding it.
Rational pair(const TestFamily& f, const ThetaClass& t);
Rational pair(const IntersectionProfile& p, const ThetaClass& t);

// Entry (r,c) = classes[c] · fams[r].  Throws SpaceMismatch on mixed spaces.
RationalMatrix pairing_matrix(const std::vector<TestFamily>& fams,
                              const std::vector<DivisorClass>& classes);
RationalMatrix pairing_matrix(const std::vector<TestFamily>& fams,
                              const std::vector<ThetaClass>& classes);

// Mark k moves on a smooth m-pointed rational curve (a fiber of π_k).
TestFamily fiber_family(int m, int k);

// Two components joined by edge 0; `moving` lies on component `base`.
TestFamily two_component_family(SpaceId ambient, Component base, Component other,
                                 MovingPoint moving);

// A rational component carrying S is glued, at a moving point, to a fixed
// curve of genus `genus` carrying `fixed_marks`.
TestFamily attach_family(MarkSet S, int genus, MarkSet fixed_marks);

// Families on M̄_{0,g+1}: the fiber of π_{g+1}, the fiber of π_1, and for
// 1 < i < g−2 the curve with i tail points and p_{g+1} on one P^1, the other
// g−i tail points on a second P^1, tail point 1 moving.
std::vector<TestFamily> theta_catalog(int g);

// Families on M̄_{0,g+n} up to relabeling of the tail points 1..g: fibers
// of every projection, and every two-component split with every choice of
// moving point (a tail point, a mark g+j, or the node end) on the base.
std::vector<TestFamily> elliptic_catalog(int g, int n);

// Image in M̄_{g,n} of a family on M̄_{0,g+n} under the elliptic-tails map:
// every tail point 1..g becomes a node to a fixed elliptic curve.
TestFamily forward_family(const TestFamily& f, int g, int n);
Rational forward_pair(const TestFamily& f, const DivisorClass& d);

}  // namespace modpic
