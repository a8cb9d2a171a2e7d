#pragma once

#include <map>
#include <string>
#include <vector>

#include "modpic/divisor_class.hpp"
#include "modpic/readings.hpp"

namespace modpic {

// Linear map Pic(source) → Pic(dest), the pullback along a geometric map
// dest → source.  Defined by its value on every canonical basis element.
class PullbackMap {
 public:
  PullbackMap(std::string name, SpaceId source, SpaceId dest);

  const std::string& name() const { return name_; }
  SpaceId source() const { return source_; }
  SpaceId dest() const { return dest_; }
  const std::map<BasisElement, DivisorClass>& table() const { return table_; }

  void set(const BasisElement& b, DivisorClass image);
  const DivisorClass& image(const BasisElement& b) const;

  // Throws SpaceMismatch when d is not on source().
  DivisorClass apply(const DivisorClass& d) const;

  // Throws InvalidBoundary if some canonical basis element has no image.
  void check_complete() const;

 private:
  std::string name_;
  SpaceId source_;
  SpaceId dest_;
  std::map<BasisElement, DivisorClass> table_;
};

// first: Pic(X) → Pic(Y), second: Pic(Y) → Pic(Z); returns Pic(X) → Pic(Z).
PullbackMap compose(const PullbackMap& first, const PullbackMap& second);
PullbackMap identity_map(SpaceId space);

// Permutation of marks: perm[k-1] is the image of mark k.
using Permutation = std::vector<int>;
Permutation identity_permutation(int n);
Permutation transposition(int n, int a, int b);
void check_permutation(const Permutation& perm, int n);

DivisorClass relabel(const DivisorClass& d, const Permutation& perm);
PullbackMap relabel_map(SpaceId space, const Permutation& perm);

// Pullback along the map forgetting mark j of M̄_{g,n}: Pic(g,n−1) → Pic(g,n).
// Marks of M̄_{g,n−1} are identified with {1..n}∖{j} in increasing order.
PullbackMap forgetful_pullback(int g, int n, int j);

// Pullback along M̄_{g,n} → M̄_{g,n+1} attaching a rational bubble that
// carries marks i and j of M̄_{g,n+1}.  The bubble is glued where the
// M̄_{g,n} mark sits; M̄_{g,n} marks are {1..n+1}∖{j} in increasing order.
PullbackMap bubble_pullback(int g, int n, int i, int j);

// Pullback along M̄_{2,1} → M̄_{g,n}, gluing a moving genus-2 curve to a
// fixed general genus-(g−2) curve carrying all n marks.
PullbackMap genus2_tail_pullback(int g, int n, const Readings& readings = {});

// The same map for n = 0 with the marked point of M̄_{2,1} as the gluing
// point (the unpointed table).
PullbackMap unpointed_genus2_tail_pullback(int g);

// θ_{i;S} on M̄_{0,g+n}: Σ_{T⊆{1..g},|T|=i} δ_{0;T∪(S+shift)}.  Marks 1..g
// are elliptic-tail attachment points; mark j of M̄_{g,n} is point g+j.
struct ThetaIndex {
  int i = 0;
  MarkSet S;
  bool operator==(const ThetaIndex&) const = default;
  auto operator<=>(const ThetaIndex&) const = default;
};

// Canonical representative of θ_{i;S} ~ θ_{g−i;S^c}: the one with 1 ∈ S, so
// θ_i = θ_{i;{1}} keeps its index.
ThetaIndex canonical_theta(int g, int n, int i, MarkSet S);
bool is_valid_theta(int g, int n, int i, MarkSet S);

// S_g-invariant class on M̄_{0,g+n}, in θ coordinates.
class ThetaClass {
 public:
  ThetaClass(int g, int n, int shift);

  int g() const { return g_; }
  int n() const { return n_; }
  int shift() const { return shift_; }
  SpaceId ambient() const { return {0, g_ + n_}; }
  const std::map<ThetaIndex, Rational>& coeffs() const { return coeffs_; }
  bool is_zero() const { return coeffs_.empty(); }
  Rational coefficient(ThetaIndex t) const;

  ThetaClass& add(int i, MarkSet S, const Rational& c);
  ThetaClass& operator+=(const ThetaClass& o);
  ThetaClass& operator*=(const Rational& s);
  friend ThetaClass operator*(const Rational& s, ThetaClass a) { return a *= s; }
  bool operator==(const ThetaClass&) const = default;

  // Coefficient of the canonical boundary element X of M̄_{0,g+n}.
  Rational coefficient_of_boundary(MarkSet X) const;
  // Σ over C(g,i) subsets; only sensible for small g.
  DivisorClass expand() const;

 private:
  int g_;
  int n_;
  int shift_;
  std::map<ThetaIndex, Rational> coeffs_;
};

std::string to_string(const ThetaClass& t);

// Number of T ⊆ {1..g}, |T| = i, with T ∪ (S+shift) ∈ {X, X^c}.
Integer theta_multiplicity(int g, int n, int i, MarkSet S, int shift, MarkSet X);

DivisorClass theta_class(int g, int n, int i, MarkSet S, const Readings& readings = {});

// Elliptic-tails pullback Pic(g,1) → Pic(M̄_{0,g+1}), stored in θ
// coordinates (θ_i := θ_{i;{1}}).
class EllipticTailsMap {
 public:
  EllipticTailsMap(int g, std::map<BasisElement, ThetaClass> table);

  int genus() const { return g_; }
  SpaceId source() const { return {g_, 1}; }
  SpaceId dest() const { return {0, g_ + 1}; }
  const std::map<BasisElement, ThetaClass>& table() const { return table_; }

  ThetaClass apply(const DivisorClass& d) const;
  // Table expanded to δ_{0;S} sums; the expansion has C(g,i) terms per θ_i.
  PullbackMap expanded() const;

 private:
  int g_;
  std::map<BasisElement, ThetaClass> table_;
};

// λ ↦ 0, δ_0 ↦ 0, δ_i ↦ θ_i (1 ≤ i ≤ g−2),
// δ_{g−1} ↦ −Σ i(g−i)/(g−1) θ_i, ω ↦ Σ (g−i)(g−i−1)/(g(g−1)) θ_i.
EllipticTailsMap elliptic_tails_pullback(int g, const Readings& readings = {});

}  // namespace modpic
