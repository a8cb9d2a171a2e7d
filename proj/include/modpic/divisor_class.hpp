#pragma once

#include <map>
#include <string>

#include "modpic/rational.hpp"
#include "modpic/space.hpp"

namespace modpic {

// Element of Pic(M̄_{g,n}) ⊗ Q as a sparse vector over the canonical basis.
// Keys are always canonical (ψ is converted to ω on insertion) and zero
// coefficients are never stored.
class DivisorClass {
 public:
  using Terms = std::map<BasisElement, Rational>;

  explicit DivisorClass(SpaceId space);

  static DivisorClass of(SpaceId space, const BasisElement& b, const Rational& c = 1);

  SpaceId space() const { return space_; }
  const Terms& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }
  Rational coefficient(const BasisElement& b) const;

  // Adds c·b.  Boundary keys are canonicalized, Psi keys expanded through
  // ψ_i = ω_i + Σ_{S∋i,|S|≥2} δ_{0;S}.  Throws InvalidBoundary/InvalidMark.
  DivisorClass& add(const BasisElement& b, const Rational& c);
  DivisorClass& add_boundary(int i, MarkSet S, const Rational& c);

  DivisorClass& operator+=(const DivisorClass& o);
  DivisorClass& operator-=(const DivisorClass& o);
  DivisorClass& operator*=(const Rational& s);

  friend DivisorClass operator+(DivisorClass a, const DivisorClass& b) { return a += b; }
  friend DivisorClass operator-(DivisorClass a, const DivisorClass& b) { return a -= b; }
  friend DivisorClass operator*(const Rational& s, DivisorClass a) { return a *= s; }
  friend DivisorClass operator-(DivisorClass a) { return a *= -1; }

  bool operator==(const DivisorClass& o) const {
    return space_ == o.space_ && terms_ == o.terms_;
  }

 private:
  void check_space(const DivisorClass& o) const;
  void accumulate(const BasisElement& b, const Rational& c);

  SpaceId space_;
  Terms terms_;
};

// s·a + t·b.  Throws SpaceMismatch.
DivisorClass combine(const Rational& s, const DivisorClass& a, const Rational& t,
                     const DivisorClass& b);

std::string to_string(const DivisorClass& d);

// ψ_i written in the ω basis.
DivisorClass psi_class(SpaceId space, int i);
// ω_i = ψ_i − Σ_{S∋i,|S|≥2} δ_{0;S}, as a map from the ω basis to a
// ψ-based expression: returns the class with every ω_i replaced by that
// expression, keeping Psi keys.  Only used to check that the ψ/ω
// substitution round-trips; Psi keys survive because no canonicalization is
// applied to them.
std::map<BasisElement, Rational> omega_to_psi(const DivisorClass& d);
// Inverse of omega_to_psi: any term map (possibly holding Psi keys) back to a
// canonical class.
DivisorClass psi_to_omega(SpaceId space, const std::map<BasisElement, Rational>& terms);

// BN = (g+3)λ − (g+1)/6 δ_0 − Σ_{i=1}^{⌊g/2⌋} i(g−i) δ_{i;∅} on M̄_g, g ≥ 3.
DivisorClass bn_class(int g);

// Weierstrass divisor on M̄_{g,1}, g ≥ 2:
// g(g+1)/2 ω − λ − Σ_{i=1}^{g−1} (g−i)(g−i+1)/2 δ_i, with δ_i the boundary
// component whose genus-i side carries the mark.
DivisorClass weierstrass_class(int g);

// Σ_{|S|=i} δ_{0;S} on M̄_{0,m}, 2 ≤ i ≤ m−2.
DivisorClass epsilon_class(int m, int i);

// Mumford's relation on M̄_2, λ = δ_0/10 + δ_1/5, pulled back to M̄_{2,n};
// returns d with λ eliminated.
DivisorClass reduce_genus2(const DivisorClass& d);

}  // namespace modpic
