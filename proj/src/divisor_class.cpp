#include "modpic/divisor_class.hpp"

#include <sstream>

#include "modpic/errors.hpp"

namespace modpic {

DivisorClass::DivisorClass(SpaceId space) : space_(space) { space_.validate(); }

DivisorClass DivisorClass::of(SpaceId space, const BasisElement& b, const Rational& c) {
  DivisorClass d(space);
  d.add(b, c);
  return d;
}

Rational DivisorClass::coefficient(const BasisElement& b) const {
  auto it = terms_.find(b);
  return it == terms_.end() ? Rational(0) : it->second;
}

void DivisorClass::accumulate(const BasisElement& b, const Rational& c) {
  if (c == 0) return;
  auto [it, inserted] = terms_.try_emplace(b, c);
  if (!inserted) {
    it->second += c;
    if (it->second == 0) terms_.erase(it);
  }
}

DivisorClass& DivisorClass::add(const BasisElement& b, const Rational& c) {
  switch (b.kind) {
    case Kind::Lambda:
    case Kind::DeltaIrr:
      if (space_.g < 1)
        throw InvalidBoundary(to_string(b) + " is not a class on " + to_string(space_));
      accumulate(b, c);
      break;
    case Kind::Omega:
      if (space_.g < 1 || b.mark < 1 || b.mark > space_.n)
        throw InvalidMark(to_string(b) + " is not a class on " + to_string(space_));
      accumulate(b, c);
      break;
    case Kind::Psi: {
      if (space_.g < 1 || b.mark < 1 || b.mark > space_.n)
        throw InvalidMark(to_string(b) + " is not a class on " + to_string(space_));
      const DivisorClass expanded = psi_class(space_, b.mark);
      for (const auto& [key, v] : expanded.terms()) accumulate(key, c * v);
      break;
    }
    case Kind::Boundary:
      accumulate(BasisElement::delta(canonical_boundary(space_, b.boundary.i, b.boundary.S)),
                 c);
      break;
  }
  return *this;
}

DivisorClass& DivisorClass::add_boundary(int i, MarkSet S, const Rational& c) {
  return add(BasisElement::delta({i, S}), c);
}

void DivisorClass::check_space(const DivisorClass& o) const {
  if (space_ != o.space_)
    throw SpaceMismatch("classes live on " + to_string(space_) + " and " +
                        to_string(o.space_));
}

DivisorClass& DivisorClass::operator+=(const DivisorClass& o) {
  check_space(o);
  for (const auto& [b, c] : o.terms_) accumulate(b, c);
  return *this;
}

DivisorClass& DivisorClass::operator-=(const DivisorClass& o) {
  check_space(o);
  for (const auto& [b, c] : o.terms_) accumulate(b, -c);
  return *this;
}

DivisorClass& DivisorClass::operator*=(const Rational& s) {
  if (s == 0) {
    terms_.clear();
    return *this;
  }
  for (auto& [b, c] : terms_) c *= s;
  return *this;
}

DivisorClass combine(const Rational& s, const DivisorClass& a, const Rational& t,
                     const DivisorClass& b) {
  if (a.space() != b.space())
    throw SpaceMismatch("classes live on " + to_string(a.space()) + " and " +
                        to_string(b.space()));
  return s * a + t * b;
}

std::string to_string(const DivisorClass& d) {
  if (d.is_zero()) return "0";
  std::ostringstream os;
  bool first = true;
  for (const auto& [b, c] : d.terms()) {
    if (!first) os << (c < 0 ? " - " : " + ");
    else if (c < 0) os << "-";
    Rational a = abs(c);
    if (a != 1) os << a.get_str() << "*";
    os << to_string(b);
    first = false;
  }
  return os.str();
}

DivisorClass psi_class(SpaceId space, int i) {
  if (space.g < 1 || i < 1 || i > space.n)
    throw InvalidMark("psi_" + std::to_string(i) + " is not a class on " + to_string(space));
  DivisorClass d(space);
  d.add(BasisElement::omega(i), 1);
  for (int k = 2; k <= space.n; ++k)
    for (MarkSet S : subsets_of_size(space.n, k))
      if (S.contains(i)) d.add_boundary(0, S, 1);
  return d;
}

std::map<BasisElement, Rational> omega_to_psi(const DivisorClass& d) {
  std::map<BasisElement, Rational> out;
  auto acc = [&out](const BasisElement& b, const Rational& c) {
    auto& slot = out[b];
    slot += c;
    if (slot == 0) out.erase(b);
  };
  for (const auto& [b, c] : d.terms()) {
    if (b.kind != Kind::Omega) {
      acc(b, c);
      continue;
    }
    acc(BasisElement::psi(b.mark), c);
    for (int k = 2; k <= d.space().n; ++k)
      for (MarkSet S : subsets_of_size(d.space().n, k))
        if (S.contains(b.mark))
          acc(BasisElement::delta(canonical_boundary(d.space(), 0, S)), -c);
  }
  return out;
}

DivisorClass psi_to_omega(SpaceId space, const std::map<BasisElement, Rational>& terms) {
  DivisorClass d(space);
  for (const auto& [b, c] : terms) d.add(b, c);
  return d;
}

DivisorClass bn_class(int g) {
  if (g < 3) throw OutOfRange("bn_class needs g ≥ 3");
  SpaceId sp{g, 0};
  DivisorClass d(sp);
  d.add(BasisElement::lambda(), g + 3);
  d.add(BasisElement::delta_irr(), -make_rational(g + 1, 6));
  for (int i = 1; 2 * i <= g; ++i) d.add_boundary(i, {}, -i * (g - i));
  return d;
}

DivisorClass weierstrass_class(int g) {
  if (g < 2) throw OutOfRange("weierstrass_class needs g ≥ 2");
  SpaceId sp{g, 1};
  DivisorClass d(sp);
  d.add(BasisElement::omega(1), make_rational(static_cast<long>(g) * (g + 1), 2));
  d.add(BasisElement::lambda(), -1);
  for (int i = 1; i <= g - 1; ++i)
    d.add_boundary(i, {1}, -make_rational(static_cast<long>(g - i) * (g - i + 1), 2));
  return d;
}

DivisorClass epsilon_class(int m, int i) {
  SpaceId sp{0, m};
  sp.validate();
  if (i < 2 || i > m - 2)
    throw InvalidBoundary("epsilon_" + std::to_string(i) + " needs 2 ≤ i ≤ m−2 on " +
                          to_string(sp));
  DivisorClass d(sp);
  for (MarkSet S : subsets_of_size(m, i)) d.add_boundary(0, S, 1);
  return d;
}

DivisorClass reduce_genus2(const DivisorClass& d) {
  if (d.space().g != 2) throw SpaceMismatch("reduce_genus2 needs a genus-2 space");
  Rational c = d.coefficient(BasisElement::lambda());
  if (c == 0) return d;
  DivisorClass relation(d.space());
  relation.add(BasisElement::lambda(), 1);
  relation.add(BasisElement::delta_irr(), -make_rational(1, 10));
  for (const auto& b : boundary_indices(d.space()))
    if (b.i == 1) relation.add(BasisElement::delta(b), -make_rational(1, 5));
  return d - c * relation;
}

}  // namespace modpic
