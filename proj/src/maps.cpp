#include "modpic/maps.hpp"

#include <algorithm>
#include <sstream>

#include "modpic/errors.hpp"

namespace modpic {

std::vector<std::string> Readings::notes() const {
  std::vector<std::string> out;
  out.push_back(g2_sign < 0 ? "g2-sign=minus: genus-2 tail sends delta_{g-2} to -omega"
                            : "g2-sign=plus: genus-2 tail sends delta_{g-2} to +omega");
  out.push_back(theta_top_literal ? "theta-top=literal: theta index runs to g-1"
                                  : "theta-top=g-2: theta index runs 1..g-2");
  out.push_back(theta_shift_by_n ? "theta-shift=n: theta_{i;S} uses T u (S+n)"
                                 : "theta-shift=g: theta_{i;S} uses T u (S+g)");
  out.push_back(tail_genus_literal ? "tail-genus=g: fixed curve of genus g"
                                   : "tail-genus=g-2: fixed curve of genus g-2");
  return out;
}

// ---------------------------------------------------------------- PullbackMap

PullbackMap::PullbackMap(std::string name, SpaceId source, SpaceId dest)
    : name_(std::move(name)), source_(source), dest_(dest) {
  source_.validate();
  dest_.validate();
}

void PullbackMap::set(const BasisElement& b, DivisorClass image) {
  if (!is_canonical_element(source_, b))
    throw InvalidBoundary(to_string(b) + " is not a canonical element of " + to_string(source_));
  if (image.space() != dest_)
    throw SpaceMismatch("image of " + to_string(b) + " must lie on " + to_string(dest_));
  table_.insert_or_assign(b, std::move(image));
}

const DivisorClass& PullbackMap::image(const BasisElement& b) const {
  auto it = table_.find(b);
  if (it == table_.end())
    throw InvalidBoundary(name_ + " has no image for " + to_string(b));
  return it->second;
}

DivisorClass PullbackMap::apply(const DivisorClass& d) const {
  if (d.space() != source_)
    throw SpaceMismatch(name_ + " acts on " + to_string(source_) + ", got a class on " +
                        to_string(d.space()));
  DivisorClass out(dest_);
  for (const auto& [b, c] : d.terms()) out += c * image(b);
  return out;
}

void PullbackMap::check_complete() const {
  for (const auto& b : canonical_basis(source_)) image(b);
}

PullbackMap compose(const PullbackMap& first, const PullbackMap& second) {
  if (first.dest() != second.source())
    throw SpaceMismatch("cannot compose " + first.name() + " with " + second.name());
  PullbackMap out(second.name() + " o " + first.name(), first.source(), second.dest());
  for (const auto& [b, img] : first.table()) out.set(b, second.apply(img));
  return out;
}

PullbackMap identity_map(SpaceId space) {
  PullbackMap out("id", space, space);
  for (const auto& b : canonical_basis(space)) out.set(b, DivisorClass::of(space, b));
  return out;
}

// ---------------------------------------------------------------- relabeling

Permutation identity_permutation(int n) {
  Permutation p(static_cast<std::size_t>(n));
  for (int k = 0; k < n; ++k) p[static_cast<std::size_t>(k)] = k + 1;
  return p;
}

Permutation transposition(int n, int a, int b) {
  Permutation p = identity_permutation(n);
  if (a < 1 || a > n || b < 1 || b > n) throw InvalidMark("transposition outside 1..n");
  std::swap(p[static_cast<std::size_t>(a - 1)], p[static_cast<std::size_t>(b - 1)]);
  return p;
}

void check_permutation(const Permutation& perm, int n) {
  if (static_cast<int>(perm.size()) != n) throw InvalidMark("permutation has wrong length");
  std::vector<bool> seen(static_cast<std::size_t>(n) + 1, false);
  for (int v : perm) {
    if (v < 1 || v > n || seen[static_cast<std::size_t>(v)])
      throw InvalidMark("not a permutation of 1..n");
    seen[static_cast<std::size_t>(v)] = true;
  }
}

namespace {

MarkSet image_of(MarkSet S, const Permutation& perm) {
  MarkSet out;
  for (int m : S.marks()) out = out.with(perm[static_cast<std::size_t>(m - 1)]);
  return out;
}

}  // namespace

DivisorClass relabel(const DivisorClass& d, const Permutation& perm) {
  check_permutation(perm, d.space().n);
  DivisorClass out(d.space());
  for (const auto& [b, c] : d.terms()) {
    switch (b.kind) {
      case Kind::Omega:
      case Kind::Psi:
        out.add({b.kind, perm[static_cast<std::size_t>(b.mark - 1)], {}}, c);
        break;
      case Kind::Boundary:
        out.add_boundary(b.boundary.i, image_of(b.boundary.S, perm), c);
        break;
      default:
        out.add(b, c);
    }
  }
  return out;
}

PullbackMap relabel_map(SpaceId space, const Permutation& perm) {
  PullbackMap out("relabel", space, space);
  for (const auto& b : canonical_basis(space))
    out.set(b, relabel(DivisorClass::of(space, b), perm));
  return out;
}

// ---------------------------------------------------------------- forgetful

PullbackMap forgetful_pullback(int g, int n, int j) {
  if (n < 1 || j < 1 || j > n) throw InvalidMark("forgotten mark must lie in 1..n");
  SpaceId src{g, n - 1};
  SpaceId dst{g, n};
  PullbackMap out("pi_" + std::to_string(j), src, dst);
  auto lift = [j](int m) { return m < j ? m : m + 1; };
  for (const auto& b : canonical_basis(src)) {
    DivisorClass img(dst);
    switch (b.kind) {
      case Kind::Lambda:
      case Kind::DeltaIrr:
        img.add(b, 1);
        break;
      case Kind::Omega:
        img.add(BasisElement::omega(lift(b.mark)), 1);
        break;
      case Kind::Boundary: {
        MarkSet S;
        for (int m : b.boundary.S.marks()) S = S.with(lift(m));
        auto first = try_canonical_boundary(dst, b.boundary.i, S);
        auto second = try_canonical_boundary(dst, b.boundary.i, S.with(j));
        // Both summands coincide only for δ_{g/2;∅} on M̄_g; it pulls back once.
        if (first && second && *first == *second) {
          img.add(BasisElement::delta(*first), 1);
        } else {
          if (first) img.add(BasisElement::delta(*first), 1);
          if (second) img.add(BasisElement::delta(*second), 1);
        }
        break;
      }
      case Kind::Psi:
        break;
    }
    out.set(b, std::move(img));
  }
  return out;
}

// ---------------------------------------------------------------- bubble

PullbackMap bubble_pullback(int g, int n, int i, int j) {
  if (g < 1) throw OutOfRange("bubble_pullback needs g ≥ 1");
  if (n < 1) throw OutOfRange("bubble_pullback needs n ≥ 1");
  if (i < 1 || i > n + 1 || j < 1 || j > n + 1 || i == j)
    throw InvalidMark("bubble marks must be distinct labels in 1..n+1");
  SpaceId src{g, n + 1};
  SpaceId dst{g, n};
  auto rho = [j](int m) { return m < j ? m : m - 1; };
  auto rho_set = [&](MarkSet S) {
    MarkSet out;
    for (int m : S.marks()) out = out.with(rho(m));
    return out;
  };
  const int bubble_point = rho(i);

  // Images of ψ_k in the ω basis of dst.
  auto psi_image = [&](int k) -> DivisorClass {
    if (k == i || k == j) return DivisorClass(dst);
    return psi_class(dst, rho(k));
  };
  auto boundary_image = [&](BoundaryIndex b) -> DivisorClass {
    if (!b.S.contains(i)) b = mirror(src, b);
    DivisorClass img(dst);
    if (!b.S.contains(j)) return img;  // i and j separated: the bubble never meets it
    if (b.i == 0 && b.S == MarkSet{i, j}) {
      img -= psi_class(dst, bubble_point);
      return img;
    }
    img.add_boundary(b.i, rho_set(b.S.without(j)), 1);
    return img;
  };

  PullbackMap out("bubble_" + std::to_string(i) + "," + std::to_string(j), src, dst);
  for (const auto& b : canonical_basis(src)) {
    switch (b.kind) {
      case Kind::Lambda:
      case Kind::DeltaIrr:
        out.set(b, DivisorClass::of(dst, b));
        break;
      case Kind::Boundary:
        out.set(b, boundary_image(b.boundary));
        break;
      case Kind::Omega: {
        // ω_k = ψ_k − Σ_{S∋k,|S|≥2} δ_{0;S}
        DivisorClass img = psi_image(b.mark);
        for (int k = 2; k <= src.n; ++k)
          for (MarkSet S : subsets_of_size(src.n, k))
            if (S.contains(b.mark)) img -= boundary_image(canonical_boundary(src, 0, S));
        out.set(b, std::move(img));
        break;
      }
      case Kind::Psi:
        break;
    }
  }
  return out;
}

// ---------------------------------------------------------------- genus-2 tail

PullbackMap genus2_tail_pullback(int g, int n, const Readings& readings) {
  if (g < 4) throw OutOfRange("genus2_tail_pullback needs g ≥ 4");
  if (n < 1) throw OutOfRange("genus2_tail_pullback needs n ≥ 1");
  if (readings.tail_genus_literal)
    throw OutOfRange("genus mismatch: a genus-2 curve glued to a fixed genus-" +
                     std::to_string(g) + " curve has genus " + std::to_string(g + 2) +
                     ", not " + std::to_string(g));
  SpaceId src{g, n};
  SpaceId dst{2, 1};
  const BasisElement d1 = BasisElement::delta(canonical_boundary(dst, 1, {}));
  const BoundaryIndex elliptic = canonical_boundary(src, g - 1, src.marks());
  const BoundaryIndex genus_two = canonical_boundary(src, g - 2, src.marks());
  PullbackMap out("gprime", src, dst);
  for (const auto& b : canonical_basis(src)) {
    DivisorClass img(dst);
    if (b.kind == Kind::Lambda) {
      img.add(BasisElement::delta_irr(), make_rational(1, 10));
      img.add(d1, make_rational(1, 5));
    } else if (b.kind == Kind::DeltaIrr) {
      img.add(BasisElement::delta_irr(), 1);
    } else if (b.kind == Kind::Boundary && b.boundary == elliptic) {
      img.add(d1, 1);
    } else if (b.kind == Kind::Boundary && b.boundary == genus_two) {
      img.add(BasisElement::omega(1), readings.g2_sign);
    }
    out.set(b, std::move(img));
  }
  return out;
}

PullbackMap unpointed_genus2_tail_pullback(int g) {
  if (g < 4) throw OutOfRange("unpointed_genus2_tail_pullback needs g ≥ 4");
  SpaceId src{g, 0};
  SpaceId dst{2, 1};
  PullbackMap out("g", src, dst);
  for (const auto& b : canonical_basis(src)) {
    DivisorClass img(dst);
    if (b.kind == Kind::Lambda) {
      img.add(BasisElement::delta_irr(), make_rational(1, 10));
      img.add_boundary(1, {}, make_rational(1, 5));
    } else if (b.kind == Kind::DeltaIrr) {
      img.add(BasisElement::delta_irr(), 1);
    } else if (b.boundary.i == 1) {
      img.add_boundary(1, {}, 1);
    } else if (b.boundary.i == 2) {
      img.add(BasisElement::omega(1), -1);
    }
    out.set(b, std::move(img));
  }
  return out;
}

// ---------------------------------------------------------------- θ classes

bool is_valid_theta(int g, int n, int i, MarkSet S) {
  if (g < 1 || n < 0 || i < 0 || i > g) return false;
  if (!S.subset_of(MarkSet::all(n))) return false;
  const int size = i + S.size();
  return size >= 2 && size <= g + n - 2;
}

ThetaIndex canonical_theta(int g, int n, int i, MarkSet S) {
  if (!is_valid_theta(g, n, i, S))
    throw InvalidBoundary("theta_{" + std::to_string(i) + ";" + to_string(S) +
                          "} is not a stable class on M̄_{0," + std::to_string(g + n) + "}");
  if (n >= 1 && !S.contains(1)) return {g - i, MarkSet::all(n) - S};
  return {i, S};
}

ThetaClass::ThetaClass(int g, int n, int shift) : g_(g), n_(n), shift_(shift) {
  if (g < 1 || n < 0 || g + n < 3) throw OutOfRange("theta classes need g ≥ 1 and g+n ≥ 3");
}

Rational ThetaClass::coefficient(ThetaIndex t) const {
  auto it = coeffs_.find(t);
  return it == coeffs_.end() ? Rational(0) : it->second;
}

ThetaClass& ThetaClass::add(int i, MarkSet S, const Rational& c) {
  // Complement merging is only meaningful for the shift-by-g reading.
  ThetaIndex key = shift_ == g_ ? canonical_theta(g_, n_, i, S) : ThetaIndex{i, S};
  if (shift_ != g_ && !is_valid_theta(g_, n_, i, S))
    throw InvalidBoundary("theta index out of range");
  auto& slot = coeffs_[key];
  slot += c;
  if (slot == 0) coeffs_.erase(key);
  return *this;
}

ThetaClass& ThetaClass::operator+=(const ThetaClass& o) {
  if (g_ != o.g_ || n_ != o.n_ || shift_ != o.shift_)
    throw SpaceMismatch("theta classes on different spaces");
  for (const auto& [t, c] : o.coeffs_) add(t.i, t.S, c);
  return *this;
}

ThetaClass& ThetaClass::operator*=(const Rational& s) {
  if (s == 0) coeffs_.clear();
  for (auto& [t, c] : coeffs_) c *= s;
  return *this;
}

Integer theta_multiplicity(int g, int n, int i, MarkSet S, int shift, MarkSet X) {
  const MarkSet all = MarkSet::all(g + n);
  const MarkSet tails = MarkSet::all(g);
  MarkSet shifted;
  for (int m : S.marks()) shifted = shifted.with(m + shift);
  Integer total = 0;
  for (MarkSet Y : {X, all - X}) {
    if (!shifted.subset_of(Y)) continue;
    MarkSet forced = Y - shifted;  // must come from T
    if (!forced.subset_of(tails)) continue;
    MarkSet optional = Y & shifted & tails;  // may or may not be in T
    total += binomial(optional.size(), i - forced.size());
  }
  return total;
}

Rational ThetaClass::coefficient_of_boundary(MarkSet X) const {
  Rational out = 0;
  for (const auto& [t, c] : coeffs_) out += c * theta_multiplicity(g_, n_, t.i, t.S, shift_, X);
  return out;
}

DivisorClass ThetaClass::expand() const {
  DivisorClass out(ambient());
  for (const auto& [t, c] : coeffs_) {
    MarkSet shifted;
    for (int m : t.S.marks()) shifted = shifted.with(m + shift_);
    for (MarkSet T : subsets_of_size(g_, t.i)) out.add_boundary(0, T | shifted, c);
  }
  return out;
}

std::string to_string(const ThetaClass& t) {
  if (t.is_zero()) return "0";
  std::ostringstream os;
  bool first = true;
  for (const auto& [k, c] : t.coeffs()) {
    if (!first) os << " + ";
    os << c.get_str() << "*theta_{" << k.i << ";" << to_string(k.S) << "}";
    first = false;
  }
  return os.str();
}

DivisorClass theta_class(int g, int n, int i, MarkSet S, const Readings& readings) {
  if (n < 1) throw InvalidBoundary("theta classes need n ≥ 1");
  if (n == 1 && S == MarkSet{1} && (i < 1 || i > readings.theta_top(g)))
    throw InvalidBoundary("theta_" + std::to_string(i) + " outside 1.." +
                          std::to_string(readings.theta_top(g)));
  if (!is_valid_theta(g, n, i, S))
    throw InvalidBoundary("theta_{" + std::to_string(i) + ";" + to_string(S) +
                          "} is not a stable class on M̄_{0," + std::to_string(g + n) + "}");
  ThetaClass t(g, n, readings.theta_shift(g, n));
  t.add(i, S, 1);
  return t.expand();
}

// ---------------------------------------------------------------- f′

EllipticTailsMap::EllipticTailsMap(int g, std::map<BasisElement, ThetaClass> table)
    : g_(g), table_(std::move(table)) {}

ThetaClass EllipticTailsMap::apply(const DivisorClass& d) const {
  if (d.space() != source())
    throw SpaceMismatch("elliptic tails pullback acts on " + to_string(source()));
  ThetaClass out(g_, 1, table_.begin()->second.shift());
  for (const auto& [b, c] : d.terms()) {
    auto it = table_.find(b);
    if (it == table_.end()) throw InvalidBoundary("no f' image for " + to_string(b));
    out += c * it->second;
  }
  return out;
}

PullbackMap EllipticTailsMap::expanded() const {
  PullbackMap out("fprime", source(), dest());
  for (const auto& [b, t] : table_) out.set(b, t.expand());
  return out;
}

EllipticTailsMap elliptic_tails_pullback(int g, const Readings& readings) {
  if (g < 3) throw OutOfRange("elliptic_tails_pullback needs g ≥ 3");
  const SpaceId src{g, 1};
  const int shift = readings.theta_shift(g, 1);
  const MarkSet one{1};
  std::map<BasisElement, ThetaClass> table;
  ThetaClass zero(g, 1, shift);
  table.emplace(BasisElement::lambda(), zero);
  table.emplace(BasisElement::delta_irr(), zero);

  ThetaClass last(g, 1, shift);   // δ_{g−1}
  ThetaClass omega(g, 1, shift);  // ω
  for (int i = 1; i <= g - 2; ++i) {
    ThetaClass t(g, 1, shift);
    t.add(i, one, 1);
    table.insert_or_assign(BasisElement::delta(canonical_boundary(src, i, one)), t);
    last.add(i, one, -make_rational(static_cast<long>(i) * (g - i), g - 1));
    omega.add(i, one, make_rational(static_cast<long>(g - i) * (g - i - 1),
                                    static_cast<long>(g) * (g - 1)));
  }
  table.insert_or_assign(BasisElement::delta(canonical_boundary(src, g - 1, one)), last);
  table.insert_or_assign(BasisElement::omega(1), omega);
  return EllipticTailsMap(g, std::move(table));
}

}  // namespace modpic
