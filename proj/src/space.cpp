#include "modpic/space.hpp"

#include <algorithm>
#include <bit>
#include <sstream>

#include "modpic/errors.hpp"

namespace modpic {

namespace {

void check_label(int mark) {
  if (mark < 1 || mark > kMaxMarks)
    throw InvalidMark("mark label " + std::to_string(mark) + " outside 1.." +
                      std::to_string(kMaxMarks));
}

std::uint64_t bit(int mark) { return std::uint64_t{1} << (mark - 1); }

}  // namespace

MarkSet::MarkSet(std::initializer_list<int> marks) {
  for (int m : marks) {
    check_label(m);
    bits_ |= bit(m);
  }
}

MarkSet::MarkSet(const std::vector<int>& marks) {
  for (int m : marks) {
    check_label(m);
    bits_ |= bit(m);
  }
}

MarkSet MarkSet::interval(int lo, int hi) {
  MarkSet s;
  for (int m = lo; m <= hi; ++m) {
    check_label(m);
    s.bits_ |= bit(m);
  }
  return s;
}

bool MarkSet::contains(int mark) const {
  if (mark < 1 || mark > kMaxMarks) return false;
  return (bits_ & bit(mark)) != 0;
}

MarkSet MarkSet::with(int mark) const {
  check_label(mark);
  return from_bits(bits_ | bit(mark));
}

MarkSet MarkSet::without(int mark) const {
  if (mark < 1 || mark > kMaxMarks) return *this;
  return from_bits(bits_ & ~bit(mark));
}

int MarkSet::size() const { return std::popcount(bits_); }

int MarkSet::max() const { return 64 - std::countl_zero(bits_); }

std::vector<int> MarkSet::marks() const {
  std::vector<int> out;
  for (std::uint64_t b = bits_; b != 0; b &= b - 1) out.push_back(std::countr_zero(b) + 1);
  return out;
}

std::strong_ordering MarkSet::operator<=>(const MarkSet& o) const {
  if (auto c = size() <=> o.size(); c != 0) return c;
  std::uint64_t diff = bits_ ^ o.bits_;
  if (diff == 0) return std::strong_ordering::equal;
  // Equal sizes: the set holding the smallest differing mark sorts first.
  std::uint64_t low = diff & (~diff + 1);
  return (bits_ & low) ? std::strong_ordering::less : std::strong_ordering::greater;
}

std::string to_string(MarkSet s) {
  std::ostringstream os;
  os << '{';
  bool first = true;
  for (int m : s.marks()) {
    if (!first) os << ',';
    os << m;
    first = false;
  }
  os << '}';
  return os.str();
}

void SpaceId::validate() const {
  if (g < 0) throw OutOfRange("negative genus");
  if (n < 0 || n > kMaxMarks)
    throw OutOfRange("number of marks must lie in 0.." + std::to_string(kMaxMarks));
  if (g == 0 && n < 3) throw OutOfRange("M̄_{0,n} requires n ≥ 3");
}

std::string to_string(SpaceId s) {
  return "M̄_{" + std::to_string(s.g) + "," + std::to_string(s.n) + "}";
}

bool is_stable_boundary(SpaceId space, int i, MarkSet S) {
  if (i < 0 || i > space.g) return false;
  if (!S.subset_of(space.marks())) return false;
  if (i == 0 && S.size() < 2) return false;
  if (i == space.g && space.n - S.size() < 2) return false;
  return true;
}

std::optional<BoundaryIndex> try_canonical_boundary(SpaceId space, int i, MarkSet S) {
  if (!is_stable_boundary(space, i, S)) return std::nullopt;
  const int j = space.g - i;
  const MarkSet Sc = space.marks() - S;
  if (i < j) return BoundaryIndex{i, S};
  if (j < i) return BoundaryIndex{j, Sc};
  if (space.n == 0) return BoundaryIndex{i, S};
  return S.contains(space.n) ? BoundaryIndex{i, Sc} : BoundaryIndex{i, S};
}

BoundaryIndex canonical_boundary(SpaceId space, int i, MarkSet S) {
  space.validate();
  if (auto b = try_canonical_boundary(space, i, S)) return *b;
  throw InvalidBoundary("unstable boundary index (" + std::to_string(i) + "," +
                        to_string(S) + ") on " + to_string(space));
}

BoundaryIndex mirror(SpaceId space, BoundaryIndex b) {
  return {space.g - b.i, space.marks() - b.S};
}

std::strong_ordering BasisElement::operator<=>(const BasisElement& o) const {
  if (auto c = static_cast<int>(kind) <=> static_cast<int>(o.kind); c != 0) return c;
  if (auto c = mark <=> o.mark; c != 0) return c;
  if (auto c = boundary.i <=> o.boundary.i; c != 0) return c;
  return boundary.S <=> o.boundary.S;
}

std::string to_string(const BasisElement& b) {
  switch (b.kind) {
    case Kind::Lambda:
      return "lambda";
    case Kind::DeltaIrr:
      return "delta0";
    case Kind::Omega:
      return "omega_" + std::to_string(b.mark);
    case Kind::Psi:
      return "psi_" + std::to_string(b.mark);
    case Kind::Boundary:
      return "delta_{" + std::to_string(b.boundary.i) + ";" + to_string(b.boundary.S) + "}";
  }
  return "?";
}

bool is_canonical_element(SpaceId space, const BasisElement& b) {
  switch (b.kind) {
    case Kind::Lambda:
    case Kind::DeltaIrr:
      return space.g >= 1;
    case Kind::Omega:
      return space.g >= 1 && b.mark >= 1 && b.mark <= space.n;
    case Kind::Psi:
      return false;
    case Kind::Boundary: {
      auto c = try_canonical_boundary(space, b.boundary.i, b.boundary.S);
      return c && *c == b.boundary;
    }
  }
  return false;
}

std::vector<MarkSet> subsets_of_size(int n, int size) {
  std::vector<MarkSet> out;
  if (size < 0 || size > n) return out;
  if (size == 0) return {MarkSet{}};
  // Gosper's hack over n-bit words, then sorted into MarkSet order.
  std::uint64_t v = (std::uint64_t{1} << size) - 1;
  const std::uint64_t limit = std::uint64_t{1} << n;
  while (v < limit) {
    out.push_back(MarkSet::from_bits(v));
    std::uint64_t t = v | (v - 1);
    v = (t + 1) | (((~t & -~t) - 1) >> (std::countr_zero(v) + 1));
  }
  std::sort(out.begin(), out.end());
  return out;
}

std::vector<BoundaryIndex> boundary_indices(SpaceId space) {
  space.validate();
  std::vector<BoundaryIndex> out;
  for (int i = 0; 2 * i <= space.g; ++i) {
    for (int k = 0; k <= space.n; ++k) {
      for (MarkSet S : subsets_of_size(space.n, k)) {
        auto c = try_canonical_boundary(space, i, S);
        if (c && *c == BoundaryIndex{i, S}) out.push_back(*c);
      }
    }
  }
  return out;
}

std::vector<BasisElement> canonical_basis(SpaceId space) {
  space.validate();
  std::vector<BasisElement> out;
  if (space.g >= 1) {
    out.push_back(BasisElement::lambda());
    out.push_back(BasisElement::delta_irr());
    for (int i = 1; i <= space.n; ++i) out.push_back(BasisElement::omega(i));
  }
  for (const auto& b : boundary_indices(space)) out.push_back(BasisElement::delta(b));
  return out;
}

}  // namespace modpic
