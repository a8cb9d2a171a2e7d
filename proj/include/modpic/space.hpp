#pragma once

#include <compare>
#include <cstdint>
#include <initializer_list>
#include <optional>
#include <string>
#include <vector>

namespace modpic {

inline constexpr int kMaxMarks = 63;

// Finite set of mark labels 1..63, stored as a bitmask.
class MarkSet {
 public:
  constexpr MarkSet() = default;
  MarkSet(std::initializer_list<int> marks);
  explicit MarkSet(const std::vector<int>& marks);

  static constexpr MarkSet from_bits(std::uint64_t bits) {
    MarkSet s;
    s.bits_ = bits;
    return s;
  }
  // {lo, lo+1, ..., hi}; empty when hi < lo.
  static MarkSet interval(int lo, int hi);
  static MarkSet all(int n) { return interval(1, n); }

  bool contains(int mark) const;
  MarkSet with(int mark) const;
  MarkSet without(int mark) const;
  int size() const;
  bool empty() const { return bits_ == 0; }
  int max() const;  // 0 when empty
  std::uint64_t bits() const { return bits_; }
  std::vector<int> marks() const;
  bool subset_of(MarkSet other) const { return (bits_ & ~other.bits_) == 0; }

  MarkSet operator|(MarkSet o) const { return from_bits(bits_ | o.bits_); }
  MarkSet operator&(MarkSet o) const { return from_bits(bits_ & o.bits_); }
  MarkSet operator-(MarkSet o) const { return from_bits(bits_ & ~o.bits_); }

  bool operator==(const MarkSet&) const = default;
  // Smaller sets first, then lexicographic on the sorted mark lists.
  std::strong_ordering operator<=>(const MarkSet& o) const;

 private:
  std::uint64_t bits_ = 0;
};

std::string to_string(MarkSet s);  // "{1,3}"

// Moduli space M̄_{g,n}.
struct SpaceId {
  int g = 0;
  int n = 0;

  // Throws OutOfRange unless g ≥ 0, 0 ≤ n ≤ 63 and (g > 0 or n ≥ 3).
  void validate() const;
  MarkSet marks() const { return MarkSet::all(n); }

  bool operator==(const SpaceId&) const = default;
  auto operator<=>(const SpaceId&) const = default;
};

std::string to_string(SpaceId s);

// Separating-node boundary divisor δ_{i;S}: genus-i side carrying marks S.
// Values handed out by canonical_boundary are canonical representatives.
struct BoundaryIndex {
  int i = 0;
  MarkSet S;

  bool operator==(const BoundaryIndex&) const = default;
  auto operator<=>(const BoundaryIndex&) const = default;
};

// Stability of the raw pair (i,S) in `space`, before canonicalization.
bool is_stable_boundary(SpaceId space, int i, MarkSet S);

// Representative of {(i,S), (g−i,S^c)}: smaller genus wins; at i = g−i the
// set not containing n wins (S = ∅ when n = 0).
std::optional<BoundaryIndex> try_canonical_boundary(SpaceId space, int i, MarkSet S);
BoundaryIndex canonical_boundary(SpaceId space, int i, MarkSet S);

// The mirrored pair (g−i, S^c).
BoundaryIndex mirror(SpaceId space, BoundaryIndex b);

enum class Kind { Lambda, DeltaIrr, Omega, Psi, Boundary };

struct BasisElement {
  Kind kind = Kind::Lambda;
  int mark = 0;             // Omega / Psi
  BoundaryIndex boundary;   // Boundary

  static BasisElement lambda() { return {Kind::Lambda, 0, {}}; }
  static BasisElement delta_irr() { return {Kind::DeltaIrr, 0, {}}; }
  static BasisElement omega(int i) { return {Kind::Omega, i, {}}; }
  static BasisElement psi(int i) { return {Kind::Psi, i, {}}; }
  static BasisElement delta(BoundaryIndex b) { return {Kind::Boundary, 0, b}; }

  bool operator==(const BasisElement&) const = default;
  std::strong_ordering operator<=>(const BasisElement& o) const;
};

std::string to_string(const BasisElement& b);

// True when b may appear in a canonical DivisorClass on `space`.  Psi is never
// canonical; Omega/Psi/Lambda/DeltaIrr need g ≥ 1.
bool is_canonical_element(SpaceId space, const BasisElement& b);

std::vector<BoundaryIndex> boundary_indices(SpaceId space);

// λ, δ_0, ω_1..ω_n, then boundary indices in order (g ≥ 1); only the δ_{0;S}
// for g = 0.
std::vector<BasisElement> canonical_basis(SpaceId space);

// All subsets of {1..n} of the given size, in MarkSet order.
std::vector<MarkSet> subsets_of_size(int n, int size);

}  // namespace modpic
