#pragma once

#include <map>
#include <string>
#include <vector>

#include "modpic/divisor_class.hpp"
#include "modpic/linalg.hpp"
#include "modpic/maps.hpp"
#include "modpic/readings.hpp"
#include "modpic/vendor_json.hpp"

namespace modpic {

// Coordinates of d in canonical_basis(d.space()), and back.
RationalVector coordinates(const DivisorClass& d, const std::vector<BasisElement>& basis);
DivisorClass from_coordinates(SpaceId space, const std::vector<BasisElement>& basis,
                              const RationalVector& v);
// Column c is the image of source basis element c in dest coordinates.
RationalMatrix map_matrix(const PullbackMap& m);

struct ConstraintBlock {
  std::string tag;
  std::size_t rows = 0;
  std::size_t rank_added = 0;
};

// Linear functionals on Pic(space), grouped by provenance.  The rank gained
// by each block is recorded as it is appended.
class ConstraintSystem {
 public:
  explicit ConstraintSystem(SpaceId space);

  SpaceId space() const { return space_; }
  const std::vector<BasisElement>& basis() const { return basis_; }
  const std::vector<ConstraintBlock>& blocks() const { return blocks_; }
  const RationalMatrix& stacked() const { return stacked_; }
  std::size_t rank() const { return echelon_.rref.rows(); }
  std::size_t dimension() const { return basis_.size() - rank(); }

  void add_block(std::string tag, const RationalMatrix& rows);
  // Whether every functional vanishes on d.
  bool satisfied_by(const DivisorClass& d) const;
  std::vector<DivisorClass> kernel_classes() const;

 private:
  SpaceId space_;
  std::vector<BasisElement> basis_;
  std::vector<ConstraintBlock> blocks_;
  RationalMatrix stacked_;
  Echelon echelon_;
};

struct Witness {
  std::string name;
  std::string value;
  bool ok = false;
};

struct SubspaceCertificate {
  SpaceId space;
  std::vector<ConstraintBlock> blocks;
  std::size_t dim_pic = 0;
  std::size_t dimension = 0;
  std::size_t expected = 0;
  std::vector<DivisorClass> kernel;
  std::vector<Witness> witnesses;
  std::vector<std::string> notes;
  bool pass = false;
};

// K₁ ⊆ Pic(g,1): f′*D = 0 in θ coordinates and g′*D ∈ span{W₂}.  g ≥ 4.
SubspaceCertificate bn_space_n1(int g, const Readings& readings = {});

// K_n ⊆ Pic(g,n): pairing rows for the elliptic-tails catalog, g′*D ∈ span{W₂},
// and bubble(i,j)*D ∈ K_{n−1} for every ordered pair.  4 ≤ g, 2 ≤ n ≤ max_n.
SubspaceCertificate bn_space_general(int g, int n, const Readings& readings = {},
                                     int max_n = 3);

// Functionals on Pic(space) cutting out span(classes).
RationalMatrix span_constraints(SpaceId space, const std::vector<DivisorClass>& classes);

// Membership in span{W₂} on M̄_{2,1}, modulo Mumford's relation.
bool in_span_w2(const DivisorClass& d);

struct ShowtrivResult {
  std::map<MarkSet, Rational> values;  // every S ⊆ {1..n} with |S| ≥ 2
  bool unique = false;
};

// Extends coefficients on 2-subsets by (2−|S|)d_S + Σ_{x∈S} d_{S∖x} = 0.
// Throws OutOfRange unless every 2-subset of {1..n} is given.
ShowtrivResult showtriv_propagate(int n, const std::map<MarkSet, Rational>& pair_coeffs);

struct ThetaRankCertificate {
  int g = 0;
  int n = 0;
  std::size_t families = 0;
  std::size_t rank = 0;
  std::size_t expected = 0;
  // Rank over every valid θ_{i;S} column (informational for n = 2).
  std::size_t all_columns = 0;
  std::size_t all_columns_rank = 0;
  std::vector<std::string> notes;
  bool pass = false;
};

// n = 1: θ_1..θ_{g−2} against the independence catalog.
// n = 2: θ_{i;{1}}, 1 ≤ i ≤ g−1, against elliptic_catalog(g, 2).
ThetaRankCertificate theta_rank_certificate(int g, int n, const Readings& readings = {});

nlohmann::ordered_json to_json(const SubspaceCertificate& c);
nlohmann::ordered_json to_json(const ThetaRankCertificate& c);

}  // namespace modpic
