#pragma once

#include <vector>

#include "modpic/rational.hpp"

namespace modpic {

// c_k = (2k)!/(k!(k+1)!).  Throws OutOfRange for k < 0.
Integer catalan(long k);

// Number of g^1_d's on a general genus-g curve with ramification m−1 at one
// given point and n−1 at another, where 2d = g+m+n−1.  Throws ParityError when
// g+m+n−1 is odd and OutOfRange unless m, n ≥ 1 and d ≥ 1.  Returns 0 when
// the summation range is empty.
Integer a_count(long g, long m, long n);
// Same count indexed by degree: m = 2d − g − n + 1.
Integer a_count_by_degree(long g, long d, long n);

// Total ramification weight (r+1)(d+r(g−1)) of a g^r_d.
Integer plucker_total(long g, long r, long d);

struct RamificationSeq {
  std::vector<long> z;  // length r+1, nondecreasing, entries in [0, d−r]

  // Throws OutOfRange when the sequence does not fit a g^r_d.
  void validate(long r, long d) const;
};

long beta_weight(const RamificationSeq& s);

struct SeriesParams {
  long g = 0;
  long r = 1;
  long d = 1;

  // g − (r+1)(g−d+r)
  long slack() const { return g - (r + 1) * (g - d + r); }
};

struct Feasibility {
  bool feasible = false;
  long slack = 0;  // (r+1)(d−r) − gr − Σ|Z|
};

// Budget on the rational spine after every elliptic tail takes weight ≥ r.
Feasibility elliptic_tail_feasible(const SeriesParams& p, const std::vector<RamificationSeq>& zs);

struct OddCheck {
  Integer lhs;  // A(g,1,3)
  Integer rhs;  // 6g·c_{(g+1)/2}
  bool nonzero = false;
  Rational scale;  // K with lhs·K = (g−1)(g+1), rhs·K = g(g+1)
};

// Throws ParityError for even g, OutOfRange for g < 3.  Asserts the reduction.
OddCheck odd_genus_pair_check(long g);

struct EvenCheck {
  Integer lhs;  // A(g,2,3) + A(g,3,2)
  Integer rhs;  // A(g,1,2) + A(g,1,4)
  Integer difference;
  bool nonzero = false;
};

// Throws ParityError for odd g, OutOfRange for g < 4.  Asserts
// lhs − rhs = 48·g!/((g/2−1)!(g/2+2)!).
EvenCheck even_genus_pair_check(long g);

}  // namespace modpic
