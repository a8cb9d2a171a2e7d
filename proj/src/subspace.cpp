#include "modpic/subspace.hpp"

#include <set>

#include "modpic/class_io.hpp"
#include "modpic/counting.hpp"
#include "modpic/errors.hpp"
#include "modpic/families.hpp"

namespace modpic {

RationalVector coordinates(const DivisorClass& d, const std::vector<BasisElement>& basis) {
  RationalVector v;
  v.reserve(basis.size());
  std::size_t found = 0;
  for (const auto& b : basis) {
    v.push_back(d.coefficient(b));
    if (v.back() != 0) ++found;
  }
  if (found != d.terms().size())
    throw SpaceMismatch("class has terms outside the given basis: " + to_string(d));
  return v;
}

DivisorClass from_coordinates(SpaceId space, const std::vector<BasisElement>& basis,
                              const RationalVector& v) {
  DivisorClass d(space);
  for (std::size_t k = 0; k < basis.size(); ++k)
    if (v[k] != 0) d.add(basis[k], v[k]);
  return d;
}

RationalMatrix map_matrix(const PullbackMap& m) {
  const auto src = canonical_basis(m.source());
  const auto dst = canonical_basis(m.dest());
  RationalMatrix out(dst.size(), src.size());
  for (std::size_t c = 0; c < src.size(); ++c) {
    auto col = coordinates(m.image(src[c]), dst);
    for (std::size_t r = 0; r < dst.size(); ++r) out(r, c) = col[r];
  }
  return out;
}

namespace {

RationalMatrix multiply(const RationalMatrix& a, const RationalMatrix& b) {
  if (a.cols() != b.rows()) throw Error("matrix shapes do not compose");
  RationalMatrix out(a.rows(), b.cols());
  for (std::size_t r = 0; r < a.rows(); ++r)
    for (std::size_t k = 0; k < a.cols(); ++k) {
      if (a(r, k) == 0) continue;
      for (std::size_t c = 0; c < b.cols(); ++c)
        if (b(k, c) != 0) out(r, c) += a(r, k) * b(k, c);
    }
  return out;
}

std::string yes_no(bool b) { return b ? "yes" : "no"; }

DivisorClass mumford_relation() {
  const SpaceId sp{2, 1};
  DivisorClass d(sp);
  d.add(BasisElement::lambda(), 1);
  d.add(BasisElement::delta_irr(), make_rational(-1, 10));
  for (const auto& b : boundary_indices(sp))
    if (b.i == 1) d.add(BasisElement::delta(b), make_rational(-1, 5));
  return d;
}

// Functionals D ↦ a(g′*D) for a vanishing on span{W₂, Mumford relation}.
RationalMatrix gprime_rows(int g, int n, const Readings& readings) {
  auto A = span_constraints({2, 1}, {weierstrass_class(2), mumford_relation()});
  return multiply(A, map_matrix(genus2_tail_pullback(g, n, readings)));
}

// W_g pulled back to M̄_{g,n} with its point at mark i.
DivisorClass pulled_back_w(int g, int n, int i) {
  DivisorClass d = weierstrass_class(g);
  for (int k = 2; k <= n; ++k) d = forgetful_pullback(g, k, k <= i ? 1 : k).apply(d);
  return d;
}

DivisorClass pulled_back_bn(int g, int n) {
  DivisorClass d = bn_class(g);
  for (int k = 1; k <= n; ++k) d = forgetful_pullback(g, k, k).apply(d);
  return d;
}

// The kernel projects isomorphically onto the λ, ω_i and δ_{0;{i,j}} coordinates.
Witness projection_witness(const ConstraintSystem& sys, const std::vector<DivisorClass>& kernel) {
  const SpaceId sp = sys.space();
  std::vector<std::size_t> cols;
  for (std::size_t k = 0; k < sys.basis().size(); ++k) {
    const auto& b = sys.basis()[k];
    if (b.kind == Kind::Lambda || b.kind == Kind::Omega ||
        (b.kind == Kind::Boundary && b.boundary.i == 0 && b.boundary.S.size() == 2))
      cols.push_back(k);
  }
  RationalMatrix m(0, sys.basis().size());
  for (const auto& d : kernel) m.append_row(coordinates(d, sys.basis()));
  const std::size_t r = rank(m.select_columns(cols));
  const bool ok = r == kernel.size() && cols.size() == kernel.size();
  return {"projection onto lambda, omega_i, delta0{i,j} on " + to_string(sp) + " is bijective",
          std::to_string(r) + " of " + std::to_string(cols.size()) + " columns", ok};
}

void finish(SubspaceCertificate& c, const ConstraintSystem& sys) {
  c.space = sys.space();
  c.blocks = sys.blocks();
  c.dim_pic = sys.basis().size();
  c.dimension = sys.dimension();
  c.kernel = sys.kernel_classes();
  bool ok = c.dimension == c.expected;
  for (const auto& w : c.witnesses) ok = ok && w.ok;
  if (c.dimension > c.expected)
    c.notes.push_back("constraint catalog leaves " + std::to_string(c.dimension - c.expected) +
                      " extra dimensions");
  c.pass = ok;
}

}  // namespace

ConstraintSystem::ConstraintSystem(SpaceId space)
    : space_(space), basis_(canonical_basis(space)), stacked_(0, basis_.size()) {
  echelon_.rref = RationalMatrix(0, basis_.size());
}

void ConstraintSystem::add_block(std::string tag, const RationalMatrix& rows) {
  if (rows.cols() != basis_.size()) throw SpaceMismatch("constraint block has the wrong width");
  const std::size_t before = rank();
  stacked_.append_rows(rows);
  RationalMatrix work = echelon_.rref;
  work.append_rows(rows);
  echelon_ = row_reduce(work);
  blocks_.push_back({std::move(tag), rows.rows(), rank() - before});
}

bool ConstraintSystem::satisfied_by(const DivisorClass& d) const {
  if (d.space() != space_) throw SpaceMismatch("class is not on " + to_string(space_));
  const auto v = coordinates(d, basis_);
  for (std::size_t r = 0; r < echelon_.rref.rows(); ++r)
    if (dot(echelon_.rref.row(r), v) != 0) return false;
  return true;
}

std::vector<DivisorClass> ConstraintSystem::kernel_classes() const {
  std::vector<DivisorClass> out;
  for (const auto& v : kernel(echelon_.rref))
    out.push_back(from_coordinates(space_, basis_, to_rational(v)));
  return out;
}

bool in_span_w2(const DivisorClass& d) {
  ConstraintSystem sys({2, 1});
  sys.add_block("span", span_constraints({2, 1}, {weierstrass_class(2), mumford_relation()}));
  return sys.satisfied_by(d);
}

RationalMatrix span_constraints(SpaceId space, const std::vector<DivisorClass>& classes) {
  const auto basis = canonical_basis(space);
  std::vector<RationalVector> vs;
  for (const auto& d : classes) vs.push_back(coordinates(d, basis));
  return RationalMatrix::from_rows(annihilator(vs, basis.size()), basis.size());
}

SubspaceCertificate bn_space_n1(int g, const Readings& readings) {
  if (g < 4) throw OutOfRange("bn_space_n1 needs g ≥ 4 (the genus-2-tail map needs g−2 ≥ 2)");
  const SpaceId sp{g, 1};
  SubspaceCertificate c;
  c.expected = 2;
  c.notes = readings.notes();
  ConstraintSystem sys(sp);

  const auto fp = elliptic_tails_pullback(g, readings);
  std::set<ThetaIndex> keys;
  for (const auto& [b, t] : fp.table())
    for (const auto& [k, v] : t.coeffs()) keys.insert(k);
  RationalMatrix frows(0, sys.basis().size());
  for (const auto& k : keys) {
    RationalVector row;
    for (const auto& b : sys.basis()) row.push_back(fp.table().at(b).coefficient(k));
    frows.append_row(row);
  }
  sys.add_block("fprime-theta", frows);
  const std::size_t f_kernel = sys.dimension();
  sys.add_block("gprime-span", gprime_rows(g, 1, readings));

  const DivisorClass w = weierstrass_class(g);
  const DivisorClass bn = pulled_back_bn(g, 1);
  const auto gp = genus2_tail_pullback(g, 1, readings);
  const auto theta = theta_rank_certificate(g, 1, readings);
  const Rational w_omega = w.coefficient(BasisElement::omega(1));
  const Rational bn_omega = bn.coefficient(BasisElement::omega(1));
  c.witnesses = {
      {"fprime kernel dimension", std::to_string(f_kernel), f_kernel == 4},
      {"W in kernel", yes_no(sys.satisfied_by(w)), sys.satisfied_by(w)},
      {"pi*BN in kernel", yes_no(sys.satisfied_by(bn)), sys.satisfied_by(bn)},
      {"fprime*(pi*BN) = 0", yes_no(fp.apply(bn).is_zero()), fp.apply(bn).is_zero()},
      {"gprime*(W) = W_2", yes_no(reduce_genus2(gp.apply(w)) == reduce_genus2(weierstrass_class(2))),
       reduce_genus2(gp.apply(w)) == reduce_genus2(weierstrass_class(2))},
      {"gprime*(pi*BN) in span W_2", yes_no(in_span_w2(gp.apply(bn))), in_span_w2(gp.apply(bn))},
      {"omega coefficient of W", to_string(w_omega), w_omega != 0},
      {"omega coefficient of pi*BN", to_string(bn_omega), bn_omega == 0},
      {"theta rank certificate",
       std::to_string(theta.rank) + "/" + std::to_string(theta.expected), theta.pass},
  };
  finish(c, sys);
  c.witnesses.push_back(projection_witness(sys, c.kernel));
  c.pass = c.pass && c.witnesses.back().ok;
  return c;
}

SubspaceCertificate bn_space_general(int g, int n, const Readings& readings, int max_n) {
  if (g < 4) throw OutOfRange("bn_space_general needs g ≥ 4");
  if (n < 2 || n > max_n)
    throw OutOfRange("bn_space_general needs 2 ≤ n ≤ " + std::to_string(max_n));
  const SpaceId sp{g, n};
  SubspaceCertificate c;
  c.expected = static_cast<std::size_t>(1 + n + n * (n - 1) / 2);
  c.notes = readings.notes();
  ConstraintSystem sys(sp);

  RationalMatrix erows(0, sys.basis().size());
  for (const auto& f : elliptic_catalog(g, n)) {
    const auto p = intersection_profile(forward_family(f, g, n));
    RationalVector row;
    for (const auto& b : sys.basis()) row.push_back(p.value(b));
    erows.append_row(row);
  }
  sys.add_block("elliptic-tails-pairing", erows);
  sys.add_block("gprime-span", gprime_rows(g, n, readings));

  const SubspaceCertificate lower =
      n == 2 ? bn_space_n1(g, readings) : bn_space_general(g, n - 1, readings, max_n);
  const auto lower_rows = span_constraints({g, n - 1}, lower.kernel);
  RationalMatrix brows(0, sys.basis().size());
  for (int i = 1; i <= n; ++i)
    for (int j = 1; j <= n; ++j)
      if (i != j)
        brows.append_rows(multiply(lower_rows, map_matrix(bubble_pullback(g, n - 1, i, j))));
  sys.add_block("bubble-membership", brows);

  const DivisorClass bn = pulled_back_bn(g, n);
  c.witnesses.push_back({"K_" + std::to_string(n - 1) + " certificate",
                         std::to_string(lower.dimension) + "/" + std::to_string(lower.expected),
                         lower.pass});
  c.witnesses.push_back({"lambda coefficient of BN", to_string(bn.coefficient(BasisElement::lambda())),
                         bn.coefficient(BasisElement::lambda()) != 0});
  c.witnesses.push_back({"pi*BN in kernel", yes_no(sys.satisfied_by(bn)), sys.satisfied_by(bn)});
  for (int i = 1; i <= n; ++i) {
    const DivisorClass w = pulled_back_w(g, n, i);
    const Rational om = w.coefficient(BasisElement::omega(i));
    c.witnesses.push_back({"omega_" + std::to_string(i) + " coefficient of pulled-back W",
                           to_string(om), om != 0});
    c.witnesses.push_back({"pulled-back W at mark " + std::to_string(i) + " in kernel",
                           yes_no(sys.satisfied_by(w)), sys.satisfied_by(w)});
  }
  if (g % 2 == 1) {
    const auto odd = odd_genus_pair_check(g);
    c.witnesses.push_back({"delta0{i,j} nonvanishing (A(g,1,3) vs 6g c_(g+1)/2)",
                           to_string(odd.lhs) + " vs " + to_string(odd.rhs), odd.nonzero});
  } else {
    const auto even = even_genus_pair_check(g);
    c.witnesses.push_back({"delta0{i,j} nonvanishing (A(g,2,3)+A(g,3,2) vs A(g,1,2)+A(g,1,4))",
                           to_string(even.lhs) + " vs " + to_string(even.rhs), even.nonzero});
  }
  finish(c, sys);
  c.witnesses.push_back(projection_witness(sys, c.kernel));
  c.pass = c.pass && c.witnesses.back().ok;
  return c;
}

ShowtrivResult showtriv_propagate(int n, const std::map<MarkSet, Rational>& pair_coeffs) {
  if (n < 2 || n > 20) throw OutOfRange("showtriv_propagate needs 2 ≤ n ≤ 20");
  ShowtrivResult out;
  for (MarkSet S : subsets_of_size(n, 2)) {
    auto it = pair_coeffs.find(S);
    if (it == pair_coeffs.end()) throw OutOfRange("missing coefficient for " + to_string(S));
    out.values[S] = it->second;
  }
  for (const auto& [S, v] : pair_coeffs)
    if (S.size() != 2 || !S.subset_of(MarkSet::all(n)))
      throw OutOfRange(to_string(S) + " is not a 2-subset of {1.." + std::to_string(n) + "}");
  for (int k = 3; k <= n; ++k) {
    for (MarkSet S : subsets_of_size(n, k)) {
      Rational sum = 0;
      for (int x : S.marks()) sum += out.values.at(S.without(x));
      out.values[S] = sum / (k - 2);
    }
  }
  // The relations form a triangular system in the unknowns |S| ≥ 3: unique
  // exactly when it has full column rank.  Also confirm the values solve it.
  std::vector<MarkSet> unknowns;
  for (int k = 3; k <= n; ++k)
    for (MarkSet S : subsets_of_size(n, k)) unknowns.push_back(S);
  std::map<MarkSet, std::size_t> column;
  for (std::size_t c = 0; c < unknowns.size(); ++c) column[unknowns[c]] = c;
  RationalMatrix relations(0, unknowns.size());
  bool solves = true;
  for (MarkSet S : unknowns) {
    RationalVector row(unknowns.size());
    Rational residual = Rational(2 - S.size()) * out.values.at(S);
    row[column.at(S)] = 2 - S.size();
    for (int x : S.marks()) {
      const MarkSet T = S.without(x);
      residual += out.values.at(T);
      if (T.size() >= 3) row[column.at(T)] += 1;
    }
    solves = solves && residual == 0;
    relations.append_row(row);
  }
  out.unique = solves && rank(relations) == unknowns.size();
  return out;
}

ThetaRankCertificate theta_rank_certificate(int g, int n, const Readings& readings) {
  if (g < 4) throw OutOfRange("theta_rank_certificate needs g ≥ 4");
  if (n != 1 && n != 2) throw OutOfRange("theta_rank_certificate supports n = 1 or 2");
  ThetaRankCertificate c;
  c.g = g;
  c.n = n;
  c.notes = readings.notes();
  const int shift = readings.theta_shift(g, n);
  const auto fams = n == 1 ? theta_catalog(g) : elliptic_catalog(g, n);
  c.families = fams.size();
  std::vector<ThetaClass> cols;
  const int top = n == 1 ? readings.theta_top(g) : g - 1;
  c.expected = static_cast<std::size_t>(top);
  try {
    for (int i = 1; i <= top; ++i) {
      ThetaClass t(g, n, shift);
      t.add(i, MarkSet{1}, 1);
      cols.push_back(t);
    }
  } catch (const InvalidBoundary& e) {
    c.notes.push_back(e.what());
    return c;
  }
  c.rank = rank(pairing_matrix(fams, cols));

  std::vector<ThetaClass> all;
  std::set<ThetaIndex> seen;
  for (int i = 0; i <= g; ++i)
    for (int k = 0; k <= n; ++k)
      for (MarkSet S : subsets_of_size(n, k)) {
        if (!is_valid_theta(g, n, i, S)) continue;
        ThetaClass t(g, n, shift);
        t.add(i, S, 1);
        if (seen.insert(t.coeffs().begin()->first).second) all.push_back(t);
      }
  c.all_columns = all.size();
  c.all_columns_rank = rank(pairing_matrix(fams, all));
  c.pass = c.rank == c.expected;
  return c;
}

nlohmann::ordered_json to_json(const SubspaceCertificate& c) {
  nlohmann::ordered_json doc;
  doc["g"] = c.space.g;
  doc["n"] = c.space.n;
  doc["dim_pic"] = c.dim_pic;
  doc["blocks"] = nlohmann::ordered_json::array();
  std::size_t total = 0;
  for (const auto& b : c.blocks) {
    doc["blocks"].push_back({{"tag", b.tag}, {"rows", b.rows}, {"rank_added", b.rank_added}});
    total += b.rank_added;
  }
  doc["rank"] = total;
  doc["dimension"] = c.dimension;
  doc["expected"] = c.expected;
  doc["pass"] = c.pass;
  doc["witnesses"] = nlohmann::ordered_json::array();
  for (const auto& w : c.witnesses)
    doc["witnesses"].push_back({{"name", w.name}, {"value", w.value}, {"ok", w.ok}});
  doc["notes"] = c.notes;
  doc["kernel"] = nlohmann::ordered_json::array();
  for (const auto& d : c.kernel) doc["kernel"].push_back(to_json(d));
  return doc;
}

nlohmann::ordered_json to_json(const ThetaRankCertificate& c) {
  nlohmann::ordered_json doc;
  doc["g"] = c.g;
  doc["n"] = c.n;
  doc["families"] = c.families;
  doc["rank"] = c.rank;
  doc["expected"] = c.expected;
  doc["all_columns"] = c.all_columns;
  doc["all_columns_rank"] = c.all_columns_rank;
  doc["pass"] = c.pass;
  doc["notes"] = c.notes;
  return doc;
}

}  // namespace modpic
