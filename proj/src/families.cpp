#include "modpic/families.hpp"

#include <numeric>

#include "modpic/errors.hpp"

namespace modpic {

// ---------------------------------------------------------------- trees

int ComponentTree::valence(int component) const {
  int v = 0;
  for (const auto& [a, b] : edges) v += (a == component) + (b == component);
  return v;
}

void ComponentTree::validate() const {
  ambient.validate();
  const int count = static_cast<int>(components.size());
  if (count == 0) throw InvalidFamily("tree has no components");
  if (static_cast<int>(edges.size()) != count - 1)
    throw InvalidFamily("a tree on " + std::to_string(count) + " components has " +
                        std::to_string(count - 1) + " edges");
  std::vector<int> parent(static_cast<std::size_t>(count));
  std::iota(parent.begin(), parent.end(), 0);
  auto find = [&parent](int x) {
    while (parent[static_cast<std::size_t>(x)] != x) x = parent[static_cast<std::size_t>(x)];
    return x;
  };
  for (const auto& [a, b] : edges) {
    if (a < 0 || b < 0 || a >= count || b >= count || a == b)
      throw InvalidFamily("edge endpoints out of range");
    int ra = find(a), rb = find(b);
    if (ra == rb) throw InvalidFamily("component graph has a cycle (non-separating node)");
    parent[static_cast<std::size_t>(ra)] = rb;
  }
  int genus = 0;
  MarkSet seen;
  for (int c = 0; c < count; ++c) {
    const auto& comp = components[static_cast<std::size_t>(c)];
    if (comp.genus < 0) throw InvalidFamily("negative component genus");
    if ((comp.marks & seen) != MarkSet{}) throw InvalidFamily("a mark sits on two components");
    seen = seen | comp.marks;
    genus += comp.genus;
    if (2 * comp.genus - 2 + comp.marks.size() + valence(c) <= 0)
      throw InvalidFamily("component " + std::to_string(c) + " is unstable");
  }
  if (genus != ambient.g)
    throw InvalidFamily("component genera sum to " + std::to_string(genus) + ", ambient genus is " +
                        std::to_string(ambient.g));
  if (seen != ambient.marks()) throw InvalidFamily("marks do not partition {1..n}");
}

std::pair<int, MarkSet> ComponentTree::branch(int start, int blocked) const {
  int genus = 0;
  MarkSet marks;
  std::vector<int> stack{start};
  std::vector<bool> visited(components.size(), false);
  visited[static_cast<std::size_t>(start)] = true;
  if (blocked >= 0) visited[static_cast<std::size_t>(blocked)] = true;
  while (!stack.empty()) {
    int c = stack.back();
    stack.pop_back();
    genus += components[static_cast<std::size_t>(c)].genus;
    marks = marks | components[static_cast<std::size_t>(c)].marks;
    for (const auto& [a, b] : edges) {
      for (auto [u, v] : {std::pair{a, b}, std::pair{b, a}}) {
        if (u == c && !visited[static_cast<std::size_t>(v)]) {
          visited[static_cast<std::size_t>(v)] = true;
          stack.push_back(v);
        }
      }
    }
  }
  return {genus, marks};
}

void TestFamily::validate() const {
  tree.validate();
  if (base < 0 || base >= static_cast<int>(tree.components.size()))
    throw InvalidFamily("base component out of range");
  if (tree.components[static_cast<std::size_t>(base)].genus != 0)
    throw InvalidFamily("the base component must be rational");
  if (moving.kind == MovingPoint::Kind::Mark) {
    if (!tree.components[static_cast<std::size_t>(base)].marks.contains(moving.index))
      throw InvalidFamily("moving mark " + std::to_string(moving.index) +
                          " is not on the base component");
  } else {
    if (moving.index < 0 || moving.index >= static_cast<int>(tree.edges.size()))
      throw InvalidFamily("moving node end refers to a missing edge");
    const auto& [a, b] = tree.edges[static_cast<std::size_t>(moving.index)];
    if (a != base && b != base) throw InvalidFamily("moving node end is not on the base component");
  }
}

// ---------------------------------------------------------------- engine

namespace {

struct Special {
  MovingPoint point;
  int genus;      // genus carried by this special point's side
  MarkSet marks;  // marks carried by this special point's side
};

std::vector<Special> specials_of_base(const TestFamily& f) {
  std::vector<Special> out;
  const auto& comp = f.tree.components[static_cast<std::size_t>(f.base)];
  for (int m : comp.marks.marks()) out.push_back({MovingPoint::mark(m), 0, MarkSet{m}});
  for (int e = 0; e < static_cast<int>(f.tree.edges.size()); ++e) {
    const auto& [a, b] = f.tree.edges[static_cast<std::size_t>(e)];
    if (a != f.base && b != f.base) continue;
    int other = a == f.base ? b : a;
    auto [genus, marks] = f.tree.branch(other, f.base);
    out.push_back({MovingPoint::node(e), genus, marks});
  }
  return out;
}

void bump(std::map<BoundaryIndex, Integer>& m, const BoundaryIndex& b, const Integer& v) {
  if (v == 0) return;
  auto& slot = m[b];
  slot += v;
  if (slot == 0) m.erase(b);
}

}  // namespace

IntersectionProfile intersection_profile(const TestFamily& f) {
  f.validate();
  IntersectionProfile out{f.ambient(), {}, {}};
  const auto specials = specials_of_base(f);
  // Three special points: the base has no moduli and the family is constant.
  if (specials.size() <= 3) return out;
  const long events = static_cast<long>(specials.size()) - 1;

  const Special* mover = nullptr;
  for (const auto& s : specials)
    if (s.point == f.moving) mover = &s;

  // Transverse events: the moving point bubbles off together with another
  // special point of the base.
  for (const auto& s : specials) {
    if (&s == mover) continue;
    auto b = try_canonical_boundary(f.ambient(), mover->genus + s.genus, mover->marks | s.marks);
    if (!b) throw InvalidFamily("collision produces an unstable node");
    bump(out.boundary, *b, 1);
  }

  // Persistent nodes: normal bundle degree σ²_A + σ²_B of the branch sections.
  for (int e = 0; e < static_cast<int>(f.tree.edges.size()); ++e) {
    const auto& [a, b] = f.tree.edges[static_cast<std::size_t>(e)];
    if (a != f.base && b != f.base) continue;
    const bool is_mover = f.moving == MovingPoint::node(e);
    const Integer self = is_mover ? Integer(2 - events) : Integer(-1);
    auto [genus, marks] = f.tree.branch(b, a);
    bump(out.boundary, canonical_boundary(f.ambient(), genus, marks), self);
  }

  for (const auto& s : specials) {
    if (s.point.kind != MovingPoint::Kind::Mark) continue;
    Integer v = (&s == mover) ? Integer(events - 2) : Integer(1);
    if (v != 0) out.psi[s.point.index] = v;
  }
  return out;
}

Integer IntersectionProfile::value(const BasisElement& b) const {
  switch (b.kind) {
    case Kind::Lambda:
    case Kind::DeltaIrr:
      return 0;
    case Kind::Psi: {
      auto it = psi.find(b.mark);
      return it == psi.end() ? Integer(0) : it->second;
    }
    case Kind::Omega: {
      if (ambient.g < 1) throw InvalidMark("omega classes need g ≥ 1");
      auto it = psi.find(b.mark);
      Integer v = it == psi.end() ? Integer(0) : it->second;
      for (const auto& [idx, x] : boundary)
        if (idx.i == 0 && idx.S.contains(b.mark)) v -= x;
      return v;
    }
    case Kind::Boundary: {
      auto c = canonical_boundary(ambient, b.boundary.i, b.boundary.S);
      auto it = boundary.find(c);
      return it == boundary.end() ? Integer(0) : it->second;
    }
  }
  return 0;
}

Integer intersect(const TestFamily& f, const BasisElement& b) {
  return intersection_profile(f).value(b);
}

Rational pair(const IntersectionProfile& p, const DivisorClass& d) {
  if (p.ambient != d.space())
    throw SpaceMismatch("family lives on " + to_string(p.ambient) + ", class on " +
                        to_string(d.space()));
  Rational s = 0;
  for (const auto& [b, c] : d.terms()) s += c * p.value(b);
  return s;
}

Rational pair(const TestFamily& f, const DivisorClass& d) {
  return pair(intersection_profile(f), d);
}

Rational pair(const IntersectionProfile& p, const ThetaClass& t) {
  if (p.ambient != t.ambient())
    throw SpaceMismatch("family lives on " + to_string(p.ambient) + ", theta class on " +
                        to_string(t.ambient()));
  Rational s = 0;
  for (const auto& [idx, v] : p.boundary) s += v * t.coefficient_of_boundary(idx.S);
  return s;
}

Rational pair(const TestFamily& f, const ThetaClass& t) {
  return pair(intersection_profile(f), t);
}

RationalMatrix pairing_matrix(const std::vector<TestFamily>& fams,
                              const std::vector<DivisorClass>& classes) {
  RationalMatrix m(0, classes.size());
  for (const auto& f : fams) {
    auto p = intersection_profile(f);
    RationalVector row;
    for (const auto& d : classes) row.push_back(pair(p, d));
    m.append_row(row);
  }
  return m;
}

RationalMatrix pairing_matrix(const std::vector<TestFamily>& fams,
                              const std::vector<ThetaClass>& classes) {
  RationalMatrix m(0, classes.size());
  for (const auto& f : fams) {
    auto p = intersection_profile(f);
    RationalVector row;
    for (const auto& t : classes) row.push_back(pair(p, t));
    m.append_row(row);
  }
  return m;
}

// ---------------------------------------------------------------- builders

TestFamily fiber_family(int m, int k) {
  if (m < 4) throw OutOfRange("fiber_family needs m ≥ 4");
  if (k < 1 || k > m) throw InvalidMark("moving mark outside 1..m");
  TestFamily f{{{0, m}, {{0, MarkSet::all(m)}}, {}}, 0, MovingPoint::mark(k),
               "fiber(pi_" + std::to_string(k) + ")"};
  f.validate();
  return f;
}

TestFamily two_component_family(SpaceId ambient, Component base, Component other,
                                MovingPoint moving) {
  if (moving.kind == MovingPoint::Kind::Mark && !base.marks.contains(moving.index))
    throw InvalidFamily("moving mark is not on the base component");
  TestFamily f{{ambient, {base, other}, {{0, 1}}}, 0, moving, {}};
  f.label = "two(" + to_string(base.marks) + "|" + to_string(other.marks) + ", moving " +
            (moving.kind == MovingPoint::Kind::Mark ? std::to_string(moving.index) : "node") + ")";
  f.validate();
  return f;
}

TestFamily attach_family(MarkSet S, int genus, MarkSet fixed_marks) {
  if (S.size() < 2) throw InvalidFamily("attach_family needs |S| ≥ 2");
  if ((S & fixed_marks) != MarkSet{}) throw InvalidFamily("S and the fixed marks overlap");
  const MarkSet all = S | fixed_marks;
  SpaceId ambient{genus, all.max()};
  if (all != ambient.marks()) throw InvalidFamily("marks must be exactly 1..n");
  TestFamily f{{ambient, {{0, S}, {genus, fixed_marks}}, {{0, 1}}}, 0, MovingPoint::node(0),
               "attach(" + to_string(S) + ")"};
  f.validate();
  return f;
}

std::vector<TestFamily> theta_catalog(int g) {
  if (g < 3) throw OutOfRange("theta_catalog needs g ≥ 3");
  const int m = g + 1;
  std::vector<TestFamily> out{fiber_family(m, m), fiber_family(m, 1)};
  for (int i = 2; i < g - 2; ++i) {
    out.push_back(two_component_family({0, m}, {0, MarkSet::interval(1, i).with(m)},
                                       {0, MarkSet::interval(i + 1, g)}, MovingPoint::mark(1)));
  }
  return out;
}

std::vector<TestFamily> elliptic_catalog(int g, int n) {
  if (g < 1 || n < 1) throw OutOfRange("elliptic_catalog needs g ≥ 1, n ≥ 1");
  const int m = g + n;
  const SpaceId ambient{0, m};
  const MarkSet real = MarkSet::interval(g + 1, m);
  std::vector<TestFamily> out;
  if (m >= 4) {
    out.push_back(fiber_family(m, 1));
    for (int r : real.marks()) out.push_back(fiber_family(m, r));
  }
  for (int a = 0; a <= g; ++a) {
    for (int k = 0; k <= n; ++k) {
      for (MarkSet P0 : subsets_of_size(n, k)) {
        MarkSet P;
        for (int x : P0.marks()) P = P.with(x + g);
        const MarkSet on_base = MarkSet::interval(1, a) | P;
        const MarkSet on_other = MarkSet::interval(a + 1, g) | (real - P);
        if (on_base.size() + 1 < 4 || on_other.size() + 1 < 3) continue;
        std::vector<MovingPoint> movers{MovingPoint::node(0)};
        if (a >= 1) movers.push_back(MovingPoint::mark(1));
        for (int x : P.marks()) movers.push_back(MovingPoint::mark(x));
        for (const auto& mv : movers)
          out.push_back(two_component_family(ambient, {0, on_base}, {0, on_other}, mv));
      }
    }
  }
  return out;
}

TestFamily forward_family(const TestFamily& f, int g, int n) {
  f.validate();
  if (f.ambient() != SpaceId{0, g + n})
    throw SpaceMismatch("forward_family expects a family on M̄_{0," + std::to_string(g + n) + "}");
  TestFamily out;
  out.tree.ambient = {g, n};
  out.base = f.base;
  out.label = "fwd " + f.label;
  for (const auto& c : f.tree.components) {
    MarkSet marks;
    for (int x : c.marks.marks())
      if (x > g) marks = marks.with(x - g);
    out.tree.components.push_back({c.genus, marks});
  }
  out.tree.edges = f.tree.edges;
  out.moving = f.moving;
  for (int c = 0; c < static_cast<int>(f.tree.components.size()); ++c) {
    for (int t : f.tree.components[static_cast<std::size_t>(c)].marks.marks()) {
      if (t > g) continue;
      out.tree.components.push_back({1, {}});
      out.tree.edges.emplace_back(c, static_cast<int>(out.tree.components.size()) - 1);
      if (f.moving == MovingPoint::mark(t))
        out.moving = MovingPoint::node(static_cast<int>(out.tree.edges.size()) - 1);
    }
  }
  if (f.moving.kind == MovingPoint::Kind::Mark && f.moving.index > g)
    out.moving = MovingPoint::mark(f.moving.index - g);
  out.validate();
  return out;
}

Rational forward_pair(const TestFamily& f, const DivisorClass& d) {
  const SpaceId sp = d.space();
  if (f.ambient() != SpaceId{0, sp.g + sp.n})
    throw SpaceMismatch("family on " + to_string(f.ambient()) + " does not map to " +
                        to_string(sp));
  return pair(forward_family(f, sp.g, sp.n), d);
}

}  // namespace modpic
