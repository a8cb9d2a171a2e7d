#include "modpic/verify.hpp"

#include <atomic>
#include <chrono>
#include <charconv>
#include <cstdlib>
#include <functional>
#include <sstream>
#include <thread>

#include "modpic/counting.hpp"
#include "modpic/errors.hpp"
#include "modpic/families.hpp"
#include "modpic/maps.hpp"
#include "modpic/subspace.hpp"

namespace modpic {

using nlohmann::ordered_json;

Range parse_range(std::string_view text) {
  auto to_int = [&](std::string_view s) {
    int v = 0;
    auto [p, ec] = std::from_chars(s.data(), s.data() + s.size(), v);
    if (s.empty() || ec != std::errc{} || p != s.data() + s.size())
      throw UsageError("bad range '" + std::string(text) + "'");
    return v;
  };
  Range r;
  auto dots = text.find("..");
  if (dots == std::string_view::npos) {
    r.lo = r.hi = to_int(text);
  } else {
    r.lo = to_int(text.substr(0, dots));
    r.hi = to_int(text.substr(dots + 2));
  }
  if (r.lo > r.hi) throw UsageError("empty range '" + std::string(text) + "'");
  return r;
}

unsigned default_jobs() {
  if (const char* env = std::getenv("MODPIC_JOBS")) {
    unsigned v = 0;
    std::string_view s(env);
    auto [p, ec] = std::from_chars(s.data(), s.data() + s.size(), v);
    if (ec == std::errc{} && p == s.data() + s.size() && v > 0) return v;
  }
  return 1;
}

const std::vector<std::string>& suite_names() {
  static const std::vector<std::string> names{"map-identities", "kernel-n1",  "theta-rank",
                                              "subspace-dim",   "pair-coeff", "counts",
                                              "plucker",        "engine-goldens", "all"};
  return names;
}

namespace {

using Cell = std::function<std::vector<CheckReport>()>;

CheckReport report(std::string check, ordered_json params, std::string expected,
                   std::string computed) {
  CheckReport r;
  r.check = std::move(check);
  r.params = std::move(params);
  r.pass = expected == computed;
  r.expected = std::move(expected);
  r.computed = std::move(computed);
  return r;
}

ordered_json at_g(int g) { return {{"g", g}}; }
ordered_json at_gn(int g, int n) { return {{"g", g}, {"n", n}}; }

std::string show(const DivisorClass& d) { return d.is_zero() ? "0" : to_string(d); }
std::string show(const ThetaClass& t) { return t.is_zero() ? "0" : to_string(t); }

std::vector<int> values(const std::optional<Range>& r, Range fallback) {
  Range x = r.value_or(fallback);
  std::vector<int> out;
  for (int v = x.lo; v <= x.hi; ++v) out.push_back(v);
  return out;
}

// ---------------------------------------------------------------- suites

std::vector<CheckReport> map_identities(int g, const Readings& R) {
  std::vector<CheckReport> out;
  if (g < 3) return out;
  const DivisorClass w = weierstrass_class(g);
  const DivisorClass bn = forgetful_pullback(g, 1, 1).apply(bn_class(g));
  const auto fp = elliptic_tails_pullback(g, R);
  out.push_back(report("fprime-w", at_g(g), "0", show(fp.apply(w))));
  out.push_back(report("fprime-pi-bn", at_g(g), "0", show(fp.apply(bn))));

  std::size_t checked = 0, mismatches = 0;
  for (const auto& f : elliptic_catalog(g, 1)) {
    const auto forward = intersection_profile(forward_family(f, g, 1));
    const auto profile = intersection_profile(f);
    for (const auto& b : canonical_basis({g, 1})) {
      ++checked;
      if (Rational(forward.value(b)) != pair(profile, fp.table().at(b))) ++mismatches;
    }
  }
  out.push_back(report("fprime-cross-oracle", at_g(g), "0 mismatches",
                       std::to_string(mismatches) + " mismatches"));
  out.back().notes.push_back(std::to_string(checked) + " family/basis pairs");

  if (g >= 4) {
    const auto gp = genus2_tail_pullback(g, 1, R);
    const DivisorClass w2 = reduce_genus2(weierstrass_class(2));
    out.push_back(report("gprime-w", at_g(g), show(w2), show(reduce_genus2(gp.apply(w)))));
    const DivisorClass image = reduce_genus2(gp.apply(bn));
    out.push_back(report("gprime-pi-bn", at_g(g), show(make_rational(2 * (g - 2), 3) * w2),
                         show(image)));
    out.push_back(report("gprime-pi-bn-in-span", at_g(g), "in span{W_2}",
                         in_span_w2(image) ? "in span{W_2}" : "not in span{W_2}"));
  }
  return out;
}

std::vector<CheckReport> subspace_check(const SubspaceCertificate& c, const std::string& name) {
  auto r = report(name, at_gn(c.space.g, c.space.n), std::to_string(c.expected),
                  std::to_string(c.dimension));
  r.pass = r.pass && c.pass;
  for (const auto& w : c.witnesses)
    if (!w.ok) r.notes.push_back("witness failed: " + w.name + " = " + w.value);
  for (const auto& b : c.blocks)
    r.notes.push_back(b.tag + ": " + std::to_string(b.rows) + " rows, rank +" +
                      std::to_string(b.rank_added));
  return {r};
}

std::vector<CheckReport> theta_rank(int g, int n, const Readings& R) {
  const auto c = theta_rank_certificate(g, n, R);
  auto r = report("theta-rank", at_gn(g, n), std::to_string(c.expected), std::to_string(c.rank));
  r.pass = r.pass && c.pass;
  r.notes.push_back(std::to_string(c.families) + " families");
  if (n == 2)
    r.notes.push_back("all theta columns: rank " + std::to_string(c.all_columns_rank) + " of " +
                      std::to_string(c.all_columns));
  for (std::size_t k = R.notes().size(); k < c.notes.size(); ++k) r.notes.push_back(c.notes[k]);
  return {r};
}

std::vector<CheckReport> showtriv_checks() {
  std::vector<CheckReport> out;
  auto pairs = [](int n, auto value) {
    std::map<MarkSet, Rational> m;
    for (MarkSet S : subsets_of_size(n, 2)) m[S] = value(S);
    return m;
  };
  auto r1 = showtriv_propagate(3, pairs(3, [](MarkSet) { return Rational(1); }));
  out.push_back(report("showtriv-all-ones", {{"n", 3}}, "d{1,2,3}=3",
                       "d{1,2,3}=" + to_string(r1.values.at({1, 2, 3}))));
  auto r2 = showtriv_propagate(4, pairs(4, [](MarkSet) { return Rational(0); }));
  bool all_zero = true;
  for (const auto& [S, v] : r2.values) all_zero = all_zero && v == 0;
  out.push_back(report("showtriv-zero", {{"n", 4}}, "all zero", all_zero ? "all zero" : "nonzero"));
  auto r3 = showtriv_propagate(
      4, pairs(4, [](MarkSet S) { return Rational(S == MarkSet{1, 2} ? 1 : 0); }));
  out.push_back(report("showtriv-indicator", {{"n", 4}}, "d{1,2,3}=1 d{1,3,4}=0 d{1,2,3,4}=1",
                       "d{1,2,3}=" + to_string(r3.values.at({1, 2, 3})) +
                           " d{1,3,4}=" + to_string(r3.values.at({1, 3, 4})) +
                           " d{1,2,3,4}=" + to_string(r3.values.at({1, 2, 3, 4}))));
  bool unique = r1.unique && r2.unique && r3.unique;
  for (int n = 2; n <= 7; ++n)
    unique = unique && showtriv_propagate(n, pairs(n, [](MarkSet S) {
                                            return Rational(S.max() * S.max() - S.bits() % 7);
                                          })).unique;
  out.push_back(report("showtriv-unique", {{"n", "2..7"}}, "unique", unique ? "unique" : "not unique"));
  return out;
}

std::vector<CheckReport> pair_coeff(int g) {
  if (g % 2 == 1 && g >= 3) {
    const auto c = odd_genus_pair_check(g);
    auto r = report("odd-pair-coeff", at_g(g), "nonzero", c.nonzero ? "nonzero" : "zero");
    r.notes.push_back("A(g,1,3)=" + to_string(c.lhs) + " 6g*c=" + to_string(c.rhs) +
                      " K=" + to_string(c.scale));
    return {r};
  }
  if (g % 2 == 0 && g >= 4) {
    const auto c = even_genus_pair_check(g);
    auto r = report("even-pair-coeff", at_g(g), "nonzero", c.nonzero ? "nonzero" : "zero");
    r.notes.push_back("lhs=" + to_string(c.lhs) + " rhs=" + to_string(c.rhs) +
                      " difference=" + to_string(c.difference));
    return {r};
  }
  return {};
}

std::vector<CheckReport> count_values() {
  std::vector<CheckReport> out;
  struct Case {
    long g, m, n;
    const char* value;
  };
  for (const auto& c : {Case{5, 1, 3, "120"}, Case{4, 2, 3, "96"}, Case{4, 3, 2, "36"},
                        Case{4, 1, 2, "24"}, Case{4, 1, 4, "60"}})
    out.push_back(report("a-count", {{"g", c.g}, {"m", c.m}, {"n", c.n}}, c.value,
                         to_string(a_count(c.g, c.m, c.n))));
  std::string parity = "no error";
  try {
    a_count(4, 1, 3);
  } catch (const ParityError&) {
    parity = "ParityError";
  }
  out.push_back(report("a-count-parity", {{"g", 4}, {"m", 1}, {"n", 3}}, "ParityError", parity));
  return out;
}

std::vector<CheckReport> count_identities(int g) {
  std::vector<CheckReport> out;
  if (g % 2 == 1 && g >= 3) {
    out.push_back(report("a-count-g13", at_g(g), to_string(Integer(Integer(24) * binomial(g, (g + 3) / 2))),
                         to_string(a_count(g, 1, 3))));
    const auto c = odd_genus_pair_check(g);
    out.push_back(report("odd-reduction", at_g(g),
                         std::to_string((g - 1) * (g + 1)) + " vs " + std::to_string(g * (g + 1)),
                         to_string(Rational(c.lhs) * c.scale) + " vs " +
                             to_string(Rational(c.rhs) * c.scale)));
    out.push_back(report("odd-nonzero", at_g(g), "nonzero", c.nonzero ? "nonzero" : "zero"));
  } else if (g % 2 == 0 && g >= 4) {
    const auto c = even_genus_pair_check(g);
    const Rational expected(48 * factorial(g), factorial(g / 2 - 1) * factorial(g / 2 + 2));
    out.push_back(report("even-difference", at_g(g), to_string(make_rational(
                                                         expected.get_num(), expected.get_den())),
                         to_string(c.difference)));
    out.push_back(report("even-nonzero", at_g(g), "nonzero", c.nonzero ? "nonzero" : "zero"));
  }
  return out;
}

std::vector<CheckReport> plucker_fixed() {
  std::vector<CheckReport> out;
  out.push_back(report("plucker-total", {{"g", 3}, {"r", 1}, {"d", 2}}, "8",
                       to_string(plucker_total(3, 1, 2))));
  out.push_back(report("catalan", {{"k", "0,3,6"}}, "1,5,132",
                       to_string(catalan(0)) + "," + to_string(catalan(3)) + "," +
                           to_string(catalan(6))));
  out.push_back(report("beta-weight", {{"z", "(0,0),(0,1),(1,2,3)"}}, "0,1,6",
                       std::to_string(beta_weight({{0, 0}})) + "," +
                           std::to_string(beta_weight({{0, 1}})) + "," +
                           std::to_string(beta_weight({{1, 2, 3}}))));
  return out;
}

// A sequence of length r+1 with weight w, or nothing if none fits d.
std::optional<RamificationSeq> sequence_of_weight(long r, long d, long w) {
  if (w < 0 || w > (r + 1) * (d - r)) return std::nullopt;
  RamificationSeq z{std::vector<long>(static_cast<std::size_t>(r + 1), 0)};
  for (long k = r; k >= 0 && w > 0; --k) {
    long take = std::min(w, d - r);
    z.z[static_cast<std::size_t>(k)] = take;
    w -= take;
  }
  return z;
}

std::vector<CheckReport> plucker_identities(int g) {
  std::vector<CheckReport> out;
  long bad_two = 0, bad_slack = 0, bad_budget = 0, cases = 0;
  for (long r = 1; r <= 20; ++r)
    for (long d = 1; d <= 20; ++d) {
      const Integer spine = Integer(r + 1) * Integer(2 * d + r * (g - 2)) - Integer((r + 1) * (d - r));
      if (spine != plucker_total(g, r, d)) ++bad_two;
      if ((r + 1) * (d - r) - g * r != SeriesParams{g, r, d}.slack()) ++bad_slack;
    }
  out.push_back(report("plucker-two-component", at_g(g), "0 failures", std::to_string(bad_two) + " failures"));
  out.push_back(report("slack-identity", at_g(g), "0 failures", std::to_string(bad_slack) + " failures"));
  for (long r = 1; r <= 4; ++r)
    for (long d = r; d <= g + r + 6; ++d) {
      SeriesParams p{g, r, d};
      const long a = p.slack();
      if (a < -5 || a > 5) continue;
      if (auto z = sequence_of_weight(r, d, a + 1)) {
        ++cases;
        auto f = elliptic_tail_feasible(p, {*z});
        if (f.feasible || f.slack != -1) ++bad_budget;
      }
      if (a >= 0) {
        auto f = elliptic_tail_feasible(p, {});
        if (!f.feasible || f.slack != a) ++bad_budget;
      }
    }
  auto r = report("elliptic-tail-budget", at_g(g), "0 failures", std::to_string(bad_budget) + " failures");
  r.notes.push_back(std::to_string(cases) + " divisorial cases");
  out.push_back(r);
  if (g % 2 == 1 && g >= 3)
    out.push_back(report("residual-ramification", at_g(g), std::to_string(3 * g),
                         to_string(Integer(plucker_total(g, 1, (g + 3) / 2) - 1))));
  return out;
}

std::vector<CheckReport> engine_goldens(int g) {
  std::vector<CheckReport> out;
  if (g < 3) return out;
  long failures = 0, checks = 0;
  for (int s = 2; s <= 6; ++s)
    for (int extra = 0; extra <= 1; ++extra) {
      const MarkSet S = MarkSet::interval(1, s);
      const MarkSet fixed = extra ? MarkSet{s + 1} : MarkSet{};
      const auto p = intersection_profile(attach_family(S, g, fixed));
      const SpaceId sp = p.ambient;
      auto val = [&](MarkSet T) { return p.value(BasisElement::delta(canonical_boundary(sp, 0, T))); };
      ++checks;
      failures += val(S) != 2 - s;
      if (s >= 3)
        for (int x : S.marks()) {
          ++checks;
          failures += val(S.without(x)) != 1;
        }
      for (int i : S.marks()) {
        ++checks;
        failures += p.value(BasisElement::omega(i)) != 0;
      }
    }
  out.push_back(report("attach-goldens", at_g(g), "0 failures",
                       std::to_string(failures) + " failures"));
  out.back().notes.push_back(std::to_string(checks) + " values");

  const auto fiber = fiber_family(g + 1, g + 1);
  ThetaClass theta1(g, 1, g);
  theta1.add(1, MarkSet{1}, 1);
  out.push_back(report("fiber-theta1", at_g(g), std::to_string(g), to_string(pair(fiber, theta1))));
  out.push_back(report("fiber-psi", at_g(g), std::to_string(g - 2),
                       to_string(intersect(fiber, BasisElement::psi(g + 1)))));

  long nonzero = 0;
  for (const auto& f : elliptic_catalog(g, 1)) {
    const auto p = intersection_profile(forward_family(f, g, 1));
    nonzero += p.value(BasisElement::lambda()) != 0 || p.value(BasisElement::delta_irr()) != 0;
  }
  out.push_back(report("catalog-lambda-delta0", at_g(g), "0 nonzero", std::to_string(nonzero) + " nonzero"));
  return out;
}

// ---------------------------------------------------------------- runner

void add_suite(std::string_view suite, const VerifyOptions& o, std::vector<Cell>& cells) {
  const Readings R = o.readings;
  if (suite == "map-identities") {
    for (int g : values(o.g, {3, 40})) cells.push_back([g, R] { return map_identities(g, R); });
  } else if (suite == "kernel-n1") {
    for (int g : values(o.g, {4, 30}))
      cells.push_back([g, R] { return subspace_check(bn_space_n1(g, R), "kernel-n1"); });
  } else if (suite == "theta-rank") {
    for (int n : values(o.n, {1, 2}))
      for (int g : values(o.g, n == 1 ? Range{4, 30} : Range{4, 15}))
        cells.push_back([g, n, R] { return theta_rank(g, n, R); });
  } else if (suite == "subspace-dim") {
    for (int n : values(o.n, {2, 3}))
      for (int g : values(o.g, n <= 2 ? Range{4, 15} : Range{4, 10}))
        cells.push_back([g, n, R] {
          return n == 1 ? subspace_check(bn_space_n1(g, R), "subspace-dim")
                        : subspace_check(bn_space_general(g, n, R, std::max(n, 3)), "subspace-dim");
        });
    cells.push_back(showtriv_checks);
  } else if (suite == "pair-coeff") {
    for (int g : values(o.g, {3, 41})) cells.push_back([g] { return pair_coeff(g); });
  } else if (suite == "counts") {
    cells.push_back(count_values);
    for (int g : values(o.g, {3, 41})) cells.push_back([g] { return count_identities(g); });
  } else if (suite == "plucker") {
    cells.push_back(plucker_fixed);
    for (int g : values(o.g, {0, 40})) cells.push_back([g] { return plucker_identities(g); });
  } else if (suite == "engine-goldens") {
    for (int g : values(o.g, {3, 10})) cells.push_back([g] { return engine_goldens(g); });
  } else if (suite == "all") {
    for (const auto& s : suite_names())
      if (s != "all") add_suite(s, o, cells);
  } else {
    throw UsageError("unknown suite '" + std::string(suite) + "'");
  }
}

std::vector<CheckReport> run_cell(const Cell& cell, const std::string& suite) {
  const auto start = std::chrono::steady_clock::now();
  std::vector<CheckReport> out;
  try {
    out = cell();
  } catch (const std::exception& e) {
    CheckReport r;
    r.check = suite;
    r.expected = "no error";
    r.computed = std::string("error: ") + e.what();
    out.push_back(r);
  }
  const double elapsed =
      std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
  for (auto& r : out) r.elapsed = elapsed;
  return out;
}

}  // namespace

std::vector<CheckReport> run_suite(std::string_view suite, const VerifyOptions& opts) {
  std::vector<Cell> cells;
  add_suite(suite, opts, cells);
  std::vector<std::vector<CheckReport>> results(cells.size());
  std::atomic<std::size_t> next{0};
  auto worker = [&] {
    for (std::size_t k; (k = next++) < cells.size();)
      results[k] = run_cell(cells[k], std::string(suite));
  };
  const unsigned jobs = std::max(1u, std::min<unsigned>(opts.jobs, static_cast<unsigned>(cells.size())));
  std::vector<std::thread> threads;
  for (unsigned t = 1; t < jobs; ++t) threads.emplace_back(worker);
  worker();
  for (auto& t : threads) t.join();

  std::vector<CheckReport> out;
  const auto notes = opts.readings.notes();
  for (auto& batch : results)
    for (auto& r : batch) {
      r.notes.insert(r.notes.begin(), notes.begin(), notes.end());
      out.push_back(std::move(r));
    }
  return out;
}

std::string format_json(const CheckReport& r, bool timing) {
  ordered_json j;
  j["check"] = r.check;
  j["params"] = r.params;
  j["expected"] = r.expected;
  j["computed"] = r.computed;
  j["pass"] = r.pass;
  if (timing) j["elapsed_s"] = r.elapsed;
  j["notes"] = r.notes;
  return j.dump();
}

std::string format_text(const CheckReport& r, bool timing) {
  std::ostringstream os;
  os << (r.pass ? "PASS " : "FAIL ") << r.check;
  for (const auto& [k, v] : r.params.items()) os << ' ' << k << '=' << (v.is_string() ? v.get<std::string>() : v.dump());
  os << ": expected " << r.expected << ", computed " << r.computed;
  if (timing) os << " (" << r.elapsed << " s)";
  return os.str();
}

}  // namespace modpic
