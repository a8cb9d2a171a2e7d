#include <CLI11.hpp>

#include <filesystem>
#include <fstream>
#include <iostream>
#include <sstream>

#include "modpic/class_io.hpp"
#include "modpic/counting.hpp"
#include "modpic/errors.hpp"
#include "modpic/expr.hpp"
#include "modpic/family_io.hpp"
#include "modpic/maps.hpp"
#include "modpic/subspace.hpp"
#include "modpic/verify.hpp"

using namespace modpic;
using nlohmann::ordered_json;

namespace {

constexpr int kUsage = 2;

struct ReadingFlags {
  std::string g2_sign = "minus";
  std::string theta_top = "g-2";
  std::string theta_shift = "g";
  std::string tail_genus = "g-2";

  void attach(CLI::App* app) {
    app->add_option("--g2-sign", g2_sign, "sign of the genus-2-tail delta_{g-2} row")
        ->check(CLI::IsMember({"minus", "plus"}));
    app->add_option("--theta-top", theta_top, "highest theta index on M_{0,g+1}")
        ->check(CLI::IsMember({"g-2", "literal"}));
    app->add_option("--theta-shift", theta_shift, "offset of the marks in theta_{i;S}")
        ->check(CLI::IsMember({"g", "n"}));
    app->add_option("--tail-genus", tail_genus, "genus of the fixed curve in the genus-2-tail map")
        ->check(CLI::IsMember({"g-2", "g"}));
  }

  Readings readings() const {
    Readings r;
    r.g2_sign = g2_sign == "plus" ? 1 : -1;
    r.theta_top_literal = theta_top == "literal";
    r.theta_shift_by_n = theta_shift == "n";
    r.tail_genus_literal = tail_genus == "g";
    return r;
  }
};

std::string read_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw UsageError("cannot read " + path);
  std::ostringstream os;
  os << in.rdbuf();
  return os.str();
}

int cmd_verify(const std::string& suite, const std::string& g, const std::string& n,
               const std::string& format, const ReadingFlags& flags, unsigned jobs, bool timing) {
  VerifyOptions opts;
  if (!g.empty()) opts.g = parse_range(g);
  if (!n.empty()) opts.n = parse_range(n);
  opts.readings = flags.readings();
  opts.jobs = jobs;
  const auto reports = run_suite(suite, opts);
  bool ok = true;
  if (format == "text" && !opts.readings.is_default())
    for (const auto& note : opts.readings.notes()) std::cout << "# " << note << '\n';
  for (const auto& r : reports) {
    std::cout << (format == "json" ? format_json(r, timing) : format_text(r, timing)) << '\n';
    ok = ok && r.pass;
  }
  if (format == "text") {
    std::size_t passed = 0;
    for (const auto& r : reports) passed += r.pass;
    std::cout << passed << "/" << reports.size() << " checks passed\n";
  }
  return ok ? 0 : 1;
}

int cmd_counts(const std::string& range, const std::string& check, const std::string& format) {
  const Range r = parse_range(range);
  std::vector<std::string> header;
  std::vector<std::vector<std::string>> rows;
  if (check == "odd") {
    header = {"g", "lhs", "rhs", "nonzero", "lhs_scaled", "rhs_scaled"};
    for (int g = r.lo; g <= r.hi; ++g) {
      if (g < 3 || g % 2 == 0) continue;
      auto c = odd_genus_pair_check(g);
      rows.push_back({std::to_string(g), to_string(c.lhs), to_string(c.rhs),
                      c.nonzero ? "true" : "false", to_string(Rational(c.lhs) * c.scale),
                      to_string(Rational(c.rhs) * c.scale)});
    }
  } else if (check == "even") {
    header = {"g", "lhs", "rhs", "difference", "nonzero"};
    for (int g = r.lo; g <= r.hi; ++g) {
      if (g < 4 || g % 2 == 1) continue;
      auto c = even_genus_pair_check(g);
      rows.push_back({std::to_string(g), to_string(c.lhs), to_string(c.rhs),
                      to_string(c.difference), c.nonzero ? "true" : "false"});
    }
  } else {
    header = {"g", "m", "n", "d", "A"};
    for (int g = r.lo; g <= r.hi; ++g)
      for (int m = 1; m <= 4; ++m)
        for (int n = 1; n <= 4; ++n) {
          if ((g + m + n - 1) % 2 != 0 || g + m + n - 1 < 2) continue;
          rows.push_back({std::to_string(g), std::to_string(m), std::to_string(n),
                          std::to_string((g + m + n - 1) / 2), to_string(a_count(g, m, n))});
        }
  }
  if (format == "json") {
    ordered_json doc = ordered_json::array();
    for (const auto& row : rows) {
      ordered_json obj;
      for (std::size_t k = 0; k < header.size(); ++k) obj[header[k]] = row[k];
      doc.push_back(obj);
    }
    std::cout << doc.dump() << '\n';
  } else {
    for (std::size_t k = 0; k < header.size(); ++k) std::cout << (k ? "," : "") << header[k];
    std::cout << '\n';
    for (const auto& row : rows) {
      for (std::size_t k = 0; k < row.size(); ++k) std::cout << (k ? "," : "") << row[k];
      std::cout << '\n';
    }
  }
  return 0;
}

int cmd_pair(const std::vector<std::string>& family_files, const std::vector<std::string>& exprs,
             const std::string& format, const Readings& readings) {
  std::vector<TestFamily> fams;
  std::vector<std::string> row_labels;
  for (const auto& path : family_files) {
    fams.push_back(parse_family(read_file(path)));
    row_labels.push_back(fams.back().label.empty() ? path : fams.back().label);
  }
  std::vector<DivisorClass> classes;
  for (const auto& e : exprs) classes.push_back(evaluate_expression(e, readings));
  const auto m = pairing_matrix(fams, classes);
  if (format == "json")
    std::cout << matrix_json(m, row_labels, exprs).dump() << '\n';
  else
    std::cout << matrix_csv(m, row_labels, exprs);
  return 0;
}

int cmd_map(const std::vector<int>& args, const std::string& name, const std::string& out_dir,
            const Readings& readings) {
  auto need = [&](std::size_t k) {
    if (args.size() != k)
      throw UsageError("map " + name + " takes " + std::to_string(k) + " integer arguments");
  };
  PullbackMap m("", {0, 3}, {0, 3});
  if (name == "forgetful") {
    need(3);
    m = forgetful_pullback(args[0], args[1], args[2]);
  } else if (name == "bubble") {
    need(4);
    m = bubble_pullback(args[0], args[1], args[2], args[3]);
  } else if (name == "gprime") {
    need(2);
    m = args[1] == 0 ? unpointed_genus2_tail_pullback(args[0])
                     : genus2_tail_pullback(args[0], args[1], readings);
  } else if (name == "fprime") {
    need(1);
    m = elliptic_tails_pullback(args[0], readings).expanded();
  } else {
    throw UsageError("unknown map '" + name + "' (forgetful, bubble, gprime, fprime)");
  }
  namespace fs = std::filesystem;
  fs::create_directories(out_dir);
  ordered_json manifest;
  manifest["map"] = m.name();
  manifest["source"] = {{"g", m.source().g}, {"n", m.source().n}};
  manifest["dest"] = {{"g", m.dest().g}, {"n", m.dest().n}};
  manifest["entries"] = ordered_json::array();
  std::size_t index = 0;
  for (const auto& [b, img] : m.table()) {
    const std::string file = "class_" + std::to_string(index++) + ".json";
    std::ofstream(fs::path(out_dir) / file) << serialize(img) << '\n';
    manifest["entries"].push_back({{"element", element_key(b)}, {"file", file}});
  }
  std::ofstream(fs::path(out_dir) / "manifest.json") << manifest.dump(2) << '\n';
  std::cout << "wrote " << index << " classes to " << out_dir << '\n';
  return 0;
}

int cmd_certify(int g, int n, bool theta, const Readings& readings) {
  if (theta) {
    auto c = theta_rank_certificate(g, n, readings);
    std::cout << to_json(c).dump(2) << '\n';
    return c.pass ? 0 : 1;
  }
  auto c = n == 1 ? bn_space_n1(g, readings) : bn_space_general(g, n, readings, std::max(n, 3));
  std::cout << to_json(c).dump(2) << '\n';
  return c.pass ? 0 : 1;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Exact divisor-class computations on moduli of pointed curves"};
  app.require_subcommand(1);

  ReadingFlags flags;

  auto* verify = app.add_subcommand("verify", "run a verification suite");
  std::string suite, g_range, n_range, format = "text";
  unsigned jobs = default_jobs();
  bool timing = false;
  verify->add_option("suite", suite, "suite name")->required();
  verify->add_option("--g", g_range, "genus range a..b");
  verify->add_option("--n", n_range, "mark-count range a..b");
  verify->add_option("--format", format)->check(CLI::IsMember({"json", "text"}));
  verify->add_option("--jobs", jobs, "worker threads (default MODPIC_JOBS or 1)")
      ->check(CLI::PositiveNumber);
  verify->add_flag("--timing", timing, "include elapsed time in reports");
  flags.attach(verify);

  auto* cls = app.add_subcommand("class", "evaluate a class expression");
  std::string expr;
  cls->add_option("expr", expr)->required();
  flags.attach(cls);

  auto* counts = app.add_subcommand("counts", "tables of the A-count checks");
  std::string count_range, check, count_format = "csv";
  counts->add_option("--g-range", count_range)->required();
  counts->add_option("--check", check)->required()->check(CLI::IsMember({"odd", "even", "a-table"}));
  counts->add_option("--format", count_format)->check(CLI::IsMember({"csv", "json"}));

  auto* pair = app.add_subcommand("pair", "pair family files against class expressions");
  std::vector<std::string> family_files, pair_exprs;
  std::string pair_format = "csv";
  pair->add_option("family", family_files, "family JSON files")->required();
  pair->add_option("-c,--class", pair_exprs, "class expression")->required();
  pair->add_option("--format", pair_format)->check(CLI::IsMember({"csv", "json"}));
  flags.attach(pair);

  auto* map = app.add_subcommand("map", "write a pullback table as class files");
  std::string map_name, out_dir;
  std::vector<int> map_args;
  map->add_option("name", map_name, "forgetful | bubble | gprime | fprime")->required();
  map->add_option("args", map_args, "integer parameters");
  map->add_option("--out", out_dir)->required();
  flags.attach(map);

  auto* certify = app.add_subcommand("certify", "dimension certificate for the kernel space");
  int cert_g = 0, cert_n = 1;
  bool cert_theta = false;
  certify->add_option("--g", cert_g)->required();
  certify->add_option("--n", cert_n);
  certify->add_flag("--theta", cert_theta, "theta rank certificate instead");
  flags.attach(certify);

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    int code = app.exit(e);
    return code == 0 ? 0 : kUsage;
  }

  try {
    if (*verify) return cmd_verify(suite, g_range, n_range, format, flags, jobs, timing);
    if (*cls) {
      std::cout << serialize(evaluate_expression(expr, flags.readings())) << '\n';
      return 0;
    }
    if (*counts) return cmd_counts(count_range, check, count_format);
    if (*pair) return cmd_pair(family_files, pair_exprs, pair_format, flags.readings());
    if (*map) return cmd_map(map_args, map_name, out_dir, flags.readings());
    if (*certify) return cmd_certify(cert_g, cert_n, cert_theta, flags.readings());
  } catch (const Error& e) {
    std::cerr << "modpic: " << e.what() << '\n';
    return kUsage;
  }
  return kUsage;
}
