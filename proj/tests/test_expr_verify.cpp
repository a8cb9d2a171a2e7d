#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "modpic/class_io.hpp"
#include "modpic/errors.hpp"
#include "modpic/expr.hpp"
#include "modpic/maps.hpp"
#include "modpic/verify.hpp"

using namespace modpic;

TEST_CASE("class expressions") {
  CHECK(evaluate_expression("fprime*(w(5))").is_zero());
  CHECK(evaluate_expression("gprime*(pi1*(bn(5))) - 2*w2").is_zero());
  CHECK(serialize(evaluate_expression("bn(3)")) ==
        R"({"g":3,"n":0,"coeffs":{"lambda":"6","delta0":"-2/3","delta:1:{}":"-2"}})");
  CHECK(evaluate_expression("2/3*(3*lambda(3,0))") == evaluate_expression("2*lambda(3,0)"));
  CHECK(evaluate_expression("-bn(4) + bn(4)").is_zero());
  CHECK(evaluate_expression("psi(3,2,1) - omega(3,2,1)") == evaluate_expression("delta(3,2,0,{1,2})"));
  CHECK(evaluate_expression("theta(4,1,1,{1})") == theta_class(4, 1, 1, {1}));
  CHECK(evaluate_expression("epsilon(5,2)") == epsilon_class(5, 2));
  CHECK(evaluate_expression("bubble(1,2)*(delta(3,2,1,{1,2}))") == evaluate_expression("delta(3,1,1,{1})"));
  CHECK(evaluate_expression("gprime*(w(6)) - w2").is_zero());
  CHECK(evaluate_expression("gprime*(bn(6))") ==
        reduce_genus2(unpointed_genus2_tail_pullback(6).apply(bn_class(6))));
  CHECK(evaluate_expression("pi2*(pi1*(bn(4)))") ==
        forgetful_pullback(4, 2, 2).apply(forgetful_pullback(4, 1, 1).apply(bn_class(4))));

  CHECK_THROWS_AS((evaluate_expression("bn(3")), ParseError);
  CHECK_THROWS_AS((evaluate_expression("bn(3) * bn(3)")), ParseError);
  CHECK_THROWS_AS((evaluate_expression("3")), ParseError);
  CHECK_THROWS_AS((evaluate_expression("foo(1)")), ParseError);
  CHECK_THROWS_AS((evaluate_expression("bn(3) + w(3)")), SpaceMismatch);
  CHECK_THROWS_AS((evaluate_expression("bn(2)")), OutOfRange);
  CHECK_THROWS_AS((evaluate_expression("fprime*(bn(5))")), SpaceMismatch);
}

TEST_CASE("ranges") {
  CHECK(parse_range("4..30").lo == 4);
  CHECK(parse_range("4..30").hi == 30);
  CHECK(parse_range("7").hi == 7);
  CHECK_THROWS_AS((parse_range("9..3")), UsageError);
  CHECK_THROWS_AS((parse_range("a..b")), UsageError);
}

TEST_CASE("suites") {
  VerifyOptions o;
  o.g = Range{4, 12};
  std::string serial, parallel;
  for (const auto& r : run_suite("counts", o)) serial += format_json(r) + "\n";
  o.jobs = 4;
  for (const auto& r : run_suite("counts", o)) parallel += format_json(r) + "\n";
  CHECK(serial == parallel);
  CHECK(!serial.empty());

  o.g = Range{4, 8};
  const auto k = run_suite("kernel-n1", o);
  CHECK(k.size() == 5);
  for (const auto& r : k) CHECK(r.pass);
  for (const auto& r : k) CHECK(nlohmann::json::parse(format_json(r))["pass"] == true);

  o.g = Range{5, 5};
  o.readings.g2_sign = 1;
  bool any_fail = false;
  for (const auto& r : run_suite("map-identities", o)) any_fail = any_fail || !r.pass;
  CHECK(any_fail);

  CHECK_THROWS_AS((run_suite("nonsense", o)), UsageError);
  CHECK(suite_names().back() == "all");
}
