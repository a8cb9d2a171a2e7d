#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "properties.hpp"

namespace {

void check(const props::Outcome& o) {
  INFO(o.first_failure);
  CHECK(o.cases == 1000);
  CHECK(o.failures == 0);
}

}  // namespace

TEST_CASE("canonicalization is idempotent") { check(props::canonicalization_idempotent(1000, 1)); }
TEST_CASE("psi/omega round trip") { check(props::psi_omega_round_trip(1000, 2)); }
TEST_CASE("pullback composition") { check(props::pullback_composition(1000, 3)); }
TEST_CASE("bubble after forgetful is the identity") { check(props::bubble_after_forgetful(1000, 4)); }
TEST_CASE("serialization round trip") { check(props::serialization_round_trip(1000, 5)); }
