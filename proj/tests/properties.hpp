#pragma once

#include <cstdint>
#include <string>

namespace props {

struct Outcome {
  int cases = 0;
  int failures = 0;
  std::string first_failure;
  bool ok() const { return failures == 0 && cases > 0; }
};

Outcome canonicalization_idempotent(int cases, std::uint32_t seed);
Outcome psi_omega_round_trip(int cases, std::uint32_t seed);
Outcome pullback_composition(int cases, std::uint32_t seed);
Outcome bubble_after_forgetful(int cases, std::uint32_t seed);
Outcome serialization_round_trip(int cases, std::uint32_t seed);

}  // namespace props
