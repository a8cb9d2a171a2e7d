#pragma once

#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "modpic/readings.hpp"
#include "modpic/vendor_json.hpp"

namespace modpic {

struct Range {
  int lo = 0;
  int hi = 0;
};

// "a..b" or "a".  Throws UsageError.
Range parse_range(std::string_view text);

struct CheckReport {
  std::string check;
  nlohmann::ordered_json params = nlohmann::ordered_json::object();
  std::string expected;
  std::string computed;
  bool pass = false;
  double elapsed = 0;  // seconds
  std::vector<std::string> notes;
};

struct VerifyOptions {
  std::optional<Range> g;
  std::optional<Range> n;
  Readings readings;
  unsigned jobs = 1;
};

const std::vector<std::string>& suite_names();

// Runs a suite; reports come back in canonical order regardless of `jobs`.
// Throws UsageError for an unknown suite or an empty range.
std::vector<CheckReport> run_suite(std::string_view suite, const VerifyOptions& opts);

// One JSON line, or one line of text.  Elapsed time is included only when
// `timing` is set so that reports stay byte-stable.
std::string format_json(const CheckReport& r, bool timing = false);
std::string format_text(const CheckReport& r, bool timing = false);

// MODPIC_JOBS, defaulting to 1.
unsigned default_jobs();

}  // namespace modpic
