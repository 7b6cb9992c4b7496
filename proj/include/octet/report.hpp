#pragma once

// Check reports and run configuration shared by the suites and the CLI.

#include "octet/exact.hpp"

#include <json.hpp>

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

namespace octet::report {

using Json = nlohmann::ordered_json;

struct CheckReport {
  std::string name;
  bool pass = false;
  Json expected;
  Json actual;
  /// "paper: ..." or "derived"
  std::string provenance;
  /// Only numeric checks carry one.
  std::optional<double> tolerance;

  Json to_json() const;
};

/// pass iff expected == actual.
CheckReport exact_check(std::string name, Json expected, Json actual, std::string provenance);

/// pass iff |actual - expected| < tolerance.
CheckReport numeric_check(std::string name, double expected, double actual, double tolerance,
                          std::string provenance);

struct RunConfig {
  std::uint64_t seed = 42;
  Rational series_order = 20;
  long sample_count = 300;
  int box_bound = 3;
  std::string tolerance = "1e-9";

  /// Throws std::invalid_argument for a nonpositive order or sample count, a
  /// box bound below 2, or a tolerance that is not a positive decimal.
  void validate() const;
  double tolerance_value() const;
};

/// One compact JSON object per line.
std::string to_json_lines(const std::vector<CheckReport>& reports);

bool all_pass(const std::vector<CheckReport>& reports);

}  // namespace octet::report
