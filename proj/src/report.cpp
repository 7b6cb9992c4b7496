#include "octet/report.hpp"

#include <algorithm>
#include <cmath>
#include <regex>
#include <stdexcept>

namespace octet::report {

Json CheckReport::to_json() const {
  Json j;
  j["name"] = name;
  j["status"] = pass ? "pass" : "fail";
  j["expected"] = expected;
  j["actual"] = actual;
  j["provenance"] = provenance;
  if (tolerance) j["tolerance"] = *tolerance;
  return j;
}

CheckReport exact_check(std::string name, Json expected, Json actual, std::string provenance) {
  const bool pass = expected == actual;
  return {std::move(name), pass, std::move(expected), std::move(actual), std::move(provenance), std::nullopt};
}

CheckReport numeric_check(std::string name, double expected, double actual, double tolerance,
                          std::string provenance) {
  const bool pass = std::isfinite(actual) && std::abs(actual - expected) < tolerance;
  return {std::move(name), pass, expected, actual, std::move(provenance), tolerance};
}

void RunConfig::validate() const {
  if (series_order <= 0) throw std::invalid_argument("series order must be positive");
  if (sample_count <= 0) throw std::invalid_argument("sample count must be positive");
  if (box_bound < 2) throw std::invalid_argument("box bound must be at least 2");
  static const std::regex decimal(R"(^(\d+(\.\d*)?|\.\d+)([eE][-+]?\d+)?$)");
  if (!std::regex_match(tolerance, decimal) || tolerance_value() <= 0)
    throw std::invalid_argument("tolerance must be a positive decimal, got '" + tolerance + "'");
}

double RunConfig::tolerance_value() const {
  try {
    return std::stod(tolerance);
  } catch (const std::exception&) {
    throw std::invalid_argument("tolerance must be a positive decimal, got '" + tolerance + "'");
  }
}

std::string to_json_lines(const std::vector<CheckReport>& reports) {
  std::string out;
  for (const auto& r : reports) {
    out += r.to_json().dump();
    out += '\n';
  }
  return out;
}

bool all_pass(const std::vector<CheckReport>& reports) {
  return std::all_of(reports.begin(), reports.end(), [](const auto& r) { return r.pass; });
}

}  // namespace octet::report
