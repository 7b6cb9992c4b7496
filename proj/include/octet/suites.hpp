#pragma once

// The verification suites run by `octet verify`.

#include "octet/report.hpp"

#include <string>
#include <string_view>
#include <vector>

namespace octet {

/// f2, weil, qseries, lattice, tableaux; "all" runs them in this order.
const std::vector<std::string>& suite_names();

/// Throws std::invalid_argument for an unknown selector or an invalid config.
std::vector<report::CheckReport> run_suite(std::string_view selector, const report::RunConfig& config);

/// Samples actually used for a degree-d relation search: at least three per
/// monomial.
long relation_samples(int degree, long requested);

}  // namespace octet
