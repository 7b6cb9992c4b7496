#pragma once

// Integer core of the box scan. Plain arrays only, so it can be built with
// different code generation flags from the rest of the library.

#include "octet/box_scan.hpp"

#include <array>
#include <cstdint>

namespace octet::lattice::detail {

constexpr int kN = 12;
constexpr int kGens = 6;

struct BoxKernelInput {
  int bound = 0;
  std::array<std::array<int, kN>, kN> gram{}, rho{};
  // Discriminant group: coordinate functionals and doubled generators.
  std::array<std::array<int, kN>, kGens> rows{}, gens{};
  std::array<std::uint8_t, kGens> dictionary{};  // u^3 class of each generator
  std::array<std::uint8_t, 64> q{};              // q on u^3
  std::array<std::array<std::uint8_t, 64>, 64> b{};
};

/// Fills every count of the report except `bound`.
void run_box_kernel(const BoxKernelInput& in, BoxScanReport& rep);

}  // namespace octet::lattice::detail
