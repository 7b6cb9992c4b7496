#pragma once

// Exhaustive scans of the coefficient box [-bound, bound]^12 in N for
// (-2)-vectors r and (-4)-vectors delta with delta / 2 in N*.

#include <array>

namespace octet::lattice {

struct BoxScanReport {
  int bound = 0;

  long roots = 0;              // r^2 = -2
  long rho_orthogonal = 0;     // <r, rho r> = 0
  long sum_is_minus4 = 0;      // (r + rho r)^2 = -4 and (r + rho r) / 2 in N*
  long double_reflection = 0;  // R_{r,-1} = s_r s_{rho r}
  long commutes_with_rho = 0;  // R_{r,i} rho = rho R_{r,i}
  long transvection = 0;       // R_{r,i} acts on N*/N as t_alpha, alpha = (r + rho r)/2
  std::array<long, 64> alpha_counts{};  // roots by the u^3 class of alpha

  long minus4 = 0;             // delta^2 = -4 and delta / 2 in N*
  long minus4_from_root = 0;   // r = (delta - rho delta) / 2 in N, r^2 = -2, r + rho r = delta

  bool ok() const;
};

/// Throws std::invalid_argument for bound < 2.
BoxScanReport minus4_vector_scan(int bound);

}  // namespace octet::lattice
