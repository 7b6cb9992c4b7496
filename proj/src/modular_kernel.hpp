#pragma once

// Vector loop of the modular elimination, kept free of library headers so it
// can be built with native code generation.

#include <cstddef>

namespace octet::detail {

/// r[j] = (r[j] + neg * q[j]) mod p for j in [from, n); entries in [0, p), p < 2^26.
void axpy_mod(double* r, const double* q, double neg, std::size_t from, std::size_t n, double p);

}  // namespace octet::detail
