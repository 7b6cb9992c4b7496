#include "modular_kernel.hpp"

#include <cmath>

namespace octet::detail {

void axpy_mod(double* __restrict r, const double* __restrict q, double neg, std::size_t from, std::size_t n,
              double p) {
  const double inv = 1.0 / p;
  for (std::size_t j = from; j < n; ++j) {
    double x = r[j] + neg * q[j];
    x -= std::floor(x * inv) * p;
    x = x < 0 ? x + p : x;
    r[j] = x >= p ? x - p : x;
  }
}

}  // namespace octet::detail
