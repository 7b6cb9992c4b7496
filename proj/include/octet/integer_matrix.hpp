#pragma once

// Integer-matrix normal forms over arbitrary-precision integers.

#include "octet/exact.hpp"

namespace octet {

/// P * A * Q = D with P, Q unimodular and D diagonal, d_i | d_{i+1},
/// d_i >= 0.
struct SmithForm {
  MatrixZ P;
  MatrixZ D;
  MatrixZ Q;
  std::vector<Integer> diagonal() const;
};

SmithForm smith_normal_form(const MatrixZ& a);

/// Row Hermite normal form of the lattice spanned by the rows of `a`;
/// zero rows are dropped, so the result is a basis of that lattice.
MatrixZ hermite_row_basis(const MatrixZ& a);

/// Z-basis (as columns) of {x in Z^n : a x = 0}.
MatrixZ integer_kernel(const MatrixZ& a);

/// Common denominator of a rational matrix (1 for an integral one).
Integer common_denominator(const MatrixQ& m);

}  // namespace octet
