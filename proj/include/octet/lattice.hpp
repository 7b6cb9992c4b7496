#pragma once

// Integral lattices given by Gram matrices.

#include "octet/exact.hpp"

#include <string>
#include <string_view>
#include <vector>

namespace octet::lattice {

class GramLattice {
 public:
  GramLattice() = default;
  /// Throws std::invalid_argument unless `gram` is square and symmetric.
  explicit GramLattice(MatrixZ gram, std::string name = {});

  const MatrixZ& gram() const { return gram_; }
  const std::string& name() const { return name_; }
  Index rank() const { return gram_.rows(); }
  Integer determinant() const;
  bool is_even() const;
  bool is_nondegenerate() const { return determinant() != 0; }

  /// Orthogonal direct sum, blocks in order.
  GramLattice operator+(const GramLattice& other) const;
  /// L(m): every inner product multiplied by m.
  GramLattice rescaled(const Integer& m) const;
  /// L^k
  GramLattice power(int k) const;

  Integer inner(const VectorZ& x, const VectorZ& y) const { return x.dot(gram_ * y); }
  Rational inner(const VectorQ& x, const VectorQ& y) const;

  friend bool operator==(const GramLattice& a, const GramLattice& b) { return a.gram_ == b.gram_; }

 private:
  MatrixZ gram_;
  std::string name_;
};

/// Basis of D_n inside Z^n (rows): e_i - e_{i+1} for i < n, then
/// e_{n-1} + e_n. The ambient form is minus the standard dot product.
MatrixZ d_lattice_basis(int n);

/// Parses sums of named lattices: U, U(2), A1, A1(-1), Dn (n >= 4), E8,
/// each optionally rescaled "(m)" and raised "^k", joined by '+'. Spaces and
/// the unicode direct-sum sign are accepted as separators. Throws
/// std::invalid_argument for an unknown name.
GramLattice named_lattice(std::string_view expression);

/// The lattice U + U(2) + D4 + D4 with basis (e, f, e', f', D4 roots, D4 roots).
GramLattice lattice_N();
/// U(2) + D4 + D4.
GramLattice lattice_M();

struct Overlattice {
  GramLattice lattice;
  /// Rows: the new basis in the coordinates of the original lattice.
  MatrixQ basis;
};

/// Adjoins an order-2 glue vector (coordinates w.r.t. the basis of `l`).
/// Requires glue in L*, 2 glue in L and glue^2 in 2Z; throws
/// std::domain_error otherwise. A glue vector already in L returns L.
Overlattice overlattice(const GramLattice& l, const VectorQ& glue);

}  // namespace octet::lattice
