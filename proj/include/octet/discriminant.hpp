#pragma once

// Finite quadratic forms, discriminant forms of even lattices and
// isometries between them.

#include "octet/exact.hpp"
#include "octet/f2geom.hpp"
#include "octet/lattice.hpp"

#include <optional>
#include <vector>

namespace octet::lattice {

/// Element of a finite abelian group, as coefficients on its generators.
using GroupElement = std::vector<long>;

/// A finite abelian group with generators of the given orders, a quadratic
/// form with values in Q/2Z and its bilinear form with values in Q/Z.
class FiniteQuadraticForm {
 public:
  FiniteQuadraticForm() = default;
  /// q-values are reduced mod 2 and pairings mod 1. Throws
  /// std::invalid_argument on inconsistent sizes, a non-symmetric pairing or
  /// an order < 2.
  FiniteQuadraticForm(std::vector<long> orders, std::vector<Rational> q_values, MatrixQ pairings);

  /// The quadratic space u^3 over F_2 in the coordinates of f2geom.
  static FiniteQuadraticForm u3();

  const std::vector<long>& orders() const { return orders_; }
  const std::vector<Rational>& q_values() const { return q_; }
  const MatrixQ& pairings() const { return b_; }
  std::size_t rank() const { return orders_.size(); }
  long group_order() const;

  Rational q(const GroupElement& x) const;
  Rational b(const GroupElement& x, const GroupElement& y) const;

  GroupElement add(const GroupElement& x, const GroupElement& y) const;
  GroupElement scale(long k, const GroupElement& x) const;
  GroupElement normalize(GroupElement x) const;
  bool is_zero(const GroupElement& x) const;
  /// Order of x in the group.
  long element_order(const GroupElement& x) const;
  /// Every element, in lexicographic order of coefficients.
  std::vector<GroupElement> elements() const;

  /// q(x + y) - q(x) - q(y) = 2 b(x, y) mod 2 on all generator pairs, and
  /// b(g, g) = q(g) mod 1.
  bool satisfies_polarization() const;

  FiniteQuadraticForm negated() const;
  FiniteQuadraticForm operator+(const FiniteQuadraticForm& o) const;

 private:
  std::vector<long> orders_;
  std::vector<Rational> q_;
  MatrixQ b_;
};

/// L*/L with its coordinates.
struct DiscriminantForm {
  FiniteQuadraticForm form;
  /// Column i: a representative in L* (lattice coordinates) of generator i.
  MatrixQ generators;
  /// Row i: the functional giving the coefficient of generator i, to be
  /// reduced modulo its order.
  MatrixZ coordinate_rows;

  /// Coefficients of the class of y in L* (lattice coordinates). Throws
  /// std::domain_error when y is not in L*.
  GroupElement coordinates(const VectorQ& y) const;
};

/// Throws std::domain_error for an odd or degenerate lattice.
DiscriminantForm discriminant_form(const GramLattice& l);

/// Images of the generators of `a`, in coordinates of `b`, of an isometry
/// a -> b; nullopt when none exists.
std::optional<std::vector<GroupElement>> find_isometry(const FiniteQuadraticForm& a,
                                                       const FiniteQuadraticForm& b);

/// Isometry a -> b given by generator images: well defined, bijective and
/// preserving q and b.
bool is_isometry(const FiniteQuadraticForm& a, const FiniteQuadraticForm& b,
                 const std::vector<GroupElement>& images);

/// An isometry from a finite quadratic form onto u^3.
struct U3Dictionary {
  /// images[i]: the u^3 vector of generator i.
  std::vector<f2::F2Vec> images;
  f2::F2Vec operator()(const GroupElement& x) const;
};

/// Throws std::domain_error unless the form is 2-elementary of rank 6 with
/// integral q-values and isometric to u^3.
U3Dictionary identify_with_u3(const FiniteQuadraticForm& form);

}  // namespace octet::lattice
