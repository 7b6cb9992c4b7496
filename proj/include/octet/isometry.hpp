#pragma once

// The order-4 isometry rho of N = U + U(2) + D4 + D4, the Gaussian hermitian
// structure it defines, hermitian reflections, and lattice-level checks of
// the Picard/transcendental table.

#include "octet/discriminant.hpp"
#include "octet/f2geom.hpp"
#include "octet/lattice.hpp"
#include "octet/linalg.hpp"

#include <string>
#include <vector>

namespace octet::lattice {

/// rho_1 on U + U(2), basis (e, f, e', f'), as a matrix acting on columns.
MatrixZ rho1();
/// rho_0 (x1, x2, x3, x4) -> (x2, -x1, x4, -x3) in the D4 root basis.
MatrixZ rho0();
/// rho_1 + rho_0 + rho_0.
MatrixZ rho_on_N();

/// m^T G m == G.
bool preserves_gram(const GramLattice& l, const MatrixZ& m);

/// N with rho, its discriminant form and a u^3 dictionary, built once.
struct NContext {
  GramLattice lattice;
  MatrixZ rho;
  DiscriminantForm disc;
  U3Dictionary dictionary;

  /// u^3 class of y in N*.
  f2::F2Vec u3_class(const VectorQ& y) const { return dictionary(disc.coordinates(y)); }
};

const NContext& n_context();

struct RhoReport {
  bool isometry = false;
  bool order_four = false;
  bool square_not_identity = false;
  bool fixed_point_free = false;
  bool trivial_on_discriminant = false;
  bool characteristic_polynomial = false;  // (t^2 + 1)^6
  bool ok() const;
};

RhoReport check_rho(const GramLattice& l, const MatrixZ& rho);

// -- hermitian structure ----------------------------------------------------

struct Gaussian {
  Integer re = 0, im = 0;
  Gaussian conj() const { return {re, -im}; }
  friend Gaussian operator+(const Gaussian& a, const Gaussian& b) { return {a.re + b.re, a.im + b.im}; }
  friend Gaussian operator*(const Gaussian& a, const Gaussian& b) {
    return {a.re * b.re - a.im * b.im, a.re * b.im + a.im * b.re};
  }
  friend bool operator==(const Gaussian&, const Gaussian&) = default;
};

std::string to_string(const Gaussian& z);

/// (a + bi) x = a x + b rho(x).
VectorZ gaussian_action(const MatrixZ& rho, const Gaussian& z, const VectorZ& x);

/// h(x, y) = <x, y> + i <x, rho y>.
Gaussian hermitian_form(const GramLattice& l, const MatrixZ& rho, const VectorZ& x, const VectorZ& y);

using GaussianMatrix = std::vector<std::vector<Gaussian>>;
GaussianMatrix hermitian_gram(const GramLattice& l, const MatrixZ& rho, const std::vector<VectorZ>& basis);

struct PhiReport {
  bool maps_into_dual = false;           // phi(N) in N*
  bool one_minus_i_lands_back = false;   // phi((1 - i) x) = x
  long quotient_size = 0;                // |N / (1 - i) N|
  long image_size = 0;                   // distinct classes phi(x) mod N
  bool bijective = false;
  bool ok() const;
};

/// phi(x) = (x + rho x) / 2 as a map N / (1 - i) N -> N* / N.
PhiReport phi_map_check();

// -- reflections ------------------------------------------------------------

/// s_r(x) = x + <x, r> r. Throws std::invalid_argument unless r^2 = -2.
MatrixZ root_reflection(const GramLattice& l, const VectorZ& r);

/// R_{r, eps}(x) = x - (1 - eps) h(x, r) / h(r, r) r for a unit eps != 1.
/// Throws std::invalid_argument unless r^2 = -2, <r, rho r> = 0 and eps is
/// -1, i or -i; std::domain_error when the result is not integral.
MatrixZ hermitian_reflection(const GramLattice& l, const MatrixZ& rho, const VectorZ& r, const Gaussian& eps);

struct ReflectionReport {
  bool minus_one_is_double_reflection = false;  // R_{r,-1} = s_r s_{rho r}
  bool commutes_with_rho = false;               // R_{r,i} rho = rho R_{r,i}
  bool isometry = false;
  bool order_four = false;                      // R_{r,i}^4 = 1
  bool square_is_minus_one = false;             // R_{r,i}^2 = R_{r,-1}
  bool alpha_anisotropic = false;
  bool induces_transvection = false;            // on N*/N, via the u^3 dictionary
  f2::F2Vec alpha;
  bool ok() const;
};

/// Exact matrix identities for one r in N. Throws std::invalid_argument
/// unless r^2 = -2.
ReflectionReport reflection_identities(const VectorZ& r);

// -- orthogonal complement of <r, rho r> ------------------------------------

struct ComplementReport {
  Index rank = 0;
  Inertia signature;
  bool root_pair_is_a1_squared = false;  // Gram of (r, rho r) = diag(-2, -2)
  bool index_two = false;                // [N : R + R^perp] = 2
  bool discriminant_matches = false;     // disc(R^perp) = disc(U + U(2) + D4 + A1^2)
  bool ok() const;
};

ComplementReport root_pair_complement(const VectorZ& r);

// -- the Picard / transcendental table --------------------------------------

struct LatticePairRow {
  int index;
  std::string points;
  std::string picard;
  std::string transcendental;
};

std::vector<LatticePairRow> lattice_pair_rows();

struct LatticePairCheck {
  LatticePairRow row;
  Index picard_rank = 0, transcendental_rank = 0;
  Inertia picard_signature, transcendental_signature;
  bool rank_sum_22 = false;
  bool signatures_ok = false;  // (1, p - 1) and (2, t - 2)
  bool complementary = false;  // disc(P) = -disc(T)
  bool ok() const;
};

std::vector<LatticePairCheck> lattice_pair_checks();

/// U + A1^8 glued by (F1 + ... + F8) / 2.
Overlattice u_a1_8_overlattice();

}  // namespace octet::lattice
