#pragma once

// Weil representation of SL(2, Z/2Z) on the group ring Q[A_N], A_N the
// 64-point space of f2geom. Coordinate alpha of a group-ring vector is the
// coefficient of e_alpha, indexed by alpha.bits().
//
// The representation matrices are called weil_rho_* to keep them apart from
// the order-4 lattice isometry in lattice.hpp.

#include "octet/exact.hpp"
#include "octet/f2geom.hpp"

#include <array>
#include <vector>

namespace octet::weil {

using GroupRingVector = VectorQ;  // length 64
using WeilMatrix = MatrixQ;       // 64 x 64

/// weil_rho(T) e_alpha = (-1)^q(alpha) e_alpha
WeilMatrix weil_rho_T();
/// weil_rho(S) e_alpha = 1/8 sum_beta (-1)^b(beta, alpha) e_beta
WeilMatrix weil_rho_S();

/// Matrix of e_alpha -> e_{g(alpha)}.
MatrixQ permutation_matrix(const f2::Permutation64& g);

/// Multiplicities of the trivial, sign and 2-dimensional characters of
/// S_3 = SL(2, F_2).
struct CharacterDecomposition {
  Integer trivial, alternating, standard;
  friend bool operator==(const CharacterDecomposition&, const CharacterDecomposition&) = default;
};

/// From traces at the identity, an involution and an element of order 3,
/// using the S_3 character table with class sizes 1, 3, 2.
CharacterDecomposition decompose_character(const Rational& tr_identity,
                                           const Rational& tr_involution,
                                           const Rational& tr_order3);

CharacterDecomposition character_decomposition();

/// Basis (columns) of the joint fixed space of weil_rho(T) and weil_rho(S).
MatrixQ invariant_subspace();

/// sum_{alpha in s} e_alpha
GroupRingVector indicator_sum(const f2::F2Subspace& s);

/// f_V = sum_{I+} e_alpha - sum_{I-} e_alpha where I = ker(q|V) and (I+, I-)
/// are its maximal isotropic extensions in canonical order. Throws
/// std::domain_error if V is not maximal totally singular.
GroupRingVector f_V(const f2::F2Subspace& v);

/// Joint (-1)-eigenspace (columns) of the permutation actions of t_alpha
/// for the four anisotropic alpha in V. Throws for non-singular V.
MatrixQ antivector_space(const f2::F2Subspace& v);

/// dim of antivector_space(v).
Index unique_antivector_check(const f2::F2Subspace& v);

/// Columns: a basis of span{f_V : V singular}.
MatrixQ space_W();

/// Columns: basis of the vectors in the invariant subspace fixed by every
/// transvection (hence by the whole orthogonal group).
MatrixQ orthogonal_fixed_invariants();

/// Signs (s2, s3) with f_{V1} - s2 f_{V2} = s3 f_{V3}, scanning all four
/// choices; returns every choice that works.
std::vector<std::array<int, 2>> difference_identity_signs(const f2::F2Subspace& v1,
                                                          const f2::F2Subspace& v2,
                                                          const f2::F2Subspace& v3);

}  // namespace octet::weil
