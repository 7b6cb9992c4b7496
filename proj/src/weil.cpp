#include "octet/weil.hpp"

#include "octet/linalg.hpp"

#include <stdexcept>

namespace octet::weil {

using f2::F2Vec;

WeilMatrix weil_rho_T() {
  WeilMatrix m = WeilMatrix::Zero(f2::kSize, f2::kSize);
  for (F2Vec a : f2::all_vectors()) m(a.bits(), a.bits()) = f2::q(a) ? -1 : 1;
  return m;
}

WeilMatrix weil_rho_S() {
  WeilMatrix m(f2::kSize, f2::kSize);
  const Rational eighth(1, 8);
  for (F2Vec a : f2::all_vectors())
    for (F2Vec beta : f2::all_vectors())
      m(beta.bits(), a.bits()) = f2::b(beta, a) ? -eighth : eighth;
  return m;
}

MatrixQ permutation_matrix(const f2::Permutation64& g) {
  MatrixQ m = MatrixQ::Zero(f2::kSize, f2::kSize);
  for (F2Vec a : f2::all_vectors()) m(g(a).bits(), a.bits()) = 1;
  return m;
}

CharacterDecomposition decompose_character(const Rational& tr_identity,
                                           const Rational& tr_involution,
                                           const Rational& tr_order3) {
  // Rows: trivial, sign, standard; columns: identity, involutions, 3-cycles.
  const int table[3][3] = {{1, 1, 1}, {1, -1, 1}, {2, 0, -1}};
  const int class_size[3] = {1, 3, 2};
  const Rational chi[3] = {tr_identity, tr_involution, tr_order3};
  Integer m[3];
  for (int r = 0; r < 3; ++r) {
    Rational s = 0;
    for (int c = 0; c < 3; ++c) s += class_size[c] * table[r][c] * chi[c];
    s /= 6;
    if (!is_integer(s)) throw std::domain_error("not a character of S_3");
    m[r] = numerator(s);
  }
  return {m[0], m[1], m[2]};
}

CharacterDecomposition character_decomposition() {
  const WeilMatrix s = weil_rho_S(), t = weil_rho_T();
  const WeilMatrix st = s * t;
  return decompose_character(Rational(f2::kSize), t.trace(), st.trace());
}

MatrixQ invariant_subspace() {
  const WeilMatrix id = WeilMatrix::Identity(f2::kSize, f2::kSize);
  MatrixQ stacked(2 * f2::kSize, f2::kSize);
  stacked.topRows(f2::kSize) = weil_rho_T() - id;
  stacked.bottomRows(f2::kSize) = weil_rho_S() - id;
  return nullspace(stacked);
}

GroupRingVector indicator_sum(const f2::F2Subspace& s) {
  GroupRingVector v = GroupRingVector::Zero(f2::kSize);
  for (F2Vec a : s.elements()) v(a.bits()) = 1;
  return v;
}

GroupRingVector f_V(const f2::F2Subspace& v) {
  const f2::SingularSubspace sv = f2::make_singular(v);
  const auto [plus, minus] = f2::isotropic_plane_extensions(sv.kernel());
  return indicator_sum(plus) - indicator_sum(minus);
}

MatrixQ antivector_space(const f2::F2Subspace& v) {
  const f2::SingularSubspace sv = f2::make_singular(v);
  const WeilMatrix id = WeilMatrix::Identity(f2::kSize, f2::kSize);
  MatrixQ stacked(4 * f2::kSize, f2::kSize);
  for (int i = 0; i < 4; ++i)
    stacked.middleRows(i * f2::kSize, f2::kSize) =
        permutation_matrix(f2::transvection(sv.anisotropic[static_cast<std::size_t>(i)])) + id;
  return nullspace(stacked);
}

Index unique_antivector_check(const f2::F2Subspace& v) { return antivector_space(v).cols(); }

MatrixQ space_W() {
  const auto singular = f2::enumerate_singular_subspaces();
  MatrixQ rows(static_cast<Index>(singular.size()), f2::kSize);
  for (std::size_t i = 0; i < singular.size(); ++i)
    rows.row(static_cast<Index>(i)) = f_V(singular[i].space).transpose();
  const auto e = rref(rows);
  return e.reduced.topRows(e.rank()).transpose();
}

MatrixQ orthogonal_fixed_invariants() {
  const WeilMatrix id = WeilMatrix::Identity(f2::kSize, f2::kSize);
  const auto aniso = f2::anisotropic_vectors();
  MatrixQ stacked((2 + static_cast<Index>(aniso.size())) * f2::kSize, f2::kSize);
  stacked.topRows(f2::kSize) = weil_rho_T() - id;
  stacked.middleRows(f2::kSize, f2::kSize) = weil_rho_S() - id;
  for (std::size_t i = 0; i < aniso.size(); ++i)
    stacked.middleRows((2 + static_cast<Index>(i)) * f2::kSize, f2::kSize) =
        permutation_matrix(f2::transvection(aniso[i])) - id;
  return nullspace(stacked);
}

std::vector<std::array<int, 2>> difference_identity_signs(const f2::F2Subspace& v1,
                                                          const f2::F2Subspace& v2,
                                                          const f2::F2Subspace& v3) {
  const GroupRingVector a = f_V(v1), b = f_V(v2), c = f_V(v3);
  std::vector<std::array<int, 2>> hits;
  for (int s2 : {1, -1})
    for (int s3 : {1, -1})
      if (a - Rational(s2) * b == Rational(s3) * c) hits.push_back({s2, s3});
  return hits;
}

}  // namespace octet::weil
