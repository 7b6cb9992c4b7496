#include "octet/isometry.hpp"

#include "octet/integer_matrix.hpp"

#include <set>
#include <stdexcept>

namespace octet::lattice {

MatrixZ rho1() {
  // Columns: rho(e) = -e - e', rho(f) = f - f', rho(e') = e' + 2e, rho(f') = 2f - f'.
  MatrixZ m(4, 4);
  m << -1, 0, 2, 0,
        0, 1, 0, 2,
       -1, 0, 1, 0,
        0, -1, 0, -1;
  return m;
}

MatrixZ rho0() {
  MatrixZ r(4, 4);
  r << 0, 1, 0, 0,
      -1, 0, 0, 0,
       0, 0, 0, 1,
       0, 0, -1, 0;
  // Basis vectors are the rows of B; coordinates c give x = B^T c.
  const MatrixQ bt = to_rational(MatrixZ(d_lattice_basis(4).transpose()));
  return to_integer(inverse(bt) * to_rational(r) * bt);
}

MatrixZ rho_on_N() {
  MatrixZ m = MatrixZ::Zero(12, 12);
  m.block(0, 0, 4, 4) = rho1();
  m.block(4, 4, 4, 4) = rho0();
  m.block(8, 8, 4, 4) = rho0();
  return m;
}

bool preserves_gram(const GramLattice& l, const MatrixZ& m) {
  return MatrixZ(m.transpose() * l.gram() * m) == l.gram();
}

const NContext& n_context() {
  static const NContext ctx = [] {
    NContext c;
    c.lattice = lattice_N();
    c.rho = rho_on_N();
    c.disc = discriminant_form(c.lattice);
    c.dictionary = identify_with_u3(c.disc.form);
    return c;
  }();
  return ctx;
}

bool RhoReport::ok() const {
  return isometry && order_four && square_not_identity && fixed_point_free && trivial_on_discriminant &&
         characteristic_polynomial;
}

RhoReport check_rho(const GramLattice& l, const MatrixZ& rho) {
  RhoReport rep;
  const Index n = l.rank();
  const MatrixZ id = MatrixZ::Identity(n, n);
  const MatrixZ sq = rho * rho;
  rep.isometry = preserves_gram(l, rho);
  rep.order_four = MatrixZ(sq * sq) == id;
  rep.square_not_identity = sq != id;
  rep.fixed_point_free = nullspace(to_rational(MatrixZ(rho - id))).cols() == 0;
  // N* is spanned by the columns of G^-1.
  rep.trivial_on_discriminant = is_integral(to_rational(MatrixZ(rho - id)) * inverse(to_rational(l.gram())));
  const auto cp = characteristic_polynomial(to_rational(rho));
  rep.characteristic_polynomial = n % 2 == 0 && static_cast<Index>(cp.size()) == n + 1;
  if (rep.characteristic_polynomial) {
    // (t^2 + 1)^(n/2)
    std::vector<Rational> expected(static_cast<std::size_t>(n + 1), Rational(0));
    Integer binom = 1;
    const Index half = n / 2;
    for (Index k = 0; k <= half; ++k) {
      expected[static_cast<std::size_t>(2 * k)] = Rational(binom);
      binom = binom * (half - k) / (k + 1);
    }
    rep.characteristic_polynomial = cp == expected;
  }
  return rep;
}

// ---------------------------------------------------------------------------

std::string to_string(const Gaussian& z) {
  if (z.im == 0) return z.re.str();
  std::string im = z.im == 1 ? "i" : z.im == -1 ? "-i" : z.im.str() + "i";
  if (z.re == 0) return im;
  return z.re.str() + (z.im > 0 ? "+" : "") + im;
}

VectorZ gaussian_action(const MatrixZ& rho, const Gaussian& z, const VectorZ& x) {
  return VectorZ(x * z.re + rho * x * z.im);
}

Gaussian hermitian_form(const GramLattice& l, const MatrixZ& rho, const VectorZ& x, const VectorZ& y) {
  return {l.inner(x, y), l.inner(x, VectorZ(rho * y))};
}

GaussianMatrix hermitian_gram(const GramLattice& l, const MatrixZ& rho, const std::vector<VectorZ>& basis) {
  GaussianMatrix m(basis.size(), std::vector<Gaussian>(basis.size()));
  for (std::size_t i = 0; i < basis.size(); ++i)
    for (std::size_t j = 0; j < basis.size(); ++j) m[i][j] = hermitian_form(l, rho, basis[i], basis[j]);
  return m;
}

bool PhiReport::ok() const {
  return maps_into_dual && one_minus_i_lands_back && bijective && quotient_size == 64 && image_size == 64;
}

PhiReport phi_map_check() {
  const NContext& n = n_context();
  const Index dim = n.lattice.rank();
  const MatrixZ id = MatrixZ::Identity(dim, dim);
  const MatrixQ phi = to_rational(MatrixZ(id + n.rho)) / Rational(2);
  PhiReport rep;
  rep.maps_into_dual = is_integral(to_rational(n.lattice.gram()) * phi);
  const MatrixZ one_minus_i = id - n.rho;
  rep.one_minus_i_lands_back = phi * to_rational(one_minus_i) == to_rational(id);

  // N / (1 - i) N through the Smith form of (1 - rho).
  const SmithForm snf = smith_normal_form(one_minus_i);
  const auto diag = snf.diagonal();
  const MatrixZ p_inv = to_integer(inverse(to_rational(snf.P)));
  std::vector<Index> free_idx;
  std::vector<long> orders;
  for (std::size_t i = 0; i < diag.size(); ++i)
    if (diag[i] != 1) {
      free_idx.push_back(static_cast<Index>(i));
      orders.push_back(diag[i].convert_to<long>());
    }
  std::set<GroupElement> images;
  std::vector<long> c(orders.size(), 0);
  bool more = true;
  long count = 0;
  while (more) {
    VectorZ coeffs = VectorZ::Zero(dim);
    for (std::size_t k = 0; k < c.size(); ++k) coeffs(free_idx[k]) = c[k];
    const VectorZ x = p_inv * coeffs;
    images.insert(n.disc.coordinates(phi * to_rational(x)));
    ++count;
    more = false;
    for (std::size_t k = c.size(); k-- > 0;) {
      if (++c[k] < orders[k]) {
        more = true;
        break;
      }
      c[k] = 0;
    }
  }
  rep.quotient_size = count;
  rep.image_size = static_cast<long>(images.size());
  rep.bijective = rep.image_size == count && count == n.disc.form.group_order();
  return rep;
}

// ---------------------------------------------------------------------------

namespace {

void require_root(const GramLattice& l, const VectorZ& r) {
  if (r.size() != l.rank()) throw std::invalid_argument("vector has the wrong length");
  if (l.inner(r, r) != -2) throw std::invalid_argument("reflection needs r^2 = -2");
}

}  // namespace

MatrixZ root_reflection(const GramLattice& l, const VectorZ& r) {
  require_root(l, r);
  const VectorZ gr = l.gram() * r;
  return MatrixZ(MatrixZ::Identity(l.rank(), l.rank()) + r * gr.transpose());
}

MatrixZ hermitian_reflection(const GramLattice& l, const MatrixZ& rho, const VectorZ& r, const Gaussian& eps) {
  require_root(l, r);
  const VectorZ rr = rho * r;
  if (l.inner(r, rr) != 0) throw std::invalid_argument("hermitian reflection needs <r, rho r> = 0");
  const bool unit = eps == Gaussian{-1, 0} || eps == Gaussian{0, 1} || eps == Gaussian{0, -1};
  if (!unit) throw std::invalid_argument("eps must be -1, i or -i");
  const Gaussian one_minus_eps{1 - eps.re, -eps.im};
  const VectorZ gr = l.gram() * r, grr = l.gram() * rr;
  MatrixZ out = MatrixZ::Identity(l.rank(), l.rank());
  for (Index k = 0; k < l.rank(); ++k) {
    const Gaussian num = one_minus_eps * Gaussian{gr(k), grr(k)};
    // h(r, r) = -2
    if (num.re % 2 != 0 || num.im % 2 != 0) throw std::domain_error("hermitian reflection is not integral");
    const Gaussian c{-num.re / 2, -num.im / 2};
    out.col(k) -= gaussian_action(rho, c, r);
  }
  return out;
}

bool ReflectionReport::ok() const {
  return minus_one_is_double_reflection && commutes_with_rho && isometry && order_four && square_is_minus_one &&
         alpha_anisotropic && induces_transvection;
}

ReflectionReport reflection_identities(const VectorZ& r) {
  const NContext& n = n_context();
  const GramLattice& l = n.lattice;
  require_root(l, r);
  const VectorZ rr = n.rho * r;
  ReflectionReport rep;
  const MatrixZ rm = hermitian_reflection(l, n.rho, r, {-1, 0});
  const MatrixZ ri = hermitian_reflection(l, n.rho, r, {0, 1});
  rep.minus_one_is_double_reflection = rm == MatrixZ(root_reflection(l, r) * root_reflection(l, rr));
  rep.commutes_with_rho = MatrixZ(ri * n.rho) == MatrixZ(n.rho * ri);
  rep.isometry = preserves_gram(l, ri) && preserves_gram(l, rm);
  const MatrixZ ri2 = ri * ri;
  rep.square_is_minus_one = ri2 == rm;
  rep.order_four = MatrixZ(ri2 * ri2) == MatrixZ::Identity(l.rank(), l.rank());

  rep.alpha = n.u3_class(to_rational(VectorZ(r + rr)) / Rational(2));
  rep.alpha_anisotropic = f2::q(rep.alpha) == 1;
  if (rep.alpha_anisotropic) {
    const f2::Permutation64 t = f2::transvection(rep.alpha);
    const MatrixQ riq = to_rational(ri);
    rep.induces_transvection = true;
    for (Index j = 0; j < n.disc.generators.cols(); ++j) {
      const VectorQ g = n.disc.generators.col(j);
      if (n.u3_class(riq * g) != t(n.u3_class(g))) rep.induces_transvection = false;
    }
  }
  return rep;
}

// ---------------------------------------------------------------------------

bool ComplementReport::ok() const {
  return rank == 10 && signature == Inertia{2, 8, 0} && root_pair_is_a1_squared && index_two &&
         discriminant_matches;
}

ComplementReport root_pair_complement(const VectorZ& r) {
  const NContext& n = n_context();
  const GramLattice& l = n.lattice;
  require_root(l, r);
  const VectorZ rr = n.rho * r;
  MatrixZ pair(12, 2);
  pair.col(0) = r;
  pair.col(1) = rr;
  const MatrixZ pair_gram = pair.transpose() * l.gram() * pair;
  ComplementReport rep;
  MatrixZ a1a1 = MatrixZ::Zero(2, 2);
  a1a1(0, 0) = a1a1(1, 1) = -2;
  rep.root_pair_is_a1_squared = pair_gram == a1a1;

  const MatrixZ k = integer_kernel(MatrixZ(pair.transpose() * l.gram()));
  const GramLattice perp(MatrixZ(k.transpose() * l.gram() * k), "perp");
  rep.rank = perp.rank();
  rep.signature = inertia(to_rational(perp.gram()));
  const Integer ratio = abs(perp.determinant() * GramLattice(pair_gram).determinant());
  rep.index_two = ratio == 4 * abs(l.determinant());
  const auto target = discriminant_form(named_lattice("U+U(2)+D4+A1^2"));
  rep.discriminant_matches = find_isometry(discriminant_form(perp).form, target.form).has_value();
  return rep;
}

// ---------------------------------------------------------------------------

std::vector<LatticePairRow> lattice_pair_rows() {
  return {
      {1, "(11111111)", "U(2)+D4+D4", "U+U(2)+D4+D4"},
      {2, "(2111111)", "U+D4+D4+A1^2", "U+U(2)+D4+A1^2"},
      {3, "(221111)", "U+D6+D4+A1^2", "U+U(2)+A1^4"},
      {4, "(22211)", "U+D6+D6+A1^2", "A1(-1)^2+A1^4"},
      {5, "(2222)", "U+D8+D8", "U(2)+U(2)"},
      {6, "(311111)", "U+D8+D4", "U+U(2)+D4"},
      {7, "(32111)", "U+E8+D4+A1^2", "U+U(2)+A1^2"},
      {8, "(3221)", "U+E8+D6+A1^2", "A1(-1)^2+A1^2"},
      {9, "(3311)", "U+E8+D8", "U+U(2)"},
      {10, "(332)", "U+E8+D10", "A1(-1)^2"},
  };
}

bool LatticePairCheck::ok() const { return rank_sum_22 && signatures_ok && complementary; }

std::vector<LatticePairCheck> lattice_pair_checks() {
  std::vector<LatticePairCheck> out;
  for (const auto& row : lattice_pair_rows()) {
    LatticePairCheck c;
    c.row = row;
    const GramLattice p = named_lattice(row.picard), t = named_lattice(row.transcendental);
    c.picard_rank = p.rank();
    c.transcendental_rank = t.rank();
    c.rank_sum_22 = p.rank() + t.rank() == 22;
    c.picard_signature = inertia(to_rational(p.gram()));
    c.transcendental_signature = inertia(to_rational(t.gram()));
    c.signatures_ok = c.picard_signature == Inertia{1, p.rank() - 1, 0} &&
                      c.transcendental_signature == Inertia{2, t.rank() - 2, 0};
    c.complementary =
        find_isometry(discriminant_form(p).form, discriminant_form(t).form.negated()).has_value();
    out.push_back(c);
  }
  return out;
}

Overlattice u_a1_8_overlattice() {
  const GramLattice l = named_lattice("U+A1^8");
  VectorQ glue = VectorQ::Zero(10);
  for (Index i = 2; i < 10; ++i) glue(i) = Rational(1, 2);
  return overlattice(l, glue);
}

}  // namespace octet::lattice
