#include "oracles.hpp"
#include "octet/box_scan.hpp"
#include "octet/integer_matrix.hpp"
#include "octet/isometry.hpp"
#include "octet/json_io.hpp"

#include <set>
#include <doctest.h>

#include <map>
#include <random>

using namespace octet;
using namespace octet::lattice;

namespace {

MatrixZ d4_oracle() {
  // Roots e1-e2, e2-e3, e3-e4, e3+e4 under minus the dot product.
  const int roots[4][4] = {{1, -1, 0, 0}, {0, 1, -1, 0}, {0, 0, 1, -1}, {0, 0, 1, 1}};
  MatrixZ g(4, 4);
  for (int i = 0; i < 4; ++i)
    for (int j = 0; j < 4; ++j) {
      int s = 0;
      for (int k = 0; k < 4; ++k) s -= roots[i][k] * roots[j][k];
      g(i, j) = s;
    }
  return g;
}

}  // namespace

TEST_CASE("named lattices") {
  CHECK(named_lattice("U").gram() == oracle::from_rows({{0, 1}, {1, 0}}));
  CHECK(named_lattice("U(2)").gram() == oracle::from_rows({{0, 2}, {2, 0}}));
  CHECK(named_lattice("A1").gram() == oracle::from_rows({{-2}}));
  CHECK(named_lattice("A1(-1)").gram() == oracle::from_rows({{2}}));
  CHECK(named_lattice("D4").gram() == d4_oracle());
  CHECK(oracle::det(named_lattice("D4").gram()) == 4);
  CHECK(named_lattice("D4").determinant() == 4);
  CHECK(named_lattice("E8").determinant() == 1);
  CHECK(named_lattice("D10").determinant() == 4);
  CHECK(named_lattice("E8").is_even());
  CHECK(named_lattice("A1^3").rank() == 3);
  CHECK(named_lattice("U ⊕ U(2)").rank() == 4);
  CHECK(named_lattice("U+U(2)+D4+D4") == lattice_N());
  CHECK(named_lattice("U(2)+D4^2") == lattice_M());
  CHECK_THROWS_AS(named_lattice("X7"), std::invalid_argument);
  CHECK_THROWS_AS(named_lattice("D3"), std::invalid_argument);
  CHECK_THROWS_AS(GramLattice(oracle::from_rows({{0, 1}, {2, 0}})), std::invalid_argument);
  CHECK_FALSE(GramLattice(oracle::from_rows({{1}})).is_even());
}

TEST_CASE("D_n basis model") {
  for (int n : {4, 6, 8}) {
    const MatrixZ b = d_lattice_basis(n);
    const MatrixZ g = -b * b.transpose();
    CHECK(named_lattice("D" + std::to_string(n)).gram() == g);
    // Coordinate sums are even.
    for (Index i = 0; i < b.rows(); ++i) CHECK(b.row(i).sum() % 2 == 0);
  }
}

TEST_CASE("Smith normal form") {
  const MatrixZ a = oracle::from_rows({{2, 4, 4}, {-6, 6, 12}, {10, -4, -16}});
  const SmithForm s = smith_normal_form(a);
  CHECK(MatrixZ(s.P * a * s.Q) == s.D);
  CHECK(s.diagonal() == std::vector<Integer>{2, 6, 12});
  CHECK(abs(oracle::det(s.P)) == 1);
  CHECK(abs(oracle::det(s.Q)) == 1);
  const MatrixZ g = lattice_N().gram();
  Integer prod = 1;
  for (const auto& d : smith_normal_form(g).diagonal()) prod *= d;
  CHECK(prod == abs(oracle::det(g)));
}

TEST_CASE("integer kernel and Hermite basis") {
  MatrixZ a(2, 4);
  a << 1, 2, 3, 4, 2, 4, 6, 9;
  const MatrixZ k = integer_kernel(a);
  CHECK(k.cols() == 2);
  CHECK(MatrixZ(a * k).isZero());
  MatrixZ dup(3, 2);
  dup << 2, 0, 0, 2, 2, 2;
  CHECK(hermite_row_basis(dup).rows() == 2);
}

TEST_CASE("discriminant forms") {
  CHECK(discriminant_form(named_lattice("U")).form.group_order() == 1);
  const auto a1 = discriminant_form(named_lattice("A1")).form;
  CHECK(a1.orders() == std::vector<long>{2});
  CHECK(a1.q_values() == std::vector<Rational>{Rational(3, 2)});
  const auto d4 = discriminant_form(named_lattice("D4")).form;
  CHECK(d4.group_order() == 4);
  CHECK(d4.satisfies_polarization());
  for (const auto& x : d4.elements())
    if (!d4.is_zero(x)) CHECK(d4.q(x) == 1);
  for (const char* name : {"U(2)+A1^3", "D4+D4", "U+U(2)+D4+D4", "U(2)+D6", "E8+A1(-1)"}) {
    const auto l = named_lattice(name);
    const auto d = discriminant_form(l);
    CHECK(d.form.group_order() == abs(oracle::det(l.gram())));
    CHECK(d.form.satisfies_polarization());
    // Generators lie in L* and have the recorded q.
    for (Index i = 0; i < d.generators.cols(); ++i) {
      const VectorQ g = d.generators.col(i);
      CHECK(is_integral(MatrixQ(to_rational(l.gram()) * g)));
      CHECK(mod(l.inner(g, g), Rational(2)) == d.form.q_values()[static_cast<std::size_t>(i)]);
    }
  }
  CHECK_THROWS_AS(discriminant_form(GramLattice(oracle::from_rows({{1}}))), std::domain_error);
  CHECK_THROWS_AS(discriminant_form(GramLattice(oracle::from_rows({{0, 0}, {0, 2}}))), std::domain_error);
}

TEST_CASE("finite form algebra") {
  const auto u3 = FiniteQuadraticForm::u3();
  CHECK(u3.group_order() == 64);
  for (const auto& x : u3.elements()) {
    unsigned bits = 0;
    for (int i = 0; i < 6; ++i) bits |= static_cast<unsigned>(x[static_cast<std::size_t>(i)]) << i;
    CHECK(u3.q(x) == oracle::q(bits));
  }
  CHECK(find_isometry(u3, u3.negated()).has_value());
  const auto sum = discriminant_form(named_lattice("A1")).form + discriminant_form(named_lattice("A1")).form;
  CHECK(sum.group_order() == 4);
  CHECK_FALSE(find_isometry(sum, discriminant_form(named_lattice("U(2)")).form).has_value());
  CHECK_THROWS_AS(FiniteQuadraticForm({1}, {Rational(0)}, MatrixQ::Zero(1, 1)), std::invalid_argument);
}

TEST_CASE("u3 dictionary for N") {
  const auto& n = n_context();
  const auto& f = n.disc.form;
  REQUIRE(n.dictionary.images.size() == 6);
  std::set<unsigned> seen;
  for (const auto& x : f.elements()) {
    const auto u = n.dictionary(x);
    seen.insert(u.bits());
    CHECK(Rational(oracle::q(u.bits())) == f.q(x));
  }
  CHECK(seen.size() == 64);
  CHECK_THROWS_AS(identify_with_u3(discriminant_form(named_lattice("U(2)+A1^3")).form), std::domain_error);
  CHECK_NOTHROW(identify_with_u3(discriminant_form(lattice_M()).form));
}

TEST_CASE("overlattice of U + A1^8") {
  const auto ov = u_a1_8_overlattice();
  CHECK(ov.lattice.is_even());
  CHECK(ov.lattice.determinant() == named_lattice("U+A1^8").determinant() / 4);
  CHECK(oracle::det(ov.lattice.gram()) == -64);
  const auto qm = discriminant_form(lattice_M()).form;
  const auto qo = discriminant_form(ov.lattice).form;
  const auto iso = find_isometry(qo, qm);
  REQUIRE(iso.has_value());
  CHECK(is_isometry(qo, qm, *iso));
  const auto base = named_lattice("U+A1^8");
  VectorQ odd = VectorQ::Zero(base.rank());
  odd(2) = Rational(1, 2);
  CHECK_THROWS_AS(overlattice(base, odd), std::domain_error);
  CHECK(overlattice(base, VectorQ::Zero(base.rank())).lattice == base);
}

TEST_CASE("lattice pairs") {
  const auto checks = lattice_pair_checks();
  REQUIRE(checks.size() == 10);
  for (const auto& c : checks) {
    CHECK(c.ok());
    CHECK(c.picard_rank + c.transcendental_rank == 22);
    CHECK(named_lattice(c.row.picard).rank() == c.picard_rank);
  }
  CHECK(checks[0].row.picard == "U(2)+D4+D4");
}

TEST_CASE("rho") {
  const auto& n = n_context();
  const MatrixZ g = n.lattice.gram(), r = n.rho;
  CHECK(MatrixZ(r.transpose() * g * r) == g);
  const MatrixZ r2 = r * r;
  CHECK(MatrixZ(r2 * r2) == MatrixZ::Identity(12, 12));
  CHECK(r2 == MatrixZ(-MatrixZ::Identity(12, 12)));
  CHECK(abs(oracle::det(MatrixZ(r - MatrixZ::Identity(12, 12)))) == 64);
  // rho1 on (e, f, e', f'): e -> -e - e', f -> f - f', e' -> e' + 2e, f' -> 2f - f'.
  CHECK(rho1() == oracle::from_rows({{-1, 0, 2, 0}, {0, 1, 0, 2}, {-1, 0, 1, 0}, {0, -1, 0, -1}}));
  // rho0 (x1, x2, x3, x4) = (x2, -x1, x4, -x3) in coordinates, moved to the root basis.
  const MatrixZ coord = oracle::from_rows({{0, 1, 0, 0}, {-1, 0, 0, 0}, {0, 0, 0, 1}, {0, 0, -1, 0}});
  const MatrixZ bt = d_lattice_basis(4).transpose();
  CHECK(MatrixZ(bt * rho0()) == MatrixZ(coord * bt));
  CHECK(check_rho(n.lattice, r).ok());
  CHECK_FALSE(check_rho(n.lattice, MatrixZ::Identity(12, 12)).ok());
}

TEST_CASE("hermitian form") {
  const auto& n = n_context();
  auto unit = [](Index i) {
    VectorZ v = VectorZ::Zero(12);
    v(i) = 1;
    return v;
  };
  const GaussianMatrix d4 = hermitian_gram(n.lattice, n.rho, {unit(4), unit(5)});
  CHECK(d4[0][0] == Gaussian{-2, 0});
  CHECK(d4[0][1] == Gaussian{1, -1});
  CHECK(d4[1][0] == Gaussian{1, 1});
  const GaussianMatrix u = hermitian_gram(n.lattice, n.rho, {unit(0), unit(1)});
  CHECK(u[0][0] == Gaussian{0, 0});
  CHECK(u[0][1] == Gaussian{1, 1});
  CHECK(u[1][0] == Gaussian{1, -1});
  std::mt19937_64 rng(7);
  std::uniform_int_distribution<int> d(-3, 3);
  for (int t = 0; t < 50; ++t) {
    VectorZ x(12), y(12);
    for (Index i = 0; i < 12; ++i) {
      x(i) = d(rng);
      y(i) = d(rng);
    }
    CHECK(hermitian_form(n.lattice, n.rho, x, x).im == 0);
    CHECK(hermitian_form(n.lattice, n.rho, x, y) == hermitian_form(n.lattice, n.rho, y, x).conj());
    const Gaussian z{2, -1};
    CHECK(hermitian_form(n.lattice, n.rho, gaussian_action(n.rho, z, x), y) ==
          z * hermitian_form(n.lattice, n.rho, x, y));
  }
  CHECK(to_string(Gaussian{1, -1}) == "1-i");
  CHECK(to_string(Gaussian{0, 1}) == "i");
}

TEST_CASE("phi") { CHECK(phi_map_check().ok()); }

TEST_CASE("reflections") {
  const auto& n = n_context();
  VectorZ r = VectorZ::Zero(12);
  r(0) = 1;
  r(1) = -1;
  const MatrixZ s = root_reflection(n.lattice, r);
  CHECK(MatrixZ(s * s) == MatrixZ::Identity(12, 12));
  CHECK(VectorZ(s * r) == VectorZ(-r));
  const auto rep = reflection_identities(r);
  CHECK(rep.ok());
  CHECK(oracle::q(rep.alpha.bits()) == 1);
  const MatrixZ ri = hermitian_reflection(n.lattice, n.rho, r, Gaussian{0, 1});
  CHECK(MatrixZ(ri * n.rho) == MatrixZ(n.rho * ri));
  const MatrixZ rm = hermitian_reflection(n.lattice, n.rho, r, Gaussian{-1, 0});
  CHECK(rm == MatrixZ(root_reflection(n.lattice, r) * root_reflection(n.lattice, VectorZ(n.rho * r))));
  CHECK_THROWS_AS(root_reflection(n.lattice, VectorZ::Zero(12)), std::invalid_argument);
  CHECK_THROWS_AS(reflection_identities(VectorZ::Zero(12)), std::invalid_argument);
  VectorZ d = VectorZ::Zero(12);
  d(4) = 1;
  CHECK(reflection_identities(d).ok());
}

TEST_CASE("root pair complement") {
  VectorZ r = VectorZ::Zero(12);
  r(0) = 1;
  r(1) = -1;
  const auto c = root_pair_complement(r);
  CHECK(c.ok());
  CHECK(c.rank == 10);
  CHECK(c.signature == Inertia{2, 8, 0});
}

TEST_CASE("box scan counts agree with blockwise histograms") {
  const MatrixZ g = lattice_N().gram();
  for (int bound : {2, 3}) {
    const BoxScanReport rep = minus4_vector_scan(bound);
    CHECK(rep.ok());
    CHECK(rep.bound == bound);
    CHECK(rep.roots == oracle::count_norm(g, bound, -2, false));
    CHECK(rep.minus4 == oracle::count_norm(g, bound, -4, true));
    long alpha_total = 0;
    for (unsigned a = 0; a < 64; ++a) {
      alpha_total += rep.alpha_counts[a];
      if (rep.alpha_counts[a]) CHECK(oracle::q(a) == 1);
    }
    CHECK(alpha_total == rep.roots);
  }
  CHECK_THROWS_AS(minus4_vector_scan(1), std::invalid_argument);
}

TEST_CASE("sampled roots satisfy the exact reflection identities") {
  const auto& n = n_context();
  std::mt19937_64 rng(11);
  std::uniform_int_distribution<int> d(-2, 2);
  int found = 0;
  for (int t = 0; t < 400000 && found < 25; ++t) {
    VectorZ r(12);
    for (Index i = 0; i < 12; ++i) r(i) = d(rng);
    if (n.lattice.inner(r, r) != -2) continue;
    ++found;
    CHECK(reflection_identities(r).ok());
    CHECK(n.lattice.inner(r, VectorZ(n.rho * r)) == 0);
  }
  CHECK(found == 25);
}

TEST_CASE("lattice and form JSON") {
  const auto l = named_lattice("U(2)+A1");
  CHECK(io::lattice_from_json(io::lattice_json(l)) == l);
  const auto f = discriminant_form(named_lattice("D4+A1")).form;
  const auto back = io::form_from_json(io::form_json(f));
  CHECK(back.orders() == f.orders());
  CHECK(back.q_values() == f.q_values());
  CHECK(back.pairings() == f.pairings());
}
