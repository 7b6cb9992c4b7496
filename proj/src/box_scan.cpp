#include "octet/box_scan.hpp"

#include "box_kernel.hpp"
#include "octet/isometry.hpp"

#include <stdexcept>

namespace octet::lattice {

bool BoxScanReport::ok() const {
  bool anisotropic_only = true;
  for (unsigned a = 0; a < 64; ++a)
    if (alpha_counts[a] != 0 && f2::q(f2::F2Vec(a)) != 1) anisotropic_only = false;
  return roots > 0 && minus4 > 0 && rho_orthogonal == roots && sum_is_minus4 == roots &&
         double_reflection == roots && commutes_with_rho == roots && transvection == roots &&
         minus4_from_root == minus4 && anisotropic_only;
}

BoxScanReport minus4_vector_scan(int bound) {
  using detail::kGens;
  using detail::kN;
  if (bound < 2) throw std::invalid_argument("box scan needs bound >= 2");
  const NContext& n = n_context();
  const MatrixZ& gram = n.lattice.gram();
  if (n.disc.form.rank() != kGens) throw std::logic_error("discriminant group of N must have rank 6");

  detail::BoxKernelInput in;
  in.bound = bound;
  for (int i = 0; i < kN; ++i)
    for (int j = 0; j < kN; ++j) {
      in.gram[i][j] = gram(i, j).convert_to<int>();
      in.rho[i][j] = n.rho(i, j).convert_to<int>();
    }
  for (int i = 0; i < kGens; ++i) {
    if (n.disc.form.orders()[static_cast<std::size_t>(i)] != 2)
      throw std::logic_error("discriminant group of N must be 2-elementary");
    for (int k = 0; k < kN; ++k) {
      in.rows[i][k] = n.disc.coordinate_rows(i, k).convert_to<int>();
      in.gens[i][k] = numerator(Rational(n.disc.generators(k, i) * 2)).convert_to<int>();
    }
    in.dictionary[i] = static_cast<std::uint8_t>(n.dictionary.images[static_cast<std::size_t>(i)].bits());
  }
  for (unsigned a = 0; a < 64; ++a) {
    in.q[a] = static_cast<std::uint8_t>(f2::q(f2::F2Vec(a)));
    for (unsigned c = 0; c < 64; ++c) in.b[a][c] = static_cast<std::uint8_t>(f2::b(f2::F2Vec(a), f2::F2Vec(c)));
  }

  BoxScanReport rep;
  rep.bound = bound;
  detail::run_box_kernel(in, rep);
  return rep;
}

}  // namespace octet::lattice
