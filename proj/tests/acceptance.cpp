// Acceptance criteria 1-14, one PASS/FAIL line each.

#include "oracles.hpp"
#include "octet/box_scan.hpp"
#include "octet/etaq.hpp"
#include "octet/isometry.hpp"
#include "octet/relations.hpp"
#include "octet/suites.hpp"
#include "octet/tableaux.hpp"
#include "octet/weil.hpp"

#include <functional>
#include <iostream>
#include <set>
#include <sstream>

using namespace octet;

namespace {

int failures = 0;

void criterion(int n, const std::string& title, const std::function<bool(std::ostream&)>& body) {
  std::ostringstream detail;
  bool ok = false;
  try {
    ok = body(detail);
  } catch (const std::exception& e) {
    detail << "exception: " << e.what();
  }
  std::cout << (ok ? "PASS" : "FAIL") << "  " << n << ". " << title;
  if (!ok && !detail.str().empty()) std::cout << "  [" << detail.str() << "]";
  std::cout << std::endl;
  failures += !ok;
}

bool equal_f2(const f2::F2Subspace& a, const f2::F2Subspace& b) { return a == b; }

}  // namespace

int main() {
  using f2::F2Vec;
  using f2::VectorType;

  criterion(1, "vector census (1, 35, 28)", [](std::ostream& os) {
    const auto c = f2::census();
    int iso = 0, aniso = 0;
    for (unsigned x = 1; x < 64; ++x) (oracle::q(x) ? aniso : iso) += 1;
    os << c.zero << "," << c.isotropic << "," << c.anisotropic;
    return c == f2::TypeCounts{1, 35, 28} && iso == 35 && aniso == 28;
  });

  criterion(2, "pair census, nine (m0, m1) columns", [](std::ostream& os) {
    // Rows: alpha of type 00, 0, 1; columns: beta of type 00, 0, 1.
    const int expect[3][3][2] = {{{1, 0}, {35, 0}, {28, 0}}, {{1, 0}, {19, 16}, {12, 16}}, {{1, 0}, {15, 20}, {16, 12}}};
    bool ok = true;
    for (unsigned a = 0; a < 64; ++a) {
      const int ta = a == 0 ? 0 : (oracle::q(a) ? 2 : 1);
      const auto pc = f2::pair_census(F2Vec(a));
      for (int tb = 0; tb < 3; ++tb)
        for (int s = 0; s < 2; ++s) {
          int brute = 0;
          for (unsigned x = 0; x < 64; ++x)
            brute += (x == 0 ? 0 : (oracle::q(x) ? 2 : 1)) == tb && oracle::b(a, x) == s;
          const int lib = pc.counts[static_cast<std::size_t>(tb)][static_cast<std::size_t>(s)];
          if (lib != expect[ta][tb][s] || brute != lib) {
            os << "alpha " << a << " type " << tb << " side " << s << ": " << lib;
            ok = false;
          }
        }
    }
    return ok;
  });

  criterion(3, "transvection closure: order 40320, 28 generators, orbits {35, 28}", [](std::ostream& os) {
    const auto g = f2::generate_orthogonal_group();
    std::vector<std::size_t> sizes;
    for (const auto& o : g.nonzero_orbits()) sizes.push_back(o.size());
    std::sort(sizes.begin(), sizes.end());
    os << "order " << g.order() << ", generators " << g.generators.size();
    return g.order() == 40320 && g.generators.size() == 28 && sizes == std::vector<std::size_t>{28, 35} &&
           sizes == oracle::transvection_orbit_sizes();
  });

  criterion(4, "Weil relations S^2 = (ST)^3 = id, traces (64, 8, 1)", [](std::ostream& os) {
    const MatrixQ s = weil::weil_rho_S(), t = weil::weil_rho_T(), id = MatrixQ::Identity(64, 64);
    const MatrixQ st = s * t;
    const bool rel = MatrixQ(s * s) == id && MatrixQ(st * st * st) == id;
    const auto s8 = oracle::eight_S(), tt = oracle::T_matrix();
    const bool oracle_ok = oracle::is_scalar(oracle::multiply(s8, s8), 64) &&
                           oracle::trace(oracle::multiply(s8, tt)) == 8 && oracle::trace(tt) == 8;
    os << "traces " << to_string(id.trace()) << ", " << to_string(t.trace()) << ", " << to_string(st.trace());
    return rel && oracle_ok && id.trace() == 64 && t.trace() == 8 && st.trace() == 1;
  });

  criterion(5, "character decomposition (15, 7, 21)", [](std::ostream& os) {
    const auto d = weil::character_decomposition();
    os << d.trivial << "," << d.alternating << "," << d.standard;
    // Character table of S_3 with class sizes 1, 3, 2 at traces (64, 8, 1).
    const int trivial = (64 + 3 * 8 + 2 * 1) / 6, sign = (64 - 3 * 8 + 2 * 1) / 6, standard = (2 * 64 - 2 * 1) / 6;
    return d == weil::CharacterDecomposition{15, 7, 21} && trivial == 15 && sign == 7 && standard == 21;
  });

  criterion(6, "invariant subspace of dimension 15 containing the 30 isotropic sums", [](std::ostream& os) {
    const MatrixQ inv = weil::invariant_subspace();
    const auto maximal = f2::enumerate_isotropic_subspaces(3);
    const auto brute = oracle::subspaces(3);
    const auto brute_count = std::count_if(brute.begin(), brute.end(), oracle::totally_isotropic);
    bool inside = true;
    for (const auto& m : maximal) inside &= in_column_span(inv, weil::indicator_sum(m));
    const bool stable = f2::enumerate_isotropic_subspaces(3) == maximal;
    os << "dim " << inv.cols() << ", maximal " << maximal.size() << ", brute " << brute_count;
    return inv.cols() == 15 && rank(inv) == 15 && maximal.size() == 30 && brute_count == 30 && inside && stable;
  });

  criterion(7, "f_V spans the unique antivector line; span of f_V is 14; one sign solution", [](std::ostream& os) {
    const auto singular = f2::enumerate_singular_subspaces();
    bool unique = singular.size() == 105;
    for (const auto& v : singular) {
      const MatrixQ anti = weil::antivector_space(v.space);
      const VectorQ f = weil::f_V(v.space);
      bool minus = true;
      for (auto a : v.anisotropic) {
        VectorQ moved(64);
        for (unsigned x = 0; x < 64; ++x) moved(oracle::transvect(a.bits(), x)) = f(x);
        minus &= moved == VectorQ(-f);
      }
      unique &= anti.cols() == 1 && in_column_span(anti, f) && minus;
    }
    MatrixQ all(64, 105);
    for (std::size_t i = 0; i < singular.size(); ++i) all.col(static_cast<Index>(i)) = weil::f_V(singular[i].space);
    const Index span = rank(all);
    const F2Vec a1 = F2Vec::e(1) + F2Vec::f(1), a2 = F2Vec::e(2) + F2Vec::f(2), a3 = F2Vec::e(3) + F2Vec::f(3);
    const auto v1 = f2::F2Subspace::span({a1, a2, a3});
    const auto v2 = f2::F2Subspace::span({a1, a2, a1 + F2Vec::e(3)});
    const auto v3 = f2::F2Subspace::span({a1, a2, a1 + F2Vec::f(3)});
    int brute = 0;
    for (int x : {-1, 1})
      for (int y : {-1, 1})
        brute += VectorQ(weil::f_V(v1) - Rational(x) * weil::f_V(v2)) == VectorQ(Rational(y) * weil::f_V(v3));
    const auto signs = weil::difference_identity_signs(v1, v2, v3);
    os << "span " << span << ", sign solutions " << signs.size() << "/" << brute;
    return unique && span == 14 && weil::space_W().cols() == 14 && signs.size() == 1 && brute == 1 &&
           !equal_f2(v1, v2) && !equal_f2(v2, v3);
  });

  criterion(8, "h-series heads, exact T-equation to order 20, h00 + 7 h0 = 0", [](std::ostream& os) {
    const auto h = etaq::h_components(20);
    const Rational half(1, 2);
    const bool heads = h.h00.coefficient(0) == 56 && h.h00.coefficient(1) == 896 && h.h00.coefficient(2) == 8064 &&
                       h.h0.coefficient(0) == -8 && h.h0.coefficient(1) == -128 && h.h0.coefficient(2) == -1152 &&
                       h.h1.coefficient(-half) == 1 && h.h1.coefficient(half) == 36 &&
                       h.h1.coefficient(3 * half) == 402;
    const auto a = oracle::eta2_quotient(42), b = oracle::eta_half_quotient(42);
    bool matches = true;
    for (std::size_t k = 0; k < 40; ++k) {
      matches &= h.h00.coefficient(Rational(static_cast<long>(k), 2)) == Rational(56 * a[k]);
      const Integer c1 = b[k] + (k ? 8 * a[k - 1] : Integer(0));
      matches &= h.h1.coefficient(Rational(static_cast<long>(k) - 1, 2)) == Rational(c1);
    }
    const auto t = etaq::verify_T_equations(20);
    const bool vanish = (h.h00 + Rational(7) * h.h0).is_zero();
    os << "heads " << heads << ", oracle " << matches << ", T " << t.ok;
    return heads && matches && t.ok && t.h1_integer_part_cancels && t.h00_plus_7h0_vanishes && vanish &&
           h.h1.exponents_in(half, 1);
  });

  criterion(9, "numeric S-equations at i, 2i, 1/2 + i below 1e-9", [](std::ostream& os) {
    const auto r = etaq::verify_S_equations_numeric({{0, 1}, {0, 2}, {0.5, 1}}, 1e-9);
    const auto h = etaq::h_components(20);
    double series_residual = 0;
    for (const etaq::Complex tau : {etaq::Complex(0, 1), etaq::Complex(0, 2), etaq::Complex(0.5, 1)}) {
      const auto v = etaq::h_values(tau);
      series_residual = std::max({series_residual, std::abs(v[0] - etaq::evaluate(h.h00, tau)),
                                  std::abs(v[1] - etaq::evaluate(h.h0, tau)), std::abs(v[2] - etaq::evaluate(h.h1, tau))});
    }
    os << "max residual " << r.max_residual << ", series vs product " << series_residual;
    return r.ok && r.samples.size() == 3 && r.max_residual < 1e-9 && series_residual < 1e-9;
  });

  criterion(10, "type mixing matrix and bookkeeping 28, 15, 420", [](std::ostream& os) {
    const auto h = etaq::h_components(20);
    const auto red = etaq::assemble_and_reduce(etaq::make_form(h));
    MatrixQ expect(3, 3);
    expect << 1, 35, 28, 1, 3, -4, 1, -5, 4;
    expect /= Rational(8);
    const auto b = etaq::borcherds_bookkeeping(h);
    const bool fact = b.quartic_factorization == std::vector<std::pair<Integer, int>>{{2, 2}, {3, 1}, {5, 1}, {7, 1}};
    os << "weight " << to_string(b.weight) << ", vanishing " << to_string(b.vanishing_order) << ", quartics "
       << b.quartic_relations;
    return red.mixing == expect && red.type_constant && red.t_signs == std::array<int, 3>{1, 1, -1} &&
           b.weight == 28 && Rational(56, 2) == 28 && b.vanishing_order == 15 && Rational(4 * 105, 28) == 15 &&
           b.quartic_relations == 420 && 15 * 28 == 4 * 3 * 5 * 7 && fact;
  });

  criterion(11, "lattice suite: u^3 dictionary, -q_N, overlattice, 10 pairs, rho, hermitian, reflections, box scan",
            [](std::ostream& os) {
              using namespace lattice;
              const auto& n = n_context();
              const auto& qn = n.disc.form;
              std::set<unsigned> images;
              bool dict = qn.group_order() == 64;
              for (const auto& x : qn.elements()) {
                const auto u = n.dictionary(x);
                images.insert(u.bits());
                dict &= Rational(oracle::q(u.bits())) == qn.q(x);
              }
              dict &= images.size() == 64;
              const auto qm = discriminant_form(lattice_M()).form;
              const auto m_iso = find_isometry(qm, qn.negated());
              const bool minus = m_iso && is_isometry(qm, qn.negated(), *m_iso);
              const auto ov = u_a1_8_overlattice();
              const auto qo = discriminant_form(ov.lattice).form;
              const auto o_iso = find_isometry(qo, qm);
              const bool over = ov.lattice.is_even() && oracle::det(ov.lattice.gram()) == -64 && o_iso &&
                                is_isometry(qo, qm, *o_iso);
              bool pairs = true;
              const auto checks = lattice_pair_checks();
              for (const auto& c : checks) pairs &= c.ok() && c.picard_rank + c.transcendental_rank == 22;
              pairs &= checks.size() == 10;
              const MatrixZ r = n.rho, g = n.lattice.gram();
              const bool rho = check_rho(n.lattice, r).ok() && MatrixZ(r.transpose() * g * r) == g &&
                               abs(oracle::det(MatrixZ(r - MatrixZ::Identity(12, 12)))) == 64;
              auto unit = [](Index i) {
                VectorZ v = VectorZ::Zero(12);
                v(i) = 1;
                return v;
              };
              const auto d4 = hermitian_gram(n.lattice, n.rho, {unit(4), unit(5)});
              const auto uu = hermitian_gram(n.lattice, n.rho, {unit(0), unit(1)});
              const bool herm = d4[0][0] == Gaussian{-2, 0} && d4[0][1] == Gaussian{1, -1} && d4[1][0] == Gaussian{1, 1} &&
                                d4[1][1] == Gaussian{-2, 0} && uu[0][0] == Gaussian{0, 0} && uu[0][1] == Gaussian{1, 1} &&
                                uu[1][0] == Gaussian{1, -1} && uu[1][1] == Gaussian{0, 0};
              const auto scan = minus4_vector_scan(3);
              const bool counts = scan.roots == oracle::count_norm(g, 3, -2, false) &&
                                  scan.minus4 == oracle::count_norm(g, 3, -4, true);
              const bool every_root = scan.double_reflection == scan.roots && scan.transvection == scan.roots &&
                                      scan.commutes_with_rho == scan.roots;
              const bool inclusions = scan.sum_is_minus4 == scan.roots && scan.minus4_from_root == scan.minus4;
              bool sampled = true;
              for (Index i = 4; i < 12; ++i) sampled &= reflection_identities(unit(i)).ok();
              os << "dictionary " << dict << ", -q_N " << minus << ", overlattice " << over << ", pairs " << pairs
                 << ", rho " << rho << ", hermitian " << herm << ", reflections " << every_root << sampled
                 << ", inclusions " << inclusions << ", roots " << scan.roots << ", minus4 " << scan.minus4;
              return dict && minus && over && pairs && rho && herm && every_root && sampled && inclusions && scan.ok() &&
                     counts;
            });

  criterion(12, "tableaux counts (105, 14), bijection onto singular subspaces, equivariance on 20 pairs",
            [](std::ostream& os) {
              using namespace config;
              const auto& all = enumerate_tableaux();
              std::set<f2::F2Subspace> images, singular;
              for (const auto& t : all) images.insert(tableau_to_subspace(t));
              for (const auto& v : f2::enumerate_singular_subspaces()) singular.insert(v.space);
              std::mt19937_64 rng(42);
              int hom = 0;
              for (int k = 0; k < 20; ++k) {
                const Perm8 s = Perm8::random(rng), p = Perm8::random(rng);
                hom += action_matrix(s * p) == MatrixQ(action_matrix(s) * action_matrix(p)) &&
                       orthogonal_image(s * p) == orthogonal_image(s) * orthogonal_image(p);
              }
              os << all.size() << " tableaux, " << standard_tableaux().size() << " standard, " << images.size()
                 << " images, " << hom << "/20";
              return all.size() == 105 && standard_tableaux().size() == 14 && images == singular && hom == 20;
            });

  criterion(13, "relations: degree-2 kernel 14, degree-1 kernel 0, 105 mu of rank 14", [](std::ostream& os) {
    using namespace config;
    const auto r1 = relation_discovery(1, relation_samples(1, 300), 42);
    const auto r2 = relation_discovery(2, relation_samples(2, 300), 42);
    // Each quadric vanishes at configurations outside the sample.
    bool vanish = true;
    for (const auto& c : sample_configs(10, 4242)) {
      const auto y = standard_values(c);
      for (Index i = 0; i < r2.basis.rows(); ++i) {
        Rational sum = 0;
        for (Index m = 0; m < r2.basis.cols(); ++m) {
          if (r2.basis(i, m) == 0) continue;
          Rational p = 1;
          const auto& e = r2.monomials[static_cast<std::size_t>(m)];
          for (std::size_t v = 0; v < e.size(); ++v)
            for (int k = 0; k < e[v]; ++k) p *= y[v];
          sum += r2.basis(i, m) * p;
        }
        vanish &= sum == 0;
      }
    }
    const long mu_rank = mu_function_rank(300, 42);
    os << "degree 2 kernel " << r2.kernel_dimension << " from " << r2.samples << " samples, degree 1 kernel "
       << r1.kernel_dimension << ", mu rank " << mu_rank;
    return r2.samples >= 300 && r2.kernel_dimension == 14 && r2.basis.rows() == 14 && r2.stable && vanish &&
           r1.kernel_dimension == 0 && mu_rank == 14;
  });

  criterion(14, "two default runs give byte-identical reports", [](std::ostream& os) {
    const report::RunConfig cfg;
    const std::string first = report::to_json_lines(run_suite("all", cfg));
    const std::string second = report::to_json_lines(run_suite("all", cfg));
    os << first.size() << " vs " << second.size() << " bytes";
    return !first.empty() && first == second;
  });

  std::cout << (14 - failures) << "/14 criteria passed" << std::endl;
  return failures == 0 ? 0 : 1;
}
