#include "octet/suites.hpp"

#include "octet/box_scan.hpp"
#include "octet/discriminant.hpp"
#include "octet/etaq.hpp"
#include "octet/f2geom.hpp"
#include "octet/isometry.hpp"
#include "octet/json_io.hpp"
#include "octet/lattice.hpp"
#include "octet/linalg.hpp"
#include "octet/relations.hpp"
#include "octet/tableaux.hpp"
#include "octet/weil.hpp"

#include <algorithm>
#include <cmath>
#include <set>
#include <stdexcept>

namespace octet {

using report::CheckReport;
using report::exact_check;
using report::Json;
using report::numeric_check;
using report::RunConfig;
using Reports = std::vector<CheckReport>;

namespace {

constexpr const char* kDerived = "derived";

Json type_counts_json(int zero, int isotropic, int anisotropic) {
  return Json{{"zero", zero}, {"isotropic", isotropic}, {"anisotropic", anisotropic}};
}

Json rational_int(const Rational& x) {
  return is_integer(x) ? io::integer_json(numerator(x)) : io::rational_json(x);
}

// -- f2 -----------------------------------------------------------------------

Reports f2_suite(const RunConfig&) {
  using namespace f2;
  Reports out;
  const auto c = census();
  out.push_back(exact_check("f2.census", type_counts_json(1, 35, 28),
                            type_counts_json(c.zero, c.isotropic, c.anisotropic), "paper: vector census"));

  {
    bool symmetric = true, alternating = true, bilinear = true, nondegenerate = true;
    for (F2Vec x : all_vectors()) {
      alternating &= b(x, x) == 0;
      bool radical = !x.is_zero();
      for (F2Vec y : all_vectors()) {
        symmetric &= b(x, y) == b(y, x);
        radical &= b(x, y) == 0;
        for (F2Vec z : all_vectors()) bilinear &= b(x + y, z) == (b(x, z) ^ b(y, z));
      }
      nondegenerate &= !radical;
    }
    const Json axioms{{"symmetric", true}, {"bilinear", true}, {"alternating", true}, {"nondegenerate", true}};
    out.push_back(exact_check("f2.polar_form", axioms,
                              Json{{"symmetric", symmetric},
                                   {"bilinear", bilinear},
                                   {"alternating", alternating},
                                   {"nondegenerate", nondegenerate}},
                              kDerived));
  }

  {
    // columns of the pairing table, grouped by the type of alpha
    const Json expected{{"00", {{"m0", {1, 35, 28}}, {"m1", {0, 0, 0}}}},
                        {"0", {{"m0", {1, 19, 12}}, {"m1", {0, 16, 16}}}},
                        {"1", {{"m0", {1, 15, 16}}, {"m1", {0, 20, 12}}}}};
    Json actual = Json::object();
    bool type_constant = true;
    for (F2Vec a : all_vectors()) {
      const auto p = pair_census(a);
      Json entry{{"m0", Json::array()}, {"m1", Json::array()}};
      for (auto t : {VectorType::Zero, VectorType::Isotropic, VectorType::Anisotropic}) {
        entry["m0"].push_back(p.m0(t));
        entry["m1"].push_back(p.m1(t));
      }
      const std::string label = type_label(classify(a));
      if (!actual.contains(label)) actual[label] = entry;
      else type_constant &= actual[label] == entry;
    }
    Json ordered{{"00", actual["00"]}, {"0", actual["0"]}, {"1", actual["1"]}};
    out.push_back(exact_check("f2.pair_census", expected, ordered, "paper: pairing census table"));
    out.push_back(exact_check("f2.pair_census.depends_on_type_only", true, type_constant, kDerived));
  }

  {
    const F2Vec alpha = F2Vec::e(1) + F2Vec::f(1);
    out.push_back(exact_check("f2.transvection.example", "f1", to_string(transvection(alpha)(F2Vec::e(1))),
                              kDerived));
    int involutive = 0, isometric = 0, fixing = 0;
    const auto aniso = anisotropic_vectors();
    for (F2Vec a : aniso) {
      const auto t = transvection(a);
      involutive += (t * t).is_identity();
      isometric += t.is_isometry();
      fixing += t(a) == a;
    }
    const int n = static_cast<int>(aniso.size());
    out.push_back(exact_check("f2.transvections",
                              Json{{"count", 28}, {"involutive", 28}, {"isometries", 28}, {"fix_alpha", 28}},
                              Json{{"count", n}, {"involutive", involutive}, {"isometries", isometric}, {"fix_alpha", fixing}},
                              "paper: transvections at anisotropic vectors"));
    bool rejected = false;
    try {
      transvection(F2Vec::e(1));
    } catch (const std::domain_error&) {
      rejected = true;
    }
    out.push_back(exact_check("f2.transvection.rejects_isotropic", true, rejected, kDerived));
  }

  {
    const auto group = generate_orthogonal_group();
    std::set<Permutation64> transvections;
    for (F2Vec a : anisotropic_vectors()) transvections.insert(transvection(a));
    int involution_transvections = 0;
    bool preserve_q = true;
    for (const auto& g : group.elements) {
      preserve_q &= g.preserves_q();
      if (g.order() == 2 && transvections.count(g)) ++involution_transvections;
    }
    Json orbit_sizes = Json::array();
    for (const auto& orbit : group.nonzero_orbits()) orbit_sizes.push_back(orbit.size());
    out.push_back(exact_check(
        "f2.orthogonal_group",
        Json{{"order", 40320}, {"generators", 28}, {"transvection_involutions", 28}, {"preserves_q", true}, {"orbit_sizes", {35, 28}}},
        Json{{"order", group.order()},
             {"generators", group.generators.size()},
             {"transvection_involutions", involution_transvections},
             {"preserves_q", preserve_q},
             {"orbit_sizes", orbit_sizes}},
        "paper: orthogonal group isomorphic to S8"));
  }

  {
    const auto i1 = enumerate_isotropic_subspaces(1), i3 = enumerate_isotropic_subspaces(3);
    bool only_isotropic = true;
    for (const auto* list : {&i1, &i3})
      for (const auto& s : *list)
        for (F2Vec v : s.elements()) only_isotropic &= q(v) == 0;
    out.push_back(exact_check("f2.isotropic_subspaces",
                              Json{{"dim1", 35}, {"dim3", 30}, {"totally_isotropic", true}, {"stable", true}},
                              Json{{"dim1", i1.size()},
                                   {"dim3", i3.size()},
                                   {"totally_isotropic", only_isotropic},
                                   {"stable", i3 == enumerate_isotropic_subspaces(3)}},
                              "paper: 35 isotropic vectors; derived: 30 maximal isotropics"));
  }

  {
    const F2Vec a1 = F2Vec::e(1) + F2Vec::f(1), a2 = F2Vec::e(2) + F2Vec::f(2), a3 = F2Vec::e(3) + F2Vec::f(3);
    const auto plane = F2Subspace::span({a1 + a2, a1 + a3});
    const auto [plus, minus] = isotropic_plane_extensions(plane);
    const auto ext_e = plane + F2Subspace::span({F2Vec::e(1) + F2Vec::e(2) + F2Vec::e(3)});
    const auto ext_f = plane + F2Subspace::span({F2Vec::f(1) + F2Vec::f(2) + F2Vec::f(3)});
    const std::set<F2Subspace> expected{ext_e, ext_f}, actual{plus, minus};
    auto names = [](const std::set<F2Subspace>& s) {
      Json j = Json::array();
      for (const auto& x : s) j.push_back(to_string(x));
      return j;
    };
    out.push_back(exact_check("f2.plane_extensions.example", names(expected), names(actual), kDerived));

    int planes = 0, two = 0, meet = 0;
    for (const auto& p : enumerate_isotropic_subspaces(2)) {
      ++planes;
      const auto [x, y] = isotropic_plane_extensions(p);
      two += x != y && x.dim() == 3 && y.dim() == 3 && x.is_totally_isotropic() && y.is_totally_isotropic() &&
             x.contains(p) && y.contains(p);
      meet += x.intersect(y) == p;
    }
    out.push_back(exact_check("f2.plane_extensions",
                              Json{{"two_extensions", planes}, {"meet_in_plane", planes}},
                              Json{{"two_extensions", two}, {"meet_in_plane", meet}},
                              "paper: exactly two maximal isotropics through an isotropic plane"));
  }

  {
    const auto sing = enumerate_singular_subspaces();
    int four = 0, kernel_plane = 0;
    for (const auto& v : sing) {
      const auto elems = v.space.elements();
      four += std::count_if(elems.begin(), elems.end(), [](F2Vec x) { return q(x) == 1; }) == 4;
      const auto k = v.kernel();
      kernel_plane += k.dim() == 2 && k.is_totally_isotropic();
    }
    const auto split = F2Subspace::span({F2Vec::e(1) + F2Vec::f(1), F2Vec::e(2) + F2Vec::f(2), F2Vec::e(3) + F2Vec::f(3)});
    const bool contains_split =
        std::any_of(sing.begin(), sing.end(), [&](const auto& v) { return v.space == split; });
    const int n = static_cast<int>(sing.size());
    out.push_back(exact_check(
        "f2.singular_subspaces",
        Json{{"count", 105}, {"four_anisotropic", 105}, {"kernel_isotropic_plane", 105}, {"contains_split", true}},
        Json{{"count", n}, {"four_anisotropic", four}, {"kernel_isotropic_plane", kernel_plane}, {"contains_split", contains_split}},
        "paper: 105 maximal totally singular subspaces"));
  }
  return out;
}

// -- weil ---------------------------------------------------------------------

Reports weil_suite(const RunConfig&) {
  using namespace f2;
  using namespace weil;
  Reports out;
  const MatrixQ s = weil_rho_S(), t = weil_rho_T();
  const MatrixQ id = MatrixQ::Identity(kSize, kSize);
  const MatrixQ st = s * t;
  out.push_back(exact_check("weil.representation", Json{{"S_squared", true}, {"ST_cubed", true}},
                            Json{{"S_squared", s * s == id}, {"ST_cubed", st * st * st == id}},
                            "derived: factors through SL(2, F2)"));
  out.push_back(exact_check("weil.traces", Json{{"E", 64}, {"T", 8}, {"ST", 1}, {"S", 8}},
                            Json{{"E", rational_int(id.trace())},
                                 {"T", rational_int(t.trace())},
                                 {"ST", rational_int(st.trace())},
                                 {"S", rational_int(s.trace())}},
                            "paper: traces 2^6, 8, 1"));
  const auto dec = character_decomposition();
  out.push_back(exact_check("weil.character_decomposition", Json{15, 7, 21},
                            Json{io::integer_json(dec.trivial), io::integer_json(dec.alternating),
                                 io::integer_json(dec.standard)},
                            "paper: 15 chi1 + 7 chi2 + 21 chi3"));

  const MatrixQ inv = invariant_subspace();
  int sums = 0;
  const auto maximal = enumerate_isotropic_subspaces(3);
  for (const auto& i : maximal) {
    const VectorQ v = indicator_sum(i);
    sums += s * v == v && t * v == v;
  }
  VectorQ e0 = VectorQ::Zero(kSize);
  e0(0) = 1;
  const VectorQ se0 = s * e0;
  out.push_back(exact_check(
      "weil.invariants",
      Json{{"dimension", 15}, {"isotropic_sums_invariant", maximal.size()}, {"e0_invariant", false}, {"S_e0_support", 64}},
      Json{{"dimension", inv.cols()},
           {"isotropic_sums_invariant", sums},
           {"e0_invariant", se0 == e0 && t * e0 == e0},
           {"S_e0_support", (se0.array() != Rational(0)).count()}},
      "paper: invariant sums over maximal isotropics"));

  {
    int commuting = 0;
    for (F2Vec a : anisotropic_vectors()) {
      const auto g = transvection(a);
      bool ok = true;
      for (unsigned x = 0; x < kSize && ok; ++x) {
        const unsigned gx = g(F2Vec(x)).bits();
        ok &= t(gx, gx) == t(x, x);
        for (unsigned y = 0; y < kSize && ok; ++y) ok &= s(gx, g(F2Vec(y)).bits()) == s(x, y);
      }
      commuting += ok;
    }
    out.push_back(exact_check("weil.orthogonal_equivariance", 28, commuting, kDerived));
  }

  const auto sing = enumerate_singular_subspaces();
  std::map<F2Subspace, VectorQ> fv;
  int shape = 0, invariant = 0, anti = 0, dim_one = 0, spanned = 0;
  for (const auto& v : sing) {
    const VectorQ f = f_V(v.space);
    fv.emplace(v.space, f);
    int nonzero = 0;
    bool units = true, off_aniso = true;
    for (Index a = 0; a < kSize; ++a) {
      if (f(a) == 0) continue;
      ++nonzero;
      units &= f(a) == 1 || f(a) == -1;
      off_aniso &= std::find(v.anisotropic.begin(), v.anisotropic.end(), F2Vec(static_cast<unsigned>(a))) == v.anisotropic.end();
    }
    shape += nonzero == 8 && units && off_aniso;
    invariant += s * f == f && t * f == f;
    bool negated = true;
    for (F2Vec a : v.anisotropic) {
      const auto g = transvection(a);
      for (unsigned x = 0; x < kSize; ++x) negated &= f(g(F2Vec(x)).bits()) == -f(x);
    }
    anti += negated;
    const MatrixQ space = antivector_space(v.space);
    dim_one += space.cols() == 1;
    spanned += space.cols() == 1 && in_column_span(space, f);
  }
  const int n = static_cast<int>(sing.size());
  out.push_back(exact_check("weil.f_V.shape", 105, shape, "derived: eight coordinates of size one off the anisotropic members"));
  out.push_back(exact_check("weil.f_V.invariant", 105, invariant, "paper: f_V is invariant"));
  out.push_back(exact_check("weil.f_V.transvections_act_by_minus_one", 105, anti, "paper: t_alpha acts as -1 on f_V"));
  out.push_back(exact_check("weil.antivector_uniqueness",
                            Json{{"subspaces", 105}, {"dimension_one", 105}, {"spanned_by_f_V", 105}},
                            Json{{"subspaces", n}, {"dimension_one", dim_one}, {"spanned_by_f_V", spanned}},
                            "paper: unique vector up to constant"));

  {
    int equivariant = 0, pairs = 0;
    for (F2Vec a : anisotropic_vectors()) {
      const auto g = transvection(a);
      for (const auto& [space, f] : fv) {
        ++pairs;
        VectorQ moved(kSize);
        for (unsigned x = 0; x < kSize; ++x) moved(g(F2Vec(x)).bits()) = f(x);
        const VectorQ& target = fv.at(space.image(g));
        equivariant += moved == target || moved == VectorQ(-target);
      }
    }
    out.push_back(exact_check("weil.f_V.equivariance", pairs, equivariant, kDerived));
  }

  const MatrixQ w = space_W(), fixed = orthogonal_fixed_invariants();
  MatrixQ joined(kSize, w.cols() + fixed.cols());
  joined << w, fixed;
  out.push_back(exact_check("weil.space_W",
                            Json{{"dimension", 14}, {"orthogonal_fixed", 1}, {"W_plus_fixed", 15}, {"inside_invariants", true}},
                            Json{{"dimension", w.cols()},
                                 {"orthogonal_fixed", fixed.cols()},
                                 {"W_plus_fixed", rank(joined)},
                                 {"inside_invariants", rank(MatrixQ((MatrixQ(kSize, inv.cols() + w.cols()) << inv, w).finished())) == inv.cols()}},
                            "paper: W of dimension 14, character chi1 + chi14"));

  {
    const F2Vec a1 = F2Vec::e(1) + F2Vec::f(1), a2 = F2Vec::e(2) + F2Vec::f(2), a3 = F2Vec::e(3) + F2Vec::f(3);
    const auto v1 = F2Subspace::span({a1, a2, a3});
    const auto v2 = F2Subspace::span({a1, a2, a1 + F2Vec::e(3)});
    const auto v3 = F2Subspace::span({a1, a2, a1 + F2Vec::f(3)});
    const auto signs = difference_identity_signs(v1, v2, v3);
    out.push_back(exact_check("weil.difference_identity.solutions", 1, signs.size(),
                              "paper: f_V1 - f_V2 = f_V3 up to the sign convention"));
  }
  return out;
}

// -- qseries ------------------------------------------------------------------

Json series_head(const etaq::HalfQSeries& s, std::size_t n) {
  Json all = io::series_json(s), head = Json::array();
  for (std::size_t i = 0; i < n && i < all.size(); ++i) head.push_back(all[i]);
  return head;
}

Reports qseries_suite(const RunConfig& cfg) {
  using namespace etaq;
  Reports out;
  const Rational order = cfg.series_order;
  const double tol = cfg.tolerance_value();

  {
    const auto eta1 = eta_series(1, order);
    Json actual = Json::object();
    for (const Rational& e : {Rational(1, 24), Rational(25, 24), Rational(49, 24), Rational(121, 24), Rational(169, 24)})
      actual[to_string(e)] = io::rational_json(eta1.coefficient(e));
    out.push_back(exact_check("qseries.eta.head",
                              Json{{"1/24", "1/1"}, {"25/24", "-1/1"}, {"49/24", "-1/1"}, {"121/24", "1/1"}, {"169/24", "1/1"}},
                              actual, "derived: pentagonal numbers"));
    out.push_back(exact_check("qseries.eta.scaled_valuation", Json{{"1/2", "1/48"}, {"2", "1/12"}},
                              Json{{"1/2", to_string(eta_series(Rational(1, 2), order).valuation())},
                                   {"2", to_string(eta_series(2, order).valuation())}},
                              kDerived));
  }

  const auto h = h_components(order);
  out.push_back(exact_check("qseries.h00.head", Json{{0, "56/1"}, {2, "896/1"}, {4, "8064/1"}}, series_head(h.h00, 3),
                            "paper: h00 = 56 + 896 q + 8064 q^2 + ..."));
  out.push_back(exact_check("qseries.h0.head", Json{{0, "-8/1"}, {2, "-128/1"}, {4, "-1152/1"}}, series_head(h.h0, 3),
                            "paper: h0 = -8 - 128 q - 1152 q^2 - ..."));
  out.push_back(exact_check("qseries.h1.head", Json{{-1, "1/1"}, {1, "36/1"}, {3, "402/1"}}, series_head(h.h1, 3),
                            "paper: h1 = q^-1/2 + 36 q^1/2 + 402 q^3/2 + ..."));

  {
    const auto rep = verify_T_equations(order);
    Json offending = nullptr;
    if (rep.first_offending)
      offending = Json{f2::type_label(rep.first_offending->first), to_string(rep.first_offending->second)};
    out.push_back(exact_check("qseries.T_equations",
                              Json{{"exponent_classes", true}, {"h1_integer_part_cancels", true}, {"h00_plus_7h0_vanishes", true}, {"first_offending", nullptr}},
                              Json{{"exponent_classes", rep.ok},
                                   {"h1_integer_part_cancels", rep.h1_integer_part_cancels},
                                   {"h00_plus_7h0_vanishes", rep.h00_plus_7h0_vanishes},
                                   {"first_offending", offending}},
                              "paper: h1(tau + 1) = -h1(tau)"));
  }

  {
    const auto g = eta_series(1, order);
    const auto back = (h.h1 * g) / g;
    const Rational known = back.order();
    out.push_back(exact_check("qseries.ring_inverse", true, back.truncated(known) == h.h1.truncated(known), kDerived));
  }

  const std::vector<std::pair<std::string, etaq::Complex>> taus{
      {"i", {0, 1}}, {"2i", {0, 2}}, {"1/2+i", {0.5, 1}}};
  for (const auto& [label, tau] : taus) {
    const auto rep = verify_S_equations_numeric({tau}, tol);
    out.push_back(numeric_check("qseries.S_equations.tau=" + label, 0, rep.max_residual, tol,
                                "paper: S-transformation equations"));
  }
  for (const auto& [label, tau] : taus) {
    const auto prod = h_values(tau);
    double diff = 0;
    diff = std::max(diff, std::abs(evaluate(h.h00, tau) - prod[0]));
    diff = std::max(diff, std::abs(evaluate(h.h0, tau) - prod[1]));
    diff = std::max(diff, std::abs(evaluate(h.h1, tau) - prod[2]));
    out.push_back(numeric_check("qseries.series_matches_product.tau=" + label, 0, diff, tol, kDerived));
  }

  {
    const auto red = assemble_and_reduce(make_form(h));
    MatrixQ mixing(3, 3);
    mixing << 1, 35, 28, 1, 3, -4, 1, -5, 4;
    mixing /= Rational(8);
    out.push_back(exact_check("qseries.type_reduction",
                              Json{{"mixing", io::matrix_json(mixing)}, {"t_signs", {1, 1, -1}}, {"type_constant", true}, {"form_t_signs_match", true}, {"assembled_consistently", true}},
                              Json{{"mixing", io::matrix_json(red.mixing)},
                                   {"t_signs", red.t_signs},
                                   {"type_constant", red.type_constant},
                                   {"form_t_signs_match", red.form_t_signs_match},
                                   {"assembled_consistently", red.assembled_consistently}},
                              "paper: the three S-equations"));
    out.push_back(exact_check("qseries.s_rows_from_pair_census", Json{{1, 35, 28}, {1, 3, -4}, {1, -5, 4}},
                              Json(s_equation_rows()), "paper: pairing census table"));
  }

  {
    const auto bk = borcherds_bookkeeping(h);
    Json fact = Json::array();
    for (const auto& [p, e] : bk.quartic_factorization) fact.push_back(Json{io::integer_json(p), e});
    out.push_back(exact_check(
        "qseries.bookkeeping",
        Json{{"weight", 28}, {"product_weight", 420}, {"vanishing_order", 15}, {"quartic_relations", 420}, {"factorization", {{2, 2}, {3, 1}, {5, 1}, {7, 1}}}},
        Json{{"weight", rational_int(bk.weight)},
             {"product_weight", io::integer_json(bk.product_weight)},
             {"vanishing_order", rational_int(bk.vanishing_order)},
             {"quartic_relations", io::integer_json(bk.quartic_relations)},
             {"factorization", fact}},
        "paper: weight 28, vanishing order 15, 420 quartic relations"));
  }
  return out;
}

// -- lattice ------------------------------------------------------------------

template <typename F>
bool throws(F&& f) {
  try {
    f();
  } catch (const std::exception&) {
    return true;
  }
  return false;
}

Json gaussian_json(const lattice::GaussianMatrix& m) {
  Json out = Json::array();
  for (const auto& row : m) {
    Json r = Json::array();
    for (const auto& z : row) r.push_back(lattice::to_string(z));
    out.push_back(std::move(r));
  }
  return out;
}

VectorZ unit(Index n, Index i) {
  VectorZ v = VectorZ::Zero(n);
  v(i) = 1;
  return v;
}

/// Transports q and b along a dictionary, checked element by element.
bool dictionary_is_isometry(const lattice::FiniteQuadraticForm& f, const lattice::U3Dictionary& d) {
  std::set<unsigned> seen;
  const auto elems = f.elements();
  for (const auto& x : elems) {
    const f2::F2Vec u = d(x);
    seen.insert(u.bits());
    if (Rational(f2::q(u)) != f.q(x)) return false;
    for (const auto& y : elems)
      if (Rational(f2::b(u, d(y)), 2) != f.b(x, y)) return false;
  }
  return seen.size() == elems.size() && elems.size() == f2::kSize;
}

Reports lattice_suite(const RunConfig& cfg) {
  using namespace lattice;
  Reports out;

  out.push_back(exact_check(
      "lattice.named",
      Json{{"U", {{0, 1}, {1, 0}}}, {"A1(-1)", {{2}}}, {"det_D4", 4}, {"det_D6", 4}, {"det_D8", 4}, {"det_D10", 4}, {"det_E8", 1}, {"all_even", true}},
      Json{{"U", io::matrix_json(named_lattice("U").gram())},
           {"A1(-1)", io::matrix_json(named_lattice("A1(-1)").gram())},
           {"det_D4", io::integer_json(named_lattice("D4").determinant())},
           {"det_D6", io::integer_json(named_lattice("D6").determinant())},
           {"det_D8", io::integer_json(named_lattice("D8").determinant())},
           {"det_D10", io::integer_json(named_lattice("D10").determinant())},
           {"det_E8", io::integer_json(named_lattice("E8").determinant())},
           {"all_even", named_lattice("U+U(2)+A1+D4+D6+D8+D10+E8").is_even()}},
      "paper: conventions for U, A_m, D_n, E_8"));
  out.push_back(exact_check("lattice.named.unknown_rejected", true, throws([] { named_lattice("X7"); }), kDerived));

  {
    const auto du = discriminant_form(named_lattice("U"));
    const auto du2 = discriminant_form(named_lattice("U(2)"));
    out.push_back(exact_check("lattice.discriminant.U", 1, du.form.group_order(), kDerived));
    out.push_back(exact_check("lattice.discriminant.U(2)",
                              Json{{"orders", {2, 2}}, {"q_values", {"0/1", "0/1"}}, {"pairings", Json::array({Json::array({"0/1", "1/2"}), Json::array({"1/2", "0/1"})})}},
                              io::form_json(du2.form), kDerived));
  }

  const auto& ctx = n_context();
  const auto& qn = ctx.disc.form;
  {
    bool two_elementary = std::all_of(qn.orders().begin(), qn.orders().end(), [](long o) { return o == 2; });
    bool integral_q = std::all_of(qn.q_values().begin(), qn.q_values().end(), [](const Rational& v) { return is_integer(v); });
    out.push_back(exact_check("lattice.discriminant.N",
                              Json{{"group_order", 64}, {"two_elementary", true}, {"integral_q", true}, {"polarization", true}},
                              Json{{"group_order", qn.group_order()},
                                   {"two_elementary", two_elementary},
                                   {"integral_q", integral_q},
                                   {"polarization", qn.satisfies_polarization()}},
                              "paper: A_N is F2^6 with q in Z/2Z"));
    Json images = Json::array();
    for (auto v : ctx.dictionary.images) images.push_back(f2::to_string(v));
    out.push_back(exact_check("lattice.discriminant.N.u3_dictionary", images,
                              dictionary_is_isometry(qn, ctx.dictionary) ? images : Json(nullptr),
                              "paper: q_N isomorphic to u^3"));
  }
  {
    const auto qm = discriminant_form(lattice_M()).form;
    const auto iso = find_isometry(qm, qn.negated());
    out.push_back(exact_check("lattice.discriminant.M_is_minus_N", true,
                              iso.has_value() && is_isometry(qm, qn.negated(), *iso), "paper: q_M isomorphic to -q_N"));
    const auto five = discriminant_form(named_lattice("U(2)+A1^3")).form;
    out.push_back(exact_check("lattice.identify_u3.rank5_rejected", true, throws([&] { identify_with_u3(five); }),
                              kDerived));
  }
  {
    const auto ov = u_a1_8_overlattice();
    const auto qm = discriminant_form(lattice_M()).form;
    const auto qo = discriminant_form(ov.lattice).form;
    const auto iso = find_isometry(qo, qm);
    out.push_back(exact_check("lattice.overlattice.U+A1^8",
                              Json{{"even", true}, {"determinant", -64}, {"disc_isometric_to_M", true}},
                              Json{{"even", ov.lattice.is_even()},
                                   {"determinant", io::integer_json(ov.lattice.determinant())},
                                   {"disc_isometric_to_M", iso.has_value() && is_isometry(qo, qm, *iso)}},
                              "paper: overlattice of U + A1^8 by (F1 + ... + F8)/2"));
    const auto base = named_lattice("U+A1^8");
    VectorQ zero = VectorQ::Zero(base.rank());
    VectorQ odd = VectorQ::Zero(base.rank());
    odd(2) = Rational(1, 2);
    out.push_back(exact_check("lattice.overlattice.trivial_and_odd_glue",
                              Json{{"zero_glue_identity", true}, {"odd_glue_rejected", true}},
                              Json{{"zero_glue_identity", overlattice(base, zero).lattice == base},
                                   {"odd_glue_rejected", throws([&] { overlattice(base, odd); })}},
                              kDerived));
  }

  for (const auto& c : lattice_pair_checks()) {
    const Index p = c.picard_rank, t = c.transcendental_rank;
    out.push_back(exact_check(
        "lattice.pairs.row" + std::to_string(c.row.index),
        Json{{"rank_sum", 22}, {"picard_signature", {1, p - 1}}, {"transcendental_signature", {2, t - 2}}, {"complementary", true}},
        Json{{"rank_sum", p + t},
             {"picard_signature", {c.picard_signature.positive, c.picard_signature.negative}},
             {"transcendental_signature", {c.transcendental_signature.positive, c.transcendental_signature.negative}},
             {"complementary", c.complementary}},
        "paper: Picard and transcendental lattice table, " + c.row.picard + " / " + c.row.transcendental));
  }

  {
    const auto r = check_rho(ctx.lattice, ctx.rho);
    const Json all{{"isometry", true}, {"order_four", true}, {"square_not_identity", true}, {"fixed_point_free", true}, {"trivial_on_discriminant", true}, {"characteristic_polynomial", true}};
    out.push_back(exact_check("lattice.rho", all,
                              Json{{"isometry", r.isometry},
                                   {"order_four", r.order_four},
                                   {"square_not_identity", r.square_not_identity},
                                   {"fixed_point_free", r.fixed_point_free},
                                   {"trivial_on_discriminant", r.trivial_on_discriminant},
                                   {"characteristic_polynomial", r.characteristic_polynomial}},
                              "paper: the automorphism of order 4"));
  }
  {
    const Index n = ctx.lattice.rank();
    out.push_back(exact_check("lattice.hermitian.D4", Json::array({Json::array({"-2", "1-i"}), Json::array({"1+i", "-2"})}),
                              gaussian_json(hermitian_gram(ctx.lattice, ctx.rho, {unit(n, 4), unit(n, 5)})),
                              "paper: hermitian Gram matrix on D4"));
    out.push_back(exact_check("lattice.hermitian.U+U(2)", Json::array({Json::array({"0", "1+i"}), Json::array({"1-i", "0"})}),
                              gaussian_json(hermitian_gram(ctx.lattice, ctx.rho, {unit(n, 0), unit(n, 1)})),
                              "paper: hermitian Gram matrix on U + U(2)"));
  }
  {
    const auto phi = phi_map_check();
    out.push_back(exact_check("lattice.phi",
                              Json{{"maps_into_dual", true}, {"one_minus_i_lands_back", true}, {"quotient_size", 64}, {"image_size", 64}, {"bijective", true}},
                              Json{{"maps_into_dual", phi.maps_into_dual},
                                   {"one_minus_i_lands_back", phi.one_minus_i_lands_back},
                                   {"quotient_size", phi.quotient_size},
                                   {"image_size", phi.image_size},
                                   {"bijective", phi.bijective}},
                              "paper: Lambda/(1-i)Lambda isomorphic to N*/N"));
  }
  VectorZ r = VectorZ::Zero(ctx.lattice.rank());
  r(0) = 1;
  r(1) = -1;
  {
    const auto rep = reflection_identities(r);
    out.push_back(exact_check(
        "lattice.reflection.e-f",
        Json{{"double_reflection", true}, {"commutes_with_rho", true}, {"isometry", true}, {"order_four", true}, {"square_is_minus_one", true}, {"alpha_anisotropic", true}, {"induces_transvection", true}},
        Json{{"double_reflection", rep.minus_one_is_double_reflection},
             {"commutes_with_rho", rep.commutes_with_rho},
             {"isometry", rep.isometry},
             {"order_four", rep.order_four},
             {"square_is_minus_one", rep.square_is_minus_one},
             {"alpha_anisotropic", rep.alpha_anisotropic},
             {"induces_transvection", rep.induces_transvection}},
        "paper: R_{r,-1} coincides with s_r s_rho(r)"));
    const VectorZ delta = r + ctx.rho * r;
    const VectorQ half = to_rational(delta) / Rational(2);
    out.push_back(exact_check("lattice.minus4.example", Json{{"norm", -4}, {"half_in_dual", true}},
                              Json{{"norm", io::integer_json(ctx.lattice.inner(delta, delta))},
                                   {"half_in_dual", !throws([&] { ctx.disc.coordinates(half); })}},
                              kDerived));
  }
  {
    const auto c = root_pair_complement(r);
    out.push_back(exact_check(
        "lattice.root_pair_complement",
        Json{{"rank", 10}, {"signature", {2, 8}}, {"root_pair_a1_squared", true}, {"index_two", true}, {"discriminant_matches", true}},
        Json{{"rank", c.rank},
             {"signature", {c.signature.positive, c.signature.negative}},
             {"root_pair_a1_squared", c.root_pair_is_a1_squared},
             {"index_two", c.index_two},
             {"discriminant_matches", c.discriminant_matches}},
        "paper: orthogonal complement of type U + U(2) + D4 + A1^2"));
  }
  {
    const auto scan = minus4_vector_scan(cfg.box_bound);
    long isotropic_alpha = 0;
    for (unsigned a = 0; a < f2::kSize; ++a)
      if (f2::q(f2::F2Vec(a)) == 0) isotropic_alpha += scan.alpha_counts[a];
    const std::string prov = "paper: (-4)-vectors with delta/2 in N* are r + rho(r)";
    out.push_back(exact_check("lattice.box_scan.roots",
                              Json{{"rho_orthogonal", scan.roots}, {"sum_is_minus4", scan.roots}},
                              Json{{"rho_orthogonal", scan.rho_orthogonal}, {"sum_is_minus4", scan.sum_is_minus4}}, prov));
    out.push_back(exact_check(
        "lattice.box_scan.reflections",
        Json{{"double_reflection", scan.roots}, {"commutes_with_rho", scan.roots}, {"transvection", scan.roots}, {"isotropic_alpha", 0}},
        Json{{"double_reflection", scan.double_reflection},
             {"commutes_with_rho", scan.commutes_with_rho},
             {"transvection", scan.transvection},
             {"isotropic_alpha", isotropic_alpha}},
        "paper: reflections induce transvections"));
    out.push_back(exact_check("lattice.box_scan.minus4", scan.minus4, scan.minus4_from_root, prov));
  }
  return out;
}

// -- tableaux -----------------------------------------------------------------

Json tableau_terms_json(const std::map<config::Tableau, Integer>& terms) {
  Json j = Json::object();
  for (const auto& [t, c] : terms) j[config::to_string(t)] = io::integer_json(c);
  return j;
}

Reports tableaux_suite(const RunConfig& cfg) {
  using namespace config;
  Reports out;
  const auto& all = enumerate_tableaux();
  const auto& st = standard_tableaux();
  out.push_back(exact_check("tableaux.counts", Json{{"tableaux", 105}, {"standard", 14}},
                            Json{{"tableaux", all.size()}, {"standard", st.size()}},
                            "paper: 105 tableaux, 14 standard"));

  const Tableau tau1 = parse_tableau("(12)(34)(56)(78)");
  std::array<Rational, 8> xs;
  for (int i = 0; i < 8; ++i) xs[static_cast<std::size_t>(i)] = i + 1;
  const auto line = PointConfig::affine(xs);
  {
    auto coincident = xs;
    coincident[1] = coincident[0];
    out.push_back(exact_check("tableaux.mu",
                              Json{{"tau1_standard", true}, {"tau1_at_x_i_equal_i", "1/1"}, {"row_swap", "-1/1"}, {"coincident_row", "0/1"}},
                              Json{{"tau1_standard", tau1.is_standard()},
                                   {"tau1_at_x_i_equal_i", io::rational_json(mu(tau1, line))},
                                   {"row_swap", io::rational_json(mu(Tableau({{{2, 1}, {3, 4}, {5, 6}, {7, 8}}}), line))},
                                   {"coincident_row", io::rational_json(mu(tau1, PointConfig::affine(coincident)))}},
                              kDerived));
  }
  {
    Json golden = Json::array();
    for (int v : {1, 4, 4, 12, 27, 4, 16, 12, 36, 72, 27, 72, 144, 256}) golden.push_back(io::rational_json(v));
    Json actual = nullptr;
    if (const auto th = theta_map(line)) {
      actual = Json::array();
      for (const auto& v : *th) actual.push_back(io::rational_json(v));
    }
    out.push_back(exact_check("tableaux.theta.golden", golden, actual, "derived: exact evaluation at x_i = i"));

    std::array<Rational, 8> five{0, 0, 0, 0, 0, 1, 2, 3};
    const auto unstable = theta_map(PointConfig::affine(five));
    out.push_back(exact_check("tableaux.theta.unstable", nullptr, unstable ? Json("image") : Json(nullptr),
                              "derived: five equal points"));

    const auto moved = line.transformed({2, 1, 1, 1});
    bool common = true;
    const Rational factor = mu(st[0], moved) / mu(st[0], line);
    for (const auto& t : st) common &= mu(t, moved) == factor * mu(t, line);
    out.push_back(exact_check("tableaux.theta.projective_invariance", true, common && theta_map(moved) == theta_map(line),
                              kDerived));
  }

  {
    std::set<f2::F2Subspace> images;
    int orthogonal_rows = 0;
    for (const auto& t : all) {
      images.insert(tableau_to_subspace(t));
      bool ok = true;
      for (const auto& r1 : t.rows())
        for (const auto& r2 : t.rows()) ok &= b(pair_vector(r1[0], r1[1]), pair_vector(r2[0], r2[1])) == 0;
      orthogonal_rows += ok;
    }
    std::set<f2::F2Subspace> singular;
    for (const auto& v : f2::enumerate_singular_subspaces()) singular.insert(v.space);
    int anisotropic = 0;
    for (int i = 1; i <= 8; ++i)
      for (int j = i + 1; j <= 8; ++j) {
        const Vec8 v = pair_vector(i, j);
        anisotropic += v.q() == 1 && f2::q(to_u3(v)) == 1;
      }
    out.push_back(exact_check("tableaux.subspace_bijection",
                              Json{{"distinct_images", 105}, {"onto_singular", true}, {"orthogonal_rows", 105}, {"anisotropic_pairs", 28}},
                              Json{{"distinct_images", images.size()},
                                   {"onto_singular", images == singular},
                                   {"orthogonal_rows", orthogonal_rows},
                                   {"anisotropic_pairs", anisotropic}},
                              "paper: tableaux correspond bijectively to singular subspaces"));
  }

  {
    std::mt19937_64 rng(cfg.seed);
    const auto samples = sample_configs(28, cfg.seed + 1);
    const std::vector<PointConfig> fit(samples.begin(), samples.begin() + 14), fresh(samples.begin() + 14, samples.end());
    const int pairs = 20;
    int homomorphism = 0, sampled_match = 0, fresh_ok = 0, intertwine = 0, group_hom = 0, pointwise = 0;
    for (int k = 0; k < pairs; ++k) {
      const Perm8 s = Perm8::random(rng), p = Perm8::random(rng);
      const MatrixQ ms = action_matrix(s), mp = action_matrix(p);
      homomorphism += action_matrix(s * p) == ms * mp;
      sampled_match += sampled_action_matrix(s, fit) == ms;
      bool ok = true;
      for (const auto& c : fresh) {
        const auto moved = c.permuted(s.inverse());
        for (Index j = 0; j < 14; ++j) {
          Rational lhs = 0;
          for (Index i = 0; i < 14; ++i) lhs += ms(i, j) * mu(st[static_cast<std::size_t>(i)], c);
          ok &= lhs == mu(st[static_cast<std::size_t>(j)], moved);
        }
      }
      fresh_ok += ok;
      const auto g = orthogonal_image(s);
      bool inter = true, point = true;
      for (const auto& t : all) {
        const auto moved = t.permuted(s).canonical();
        inter &= tableau_to_subspace(moved.tableau) == tableau_to_subspace(t).image(g);
        const auto& c = fresh[static_cast<std::size_t>(k) % fresh.size()];
        point &= mu(moved.tableau, c) * moved.sign == mu(t, c.permuted(s.inverse()));
      }
      intertwine += inter;
      pointwise += point;
      group_hom += orthogonal_image(s * p) == g * orthogonal_image(p);
    }
    out.push_back(exact_check(
        "tableaux.equivariance",
        Json{{"homomorphism", pairs}, {"sampled_equals_straightened", pairs}, {"fresh_samples", pairs}, {"pointwise_sign_rule", pairs}, {"intertwines_orthogonal_group", pairs}, {"orthogonal_homomorphism", pairs}},
        Json{{"homomorphism", homomorphism},
             {"sampled_equals_straightened", sampled_match},
             {"fresh_samples", fresh_ok},
             {"pointwise_sign_rule", pointwise},
             {"intertwines_orthogonal_group", intertwine},
             {"orthogonal_homomorphism", group_hom}},
        "paper: Theta is S8-equivariant"));

    const MatrixQ swap = action_matrix(Perm8::transposition(1, 2));
    const auto k1 = static_cast<Index>(*standard_index(tau1));
    VectorQ expected_col = VectorQ::Zero(14);
    expected_col(k1) = -1;
    out.push_back(exact_check("tableaux.equivariance.examples", Json{{"identity", true}, {"transposition_12_negates_tau1", true}},
                              Json{{"identity", action_matrix(Perm8()) == MatrixQ::Identity(14, 14)},
                                   {"transposition_12_negates_tau1", VectorQ(swap.col(k1)) == expected_col}},
                              kDerived));
  }

  {
    const auto samples = sample_configs(20, cfg.seed + 2);
    int pluecker = 0, expansions = 0, checked = 0;
    for (const auto& c : samples) {
      bool ok = true;
      for (int a = 1; a <= 8; ++a)
        for (int b2 = a + 1; b2 <= 8; ++b2)
          for (int cc = b2 + 1; cc <= 8; ++cc)
            for (int d = cc + 1; d <= 8; ++d) {
              const auto& P = c.points();
              auto br = [&](int x, int y) { return bracket(P[static_cast<std::size_t>(x - 1)], P[static_cast<std::size_t>(y - 1)]); };
              ok &= br(a, b2) * br(cc, d) - br(a, cc) * br(b2, d) + br(a, d) * br(b2, cc) == 0;
            }
      pluecker += ok;
    }
    for (const auto& t : all) {
      if (t.is_standard()) continue;
      ++checked;
      const auto terms = straighten(t);
      bool ok = true;
      for (const auto& c : samples) {
        Rational sum = 0;
        for (const auto& [s, coeff] : terms) sum += Rational(coeff) * mu(s, c);
        ok &= sum == mu(t, c);
      }
      expansions += ok;
    }
    out.push_back(exact_check("tableaux.straightening",
                              Json{{"pluecker_samples", samples.size()}, {"nonstandard", 91}, {"expansions_match", 91}},
                              Json{{"pluecker_samples", pluecker}, {"nonstandard", checked}, {"expansions_match", expansions}},
                              "derived: three-term exchange relation"));
    out.push_back(exact_check("tableaux.straightening.example",
                              Json{{"(14)(23)(56)(78)", {{"(12)(34)(56)(78)", -1}, {"(13)(24)(56)(78)", 1}}},
                                   {"(13)(24)(56)(78)", {{"(13)(24)(56)(78)", 1}}}},
                              Json{{"(14)(23)(56)(78)", tableau_terms_json(straighten(parse_tableau("(14)(23)(56)(78)")))},
                                   {"(13)(24)(56)(78)", tableau_terms_json(straighten(parse_tableau("(13)(24)(56)(78)")))}},
                              kDerived));
  }

  {
    const auto r1 = relation_discovery(1, relation_samples(1, cfg.sample_count), cfg.seed);
    const auto r2 = relation_discovery(2, relation_samples(2, cfg.sample_count), cfg.seed);
    out.push_back(exact_check("tableaux.relations.degree1", Json{{"kernel_dimension", 0}, {"stable", true}},
                              Json{{"kernel_dimension", r1.kernel_dimension}, {"stable", r1.stable}},
                              "derived: the 14 standard mu are independent"));
    out.push_back(exact_check("tableaux.relations.degree2",
                              Json{{"monomials", 105}, {"kernel_dimension", 14}, {"exact_basis", 14}, {"stable", true}},
                              Json{{"monomials", r2.monomial_count},
                                   {"kernel_dimension", r2.kernel_dimension},
                                   {"exact_basis", r2.basis.rows()},
                                   {"stable", r2.stable}},
                              "paper: the image is an intersection of 14 quadrics"));
    out.push_back(exact_check("tableaux.mu_function_rank", 14, mu_function_rank(cfg.sample_count, cfg.seed),
                              "derived: 105 mu span a 14-dimensional space"));
    int invariant = 0;
    for (int i = 1; i < 8; ++i) invariant += quadric_space_invariant(r2, Perm8::transposition(i, i + 1));
    out.push_back(exact_check("tableaux.relations.quadrics_invariant", 7, invariant,
                              "derived: the quadric space is an S8-subrepresentation"));
  }
  return out;
}

using Suite = Reports (*)(const RunConfig&);

const std::vector<std::pair<std::string, Suite>>& suites() {
  static const std::vector<std::pair<std::string, Suite>> s{{"f2", f2_suite},
                                                             {"weil", weil_suite},
                                                             {"qseries", qseries_suite},
                                                             {"lattice", lattice_suite},
                                                             {"tableaux", tableaux_suite}};
  return s;
}

}  // namespace

const std::vector<std::string>& suite_names() {
  static const std::vector<std::string> names = [] {
    std::vector<std::string> n;
    for (const auto& [name, fn] : suites()) n.push_back(name);
    return n;
  }();
  return names;
}

long relation_samples(int degree, long requested) {
  const auto count = static_cast<long>(config::monomials(degree).size());
  return std::max(requested, 3 * count);
}

Reports run_suite(std::string_view selector, const RunConfig& config) {
  config.validate();
  Reports out;
  bool found = false;
  for (const auto& [name, fn] : suites()) {
    if (selector != "all" && selector != name) continue;
    found = true;
    auto part = fn(config);
    out.insert(out.end(), std::make_move_iterator(part.begin()), std::make_move_iterator(part.end()));
  }
  if (!found) throw std::invalid_argument("unknown suite '" + std::string(selector) + "'");
  return out;
}

}  // namespace octet
