#include "octet/etaq.hpp"

#include "octet/weil.hpp"

#include <cmath>
#include <numbers>
#include <stdexcept>

namespace octet::etaq {

namespace {

bool allowed_scale(const Rational& s) { return s == Rational(1, 2) || s == 1 || s == 2; }

}  // namespace

HalfQSeries eta_series(const Rational& scale, const Rational& order) {
  if (order <= 0) throw std::domain_error("eta_series: order must be positive");
  if (!allowed_scale(scale)) throw std::domain_error("eta_series: scale must be 1/2, 1 or 2");
  const Rational lead = scale / 24;
  // Dense product on the step-`scale` grid of prod (1 - q^(scale n)).
  const Rational span = order - lead;
  std::vector<Integer> poly{1};
  for (Integer n = 1; Rational(n) * scale < span; ++n) {
    const std::size_t shift = n.convert_to<std::size_t>();
    std::vector<Integer> next(poly.size() + shift, Integer(0));
    for (std::size_t i = 0; i < poly.size(); ++i) {
      next[i] += poly[i];
      next[i + shift] -= poly[i];
    }
    poly = std::move(next);
  }
  std::map<Rational, Rational> terms;
  for (std::size_t i = 0; i < poly.size(); ++i)
    if (poly[i] != 0) terms.emplace(lead + Rational(static_cast<long>(i)) * scale, Rational(poly[i]));
  return HalfQSeries::from_terms(terms, order);
}

HalfQSeries eta_quotient(const EtaQuotientSpec& spec, const Rational& order) {
  // Work to a padded order so the quotient's known range covers `order`.
  Rational pad = 2;
  for (const auto& f : spec.factors) pad += Rational(std::abs(f.exponent)) * f.scale / 12;
  HalfQSeries acc = HalfQSeries::monomial(1, 0, order + pad);
  for (const auto& f : spec.factors) acc = acc * eta_series(f.scale, order + 2 * pad).pow(f.exponent);
  if (acc.order() < order) throw std::logic_error("eta_quotient: insufficient working precision");
  return acc.truncated(order);
}

HComponents h_components(const Rational& order) {
  if (order < 3) throw std::domain_error("h_components: order must be at least 3");
  const Rational half(1, 2);
  const HalfQSeries even = eta_quotient({{{2, 8}, {1, -16}}}, order);
  const HalfQSeries odd = eta_quotient({{{half, 8}, {1, -16}}}, order);
  return {Rational(56) * even, Rational(-8) * even, Rational(8) * even + odd};
}

const HalfQSeries& component(const HComponents& h, f2::VectorType t) {
  switch (t) {
    case f2::VectorType::Zero: return h.h00;
    case f2::VectorType::Isotropic: return h.h0;
    case f2::VectorType::Anisotropic: return h.h1;
  }
  throw std::logic_error("unknown vector type");
}

TEquationReport verify_T_equations(const Rational& order) {
  const HComponents h = h_components(order);
  TEquationReport r;
  const Rational half(1, 2);
  for (auto t : {f2::VectorType::Zero, f2::VectorType::Isotropic, f2::VectorType::Anisotropic}) {
    const Rational offset = t == f2::VectorType::Anisotropic ? half : Rational(0);
    for (const auto& [e, c] : component(h, t).terms()) {
      if (is_integer(e - offset)) continue;
      r.ok = false;
      if (!r.first_offending) r.first_offending = std::make_pair(t, e);
    }
  }
  const HalfQSeries even = eta_quotient({{{2, 8}, {1, -16}}}, order);
  const HalfQSeries odd = eta_quotient({{{half, 8}, {1, -16}}}, order);
  const HalfQSeries sum = Rational(8) * even + odd;
  for (const auto& [e, c] : sum.terms())
    if (is_integer(e)) r.h1_integer_part_cancels = false;
  r.h00_plus_7h0_vanishes = (h.h00 + Rational(7) * h.h0).is_zero();
  r.ok = r.ok && r.h1_integer_part_cancels && r.h00_plus_7h0_vanishes;
  return r;
}

// ---------------------------------------------------------------------------

Complex eta(Complex tau) {
  if (tau.imag() <= 0) throw std::domain_error("eta: tau must lie in the upper half plane");
  constexpr double two_pi = 2 * std::numbers::pi;
  const Complex i(0, 1);
  const Complex q = std::exp(two_pi * i * tau);
  Complex prod = std::exp(two_pi * i * tau / 24.0);
  Complex qn = q;
  for (int n = 1; n < 100000; ++n) {
    prod *= 1.0 - qn;
    if (std::abs(qn) < 1e-20) break;
    qn *= q;
  }
  return prod;
}

std::array<Complex, 3> h_values(Complex tau) {
  const Complex e1 = eta(tau), e2 = eta(2.0 * tau), eh = eta(tau / 2.0);
  const Complex even = std::pow(e2, 8) / std::pow(e1, 16);
  const Complex odd = std::pow(eh, 8) / std::pow(e1, 16);
  return {56.0 * even, -8.0 * even, 8.0 * even + odd};
}

Complex evaluate(const HalfQSeries& s, Complex tau) {
  constexpr double two_pi = 2 * std::numbers::pi;
  Complex acc = 0;
  for (const auto& [e, c] : s.terms())
    acc += c.convert_to<double>() * std::exp(two_pi * Complex(0, 1) * e.convert_to<double>() * tau);
  return acc;
}

std::array<std::array<int, 3>, 3> s_equation_rows() {
  std::array<std::array<int, 3>, 3> rows{};
  for (f2::F2Vec alpha : f2::all_vectors()) {
    const auto p = f2::pair_census(alpha);
    const int t = f2::type_index(f2::classify(alpha));
    for (auto u : {f2::VectorType::Zero, f2::VectorType::Isotropic, f2::VectorType::Anisotropic})
      rows[t][f2::type_index(u)] = p.m0(u) - p.m1(u);
  }
  return rows;
}

double SResidual::max() const { return std::max({residual[0], residual[1], residual[2]}); }

SEquationReport verify_S_equations_numeric(const std::vector<Complex>& samples, double tolerance) {
  const auto rows = s_equation_rows();
  SEquationReport rep;
  rep.tolerance = tolerance;
  for (Complex tau : samples) {
    if (tau.imag() <= 0) throw std::domain_error("S-equation sample off the upper half plane");
    const auto at_tau = h_values(tau);
    const auto at_s = h_values(-1.0 / tau);
    const Complex factor = std::pow(tau, -4) / 8.0;
    SResidual r{tau, {}};
    for (int t = 0; t < 3; ++t) {
      Complex rhs = 0;
      for (int u = 0; u < 3; ++u) rhs += static_cast<double>(rows[t][u]) * at_tau[u];
      r.residual[t] = std::abs(at_s[t] - factor * rhs);
    }
    rep.max_residual = std::max(rep.max_residual, r.max());
    rep.samples.push_back(r);
  }
  rep.ok = rep.max_residual < tolerance;
  return rep;
}

// ---------------------------------------------------------------------------

VectorValuedForm make_form(const HComponents& h) { return {{h.h00, h.h0, h.h1}}; }

std::vector<HalfQSeries> assemble(const VectorValuedForm& form) {
  std::vector<HalfQSeries> out;
  for (f2::F2Vec a : f2::all_vectors()) out.push_back(form.by_type[f2::type_index(f2::classify(a))]);
  return out;
}

TypeReduction assemble_and_reduce(const VectorValuedForm& form) {
  const MatrixQ s = weil::weil_rho_S(), t = weil::weil_rho_T();
  TypeReduction red;
  red.mixing = MatrixQ::Zero(3, 3);
  red.type_constant = true;
  auto type_of = [](unsigned bits) { return f2::type_index(f2::classify(f2::F2Vec(bits))); };
  for (int u = 0; u < 3; ++u) {
    VectorQ ind = VectorQ::Zero(f2::kSize);
    for (unsigned a = 0; a < f2::kSize; ++a)
      if (type_of(a) == u) ind(a) = 1;
    const VectorQ img = s * ind;
    std::array<std::optional<Rational>, 3> seen;
    for (unsigned a = 0; a < f2::kSize; ++a) {
      auto& slot = seen[type_of(a)];
      if (!slot) slot = img(a);
      else if (*slot != img(a)) red.type_constant = false;
    }
    for (int tt = 0; tt < 3; ++tt) red.mixing(tt, u) = seen[tt].value_or(Rational(0));
  }
  for (unsigned a = 0; a < f2::kSize; ++a)
    red.t_signs[type_of(a)] = t(a, a) == 1 ? 1 : -1;

  const auto components = assemble(form);
  red.assembled_consistently = true;
  red.form_t_signs_match = true;
  for (unsigned a = 0; a < f2::kSize; ++a) {
    const HalfQSeries& c = components[a];
    if (!(c == form.by_type[type_of(a)])) red.assembled_consistently = false;
    // tau -> tau + 1 multiplies q^e by exp(2 pi i e): +1 on Z, -1 on Z + 1/2.
    const bool plus = c.exponents_in(0, 1);
    const bool minus = c.exponents_in(Rational(1, 2), 1);
    const int sign = red.t_signs[type_of(a)];
    if (!((sign == 1 && plus) || (sign == -1 && minus))) red.form_t_signs_match = false;
  }
  return red;
}

// ---------------------------------------------------------------------------

namespace {

std::vector<std::pair<Integer, int>> factorize(Integer n) {
  std::vector<std::pair<Integer, int>> out;
  for (Integer p = 2; p * p <= n; ++p) {
    int e = 0;
    while (n % p == 0) {
      n /= p;
      ++e;
    }
    if (e) out.emplace_back(p, e);
  }
  if (n > 1) out.emplace_back(n, 1);
  return out;
}

}  // namespace

BorcherdsBookkeeping borcherds_bookkeeping(const HComponents& h) {
  BorcherdsBookkeeping b;
  b.weight = h.h00.coefficient(0) / 2;
  b.singular_subspaces = static_cast<long>(f2::enumerate_singular_subspaces().size());
  b.product_weight = 4 * b.singular_subspaces;
  b.anisotropic_vectors = static_cast<long>(f2::anisotropic_vectors().size());
  b.vanishing_order = Rational(b.product_weight) / b.weight;
  if (!is_integer(b.vanishing_order)) throw std::logic_error("non-integral vanishing order");
  b.quartic_relations = numerator(b.vanishing_order) * b.anisotropic_vectors;
  b.quartic_factorization = factorize(b.quartic_relations);
  return b;
}

}  // namespace octet::etaq
