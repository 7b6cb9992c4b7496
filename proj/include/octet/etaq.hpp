#pragma once

// Eta quotients for the type-constant vector-valued form (h00, h0, h1):
//   h00 = 56 eta(2t)^8 / eta(t)^16
//   h0  = -8 eta(2t)^8 / eta(t)^16
//   h1  =  8 eta(2t)^8 / eta(t)^16 + eta(t/2)^8 / eta(t)^16
// with exact q-expansions, the exact T-behaviour, the type-level reduction
// of the S-action, and a floating-point check of the S-equations.

#include "octet/exact.hpp"
#include "octet/f2geom.hpp"
#include "octet/qseries.hpp"

#include <array>
#include <complex>
#include <optional>
#include <utility>
#include <vector>

namespace octet::etaq {

/// One factor eta(scale * tau)^exponent.
struct EtaFactor {
  Rational scale;
  int exponent;
};

/// Product of eta factors. Scales must be 1/2, 1 or 2.
struct EtaQuotientSpec {
  std::vector<EtaFactor> factors;
};

/// q^(scale/24) prod_{n>=1} (1 - q^(scale n)), known below `order`.
/// Throws std::domain_error for order <= 0 or a scale outside {1/2, 1, 2}.
HalfQSeries eta_series(const Rational& scale, const Rational& order);

/// The product in `spec`, known at least below `order`.
HalfQSeries eta_quotient(const EtaQuotientSpec& spec, const Rational& order);

struct HComponents {
  HalfQSeries h00, h0, h1;
};

/// Throws std::domain_error for order < 3.
HComponents h_components(const Rational& order);

/// Component for a vector type.
const HalfQSeries& component(const HComponents& h, f2::VectorType t);

struct TEquationReport {
  bool ok = true;
  /// First exponent (in component order h00, h0, h1) breaking the rule.
  std::optional<std::pair<f2::VectorType, Rational>> first_offending;
  /// Integer-exponent part of eta(t/2)^8/eta(t)^16 + 8 eta(2t)^8/eta(t)^16.
  bool h1_integer_part_cancels = true;
  /// h00 + 7 h0 == 0 exactly.
  bool h00_plus_7h0_vanishes = true;
};

/// h00, h0 must have exponents in Z (fixed by tau -> tau + 1) and h1 in
/// Z + 1/2 (negated by it).
TEquationReport verify_T_equations(const Rational& order);

// -- floating point ---------------------------------------------------------

using Complex = std::complex<double>;

/// Dedekind eta by its product, run until the factors stop changing the
/// value. Throws std::domain_error for Im tau <= 0.
Complex eta(Complex tau);

/// (h00, h0, h1) evaluated through eta products.
std::array<Complex, 3> h_values(Complex tau);

/// Sum of c exp(2 pi i e tau) over the stored terms.
Complex evaluate(const HalfQSeries& s, Complex tau);

/// Rows of the S-equations: h_t(-1/tau) = tau^-4 / 8 sum_u rows[t][u] h_u(tau),
/// derived from the pair census as m0 - m1.
std::array<std::array<int, 3>, 3> s_equation_rows();

struct SResidual {
  Complex tau;
  std::array<double, 3> residual;  // per equation, |lhs - rhs|
  double max() const;
};

struct SEquationReport {
  std::vector<SResidual> samples;
  double tolerance;
  double max_residual = 0;
  bool ok = false;
};

/// Throws std::domain_error for a sample with Im tau <= 0.
SEquationReport verify_S_equations_numeric(const std::vector<Complex>& samples,
                                           double tolerance);

// -- type-level reduction ---------------------------------------------------

/// Components h_alpha indexed by the vector type of alpha.
struct VectorValuedForm {
  std::array<HalfQSeries, 3> by_type;  // indexed by f2::type_index
};

VectorValuedForm make_form(const HComponents& h);

/// One series per alpha in A_N, h_alpha = h_type(alpha).
std::vector<HalfQSeries> assemble(const VectorValuedForm& form);

struct TypeReduction {
  /// weil_rho(S) 1_u = sum_t mixing(t, u) 1_t; 1_u the indicator of type u.
  MatrixQ mixing;
  /// weil_rho(T) acts by t_signs[t] on type t.
  std::array<int, 3> t_signs{};
  /// weil_rho(S) maps type-constant vectors to type-constant vectors.
  bool type_constant = false;
  /// Each assembled component's tau -> tau+1 sign matches t_signs.
  bool form_t_signs_match = false;
  /// Every assembled component equals the component of its type.
  bool assembled_consistently = false;
};

TypeReduction assemble_and_reduce(const VectorValuedForm& form);

// -- weight and divisor bookkeeping -----------------------------------------

struct BorcherdsBookkeeping {
  Rational weight;               // constant term of h00 / 2
  Integer singular_subspaces;    // number of f_V
  Integer product_weight;        // 4 * singular_subspaces
  Integer anisotropic_vectors;   // number of Heegner divisors
  Rational vanishing_order;      // product_weight / weight
  Integer quartic_relations;     // vanishing_order * anisotropic_vectors
  std::vector<std::pair<Integer, int>> quartic_factorization;
};

BorcherdsBookkeeping borcherds_bookkeeping(const HComponents& h);

}  // namespace octet::etaq
