#pragma once

// JSON forms of the library's values. Rationals are always "p/q" strings.

#include "octet/discriminant.hpp"
#include "octet/f2geom.hpp"
#include "octet/lattice.hpp"
#include "octet/qseries.hpp"
#include "octet/relations.hpp"
#include "octet/report.hpp"
#include "octet/tableaux.hpp"

namespace octet::io {

using report::Json;

Json rational_json(const Rational& x);
/// Accepts a JSON integer or a "p/q" string; throws std::invalid_argument.
Rational rational_from_json(const Json& j);

Json integer_json(const Integer& x);
Json matrix_json(const MatrixZ& m);
Json matrix_json(const MatrixQ& m);
MatrixZ integer_matrix_from_json(const Json& j);

/// [[2 * exponent, "coefficient"], ...] in increasing exponent order. Throws
/// std::domain_error if an exponent is not in (1/2)Z.
Json series_json(const etaq::HalfQSeries& s);
/// Inverse of series_json; the known range must be supplied.
etaq::HalfQSeries series_from_json(const Json& j, const Rational& order);

/// {"name", "rank", "gram"}
Json lattice_json(const lattice::GramLattice& l);
lattice::GramLattice lattice_from_json(const Json& j);

/// {"orders", "q_values", "pairings"}
Json form_json(const lattice::FiniteQuadraticForm& f);
lattice::FiniteQuadraticForm form_from_json(const Json& j);

Json subspace_json(const f2::F2Subspace& s);
/// 64 "p/q" coordinates indexed by the bit pattern of alpha.
Json group_ring_json(const VectorQ& v);

/// A list of 8 pairs [v0, v1], entries integers or "p/q" strings.
config::PointConfig config_from_json(const Json& j);
Json config_json(const config::PointConfig& c);

/// Relations as lists of [exponent vector, "coefficient"] over their nonzero terms.
Json relation_basis_json(const config::RelationBasis& r);

}  // namespace octet::io
