#include "octet/json_io.hpp"

#include <limits>
#include <stdexcept>

namespace octet::io {

Json rational_json(const Rational& x) { return to_string(x); }

Rational rational_from_json(const Json& j) {
  if (j.is_number_integer()) return Rational(j.get<std::int64_t>());
  if (j.is_string()) {
    try {
      return parse_rational(j.get<std::string>());
    } catch (const std::exception& e) {
      throw std::invalid_argument("bad rational '" + j.get<std::string>() + "': " + e.what());
    }
  }
  throw std::invalid_argument("expected an integer or a \"p/q\" string, got " + j.dump());
}

Json integer_json(const Integer& x) {
  if (x >= std::numeric_limits<std::int64_t>::min() && x <= std::numeric_limits<std::int64_t>::max())
    return x.convert_to<std::int64_t>();
  return x.str();
}

Json matrix_json(const MatrixZ& m) {
  Json out = Json::array();
  for (Index i = 0; i < m.rows(); ++i) {
    Json row = Json::array();
    for (Index j = 0; j < m.cols(); ++j) row.push_back(integer_json(m(i, j)));
    out.push_back(std::move(row));
  }
  return out;
}

Json matrix_json(const MatrixQ& m) {
  Json out = Json::array();
  for (Index i = 0; i < m.rows(); ++i) {
    Json row = Json::array();
    for (Index j = 0; j < m.cols(); ++j) row.push_back(rational_json(m(i, j)));
    out.push_back(std::move(row));
  }
  return out;
}

MatrixZ integer_matrix_from_json(const Json& j) {
  if (!j.is_array()) throw std::invalid_argument("matrix must be a list of rows");
  const auto rows = static_cast<Index>(j.size());
  const Index cols = rows ? static_cast<Index>(j[0].size()) : 0;
  MatrixZ m(rows, cols);
  for (Index i = 0; i < rows; ++i) {
    const auto& row = j[static_cast<std::size_t>(i)];
    if (!row.is_array() || static_cast<Index>(row.size()) != cols)
      throw std::invalid_argument("matrix rows must have equal length");
    for (Index k = 0; k < cols; ++k) {
      const Rational x = rational_from_json(row[static_cast<std::size_t>(k)]);
      if (!is_integer(x)) throw std::invalid_argument("matrix entry is not an integer");
      m(i, k) = numerator(x);
    }
  }
  return m;
}

Json series_json(const etaq::HalfQSeries& s) {
  Json out = Json::array();
  for (const auto& [e, c] : s.terms()) {
    const Rational twice = 2 * e;
    if (!is_integer(twice)) throw std::domain_error("exponent " + to_string(e) + " is not in (1/2)Z");
    out.push_back(Json::array({integer_json(numerator(twice)), rational_json(c)}));
  }
  return out;
}

etaq::HalfQSeries series_from_json(const Json& j, const Rational& order) {
  if (!j.is_array()) throw std::invalid_argument("series must be a list of [2*exponent, coefficient]");
  std::map<Rational, Rational> terms;
  for (const auto& t : j) {
    if (!t.is_array() || t.size() != 2 || !t[0].is_number_integer())
      throw std::invalid_argument("series term must be [integer, coefficient], got " + t.dump());
    terms[Rational(t[0].get<std::int64_t>(), 2)] = rational_from_json(t[1]);
  }
  return etaq::HalfQSeries::from_terms(terms, order);
}

Json lattice_json(const lattice::GramLattice& l) {
  Json j;
  j["name"] = l.name();
  j["rank"] = l.rank();
  j["gram"] = matrix_json(l.gram());
  return j;
}

lattice::GramLattice lattice_from_json(const Json& j) {
  if (!j.is_object() || !j.contains("gram")) throw std::invalid_argument("lattice needs a \"gram\" field");
  return lattice::GramLattice(integer_matrix_from_json(j.at("gram")), j.value("name", std::string{}));
}

Json form_json(const lattice::FiniteQuadraticForm& f) {
  Json j;
  j["orders"] = f.orders();
  Json q = Json::array();
  for (const auto& v : f.q_values()) q.push_back(rational_json(v));
  j["q_values"] = std::move(q);
  j["pairings"] = matrix_json(f.pairings());
  return j;
}

lattice::FiniteQuadraticForm form_from_json(const Json& j) {
  if (!j.is_object() || !j.contains("orders") || !j.contains("q_values") || !j.contains("pairings"))
    throw std::invalid_argument("form needs \"orders\", \"q_values\" and \"pairings\"");
  const auto orders = j.at("orders").get<std::vector<long>>();
  std::vector<Rational> q;
  for (const auto& v : j.at("q_values")) q.push_back(rational_from_json(v));
  const auto& pj = j.at("pairings");
  MatrixQ b(static_cast<Index>(pj.size()), static_cast<Index>(pj.size()));
  for (std::size_t r = 0; r < pj.size(); ++r) {
    if (pj[r].size() != pj.size()) throw std::invalid_argument("pairings must be square");
    for (std::size_t c = 0; c < pj.size(); ++c)
      b(static_cast<Index>(r), static_cast<Index>(c)) = rational_from_json(pj[r][c]);
  }
  return lattice::FiniteQuadraticForm(orders, q, b);
}

Json subspace_json(const f2::F2Subspace& s) {
  Json j;
  j["dim"] = s.dim();
  Json basis = Json::array();
  for (auto v : s.basis()) basis.push_back(f2::to_string(v));
  j["basis"] = std::move(basis);
  Json bits = Json::array();
  for (auto v : s.basis()) bits.push_back(v.bits());
  j["bits"] = std::move(bits);
  return j;
}

Json group_ring_json(const VectorQ& v) {
  Json out = Json::array();
  for (Index i = 0; i < v.size(); ++i) out.push_back(rational_json(v(i)));
  return out;
}

config::PointConfig config_from_json(const Json& j) {
  if (!j.is_array() || j.size() != 8) throw std::invalid_argument("configuration must be a list of 8 points");
  std::array<config::Point, 8> pts;
  for (std::size_t i = 0; i < 8; ++i) {
    if (!j[i].is_array() || j[i].size() != 2)
      throw std::invalid_argument("point " + std::to_string(i + 1) + " must be a pair");
    pts[i] = {rational_from_json(j[i][0]), rational_from_json(j[i][1])};
  }
  return config::PointConfig(pts);
}

Json config_json(const config::PointConfig& c) {
  Json out = Json::array();
  for (const auto& p : c.points()) out.push_back(Json::array({rational_json(p[0]), rational_json(p[1])}));
  return out;
}

Json relation_basis_json(const config::RelationBasis& r) {
  Json j;
  j["degree"] = r.degree;
  j["monomials"] = r.monomial_count;
  j["samples"] = r.samples;
  j["seed"] = r.seed;
  j["rank"] = r.rank;
  j["kernel_dimension"] = r.kernel_dimension;
  j["stable"] = r.stable;
  j["exact"] = r.exact;
  if (!r.exact) j["modulus"] = r.modulus;
  Json rels = Json::array();
  for (Index i = 0; i < r.basis.rows(); ++i) {
    Json terms = Json::array();
    for (Index k = 0; k < r.basis.cols(); ++k)
      if (r.basis(i, k) != 0)
        terms.push_back(Json::array({r.monomials[static_cast<std::size_t>(k)], rational_json(r.basis(i, k))}));
    rels.push_back(std::move(terms));
  }
  j["relations"] = std::move(rels);
  return j;
}

}  // namespace octet::io
