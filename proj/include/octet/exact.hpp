#pragma once

// Exact scalar types and Eigen aliases shared by every module.

#include <boost/multiprecision/gmp.hpp>
#include <boost/multiprecision/eigen.hpp>
#include <Eigen/Dense>

#include <string>
#include <string_view>

namespace octet {

using Integer =
    boost::multiprecision::number<boost::multiprecision::gmp_int,
                                  boost::multiprecision::et_off>;
using Rational =
    boost::multiprecision::number<boost::multiprecision::gmp_rational,
                                  boost::multiprecision::et_off>;

template <typename Scalar>
using Matrix = Eigen::Matrix<Scalar, Eigen::Dynamic, Eigen::Dynamic>;
template <typename Scalar>
using Vector = Eigen::Matrix<Scalar, Eigen::Dynamic, 1>;

using MatrixZ = Matrix<Integer>;
using VectorZ = Vector<Integer>;
using MatrixQ = Matrix<Rational>;
using VectorQ = Vector<Rational>;
using Index = Eigen::Index;

/// "p/q" with q >= 1, always written with the slash.
std::string to_string(const Rational& x);
/// Accepts "p", "p/q", "-p/q" (surrounding whitespace ignored).
Rational parse_rational(std::string_view text);

inline Integer numerator_of(const Rational& x) { return numerator(x); }
inline Integer denominator_of(const Rational& x) { return denominator(x); }

inline bool is_integer(const Rational& x) { return denominator(x) == 1; }

/// Floor-style residue: x mod m in [0, m).
Rational mod(const Rational& x, const Rational& m);
Integer mod(const Integer& x, const Integer& m);

template <typename Derived>
MatrixQ to_rational(const Eigen::MatrixBase<Derived>& m) {
  MatrixQ out(m.rows(), m.cols());
  for (Index i = 0; i < m.rows(); ++i)
    for (Index j = 0; j < m.cols(); ++j) out(i, j) = Rational(m(i, j));
  return out;
}

/// Throws std::domain_error if some entry is not integral.
MatrixZ to_integer(const MatrixQ& m);

bool is_integral(const MatrixQ& m);

}  // namespace octet
