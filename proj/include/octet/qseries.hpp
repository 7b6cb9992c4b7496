#pragma once

// Truncated Laurent series in q with rational exponents on a fixed lattice
// (1/48)Z and exact rational coefficients.

#include "octet/exact.hpp"

#include <cstdint>
#include <map>
#include <string>

namespace octet::etaq {

class HalfQSeries {
 public:
  /// Exponents are stored as integers k meaning k / kDenominator.
  static constexpr std::int64_t kDenominator = 48;

  /// The zero series, known below `order`.
  explicit HalfQSeries(const Rational& order);

  /// c q^exponent, known below `order`.
  static HalfQSeries monomial(const Rational& coefficient, const Rational& exponent,
                              const Rational& order);

  /// Series with the given (exponent, coefficient) terms, known below
  /// `order`; terms at or beyond `order` are dropped.
  static HalfQSeries from_terms(const std::map<Rational, Rational>& terms,
                                const Rational& order);

  /// Coefficients are complete for every exponent strictly below this.
  Rational order() const { return from_units(order_); }
  /// Zero if absent or beyond the known range.
  Rational coefficient(const Rational& exponent) const;
  /// Smallest exponent with nonzero coefficient; throws on the zero series.
  Rational valuation() const;
  bool is_zero() const { return terms_.empty(); }

  /// (exponent, coefficient) pairs in increasing exponent order.
  std::map<Rational, Rational> terms() const;

  /// True if every stored exponent lies in offset + step Z.
  bool exponents_in(const Rational& offset, const Rational& step) const;

  HalfQSeries truncated(const Rational& order) const;

  HalfQSeries operator+(const HalfQSeries& o) const;
  HalfQSeries operator-(const HalfQSeries& o) const;
  HalfQSeries operator-() const;
  HalfQSeries operator*(const HalfQSeries& o) const;
  friend HalfQSeries operator*(const Rational& c, const HalfQSeries& s);
  /// Multiplicative inverse; the leading coefficient must be nonzero and the
  /// known range must extend past the valuation.
  HalfQSeries inverse() const;
  HalfQSeries operator/(const HalfQSeries& o) const { return *this * o.inverse(); }
  HalfQSeries pow(int n) const;

  /// f(q) -> f(q^scale) for positive rational scale on the exponent lattice.
  HalfQSeries rescaled(const Rational& scale) const;

  /// Same known range and identical stored terms.
  bool operator==(const HalfQSeries& o) const = default;

  static std::int64_t to_units(const Rational& exponent);
  static Rational from_units(std::int64_t units);

 private:
  HalfQSeries() = default;
  std::map<std::int64_t, Rational> terms_;
  std::int64_t order_ = 0;

  void set(std::int64_t units, Rational c);
};

std::string to_string(const HalfQSeries& s);

}  // namespace octet::etaq
