#include "octet/exact.hpp"

#include <cctype>
#include <stdexcept>

namespace octet {

std::string to_string(const Rational& x) {
  return numerator(x).str() + "/" + denominator(x).str();
}

Rational parse_rational(std::string_view text) {
  auto trim = [](std::string_view s) {
    while (!s.empty() && std::isspace(static_cast<unsigned char>(s.front())))
      s.remove_prefix(1);
    while (!s.empty() && std::isspace(static_cast<unsigned char>(s.back())))
      s.remove_suffix(1);
    return s;
  };
  auto is_int = [](std::string_view s) {
    if (!s.empty() && (s.front() == '-' || s.front() == '+')) s.remove_prefix(1);
    if (s.empty()) return false;
    for (char c : s)
      if (c < '0' || c > '9') return false;
    return true;
  };
  text = trim(text);
  const auto slash = text.find('/');
  std::string_view num = trim(text.substr(0, slash));
  std::string_view den =
      slash == std::string_view::npos ? "1" : trim(text.substr(slash + 1));
  if (!is_int(num) || !is_int(den))
    throw std::invalid_argument("malformed rational: '" + std::string(text) + "'");
  if (num.front() == '+') num.remove_prefix(1);
  if (den.front() == '+') den.remove_prefix(1);
  const Integer p{std::string(num)}, q{std::string(den)};
  if (q == 0) throw std::invalid_argument("zero denominator: '" + std::string(text) + "'");
  return Rational(p, q);
}

Rational mod(const Rational& x, const Rational& m) {
  Rational k = x / m;
  Integer fl = numerator(k) / denominator(k);  // truncates toward zero
  if (fl * denominator(k) > numerator(k)) fl -= 1;
  return x - Rational(fl) * m;
}

Integer mod(const Integer& x, const Integer& m) {
  Integer r = x % m;
  if (r < 0) r += abs(m);
  return r;
}

bool is_integral(const MatrixQ& m) {
  for (Index i = 0; i < m.rows(); ++i)
    for (Index j = 0; j < m.cols(); ++j)
      if (!is_integer(m(i, j))) return false;
  return true;
}

MatrixZ to_integer(const MatrixQ& m) {
  MatrixZ out(m.rows(), m.cols());
  for (Index i = 0; i < m.rows(); ++i)
    for (Index j = 0; j < m.cols(); ++j) {
      if (!is_integer(m(i, j)))
        throw std::domain_error("non-integral entry " + to_string(m(i, j)));
      out(i, j) = numerator(m(i, j));
    }
  return out;
}

}  // namespace octet
