#include "octet/qseries.hpp"

#include <algorithm>
#include <stdexcept>

namespace octet::etaq {

std::int64_t HalfQSeries::to_units(const Rational& exponent) {
  const Rational u = exponent * kDenominator;
  if (!is_integer(u))
    throw std::domain_error("exponent " + octet::to_string(exponent) + " is off the (1/48)Z lattice");
  return numerator(u).convert_to<std::int64_t>();
}

Rational HalfQSeries::from_units(std::int64_t units) { return Rational(units, kDenominator); }

HalfQSeries::HalfQSeries(const Rational& order) : order_(to_units(order)) {}

HalfQSeries HalfQSeries::monomial(const Rational& coefficient, const Rational& exponent,
                                  const Rational& order) {
  HalfQSeries s(order);
  const auto k = to_units(exponent);
  if (k < s.order_) s.set(k, coefficient);
  return s;
}

HalfQSeries HalfQSeries::from_terms(const std::map<Rational, Rational>& terms,
                                    const Rational& order) {
  HalfQSeries s(order);
  for (const auto& [e, c] : terms) {
    const auto k = to_units(e);
    if (k < s.order_) s.set(k, c);
  }
  return s;
}

void HalfQSeries::set(std::int64_t units, Rational c) {
  if (c == 0)
    terms_.erase(units);
  else
    terms_[units] = std::move(c);
}

Rational HalfQSeries::coefficient(const Rational& exponent) const {
  auto it = terms_.find(to_units(exponent));
  return it == terms_.end() ? Rational(0) : it->second;
}

Rational HalfQSeries::valuation() const {
  if (terms_.empty()) throw std::domain_error("valuation of the zero series");
  return from_units(terms_.begin()->first);
}

std::map<Rational, Rational> HalfQSeries::terms() const {
  std::map<Rational, Rational> out;
  for (const auto& [k, c] : terms_) out.emplace(from_units(k), c);
  return out;
}

bool HalfQSeries::exponents_in(const Rational& offset, const Rational& step) const {
  const auto off = to_units(offset), st = to_units(step);
  return std::all_of(terms_.begin(), terms_.end(), [&](const auto& kv) {
    return ((kv.first - off) % st + st) % st == 0;
  });
}

HalfQSeries HalfQSeries::truncated(const Rational& order) const {
  HalfQSeries out;
  out.order_ = std::min(order_, to_units(order));
  for (const auto& [k, c] : terms_)
    if (k < out.order_) out.terms_.emplace(k, c);
  return out;
}

HalfQSeries HalfQSeries::operator+(const HalfQSeries& o) const {
  HalfQSeries out;
  out.order_ = std::min(order_, o.order_);
  for (const auto& [k, c] : terms_)
    if (k < out.order_) out.terms_.emplace(k, c);
  for (const auto& [k, c] : o.terms_)
    if (k < out.order_) out.set(k, out.terms_.count(k) ? out.terms_[k] + c : c);
  return out;
}

HalfQSeries HalfQSeries::operator-() const {
  HalfQSeries out = *this;
  for (auto& kv : out.terms_) kv.second = -kv.second;
  return out;
}

HalfQSeries HalfQSeries::operator-(const HalfQSeries& o) const { return *this + (-o); }

HalfQSeries operator*(const Rational& c, const HalfQSeries& s) {
  HalfQSeries out;
  out.order_ = s.order_;
  if (c == 0) return out;
  for (const auto& [k, v] : s.terms_) out.terms_.emplace(k, c * v);
  return out;
}

HalfQSeries HalfQSeries::operator*(const HalfQSeries& o) const {
  // f = q^a (known below A), g = q^b (known below B): f g is known below
  // min(A + b, B + a). A zero factor carries no valuation information, so
  // its own bound is used.
  HalfQSeries out;
  const std::int64_t va = terms_.empty() ? order_ : terms_.begin()->first;
  const std::int64_t vb = o.terms_.empty() ? o.order_ : o.terms_.begin()->first;
  out.order_ = std::min(order_ + vb, o.order_ + va);
  for (const auto& [i, ci] : terms_)
    for (const auto& [j, cj] : o.terms_) {
      if (i + j >= out.order_) break;
      auto& slot = out.terms_[i + j];
      slot += ci * cj;
    }
  for (auto it = out.terms_.begin(); it != out.terms_.end();)
    it = it->second == 0 ? out.terms_.erase(it) : std::next(it);
  return out;
}

HalfQSeries HalfQSeries::inverse() const {
  if (terms_.empty()) throw std::domain_error("inverse of a series with no known leading term");
  const std::int64_t v = terms_.begin()->first;
  const Rational lead = terms_.begin()->second;
  // g = lead q^v (1 + u), u known below order_ - v; g^-1 known below
  // order_ - 2v.
  HalfQSeries out;
  out.order_ = order_ - 2 * v;
  // h_k is the coefficient at exponent -v + k:
  // h_k = -(1/lead) sum_{j>0} g_{v+j} h_{k-j}.
  std::map<std::int64_t, Rational> h;
  const Rational inv_lead = Rational(1) / lead;
  for (std::int64_t k = 0; -v + k < out.order_; ++k) {
    Rational acc = 0;
    for (const auto& [e, c] : terms_) {
      const std::int64_t j = e - v;
      if (j == 0) continue;
      if (j > k) break;
      auto it = h.find(k - j);
      if (it != h.end()) acc += c * it->second;
    }
    Rational hk = k == 0 ? inv_lead : -acc * inv_lead;
    if (hk != 0) h.emplace(k, hk);
  }
  for (auto& [k, c] : h) out.terms_.emplace(-v + k, std::move(c));
  return out;
}

HalfQSeries HalfQSeries::pow(int n) const {
  if (n < 0) return inverse().pow(-n);
  if (n == 0) return monomial(1, 0, order());
  HalfQSeries result = *this;
  for (int i = 1; i < n; ++i) result = result * *this;
  return result;
}

HalfQSeries HalfQSeries::rescaled(const Rational& scale) const {
  if (scale <= 0) throw std::domain_error("rescale factor must be positive");
  HalfQSeries out;
  out.order_ = to_units(from_units(order_) * scale);
  for (const auto& [k, c] : terms_) out.terms_.emplace(to_units(from_units(k) * scale), c);
  return out;
}

std::string to_string(const HalfQSeries& s) {
  std::string out;
  for (const auto& [e, c] : s.terms()) {
    if (!out.empty()) out += " + ";
    out += "(" + octet::to_string(c) + ") q^(" + octet::to_string(e) + ")";
  }
  if (out.empty()) out = "0";
  return out + " + O(q^(" + octet::to_string(s.order()) + "))";
}

}  // namespace octet::etaq
