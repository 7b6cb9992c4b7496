#include "octet/discriminant.hpp"

#include "octet/integer_matrix.hpp"

#include <numeric>
#include <set>
#include <stdexcept>

namespace octet::lattice {

FiniteQuadraticForm::FiniteQuadraticForm(std::vector<long> orders, std::vector<Rational> q_values,
                                         MatrixQ pairings)
    : orders_(std::move(orders)), q_(std::move(q_values)), b_(std::move(pairings)) {
  const auto n = static_cast<Index>(orders_.size());
  if (q_.size() != orders_.size() || b_.rows() != n || b_.cols() != n)
    throw std::invalid_argument("finite quadratic form: inconsistent sizes");
  for (long d : orders_)
    if (d < 2) throw std::invalid_argument("finite quadratic form: generator orders must be >= 2");
  if (b_ != b_.transpose()) throw std::invalid_argument("finite quadratic form: pairing must be symmetric");
  for (auto& v : q_) v = mod(v, Rational(2));
  for (Index i = 0; i < n; ++i)
    for (Index j = 0; j < n; ++j) b_(i, j) = mod(b_(i, j), Rational(1));
}

FiniteQuadraticForm FiniteQuadraticForm::u3() {
  MatrixQ b = MatrixQ::Zero(6, 6);
  for (int k = 0; k < 3; ++k) b(2 * k, 2 * k + 1) = b(2 * k + 1, 2 * k) = Rational(1, 2);
  return FiniteQuadraticForm(std::vector<long>(6, 2), std::vector<Rational>(6, Rational(0)), b);
}

long FiniteQuadraticForm::group_order() const {
  return std::accumulate(orders_.begin(), orders_.end(), 1L, std::multiplies<>());
}

Rational FiniteQuadraticForm::q(const GroupElement& x) const {
  Rational acc = 0;
  for (std::size_t i = 0; i < rank(); ++i) {
    if (x[i] == 0) continue;
    acc += Rational(x[i] * x[i]) * q_[i];
    for (std::size_t j = i + 1; j < rank(); ++j)
      if (x[j] != 0) acc += Rational(2 * x[i] * x[j]) * b_(i, j);
  }
  return mod(acc, Rational(2));
}

Rational FiniteQuadraticForm::b(const GroupElement& x, const GroupElement& y) const {
  Rational acc = 0;
  for (std::size_t i = 0; i < rank(); ++i) {
    if (x[i] == 0) continue;
    for (std::size_t j = 0; j < rank(); ++j)
      if (y[j] != 0) acc += Rational(x[i] * y[j]) * b_(i, j);
  }
  return mod(acc, Rational(1));
}

GroupElement FiniteQuadraticForm::normalize(GroupElement x) const {
  for (std::size_t i = 0; i < rank(); ++i) x[i] = ((x[i] % orders_[i]) + orders_[i]) % orders_[i];
  return x;
}

GroupElement FiniteQuadraticForm::add(const GroupElement& x, const GroupElement& y) const {
  GroupElement s(rank());
  for (std::size_t i = 0; i < rank(); ++i) s[i] = x[i] + y[i];
  return normalize(std::move(s));
}

GroupElement FiniteQuadraticForm::scale(long k, const GroupElement& x) const {
  GroupElement s(rank());
  for (std::size_t i = 0; i < rank(); ++i) s[i] = k * x[i];
  return normalize(std::move(s));
}

bool FiniteQuadraticForm::is_zero(const GroupElement& x) const {
  for (std::size_t i = 0; i < rank(); ++i)
    if (x[i] % orders_[i] != 0) return false;
  return true;
}

long FiniteQuadraticForm::element_order(const GroupElement& x) const {
  long ord = 1;
  for (std::size_t i = 0; i < rank(); ++i) {
    const long xi = ((x[i] % orders_[i]) + orders_[i]) % orders_[i];
    ord = std::lcm(ord, orders_[i] / std::gcd(xi, orders_[i]));
  }
  return ord;
}

std::vector<GroupElement> FiniteQuadraticForm::elements() const {
  std::vector<GroupElement> out;
  GroupElement x(rank(), 0);
  bool more = true;
  while (more) {
    out.push_back(x);
    more = false;
    for (std::size_t i = rank(); i-- > 0;) {
      if (++x[i] < orders_[i]) {
        more = true;
        break;
      }
      x[i] = 0;
    }
  }
  return out;
}

bool FiniteQuadraticForm::satisfies_polarization() const {
  for (std::size_t i = 0; i < rank(); ++i) {
    if (mod(q_[i] - b_(i, i), Rational(1)) != 0) return false;
    for (std::size_t j = 0; j < rank(); ++j) {
      GroupElement x(rank(), 0), y(rank(), 0);
      x[i] = 1;
      y[j] = 1;
      const Rational lhs = q(add(x, y)) - q(x) - q(y);
      if (mod(lhs - 2 * b(x, y), Rational(2)) != 0) return false;
    }
  }
  return true;
}

FiniteQuadraticForm FiniteQuadraticForm::negated() const {
  std::vector<Rational> q = q_;
  for (auto& v : q) v = -v;
  return FiniteQuadraticForm(orders_, q, MatrixQ(-b_));
}

FiniteQuadraticForm FiniteQuadraticForm::operator+(const FiniteQuadraticForm& o) const {
  std::vector<long> orders = orders_;
  orders.insert(orders.end(), o.orders_.begin(), o.orders_.end());
  std::vector<Rational> q = q_;
  q.insert(q.end(), o.q_.begin(), o.q_.end());
  const auto n = static_cast<Index>(rank()), m = static_cast<Index>(o.rank());
  MatrixQ b = MatrixQ::Zero(n + m, n + m);
  b.topLeftCorner(n, n) = b_;
  b.bottomRightCorner(m, m) = o.b_;
  return FiniteQuadraticForm(orders, q, b);
}

// ---------------------------------------------------------------------------

GroupElement DiscriminantForm::coordinates(const VectorQ& y) const {
  const VectorQ c = to_rational(coordinate_rows) * y;
  GroupElement out(form.rank());
  for (std::size_t i = 0; i < form.rank(); ++i) {
    if (!is_integer(c(static_cast<Index>(i)))) throw std::domain_error("vector is not in the dual lattice");
    const Integer v = mod(numerator(c(static_cast<Index>(i))), Integer(form.orders()[i]));
    out[i] = v.convert_to<long>();
  }
  return out;
}

DiscriminantForm discriminant_form(const GramLattice& l) {
  if (!l.is_even()) throw std::domain_error("discriminant form needs an even lattice");
  if (l.rank() > 0 && !l.is_nondegenerate()) throw std::domain_error("discriminant form needs a nondegenerate lattice");
  const SmithForm snf = smith_normal_form(l.gram());
  const auto diag = snf.diagonal();
  const MatrixQ g = to_rational(l.gram());
  const MatrixZ pg = snf.P * l.gram();

  std::vector<Index> keep;
  for (std::size_t i = 0; i < diag.size(); ++i)
    if (diag[i] != 1) keep.push_back(static_cast<Index>(i));
  const auto n = static_cast<Index>(keep.size());
  DiscriminantForm out;
  out.generators = MatrixQ(l.rank(), n);
  out.coordinate_rows = MatrixZ(n, l.rank());
  std::vector<long> orders;
  for (Index k = 0; k < n; ++k) {
    const Index i = keep[static_cast<std::size_t>(k)];
    const Integer d = diag[static_cast<std::size_t>(i)];
    orders.push_back(d.convert_to<long>());
    out.generators.col(k) = to_rational(MatrixZ(snf.Q.col(i))) / Rational(d);
    out.coordinate_rows.row(k) = pg.row(i);
  }
  std::vector<Rational> q(static_cast<std::size_t>(n));
  MatrixQ b(n, n);
  for (Index i = 0; i < n; ++i) {
    const VectorQ gi = out.generators.col(i);
    q[static_cast<std::size_t>(i)] = gi.dot(g * gi);
    for (Index j = 0; j < n; ++j) b(i, j) = gi.dot(g * out.generators.col(j));
  }
  out.form = FiniteQuadraticForm(std::move(orders), std::move(q), std::move(b));
  return out;
}

// ---------------------------------------------------------------------------

namespace {

struct Search {
  const FiniteQuadraticForm& a;
  const FiniteQuadraticForm& b;
  std::vector<GroupElement> targets;
  std::vector<Rational> target_q;
  std::vector<long> target_order;
  std::vector<std::size_t> chosen;

  bool run(std::size_t i, const std::set<GroupElement>& subgroup) {
    if (i == a.rank()) return true;
    const long d = a.orders()[i];
    GroupElement gi(a.rank(), 0);
    gi[i] = 1;
    for (std::size_t t = 0; t < targets.size(); ++t) {
      if (target_order[t] != d || target_q[t] != a.q_values()[i]) continue;
      bool ok = true;
      for (std::size_t j = 0; j < i && ok; ++j)
        ok = b.b(targets[t], targets[chosen[j]]) == a.pairings()(static_cast<Index>(i), static_cast<Index>(j));
      if (!ok) continue;
      std::set<GroupElement> next;
      GroupElement mult(b.rank(), 0);
      for (long k = 0; k < d; ++k) {
        for (const auto& h : subgroup) next.insert(b.add(h, mult));
        mult = b.add(mult, targets[t]);
      }
      if (next.size() != subgroup.size() * static_cast<std::size_t>(d)) continue;
      chosen.push_back(t);
      if (run(i + 1, next)) return true;
      chosen.pop_back();
    }
    return false;
  }
};

}  // namespace

std::optional<std::vector<GroupElement>> find_isometry(const FiniteQuadraticForm& a,
                                                       const FiniteQuadraticForm& b) {
  if (a.group_order() != b.group_order()) return std::nullopt;
  Search s{a, b, b.elements(), {}, {}, {}};
  for (const auto& t : s.targets) {
    s.target_q.push_back(b.q(t));
    s.target_order.push_back(b.element_order(t));
  }
  if (!s.run(0, {GroupElement(b.rank(), 0)})) return std::nullopt;
  std::vector<GroupElement> images;
  for (std::size_t t : s.chosen) images.push_back(s.targets[t]);
  return images;
}

bool is_isometry(const FiniteQuadraticForm& a, const FiniteQuadraticForm& b,
                 const std::vector<GroupElement>& images) {
  if (images.size() != a.rank() || a.group_order() != b.group_order()) return false;
  for (std::size_t i = 0; i < a.rank(); ++i) {
    if (images[i].size() != b.rank()) return false;
    if (!b.is_zero(b.scale(a.orders()[i], images[i]))) return false;
    if (b.q(images[i]) != a.q_values()[i]) return false;
    for (std::size_t j = 0; j < a.rank(); ++j)
      if (b.b(images[i], images[j]) != a.pairings()(static_cast<Index>(i), static_cast<Index>(j))) return false;
  }
  std::set<GroupElement> seen;
  for (const auto& x : a.elements()) {
    GroupElement y(b.rank(), 0);
    for (std::size_t i = 0; i < a.rank(); ++i) y = b.add(y, b.scale(x[i], images[i]));
    if (b.q(y) != a.q(x)) return false;
    seen.insert(y);
  }
  return static_cast<long>(seen.size()) == b.group_order();
}

f2::F2Vec U3Dictionary::operator()(const GroupElement& x) const {
  f2::F2Vec v;
  for (std::size_t i = 0; i < images.size(); ++i)
    if (x[i] % 2 != 0) v += images[i];
  return v;
}

U3Dictionary identify_with_u3(const FiniteQuadraticForm& form) {
  if (form.rank() != 6) throw std::domain_error("identify_with_u3: form must have rank 6");
  for (std::size_t i = 0; i < 6; ++i) {
    if (form.orders()[i] != 2) throw std::domain_error("identify_with_u3: form must be 2-elementary");
    if (!is_integer(form.q_values()[i])) throw std::domain_error("identify_with_u3: q-values must be integral");
  }
  const auto iso = find_isometry(form, FiniteQuadraticForm::u3());
  if (!iso) throw std::domain_error("identify_with_u3: form is not isometric to u^3");
  U3Dictionary d;
  for (const auto& img : *iso) {
    unsigned bits = 0;
    for (int k = 0; k < 6; ++k)
      if (img[static_cast<std::size_t>(k)] != 0) bits |= 1u << k;
    d.images.push_back(f2::F2Vec(bits));
  }
  return d;
}

}  // namespace octet::lattice
