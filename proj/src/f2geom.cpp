#include "octet/f2geom.hpp"

#include <algorithm>
#include <deque>
#include <set>
#include <stdexcept>

namespace octet::f2 {

std::string to_string(F2Vec v) {
  static const char* names[kDim] = {"e1", "f1", "e2", "f2", "e3", "f3"};
  if (v.is_zero()) return "0";
  std::string out;
  for (int i = 0; i < kDim; ++i) {
    if (!v.bit(i)) continue;
    if (!out.empty()) out += '+';
    out += names[i];
  }
  return out;
}

std::array<F2Vec, kSize> all_vectors() {
  std::array<F2Vec, kSize> out;
  for (unsigned i = 0; i < kSize; ++i) out[i] = F2Vec(i);
  return out;
}

const char* type_label(VectorType t) {
  switch (t) {
    case VectorType::Zero: return "00";
    case VectorType::Isotropic: return "0";
    case VectorType::Anisotropic: return "1";
  }
  return "?";
}

TypeCounts census() {
  TypeCounts c;
  for (F2Vec v : all_vectors()) {
    switch (classify(v)) {
      case VectorType::Zero: ++c.zero; break;
      case VectorType::Isotropic: ++c.isotropic; break;
      case VectorType::Anisotropic: ++c.anisotropic; break;
    }
  }
  return c;
}

PairCensus pair_census(F2Vec alpha) {
  PairCensus p;
  for (F2Vec beta : all_vectors()) ++p.counts[type_index(classify(beta))][b(alpha, beta)];
  return p;
}

// ---------------------------------------------------------------------------

Permutation64::Permutation64() {
  for (unsigned i = 0; i < kSize; ++i) image_[i] = static_cast<std::uint8_t>(i);
}

Permutation64::Permutation64(const std::array<std::uint8_t, kSize>& image) : image_(image) {
  std::array<bool, kSize> seen{};
  for (auto v : image_) {
    if (v >= kSize || seen[v]) throw std::invalid_argument("not a permutation of the 64 points");
    seen[v] = true;
  }
}

Permutation64 Permutation64::operator*(const Permutation64& other) const {
  Permutation64 out;
  for (unsigned i = 0; i < kSize; ++i) out.image_[i] = image_[other.image_[i]];
  return out;
}

Permutation64 Permutation64::inverse() const {
  Permutation64 out;
  for (unsigned i = 0; i < kSize; ++i) out.image_[image_[i]] = static_cast<std::uint8_t>(i);
  return out;
}

bool Permutation64::is_identity() const { return *this == Permutation64(); }

int Permutation64::order() const {
  Permutation64 p = *this;
  int n = 1;
  while (!p.is_identity()) {
    p = p * *this;
    ++n;
  }
  return n;
}

bool Permutation64::preserves_q() const {
  for (F2Vec v : all_vectors())
    if (q((*this)(v)) != q(v)) return false;
  return true;
}

bool Permutation64::is_isometry() const {
  for (F2Vec x : all_vectors())
    for (F2Vec y : all_vectors())
      if ((*this)(x + y) != (*this)(x) + (*this)(y)) return false;
  return preserves_q();
}

Permutation64 transvection(F2Vec alpha) {
  if (q(alpha) != 1)
    throw std::domain_error("transvection needs an anisotropic vector, got " + to_string(alpha));
  std::array<std::uint8_t, kSize> img{};
  for (F2Vec x : all_vectors()) img[x.bits()] = static_cast<std::uint8_t>((b(x, alpha) ? x + alpha : x).bits());
  return Permutation64(img);
}

std::vector<F2Vec> anisotropic_vectors() {
  std::vector<F2Vec> out;
  for (F2Vec v : all_vectors())
    if (q(v) == 1) out.push_back(v);
  return out;
}

bool OrthogonalGroup::contains(const Permutation64& g) const {
  return std::binary_search(elements.begin(), elements.end(), g);
}

std::vector<std::vector<F2Vec>> OrthogonalGroup::nonzero_orbits() const {
  std::vector<std::vector<F2Vec>> orbits;
  std::array<bool, kSize> seen{};
  seen[0] = true;
  for (F2Vec v : all_vectors()) {
    if (seen[v.bits()]) continue;
    const auto& gens = generators.empty() ? elements : generators;
    std::set<F2Vec> orbit;
    std::deque<F2Vec> todo{v};
    orbit.insert(v);
    while (!todo.empty()) {
      F2Vec x = todo.front();
      todo.pop_front();
      for (const auto& g : gens) {
        F2Vec y = g(x);
        if (orbit.insert(y).second) todo.push_back(y);
      }
    }
    for (F2Vec x : orbit) seen[x.bits()] = true;
    orbits.emplace_back(orbit.begin(), orbit.end());
  }
  return orbits;
}

OrthogonalGroup generate_orthogonal_group() {
  OrthogonalGroup g;
  for (F2Vec a : anisotropic_vectors()) g.generators.push_back(transvection(a));
  std::set<Permutation64> seen{Permutation64()};
  std::deque<Permutation64> todo{Permutation64()};
  while (!todo.empty()) {
    Permutation64 x = todo.front();
    todo.pop_front();
    for (const auto& t : g.generators) {
      Permutation64 y = t * x;
      if (seen.insert(y).second) todo.push_back(y);
    }
  }
  g.elements.assign(seen.begin(), seen.end());
  return g;
}

// ---------------------------------------------------------------------------

namespace {

int pivot_of(F2Vec v) { return std::countr_zero(v.bits()); }

}  // namespace

F2Subspace F2Subspace::span(const std::vector<F2Vec>& gens) {
  std::vector<F2Vec> basis;
  for (F2Vec g : gens) {
    for (F2Vec bv : basis)
      if (g.bit(pivot_of(bv))) g += bv;
    if (g.is_zero()) continue;
    const int p = pivot_of(g);
    for (F2Vec& bv : basis)
      if (bv.bit(p)) bv += g;
    basis.push_back(g);
  }
  std::sort(basis.begin(), basis.end(),
            [](F2Vec x, F2Vec y) { return pivot_of(x) < pivot_of(y); });
  F2Subspace s;
  s.basis_ = std::move(basis);
  return s;
}

std::vector<F2Vec> F2Subspace::elements() const {
  std::vector<F2Vec> out;
  for (unsigned mask = 0; mask < (1u << basis_.size()); ++mask) {
    F2Vec v;
    for (std::size_t i = 0; i < basis_.size(); ++i)
      if (mask >> i & 1u) v += basis_[i];
    out.push_back(v);
  }
  std::sort(out.begin(), out.end());
  return out;
}

F2Vec F2Subspace::reduce(F2Vec v) const {
  for (F2Vec bv : basis_)
    if (v.bit(pivot_of(bv))) v += bv;
  return v;
}

bool F2Subspace::contains(F2Vec v) const { return reduce(v).is_zero(); }

bool F2Subspace::contains(const F2Subspace& other) const {
  return std::all_of(other.basis_.begin(), other.basis_.end(),
                     [this](F2Vec v) { return contains(v); });
}

F2Subspace F2Subspace::intersect(const F2Subspace& other) const {
  std::vector<F2Vec> common;
  for (F2Vec v : elements())
    if (other.contains(v)) common.push_back(v);
  return span(common);
}

F2Subspace F2Subspace::operator+(const F2Subspace& other) const {
  std::vector<F2Vec> gens = basis_;
  gens.insert(gens.end(), other.basis_.begin(), other.basis_.end());
  return span(gens);
}

F2Subspace F2Subspace::image(const Permutation64& g) const {
  std::vector<F2Vec> gens;
  for (F2Vec v : basis_) gens.push_back(g(v));
  return span(gens);
}

bool F2Subspace::is_totally_isotropic() const {
  for (F2Vec v : elements())
    if (q(v) != 0) return false;
  return true;
}

bool F2Subspace::is_totally_singular() const {
  if (dim() != 3) return false;
  for (F2Vec x : basis_)
    for (F2Vec y : basis_)
      if (b(x, y) != 0) return false;
  for (F2Vec v : basis_)
    if (q(v) != 0) return true;
  return false;
}

std::string to_string(const F2Subspace& s) {
  std::string out = "<";
  for (std::size_t i = 0; i < s.basis().size(); ++i) {
    if (i) out += ", ";
    out += to_string(s.basis()[i]);
  }
  return out + ">";
}

std::vector<F2Subspace> enumerate_subspaces(int dim) {
  if (dim < 0 || dim > kDim) throw std::invalid_argument("subspace dimension out of range");
  std::set<F2Subspace> found;
  // Grow from spans of increasing tuples; a subspace of dimension d is the
  // span of some d-tuple of its elements.
  std::vector<F2Vec> tuple;
  auto rec = [&](auto&& self, unsigned start) -> void {
    if (static_cast<int>(tuple.size()) == dim) {
      F2Subspace s = F2Subspace::span(tuple);
      if (s.dim() == dim) found.insert(s);
      return;
    }
    for (unsigned v = start; v < kSize; ++v) {
      if (F2Subspace::span(tuple).contains(F2Vec(v))) continue;
      tuple.push_back(F2Vec(v));
      self(self, v + 1);
      tuple.pop_back();
    }
  };
  rec(rec, 1);
  return {found.begin(), found.end()};
}

std::vector<F2Subspace> enumerate_isotropic_subspaces(int dim) {
  if (dim < 1 || dim > 3)
    throw std::invalid_argument("totally isotropic subspaces have dimension 1..3");
  std::vector<F2Subspace> out;
  for (auto& s : enumerate_subspaces(dim))
    if (s.is_totally_isotropic()) out.push_back(s);
  return out;
}

F2Subspace SingularSubspace::kernel() const { return F2Subspace::span({isotropic.begin(), isotropic.end()}); }

SingularSubspace make_singular(const F2Subspace& v) {
  if (!v.is_totally_singular())
    throw std::domain_error("not a maximal totally singular subspace: " + to_string(v));
  SingularSubspace s{v, {}, {}};
  int na = 0, ni = 0;
  for (F2Vec x : v.elements()) (q(x) ? s.anisotropic[na++] : s.isotropic[ni++]) = x;
  return s;
}

std::vector<SingularSubspace> enumerate_singular_subspaces() {
  std::vector<SingularSubspace> out;
  for (auto& s : enumerate_subspaces(3))
    if (s.is_totally_singular()) out.push_back(make_singular(s));
  return out;
}

std::pair<F2Subspace, F2Subspace> isotropic_plane_extensions(const F2Subspace& plane) {
  if (plane.dim() != 2 || !plane.is_totally_isotropic())
    throw std::domain_error("expected a totally isotropic plane, got " + to_string(plane));
  std::set<F2Vec> added;
  for (F2Vec v : all_vectors()) {
    if (plane.contains(v)) continue;
    F2Subspace ext = plane + F2Subspace::span({v});
    if (ext.is_totally_isotropic()) added.insert(plane.reduce(v));
  }
  if (added.size() != 2)
    throw std::logic_error("expected exactly two maximal isotropic extensions");
  auto it = added.begin();
  F2Subspace plus = plane + F2Subspace::span({*it});
  F2Subspace minus = plane + F2Subspace::span({*std::next(it)});
  return {plus, minus};
}

}  // namespace octet::f2
