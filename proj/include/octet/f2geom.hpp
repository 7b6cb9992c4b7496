#pragma once

// The 64-element quadratic space u + u + u over F_2.
//
// Coordinates are ordered (e1, f1, e2, f2, e3, f3); coordinate i is bit i of
// the 6-bit value. q(x) = x_e1 x_f1 + x_e2 x_f2 + x_e3 x_f3 and the polar
// form b(x, y) = q(x + y) + q(x) + q(y).

#include <array>
#include <bit>
#include <compare>
#include <cstdint>
#include <string>
#include <utility>
#include <vector>

namespace octet::f2 {

inline constexpr int kDim = 6;
inline constexpr int kSize = 64;

class F2Vec {
 public:
  constexpr F2Vec() = default;
  constexpr explicit F2Vec(unsigned bits) : bits_(static_cast<std::uint8_t>(bits & 63u)) {}

  static constexpr F2Vec e(int plane) { return F2Vec(1u << (2 * (plane - 1))); }
  static constexpr F2Vec f(int plane) { return F2Vec(2u << (2 * (plane - 1))); }

  constexpr unsigned bits() const { return bits_; }
  constexpr bool bit(int i) const { return (bits_ >> i) & 1u; }
  constexpr bool is_zero() const { return bits_ == 0; }

  friend constexpr F2Vec operator+(F2Vec a, F2Vec b) { return F2Vec(a.bits_ ^ b.bits_); }
  constexpr F2Vec& operator+=(F2Vec o) {
    bits_ ^= o.bits_;
    return *this;
  }
  friend constexpr auto operator<=>(F2Vec, F2Vec) = default;

 private:
  std::uint8_t bits_ = 0;
};

/// "e1+f1+e3" style rendering; "0" for zero.
std::string to_string(F2Vec v);

constexpr int q(F2Vec x) {
  const unsigned v = x.bits();
  return std::popcount((v & (v >> 1)) & 0b010101u) & 1;
}

constexpr int b(F2Vec x, F2Vec y) { return q(x + y) ^ q(x) ^ q(y); }

/// All 64 vectors in increasing bit order.
std::array<F2Vec, kSize> all_vectors();

enum class VectorType { Zero, Isotropic, Anisotropic };

constexpr VectorType classify(F2Vec v) {
  if (v.is_zero()) return VectorType::Zero;
  return q(v) == 0 ? VectorType::Isotropic : VectorType::Anisotropic;
}

/// "00", "0", "1" as in the type labels of the census tables.
const char* type_label(VectorType t);
constexpr int type_index(VectorType t) { return static_cast<int>(t); }

struct TypeCounts {
  int zero = 0, isotropic = 0, anisotropic = 0;
  friend bool operator==(const TypeCounts&, const TypeCounts&) = default;
};

TypeCounts census();

/// counts[beta type][b(alpha, beta)]
struct PairCensus {
  std::array<std::array<int, 2>, 3> counts{};
  int m0(VectorType beta) const { return counts[type_index(beta)][0]; }
  int m1(VectorType beta) const { return counts[type_index(beta)][1]; }
};

PairCensus pair_census(F2Vec alpha);

// ---------------------------------------------------------------------------
// Isometries as permutations of the 64 points.

class Permutation64 {
 public:
  Permutation64();  // identity
  explicit Permutation64(const std::array<std::uint8_t, kSize>& image);

  F2Vec operator()(F2Vec x) const { return F2Vec(image_[x.bits()]); }
  /// (this * other)(x) = this(other(x))
  Permutation64 operator*(const Permutation64& other) const;
  Permutation64 inverse() const;
  bool is_identity() const;
  int order() const;
  bool preserves_q() const;
  /// Linear and q-preserving; equivalent to membership in O(q).
  bool is_isometry() const;

  const std::array<std::uint8_t, kSize>& image() const { return image_; }
  friend auto operator<=>(const Permutation64&, const Permutation64&) = default;

 private:
  std::array<std::uint8_t, kSize> image_;
};

/// t_alpha(x) = x + b(x, alpha) alpha. Throws std::domain_error unless
/// q(alpha) = 1.
Permutation64 transvection(F2Vec alpha);

/// The 28 anisotropic vectors, increasing.
std::vector<F2Vec> anisotropic_vectors();

struct OrthogonalGroup {
  std::vector<Permutation64> elements;  // sorted by image table
  std::vector<Permutation64> generators;

  std::size_t order() const { return elements.size(); }
  bool contains(const Permutation64& g) const;
  /// Orbits of the action on the 63 nonzero vectors, each sorted, the list
  /// sorted by smallest member.
  std::vector<std::vector<F2Vec>> nonzero_orbits() const;
};

/// Closure of the 28 transvections under composition.
OrthogonalGroup generate_orthogonal_group();

// ---------------------------------------------------------------------------
// Subspaces.

/// A subspace stored by its reduced echelon basis: each basis vector has a
/// pivot (its lowest set bit), pivots are distinct and increasing, and every
/// other basis vector is zero at each pivot. Equal subspaces have equal
/// bases, so ordering is lexicographic on the basis bit patterns.
class F2Subspace {
 public:
  F2Subspace() = default;
  static F2Subspace span(const std::vector<F2Vec>& gens);

  int dim() const { return static_cast<int>(basis_.size()); }
  const std::vector<F2Vec>& basis() const { return basis_; }
  /// All 2^dim members, increasing.
  std::vector<F2Vec> elements() const;
  bool contains(F2Vec v) const;
  /// Canonical representative of the coset v + this.
  F2Vec reduce(F2Vec v) const;
  bool contains(const F2Subspace& other) const;
  F2Subspace intersect(const F2Subspace& other) const;
  F2Subspace operator+(const F2Subspace& other) const;
  F2Subspace image(const Permutation64& g) const;

  bool is_totally_isotropic() const;
  /// q restricted to the subspace is the split form sum x_i: dimension 3,
  /// polar form identically zero, q not identically zero.
  bool is_totally_singular() const;

  friend auto operator<=>(const F2Subspace&, const F2Subspace&) = default;

 private:
  std::vector<F2Vec> basis_;
};

std::string to_string(const F2Subspace& s);

/// Every subspace of the given dimension, canonically ordered.
std::vector<F2Subspace> enumerate_subspaces(int dim);
std::vector<F2Subspace> enumerate_isotropic_subspaces(int dim);

struct SingularSubspace {
  F2Subspace space;
  std::array<F2Vec, 4> anisotropic;  // increasing
  std::array<F2Vec, 4> isotropic;    // increasing, starts with 0
  /// ker(q|V) = {0} + the three sums of pairs of anisotropic members.
  F2Subspace kernel() const;
};

SingularSubspace make_singular(const F2Subspace& v);
std::vector<SingularSubspace> enumerate_singular_subspaces();

/// The two maximal totally isotropic subspaces through a totally isotropic
/// plane, as (I+, I-): I+ is the one whose added vector, reduced modulo the
/// plane, has the smaller bit pattern.
std::pair<F2Subspace, F2Subspace> isotropic_plane_extensions(const F2Subspace& plane);

}  // namespace octet::f2
