#pragma once

// Tableaux on {1..8}, the cross-ratio functions mu_tau on 8-point
// configurations of the projective line, and the correspondence between
// tableaux and maximal totally singular subspaces of u^3.

#include "octet/exact.hpp"
#include "octet/f2geom.hpp"

#include <array>
#include <compare>
#include <cstdint>
#include <map>
#include <optional>
#include <random>
#include <string>
#include <vector>

namespace octet::config {

/// A permutation of {1..8}; image[i - 1] = sigma(i).
class Perm8 {
 public:
  Perm8();  // identity
  /// Throws std::invalid_argument unless `image` is a permutation of 1..8.
  explicit Perm8(const std::array<int, 8>& image);
  static Perm8 transposition(int i, int j);

  int operator()(int i) const { return image_[static_cast<std::size_t>(i - 1)]; }
  const std::array<int, 8>& image() const { return image_; }
  /// (this * other)(i) = this(other(i)).
  Perm8 operator*(const Perm8& other) const;
  Perm8 inverse() const;
  bool is_identity() const;
  /// Transpositions t_1, ..., t_k with this = t_1 * ... * t_k.
  std::vector<std::pair<int, int>> transpositions() const;

  static Perm8 random(std::mt19937_64& rng);

  friend auto operator<=>(const Perm8&, const Perm8&) = default;

 private:
  std::array<int, 8> image_;
};

using Row = std::array<int, 2>;

class Tableau {
 public:
  /// Throws std::invalid_argument unless the entries are exactly 1..8.
  explicit Tableau(const std::array<Row, 4>& rows);

  const std::array<Row, 4>& rows() const { return rows_; }

  /// Rows increasing, rows sorted by first entry.
  bool is_canonical() const;
  /// Increasing along rows and down both columns.
  bool is_standard() const;

  struct Signed;
  /// The canonical form and the sign (-1)^(number of swapped rows).
  Signed canonical() const;

  /// sigma applied to every entry; not canonicalized.
  Tableau permuted(const Perm8& sigma) const;

  friend auto operator<=>(const Tableau&, const Tableau&) = default;

 private:
  std::array<Row, 4> rows_;
};

struct Tableau::Signed {
  Tableau tableau;
  int sign;
};

/// "(12)(34)(56)(78)"
std::string to_string(const Tableau& t);
/// Parses "(12)(34)(56)(78)" or "(1,2)(3,4)(5,6)(7,8)".
Tableau parse_tableau(const std::string& text);

/// All 105 canonical tableaux, sorted.
const std::vector<Tableau>& enumerate_tableaux();
/// The 14 standard tableaux, sorted; this order fixes the coordinates of Theta.
const std::vector<Tableau>& standard_tableaux();
/// Position in standard_tableaux(), or nullopt.
std::optional<std::size_t> standard_index(const Tableau& t);

// -- configurations ---------------------------------------------------------

using Point = std::array<Rational, 2>;

class PointConfig {
 public:
  /// Throws std::invalid_argument if a point is (0 : 0).
  explicit PointConfig(const std::array<Point, 8>& points);
  /// v^i = (1, x_i).
  static PointConfig affine(const std::array<Rational, 8>& xs);

  const Point& point(int i) const { return points_[static_cast<std::size_t>(i - 1)]; }
  const std::array<Point, 8>& points() const { return points_; }

  /// Largest number of points that coincide projectively.
  int max_multiplicity() const;
  bool is_semistable() const { return max_multiplicity() < 5; }
  bool is_stable() const { return max_multiplicity() < 4; }

  /// (sigma . c)_i = c_{sigma^-1(i)}.
  PointConfig permuted(const Perm8& sigma) const;
  /// v -> m v for an invertible 2x2 matrix {a, b, c, d}.
  PointConfig transformed(const std::array<Rational, 4>& m) const;

  /// Distinct integers drawn from [-50, 50], in the affine chart.
  static PointConfig random(std::mt19937_64& rng);

 private:
  std::array<Point, 8> points_;
};

Rational bracket(const Point& v, const Point& w);

/// Product of the four determinants det(v^a v^b) over the rows (a, b).
Rational mu(const Tableau& t, const PointConfig& c);

/// The 14 standard mu values divided by the first nonzero one; nullopt
/// when all vanish (unstable configuration).
std::optional<std::vector<Rational>> theta_map(const PointConfig& c);

// -- the F_2^8 model ----------------------------------------------------------

/// A vector of F_2^8 = K*/K, coordinate i - 1 the coefficient of F_i / 2.
struct Vec8 {
  std::uint8_t bits = 0;
  int weight() const;
  /// Even weight: orthogonal to theta = (F_1 + ... + F_8) / 2.
  bool in_theta_perp() const { return weight() % 2 == 0; }
  /// On theta^perp / theta: q = (weight / 2) mod 2.
  int q() const;
  friend auto operator<=>(const Vec8&, const Vec8&) = default;
};

Vec8 pair_vector(int i, int j);
int b(Vec8 x, Vec8 y);

/// theta^perp / theta -> u^3 through the discriminant form of the overlattice
/// of U + A1^8 and its u^3 dictionary. Throws std::domain_error for odd
/// weight.
f2::F2Vec to_u3(Vec8 x);

/// Span of the images of the four row vectors e_a + e_b.
f2::F2Subspace tableau_to_subspace(const Tableau& t);

/// The element of O(q) attached to sigma: transposition (i j) maps to the
/// transvection at the image of (F_i + F_j) / 2.
f2::Permutation64 orthogonal_image(const Perm8& sigma);

// -- straightening ----------------------------------------------------------

/// mu_t as an integer combination of standard mu's, via three-term
/// exchanges [wz][xy] = [wy][xz] - [wx][yz].
std::map<Tableau, Integer> straighten(const Tableau& t);

/// Action of sigma on the span of the standard mu's, (sigma F)(c) = F(sigma^-1 c):
/// column k holds the coordinates of sigma . mu_{tau_k}. Computed by
/// straightening.
MatrixQ action_matrix(const Perm8& sigma);

/// The same matrix determined by solving against 14 sampled configurations.
/// Throws std::runtime_error if the samples are not generic.
MatrixQ sampled_action_matrix(const Perm8& sigma, const std::vector<PointConfig>& samples);

}  // namespace octet::config
