#pragma once

// Polynomial relations among the 14 standard mu's, found by evaluating all
// monomials of a given degree at sampled configurations.

#include "octet/exact.hpp"
#include "octet/tableaux.hpp"

#include <cstdint>
#include <vector>

namespace octet::config {

using Exponents = std::vector<int>;

/// Exponent vectors of the degree-d monomials in `vars` variables, in
/// graded reverse order (x_1^d first).
std::vector<Exponents> monomials(int degree, int vars = 14);

/// n configurations from PointConfig::random with an mt19937_64 seeded by `seed`.
std::vector<PointConfig> sample_configs(long n, std::uint64_t seed);

/// The 14 standard mu values, unnormalized.
std::vector<Rational> standard_values(const PointConfig& c);

struct RelationBasis {
  int degree = 0;
  long monomial_count = 0;
  long samples = 0;
  std::uint64_t seed = 0;
  long rank = 0;
  long kernel_dimension = 0;
  /// Rank after the first half of the samples equals the final rank.
  bool stable = false;
  /// false when the rank was computed modulo `modulus` (no basis then).
  bool exact = true;
  std::uint64_t modulus = 0;
  std::vector<Exponents> monomials;
  /// Rows: relations in reduced echelon form with coprime integer entries.
  MatrixQ basis;
};

/// Degrees up to 2 are solved exactly over Q; higher degrees report the
/// rank modulo the prime 67108859 only. Throws std::invalid_argument for
/// degree < 1 or fewer samples than monomials.
RelationBasis relation_discovery(int degree, long samples, std::uint64_t seed);

/// Rank of the 105 canonical mu's as functions, over the sampled configurations.
long mu_function_rank(long samples, std::uint64_t seed);

/// For degree 2: whether every relation composed with the action of sigma
/// on the 14 coordinates stays in the span of the relations.
bool quadric_space_invariant(const RelationBasis& r, const Perm8& sigma);

}  // namespace octet::config
