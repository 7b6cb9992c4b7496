#include "oracles.hpp"
#include "octet/json_io.hpp"
#include "octet/relations.hpp"
#include "octet/suites.hpp"
#include "octet/tableaux.hpp"

#include <doctest.h>

#include <algorithm>
#include <set>

using namespace octet;
using namespace octet::config;

namespace {

using Rows = std::array<std::array<int, 2>, 4>;

/// All pairings of 1..8 with increasing rows sorted by first entry.
std::vector<Rows> oracle_pairings() {
  std::vector<Rows> out;
  Rows cur{};
  auto rec = [&](auto&& self, unsigned used, int row) -> void {
    if (row == 4) {
      out.push_back(cur);
      return;
    }
    int a = 1;
    while (used & (1u << a)) ++a;
    for (int b = a + 1; b <= 8; ++b) {
      if (used & (1u << b)) continue;
      cur[static_cast<std::size_t>(row)] = {a, b};
      self(self, used | (1u << a) | (1u << b), row + 1);
    }
  };
  rec(rec, 0, 0);
  std::sort(out.begin(), out.end());
  return out;
}

bool oracle_standard(const Rows& r) {
  for (int i = 0; i + 1 < 4; ++i)
    if (r[static_cast<std::size_t>(i)][1] > r[static_cast<std::size_t>(i + 1)][1]) return false;
  return true;
}

std::array<Rational, 8> random_affine(std::mt19937_64& rng) {
  std::uniform_int_distribution<int> num(-40, 40), den(1, 7);
  std::array<Rational, 8> x;
  std::set<Rational> seen;
  for (auto& v : x) {
    do v = Rational(num(rng), den(rng));
    while (!seen.insert(v).second);
  }
  return x;
}

Rational monomial_at(const Exponents& e, const std::vector<Rational>& y) {
  Rational p = 1;
  for (std::size_t i = 0; i < e.size(); ++i)
    for (int k = 0; k < e[i]; ++k) p *= y[i];
  return p;
}

}  // namespace

TEST_CASE("tableau enumeration matches brute force") {
  const auto pairings = oracle_pairings();
  CHECK(pairings.size() == 105);
  const auto& all = enumerate_tableaux();
  REQUIRE(all.size() == 105);
  for (std::size_t i = 0; i < 105; ++i) CHECK(all[i].rows() == pairings[i]);
  std::vector<Rows> standard;
  for (const auto& p : pairings)
    if (oracle_standard(p)) standard.push_back(p);
  CHECK(standard.size() == 14);
  // Hook length count for the 4 x 2 shape.
  CHECK(40320 / (5 * 4 * 4 * 3 * 3 * 2 * 2 * 1) == 14);
  const auto& st = standard_tableaux();
  REQUIRE(st.size() == 14);
  for (std::size_t i = 0; i < 14; ++i) {
    CHECK(st[i].rows() == standard[i]);
    CHECK(standard_index(st[i]) == i);
  }
  CHECK_FALSE(standard_index(parse_tableau("(14)(23)(56)(78)")).has_value());
}

TEST_CASE("tableau parsing and canonical form") {
  const Tableau t = parse_tableau("(21)(34)(56)(78)");
  CHECK_FALSE(t.is_canonical());
  const auto c = t.canonical();
  CHECK(c.sign == -1);
  CHECK(to_string(c.tableau) == "(12)(34)(56)(78)");
  CHECK(parse_tableau("(1,2)(3,4)(5,6)(7,8)") == c.tableau);
  const auto moved = parse_tableau("(56)(12)(78)(34)").canonical();
  CHECK(moved.sign == 1);
  CHECK(moved.tableau.is_standard());
  CHECK_THROWS_AS(Tableau({{{1, 1}, {3, 4}, {5, 6}, {7, 8}}}), std::invalid_argument);
  CHECK_THROWS(parse_tableau("(12)(34)(56)"));
}

TEST_CASE("Perm8") {
  const Perm8 s = Perm8::transposition(1, 2), t = Perm8::transposition(2, 3);
  CHECK((s * s).is_identity());
  CHECK((s * t)(1) == 2);
  CHECK((s * t)(3) == 1);
  std::mt19937_64 rng(3);
  for (int k = 0; k < 20; ++k) {
    const Perm8 p = Perm8::random(rng);
    CHECK((p * p.inverse()).is_identity());
    Perm8 prod;
    for (const auto& [i, j] : p.transpositions()) prod = prod * Perm8::transposition(i, j);
    CHECK(prod == p);
  }
  CHECK_THROWS_AS(Perm8({1, 1, 3, 4, 5, 6, 7, 8}), std::invalid_argument);
}

TEST_CASE("mu against the affine product formula") {
  std::mt19937_64 rng(5);
  for (int k = 0; k < 10; ++k) {
    const auto x = random_affine(rng);
    const auto c = PointConfig::affine(x);
    for (const auto& t : enumerate_tableaux()) CHECK(mu(t, c) == oracle::affine_mu(t.rows(), x));
  }
  std::array<Rational, 8> line;
  for (int i = 0; i < 8; ++i) line[static_cast<std::size_t>(i)] = i + 1;
  CHECK(mu(parse_tableau("(12)(34)(56)(78)"), PointConfig::affine(line)) == 1);
  CHECK(mu(Tableau({{{2, 1}, {3, 4}, {5, 6}, {7, 8}}}), PointConfig::affine(line)) == -1);
  CHECK(bracket({1, 2}, {3, 4}) == -2);
}

TEST_CASE("configurations") {
  std::array<Point, 8> pts;
  for (int i = 0; i < 8; ++i) pts[static_cast<std::size_t>(i)] = {1, i};
  pts[3] = {2, 0};  // same as (1 : 0)
  const PointConfig c(pts);
  CHECK(c.max_multiplicity() == 2);
  CHECK(c.is_stable());
  CHECK_THROWS_AS(PointConfig({Point{0, 0}, pts[1], pts[2], pts[3], pts[4], pts[5], pts[6], pts[7]}),
                  std::invalid_argument);
  std::array<Rational, 8> four{0, 0, 0, 0, 1, 2, 3, 4};
  CHECK(PointConfig::affine(four).is_semistable());
  CHECK_FALSE(PointConfig::affine(four).is_stable());
  std::mt19937_64 rng(9);
  for (int k = 0; k < 20; ++k) {
    const auto r = PointConfig::random(rng);
    CHECK(r.max_multiplicity() == 1);
    for (const auto& p : r.points()) {
      CHECK(p[0] == 1);
      CHECK(abs(p[1]) <= 50);
      CHECK(is_integer(p[1]));
    }
  }
  const Perm8 s = Perm8::transposition(1, 5);
  const auto moved = c.permuted(s);
  CHECK(moved.point(5) == c.point(1));
  CHECK(moved.point(1) == c.point(5));
}

TEST_CASE("theta") {
  std::array<Rational, 8> line;
  for (int i = 0; i < 8; ++i) line[static_cast<std::size_t>(i)] = i + 1;
  const auto th = theta_map(PointConfig::affine(line));
  REQUIRE(th.has_value());
  const auto pairings = oracle_pairings();
  std::vector<Rational> expect;
  for (const auto& p : pairings)
    if (oracle_standard(p)) expect.push_back(oracle::affine_mu(p, line));
  const Rational first = expect.front();
  for (auto& v : expect) v /= first;
  CHECK(*th == expect);
  std::array<Rational, 8> five{0, 0, 0, 0, 0, 1, 2, 3};
  CHECK_FALSE(theta_map(PointConfig::affine(five)).has_value());
  // Moebius invariance.
  std::mt19937_64 rng(13);
  const auto x = random_affine(rng);
  const auto c = PointConfig::affine(x);
  CHECK(theta_map(c.transformed({3, -1, 2, 5})) == theta_map(c));
}

TEST_CASE("F2^8 model") {
  CHECK(pair_vector(1, 2).bits == 0b11);
  CHECK(pair_vector(1, 2).q() == 1);
  CHECK(Vec8{0b1111}.q() == 0);
  CHECK(Vec8{0xff}.q() == 0);
  CHECK(b(pair_vector(1, 2), pair_vector(2, 3)) == 1);
  CHECK(b(pair_vector(1, 2), pair_vector(3, 4)) == 0);
  CHECK_THROWS_AS(to_u3(Vec8{1}), std::domain_error);
  // theta maps to zero; the map is additive and preserves q.
  CHECK(to_u3(Vec8{0xff}).is_zero());
  for (unsigned x = 0; x < 256; ++x) {
    const Vec8 v{static_cast<std::uint8_t>(x)};
    if (!v.in_theta_perp()) continue;
    CHECK(oracle::q(to_u3(v).bits()) == v.q());
    CHECK(to_u3(Vec8{static_cast<std::uint8_t>(x ^ 0xff)}) == to_u3(v));
    CHECK(to_u3(Vec8{static_cast<std::uint8_t>(x ^ 0b11)}) == to_u3(v) + to_u3(pair_vector(1, 2)));
  }
}

TEST_CASE("tableaux to singular subspaces") {
  std::set<f2::F2Subspace> images;
  for (const auto& t : enumerate_tableaux()) {
    const auto v = tableau_to_subspace(t);
    CHECK(v.is_totally_singular());
    images.insert(v);
  }
  std::set<f2::F2Subspace> singular;
  for (const auto& v : f2::enumerate_singular_subspaces()) singular.insert(v.space);
  CHECK(images == singular);
}

TEST_CASE("orthogonal image of permutations") {
  for (int i = 1; i <= 8; ++i)
    for (int j = i + 1; j <= 8; ++j)
      CHECK(orthogonal_image(Perm8::transposition(i, j)) == f2::transvection(to_u3(pair_vector(i, j))));
  std::mt19937_64 rng(17);
  for (int k = 0; k < 10; ++k) {
    const Perm8 s = Perm8::random(rng), p = Perm8::random(rng);
    CHECK(orthogonal_image(s * p) == orthogonal_image(s) * orthogonal_image(p));
    for (const auto& t : enumerate_tableaux())
      CHECK(tableau_to_subspace(t.permuted(s).canonical().tableau) == tableau_to_subspace(t).image(orthogonal_image(s)));
  }
}

TEST_CASE("straightening") {
  std::mt19937_64 rng(19);
  std::vector<std::array<Rational, 8>> points;
  for (int k = 0; k < 5; ++k) points.push_back(random_affine(rng));
  for (const auto& t : enumerate_tableaux()) {
    const auto terms = straighten(t);
    for (const auto& [s, c] : terms) CHECK(s.is_standard());
    if (t.is_standard()) CHECK(terms.size() == 1);
    for (const auto& x : points) {
      Rational sum = 0;
      for (const auto& [s, c] : terms) sum += Rational(c) * oracle::affine_mu(s.rows(), x);
      CHECK(sum == oracle::affine_mu(t.rows(), x));
    }
  }
  CHECK(straighten(parse_tableau("(14)(23)(56)(78)")).size() == 2);
}

TEST_CASE("action matrices") {
  CHECK(action_matrix(Perm8()) == MatrixQ::Identity(14, 14));
  const auto samples = sample_configs(14, 77);
  std::mt19937_64 rng(23);
  for (int k = 0; k < 5; ++k) {
    const Perm8 s = Perm8::random(rng), p = Perm8::random(rng);
    CHECK(action_matrix(s * p) == MatrixQ(action_matrix(s) * action_matrix(p)));
    CHECK(sampled_action_matrix(s, samples) == action_matrix(s));
  }
  std::vector<PointConfig> same(14, samples.front());
  CHECK_THROWS_AS(sampled_action_matrix(Perm8(), same), std::runtime_error);
}

TEST_CASE("monomials and sampling") {
  CHECK(monomials(1).size() == 14);
  CHECK(monomials(2).size() == 105);
  CHECK(monomials(4).size() == 2380);
  CHECK(monomials(2, 3).front() == Exponents{2, 0, 0});
  CHECK(monomials(2, 3).back() == Exponents{0, 0, 2});
  const auto a = sample_configs(5, 42), b = sample_configs(5, 42);
  for (std::size_t i = 0; i < 5; ++i) CHECK(a[i].points() == b[i].points());
  CHECK(relation_samples(2, 300) == 315);
  CHECK(relation_samples(1, 300) == 300);
}

TEST_CASE("relations") {
  const auto r1 = relation_discovery(1, 300, 42);
  CHECK(r1.kernel_dimension == 0);
  CHECK(r1.rank == 14);
  CHECK(r1.exact);
  const auto r2 = relation_discovery(2, 315, 42);
  CHECK(r2.kernel_dimension == 14);
  CHECK(r2.rank == 91);
  CHECK(r2.stable);
  CHECK(r2.exact);
  REQUIRE(r2.basis.rows() == 14);
  CHECK(r2.monomials == monomials(2));
  // Every relation vanishes at fresh configurations.
  std::mt19937_64 rng(29);
  for (int k = 0; k < 20; ++k) {
    const auto y = standard_values(PointConfig::affine(random_affine(rng)));
    for (Index i = 0; i < 14; ++i) {
      Rational sum = 0;
      for (Index m = 0; m < 105; ++m)
        if (r2.basis(i, m) != 0) sum += r2.basis(i, m) * monomial_at(r2.monomials[static_cast<std::size_t>(m)], y);
      CHECK(sum == 0);
    }
  }
  for (int i = 1; i < 8; ++i) CHECK(quadric_space_invariant(r2, Perm8::transposition(i, i + 1)));
  CHECK(mu_function_rank(100, 42) == 14);
  CHECK_THROWS_AS(relation_discovery(0, 100, 42), std::invalid_argument);
  CHECK_THROWS_AS(relation_discovery(2, 50, 42), std::invalid_argument);
}

TEST_CASE("degree three rank is modular") {
  const auto r3 = relation_discovery(3, 1400, 42);
  CHECK_FALSE(r3.exact);
  CHECK(r3.modulus == 67108859);
  CHECK(r3.rank + r3.kernel_dimension == 560);
  CHECK(r3.stable);
}

TEST_CASE("configuration JSON") {
  const auto j = io::Json::parse(R"([[1, 0], [1, "1/2"], [1, 2], [1, 3], [1, 4], [1, 5], [1, 6], [0, 1]])");
  const auto c = io::config_from_json(j);
  CHECK(c.point(2)[1] == Rational(1, 2));
  CHECK(io::config_from_json(io::config_json(c)).points() == c.points());
  CHECK_THROWS_AS(io::config_from_json(io::Json::parse("[[1, 0]]")), std::invalid_argument);
  CHECK_THROWS_AS(io::config_from_json(io::Json::parse(R"([[1,"x"],[1,0],[1,0],[1,0],[1,0],[1,0],[1,0],[1,0]])")),
                  std::invalid_argument);
}
