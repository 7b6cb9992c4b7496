#include "octet/tableaux.hpp"

#include "octet/discriminant.hpp"
#include "octet/isometry.hpp"
#include "octet/linalg.hpp"

#include <algorithm>
#include <bit>
#include <functional>
#include <set>
#include <stdexcept>

namespace octet::config {

Perm8::Perm8() : image_{1, 2, 3, 4, 5, 6, 7, 8} {}

Perm8::Perm8(const std::array<int, 8>& image) : image_(image) {
  std::array<int, 8> sorted = image;
  std::sort(sorted.begin(), sorted.end());
  for (int i = 0; i < 8; ++i)
    if (sorted[static_cast<std::size_t>(i)] != i + 1) throw std::invalid_argument("not a permutation of 1..8");
}

Perm8 Perm8::transposition(int i, int j) {
  if (i < 1 || i > 8 || j < 1 || j > 8 || i == j) throw std::invalid_argument("bad transposition");
  std::array<int, 8> img{1, 2, 3, 4, 5, 6, 7, 8};
  std::swap(img[static_cast<std::size_t>(i - 1)], img[static_cast<std::size_t>(j - 1)]);
  return Perm8(img);
}

Perm8 Perm8::operator*(const Perm8& other) const {
  std::array<int, 8> img{};
  for (int i = 1; i <= 8; ++i) img[static_cast<std::size_t>(i - 1)] = (*this)(other(i));
  return Perm8(img);
}

Perm8 Perm8::inverse() const {
  std::array<int, 8> img{};
  for (int i = 1; i <= 8; ++i) img[static_cast<std::size_t>((*this)(i) - 1)] = i;
  return Perm8(img);
}

bool Perm8::is_identity() const { return *this == Perm8(); }

std::vector<std::pair<int, int>> Perm8::transpositions() const {
  // (a1 a2 ... ak) = (a1 ak)(a1 a_{k-1}) ... (a1 a2)
  std::vector<std::pair<int, int>> out;
  std::array<bool, 8> seen{};
  for (int start = 1; start <= 8; ++start) {
    if (seen[static_cast<std::size_t>(start - 1)]) continue;
    std::vector<int> cycle;
    for (int x = start; !seen[static_cast<std::size_t>(x - 1)]; x = (*this)(x)) {
      seen[static_cast<std::size_t>(x - 1)] = true;
      cycle.push_back(x);
    }
    for (std::size_t k = cycle.size(); k-- > 1;) out.emplace_back(cycle[0], cycle[k]);
  }
  return out;
}

Perm8 Perm8::random(std::mt19937_64& rng) {
  std::array<int, 8> img{1, 2, 3, 4, 5, 6, 7, 8};
  for (std::size_t i = 7; i > 0; --i) std::swap(img[i], img[rng() % (i + 1)]);
  return Perm8(img);
}

// ---------------------------------------------------------------------------

Tableau::Tableau(const std::array<Row, 4>& rows) : rows_(rows) {
  std::array<bool, 8> seen{};
  for (const auto& r : rows_)
    for (int x : r) {
      if (x < 1 || x > 8 || seen[static_cast<std::size_t>(x - 1)])
        throw std::invalid_argument("tableau entries must be 1..8, each once");
      seen[static_cast<std::size_t>(x - 1)] = true;
    }
}

bool Tableau::is_canonical() const {
  for (std::size_t i = 0; i < 4; ++i) {
    if (rows_[i][0] > rows_[i][1]) return false;
    if (i > 0 && rows_[i - 1][0] > rows_[i][0]) return false;
  }
  return true;
}

bool Tableau::is_standard() const {
  for (std::size_t i = 0; i < 4; ++i) {
    if (rows_[i][0] >= rows_[i][1]) return false;
    if (i > 0 && (rows_[i - 1][0] > rows_[i][0] || rows_[i - 1][1] > rows_[i][1])) return false;
  }
  return true;
}

Tableau::Signed Tableau::canonical() const {
  std::array<Row, 4> rows = rows_;
  int sign = 1;
  for (auto& r : rows)
    if (r[0] > r[1]) {
      std::swap(r[0], r[1]);
      sign = -sign;
    }
  std::sort(rows.begin(), rows.end());
  return {Tableau(rows), sign};
}

Tableau Tableau::permuted(const Perm8& sigma) const {
  std::array<Row, 4> rows = rows_;
  for (auto& r : rows)
    for (int& x : r) x = sigma(x);
  return Tableau(rows);
}

std::string to_string(const Tableau& t) {
  std::string s;
  for (const auto& r : t.rows()) s += "(" + std::to_string(r[0]) + std::to_string(r[1]) + ")";
  return s;
}

Tableau parse_tableau(const std::string& text) {
  std::vector<int> entries;
  for (char ch : text) {
    if (ch >= '1' && ch <= '8') entries.push_back(ch - '0');
    else if (ch != '(' && ch != ')' && ch != ',' && ch != ' ')
      throw std::invalid_argument("malformed tableau '" + text + "'");
  }
  if (entries.size() != 8) throw std::invalid_argument("a tableau has 8 entries: '" + text + "'");
  std::array<Row, 4> rows;
  for (std::size_t i = 0; i < 4; ++i) rows[i] = {entries[2 * i], entries[2 * i + 1]};
  return Tableau(rows);
}

const std::vector<Tableau>& enumerate_tableaux() {
  static const std::vector<Tableau> all = [] {
    std::vector<Tableau> out;
    std::array<Row, 4> rows{};
    std::array<bool, 9> used{};
    std::function<void(std::size_t)> rec = [&](std::size_t k) {
      if (k == 4) {
        out.emplace_back(rows);
        return;
      }
      int first = 1;
      while (used[static_cast<std::size_t>(first)]) ++first;
      used[static_cast<std::size_t>(first)] = true;
      for (int second = first + 1; second <= 8; ++second) {
        if (used[static_cast<std::size_t>(second)]) continue;
        used[static_cast<std::size_t>(second)] = true;
        rows[k] = {first, second};
        rec(k + 1);
        used[static_cast<std::size_t>(second)] = false;
      }
      used[static_cast<std::size_t>(first)] = false;
    };
    rec(0);
    std::sort(out.begin(), out.end());
    return out;
  }();
  return all;
}

const std::vector<Tableau>& standard_tableaux() {
  static const std::vector<Tableau> standard = [] {
    std::vector<Tableau> out;
    for (const auto& t : enumerate_tableaux())
      if (t.is_standard()) out.push_back(t);
    return out;
  }();
  return standard;
}

std::optional<std::size_t> standard_index(const Tableau& t) {
  const auto& st = standard_tableaux();
  const auto it = std::lower_bound(st.begin(), st.end(), t);
  if (it == st.end() || !(*it == t)) return std::nullopt;
  return static_cast<std::size_t>(it - st.begin());
}

// ---------------------------------------------------------------------------

Rational bracket(const Point& v, const Point& w) { return v[0] * w[1] - v[1] * w[0]; }

PointConfig::PointConfig(const std::array<Point, 8>& points) : points_(points) {
  for (const auto& p : points_)
    if (p[0] == 0 && p[1] == 0) throw std::invalid_argument("(0 : 0) is not a point of the projective line");
}

PointConfig PointConfig::affine(const std::array<Rational, 8>& xs) {
  std::array<Point, 8> pts;
  for (std::size_t i = 0; i < 8; ++i) pts[i] = {Rational(1), xs[i]};
  return PointConfig(pts);
}

int PointConfig::max_multiplicity() const {
  int best = 0;
  for (const auto& p : points_) {
    int count = 0;
    for (const auto& q : points_)
      if (bracket(p, q) == 0) ++count;
    best = std::max(best, count);
  }
  return best;
}

PointConfig PointConfig::permuted(const Perm8& sigma) const {
  std::array<Point, 8> pts;
  for (int i = 1; i <= 8; ++i) pts[static_cast<std::size_t>(sigma(i) - 1)] = point(i);
  return PointConfig(pts);
}

PointConfig PointConfig::transformed(const std::array<Rational, 4>& m) const {
  if (m[0] * m[3] - m[1] * m[2] == 0) throw std::invalid_argument("transformation must be invertible");
  std::array<Point, 8> pts;
  for (std::size_t i = 0; i < 8; ++i)
    pts[i] = {m[0] * points_[i][0] + m[1] * points_[i][1], m[2] * points_[i][0] + m[3] * points_[i][1]};
  return PointConfig(pts);
}

PointConfig PointConfig::random(std::mt19937_64& rng) {
  std::array<Rational, 8> xs;
  std::set<long> used;
  std::size_t k = 0;
  while (k < 8) {
    const long x = static_cast<long>(rng() % 101) - 50;
    if (used.insert(x).second) xs[k++] = x;
  }
  return affine(xs);
}

Rational mu(const Tableau& t, const PointConfig& c) {
  Rational prod = 1;
  for (const auto& r : t.rows()) prod *= bracket(c.point(r[0]), c.point(r[1]));
  return prod;
}

std::optional<std::vector<Rational>> theta_map(const PointConfig& c) {
  std::vector<Rational> values;
  for (const auto& t : standard_tableaux()) values.push_back(mu(t, c));
  const auto lead = std::find_if(values.begin(), values.end(), [](const Rational& v) { return v != 0; });
  if (lead == values.end()) return std::nullopt;
  const Rational scale = *lead;
  for (auto& v : values) v /= scale;
  return values;
}

// ---------------------------------------------------------------------------

int Vec8::weight() const { return std::popcount(static_cast<unsigned>(bits)); }

int Vec8::q() const {
  if (!in_theta_perp()) throw std::domain_error("q is defined on theta^perp only");
  return (weight() / 2) % 2;
}

Vec8 pair_vector(int i, int j) {
  if (i < 1 || i > 8 || j < 1 || j > 8 || i == j) throw std::invalid_argument("bad pair");
  return Vec8{static_cast<std::uint8_t>((1u << (i - 1)) | (1u << (j - 1)))};
}

int b(Vec8 x, Vec8 y) { return std::popcount(static_cast<unsigned>(x.bits & y.bits)) % 2; }

namespace {

struct OverlatticeDictionary {
  MatrixQ to_new_basis;  // original coordinates -> overlattice coordinates
  lattice::DiscriminantForm disc;
  lattice::U3Dictionary dictionary;
};

const OverlatticeDictionary& overlattice_dictionary() {
  static const OverlatticeDictionary d = [] {
    const lattice::Overlattice ov = lattice::u_a1_8_overlattice();
    OverlatticeDictionary out;
    out.to_new_basis = inverse(MatrixQ(ov.basis.transpose()));
    out.disc = lattice::discriminant_form(ov.lattice);
    out.dictionary = lattice::identify_with_u3(out.disc.form);
    return out;
  }();
  return d;
}

}  // namespace

f2::F2Vec to_u3(Vec8 x) {
  if (!x.in_theta_perp()) throw std::domain_error("odd-weight vector is not in theta^perp");
  const auto& d = overlattice_dictionary();
  VectorQ v = VectorQ::Zero(10);
  for (int i = 0; i < 8; ++i)
    if ((x.bits >> i) & 1u) v(2 + i) = Rational(1, 2);
  return d.dictionary(d.disc.coordinates(d.to_new_basis * v));
}

f2::F2Subspace tableau_to_subspace(const Tableau& t) {
  std::vector<f2::F2Vec> gens;
  for (const auto& r : t.rows()) gens.push_back(to_u3(pair_vector(r[0], r[1])));
  return f2::F2Subspace::span(gens);
}

f2::Permutation64 orthogonal_image(const Perm8& sigma) {
  f2::Permutation64 g;
  for (const auto& [i, j] : sigma.transpositions()) g = g * f2::transvection(to_u3(pair_vector(i, j)));
  return g;
}

// ---------------------------------------------------------------------------

namespace {

void straighten_into(const Tableau& t, const Integer& coeff, std::map<Tableau, Integer>& acc) {
  const auto [ct, sign] = t.canonical();
  if (ct.is_standard()) {
    acc[ct] += coeff * sign;
    return;
  }
  const auto& rows = ct.rows();
  for (std::size_t i = 0; i + 1 < 4; ++i) {
    if (rows[i][1] < rows[i + 1][1]) continue;
    // w < x < y < z with [wz][xy] = [wy][xz] - [wx][yz].
    const int w = rows[i][0], z = rows[i][1], x = rows[i + 1][0], y = rows[i + 1][1];
    std::array<Row, 4> first = rows, second = rows;
    first[i] = {w, y};
    first[i + 1] = {x, z};
    second[i] = {w, x};
    second[i + 1] = {y, z};
    straighten_into(Tableau(first), coeff * sign, acc);
    straighten_into(Tableau(second), -coeff * sign, acc);
    return;
  }
  throw std::logic_error("canonical non-standard tableau without a column descent");
}

}  // namespace

std::map<Tableau, Integer> straighten(const Tableau& t) {
  std::map<Tableau, Integer> acc;
  straighten_into(t, 1, acc);
  std::erase_if(acc, [](const auto& kv) { return kv.second == 0; });
  return acc;
}

MatrixQ action_matrix(const Perm8& sigma) {
  const auto& st = standard_tableaux();
  MatrixQ m = MatrixQ::Zero(14, 14);
  for (std::size_t k = 0; k < st.size(); ++k)
    for (const auto& [t, c] : straighten(st[k].permuted(sigma)))
      m(static_cast<Index>(*standard_index(t)), static_cast<Index>(k)) = Rational(c);
  return m;
}

MatrixQ sampled_action_matrix(const Perm8& sigma, const std::vector<PointConfig>& samples) {
  if (samples.size() < 14) throw std::invalid_argument("need 14 sampled configurations");
  const auto& st = standard_tableaux();
  const Perm8 inv = sigma.inverse();
  MatrixQ e(14, 14), w(14, 14);
  for (Index s = 0; s < 14; ++s) {
    const PointConfig& c = samples[static_cast<std::size_t>(s)];
    const PointConfig moved = c.permuted(inv);
    for (Index k = 0; k < 14; ++k) {
      e(s, k) = mu(st[static_cast<std::size_t>(k)], c);
      w(s, k) = mu(st[static_cast<std::size_t>(k)], moved);
    }
  }
  if (rank(e) != 14) throw std::runtime_error("sampled configurations are not generic");
  return inverse(e) * w;
}

}  // namespace octet::config
