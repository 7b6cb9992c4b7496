#pragma once

// Independent reference computations used by the tests. Nothing here calls
// the algorithms under test; only the scalar types are shared.

#include "octet/exact.hpp"

#include <algorithm>
#include <array>
#include <bitset>
#include <complex>
#include <cstdint>
#include <map>
#include <set>
#include <vector>

namespace oracle {

using octet::Integer;
using octet::Rational;

// -- u^3 over F_2, coordinates (e1, f1, e2, f2, e3, f3) as bits 0..5 --------

inline int bit(unsigned x, int i) { return (x >> i) & 1u; }

inline int q(unsigned x) {
  return (bit(x, 0) * bit(x, 1) + bit(x, 2) * bit(x, 3) + bit(x, 4) * bit(x, 5)) % 2;
}

/// Explicit bilinear form: e_i f_i + f_i e_i summed over the planes.
inline int b(unsigned x, unsigned y) {
  int s = 0;
  for (int p = 0; p < 3; ++p) s += bit(x, 2 * p) * bit(y, 2 * p + 1) + bit(x, 2 * p + 1) * bit(y, 2 * p);
  return s % 2;
}

inline unsigned transvect(unsigned alpha, unsigned x) { return b(x, alpha) ? x ^ alpha : x; }

using PointSet = std::bitset<64>;

inline PointSet span(const std::vector<unsigned>& gens) {
  PointSet s;
  s.set(0);
  for (unsigned g : gens) {
    PointSet next = s;
    for (unsigned x = 0; x < 64; ++x)
      if (s[x]) next.set(x ^ g);
    s = next;
  }
  return s;
}

/// Every subspace of the given dimension, as point sets.
inline std::vector<PointSet> subspaces(int dim) {
  std::set<std::string> seen;
  std::vector<PointSet> out;
  const std::size_t size = std::size_t{1} << dim;
  std::vector<unsigned> gens(static_cast<std::size_t>(dim));
  auto rec = [&](auto&& self, int k, unsigned from) -> void {
    if (k == dim) {
      const PointSet s = span(gens);
      if (s.count() == size && seen.insert(s.to_string()).second) out.push_back(s);
      return;
    }
    for (unsigned g = from; g < 64; ++g) {
      gens[static_cast<std::size_t>(k)] = g;
      self(self, k + 1, g + 1);
    }
  };
  rec(rec, 0, 1);
  return out;
}

inline bool totally_isotropic(const PointSet& s) {
  for (unsigned x = 0; x < 64; ++x)
    if (s[x] && q(x)) return false;
  return true;
}

/// Dimension 3, b identically zero on it, q not identically zero.
inline bool totally_singular(const PointSet& s) {
  if (s.count() != 8) return false;
  bool some_q = false;
  for (unsigned x = 0; x < 64; ++x) {
    if (!s[x]) continue;
    some_q = some_q || q(x);
    for (unsigned y = 0; y < 64; ++y)
      if (s[y] && b(x, y)) return false;
  }
  return some_q;
}

/// Orbits of the group generated by the 28 transvections on nonzero vectors.
inline std::vector<std::size_t> transvection_orbit_sizes() {
  std::vector<unsigned> aniso;
  for (unsigned a = 1; a < 64; ++a)
    if (q(a)) aniso.push_back(a);
  std::vector<int> orbit(64, -1);
  std::vector<std::size_t> sizes;
  for (unsigned start = 1; start < 64; ++start) {
    if (orbit[start] >= 0) continue;
    const int id = static_cast<int>(sizes.size());
    std::vector<unsigned> stack{start};
    orbit[start] = id;
    std::size_t n = 0;
    while (!stack.empty()) {
      const unsigned x = stack.back();
      stack.pop_back();
      ++n;
      for (unsigned a : aniso) {
        const unsigned y = transvect(a, x);
        if (orbit[y] < 0) {
          orbit[y] = id;
          stack.push_back(y);
        }
      }
    }
    sizes.push_back(n);
  }
  std::sort(sizes.begin(), sizes.end());
  return sizes;
}

// -- Weil representation, scaled to integers -------------------------------

using IntMatrix = std::vector<std::vector<long long>>;

/// 8 weil_rho(S): entry (beta, alpha) = (-1)^b(beta, alpha).
inline IntMatrix eight_S() {
  IntMatrix m(64, std::vector<long long>(64));
  for (unsigned i = 0; i < 64; ++i)
    for (unsigned j = 0; j < 64; ++j) m[i][j] = b(i, j) ? -1 : 1;
  return m;
}

inline IntMatrix T_matrix() {
  IntMatrix m(64, std::vector<long long>(64, 0));
  for (unsigned i = 0; i < 64; ++i) m[i][i] = q(i) ? -1 : 1;
  return m;
}

inline IntMatrix multiply(const IntMatrix& a, const IntMatrix& c) {
  const std::size_t n = a.size();
  IntMatrix out(n, std::vector<long long>(n, 0));
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t k = 0; k < n; ++k)
      if (a[i][k])
        for (std::size_t j = 0; j < n; ++j) out[i][j] += a[i][k] * c[k][j];
  return out;
}

inline bool is_scalar(const IntMatrix& m, long long c) {
  for (std::size_t i = 0; i < m.size(); ++i)
    for (std::size_t j = 0; j < m.size(); ++j)
      if (m[i][j] != (i == j ? c : 0)) return false;
  return true;
}

inline long long trace(const IntMatrix& m) {
  long long t = 0;
  for (std::size_t i = 0; i < m.size(); ++i) t += m[i][i];
  return t;
}

// -- power series in x = q^(1/2) --------------------------------------------

/// Coefficients c[0..n) of a series in x.
using Series = std::vector<Integer>;

/// prod_{k >= 1} (1 - x^(step k))^power for power >= 0.
inline Series euler_power(int step, int power, std::size_t n) {
  Series s(n, Integer(0));
  s[0] = 1;
  for (int p = 0; p < power; ++p)
    for (std::size_t k = static_cast<std::size_t>(step); k < n; k += static_cast<std::size_t>(step))
      for (std::size_t i = n; i-- > k;) s[i] -= s[i - k];
  return s;
}

/// Multiplies by prod_{k >= 1} (1 - x^(step k))^(-power) with running sums.
inline Series divide_euler(Series s, int step, int power) {
  const std::size_t n = s.size();
  for (int p = 0; p < power; ++p)
    for (std::size_t k = static_cast<std::size_t>(step); k < n; k += static_cast<std::size_t>(step))
      for (std::size_t i = k; i < n; ++i) s[i] += s[i - k];
  return s;
}

/// h00 / 56 = eta(2t)^8 / eta(t)^16: the q-powers cancel, so coefficients of
/// x^0 .. x^(n-1) with only even powers present.
inline Series eta2_quotient(std::size_t n) { return divide_euler(euler_power(4, 8, n), 2, 16); }

/// x * eta(t/2)^8 / eta(t)^16: leading power x^(-1) shifted to x^0.
inline Series eta_half_quotient(std::size_t n) { return divide_euler(euler_power(1, 8, n), 2, 16); }

using Complex = std::complex<double>;

/// sum c_k x^(k + shift) at x = exp(pi i tau).
inline Complex evaluate(const Series& s, int shift, Complex tau) {
  const Complex x = std::exp(Complex(0, M_PI) * tau);
  Complex sum = 0, power = std::pow(x, shift);
  for (const auto& c : s) {
    sum += c.convert_to<double>() * power;
    power *= x;
  }
  return sum;
}

// -- lattices ----------------------------------------------------------------

inline octet::MatrixZ from_rows(const std::vector<std::vector<long>>& rows) {
  octet::MatrixZ m(static_cast<octet::Index>(rows.size()), static_cast<octet::Index>(rows.size()));
  for (std::size_t i = 0; i < rows.size(); ++i)
    for (std::size_t j = 0; j < rows.size(); ++j)
      m(static_cast<octet::Index>(i), static_cast<octet::Index>(j)) = rows[i][j];
  return m;
}

/// Fraction-free Bareiss elimination.
inline Integer det(octet::MatrixZ m) {
  const auto n = m.rows();
  Integer sign = 1, prev = 1;
  for (octet::Index k = 0; k < n; ++k) {
    octet::Index p = k;
    while (p < n && m(p, k) == 0) ++p;
    if (p == n) return 0;
    if (p != k) {
      m.row(p).swap(m.row(k));
      sign = -sign;
    }
    for (octet::Index i = k + 1; i < n; ++i)
      for (octet::Index j = k + 1; j < n; ++j) m(i, j) = (m(i, j) * m(k, k) - m(i, k) * m(k, j)) / prev;
    prev = m(k, k);
  }
  return n ? sign * m(n - 1, n - 1) : Integer(1);
}

/// Vectors per norm in one 4x4 diagonal block of the box, optionally only
/// those with G v even. The Gram matrix must be block diagonal.
inline std::map<long, long> block_histogram(const octet::MatrixZ& g, int offset, int bound, bool even_only) {
  std::map<long, long> h;
  const int w = 2 * bound + 1;
  for (int idx = 0; idx < w * w * w * w; ++idx) {
    long v[4];
    int rest = idx;
    for (auto& x : v) {
      x = rest % w - bound;
      rest /= w;
    }
    long norm = 0;
    bool even = true;
    for (int i = 0; i < 4; ++i) {
      long gi = 0;
      for (int j = 0; j < 4; ++j) gi += g(offset + i, offset + j).convert_to<long>() * v[j];
      even = even && gi % 2 == 0;
      norm += v[i] * gi;
    }
    if (!even_only || even) ++h[norm];
  }
  return h;
}

inline long count_norm(const octet::MatrixZ& g, int bound, long target, bool even_only) {
  const auto h0 = block_histogram(g, 0, bound, even_only), h1 = block_histogram(g, 4, bound, even_only),
             h2 = block_histogram(g, 8, bound, even_only);
  long total = 0;
  for (const auto& [n1, c1] : h1)
    for (const auto& [n2, c2] : h2)
      if (const auto it = h0.find(target - n1 - n2); it != h0.end()) total += it->second * c1 * c2;
  return total;
}

// -- configurations ------------------------------------------------------------

/// mu of the rows (a, b) on affine points x: prod (x_b - x_a).
inline Rational affine_mu(const std::array<std::array<int, 2>, 4>& rows, const std::array<Rational, 8>& x) {
  Rational p = 1;
  for (const auto& r : rows) p *= x[static_cast<std::size_t>(r[1] - 1)] - x[static_cast<std::size_t>(r[0] - 1)];
  return p;
}

}  // namespace oracle
