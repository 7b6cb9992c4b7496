#include "octet/relations.hpp"

#include "modular_kernel.hpp"
#include "octet/linalg.hpp"

#include <algorithm>
#include <cmath>
#include <functional>
#include <numeric>
#include <optional>
#include <stdexcept>
#include <tuple>

namespace octet::config {

std::vector<Exponents> monomials(int degree, int vars) {
  std::vector<Exponents> out;
  Exponents e(static_cast<std::size_t>(vars), 0);
  std::function<void(int, int)> rec = [&](int var, int left) {
    if (var == vars - 1) {
      e[static_cast<std::size_t>(var)] = left;
      out.push_back(e);
      return;
    }
    for (int k = left; k >= 0; --k) {
      e[static_cast<std::size_t>(var)] = k;
      rec(var + 1, left - k);
    }
  };
  if (vars > 0) rec(0, degree);
  return out;
}

std::vector<PointConfig> sample_configs(long n, std::uint64_t seed) {
  std::mt19937_64 rng(seed);
  std::vector<PointConfig> out;
  for (long i = 0; i < n; ++i) out.push_back(PointConfig::random(rng));
  return out;
}

std::vector<Rational> standard_values(const PointConfig& c) {
  std::vector<Rational> out;
  for (const auto& t : standard_tableaux()) out.push_back(mu(t, c));
  return out;
}

namespace {

// Residues are held in doubles; p < 2^26 keeps every product exact.
constexpr std::uint64_t kPrime = 67108859;
constexpr double kP = static_cast<double>(kPrime);
constexpr double kPInv = 1.0 / kP;

inline double fold(double x) {
  x -= std::floor(x * kPInv) * kP;
  if (x < 0) x += kP;
  if (x >= kP) x -= kP;
  return x;
}

inline double mul_mod(double a, double b) { return fold(a * b); }

double reduce(const Integer& x) { return mod(x, Integer(kPrime)).convert_to<double>(); }

double inverse_mod(double b) {
  double r = 1;
  for (std::uint64_t e = kPrime - 2; e; e >>= 1, b = mul_mod(b, b))
    if (e & 1) r = mul_mod(r, b);
  return r;
}

using ModRow = std::vector<double>;

/// row -= c * pivot_row, from column `from` on.
void eliminate(ModRow& row, const ModRow& pivot_row, double c, std::size_t from) {
  detail::axpy_mod(row.data(), pivot_row.data(), kP - c, from, row.size(), kP);
}

/// Row echelon basis over F_p.
class ModularRowSpace {
 public:
  explicit ModularRowSpace(std::size_t cols) : cols_(cols) {}

  /// Adds a block of rows; returns the positions of those that enlarged the span.
  std::vector<std::size_t> add(std::vector<ModRow> block) {
    for (std::size_t i = 0; i < basis_.size(); ++i)
      for (auto& row : block)
        if (const double c = row[pivots_[i]]) eliminate(row, basis_[i], c, pivots_[i]);
    std::vector<std::size_t> added;
    const std::size_t old = basis_.size();
    for (std::size_t k = 0; k < block.size(); ++k) {
      auto& row = block[k];
      for (std::size_t i = old; i < basis_.size(); ++i)
        if (const double c = row[pivots_[i]]) eliminate(row, basis_[i], c, pivots_[i]);
      std::size_t p = 0;
      while (p < cols_ && row[p] == 0) ++p;
      if (p == cols_) continue;
      const double inv = inverse_mod(row[p]);
      for (std::size_t j = p; j < cols_; ++j) row[j] = mul_mod(row[j], inv);
      basis_.push_back(std::move(row));
      pivots_.push_back(p);
      added.push_back(k);
    }
    return added;
  }

  std::size_t rank() const { return basis_.size(); }

  /// Kernel of the row space, in reduced echelon form.
  std::vector<ModRow> kernel() const {
    std::vector<std::size_t> order(basis_.size());
    std::iota(order.begin(), order.end(), 0);
    std::sort(order.begin(), order.end(), [&](auto x, auto y) { return pivots_[x] < pivots_[y]; });
    std::vector<ModRow> rows;
    std::vector<std::size_t> piv;
    for (auto i : order) {
      rows.push_back(basis_[i]);
      piv.push_back(pivots_[i]);
    }
    for (std::size_t i = rows.size(); i-- > 0;)
      for (std::size_t k = 0; k < i; ++k)
        if (const double c = rows[k][piv[i]]) eliminate(rows[k], rows[i], c, piv[i]);
    std::vector<bool> is_pivot(cols_, false);
    for (auto p : piv) is_pivot[p] = true;
    std::vector<ModRow> ker;
    for (std::size_t f = 0; f < cols_; ++f) {
      if (is_pivot[f]) continue;
      ModRow v(cols_, 0);
      v[f] = 1;
      for (std::size_t i = 0; i < rows.size(); ++i) v[piv[i]] = fold(kP - rows[i][f]);
      ker.push_back(std::move(v));
    }
    std::size_t r = 0;
    for (std::size_t col = 0; col < cols_ && r < ker.size(); ++col) {
      std::size_t p = r;
      while (p < ker.size() && ker[p][col] == 0) ++p;
      if (p == ker.size()) continue;
      std::swap(ker[r], ker[p]);
      const double inv = inverse_mod(ker[r][col]);
      for (auto& x : ker[r]) x = mul_mod(x, inv);
      for (std::size_t k = 0; k < ker.size(); ++k)
        if (k != r)
          if (const double c = ker[k][col]) eliminate(ker[k], ker[r], c, 0);
      ++r;
    }
    return ker;
  }

 private:
  std::size_t cols_;
  std::vector<ModRow> basis_;
  std::vector<std::size_t> pivots_;
};

/// Wang's rational reconstruction with |num|, den <= sqrt(p / 2).
std::optional<Rational> reconstruct(double residue) {
  const Integer a = static_cast<std::uint64_t>(residue);
  const Integer bound = boost::multiprecision::sqrt(Integer(kPrime) / 2);
  Integer r0 = kPrime, r1 = a, t0 = 0, t1 = 1;
  while (r1 > bound) {
    const Integer qt = r0 / r1;
    std::tie(r0, r1) = std::make_pair(r1, r0 - qt * r1);
    std::tie(t0, t1) = std::make_pair(t1, t0 - qt * t1);
  }
  if (t1 == 0 || abs(t1) > bound || boost::multiprecision::gcd(r1, t1) != 1) return std::nullopt;
  return Rational(r1, t1);
}

Rational monomial_value(const Exponents& e, const std::vector<Rational>& y) {
  Rational v = 1;
  for (std::size_t k = 0; k < e.size(); ++k)
    for (int p = 0; p < e[k]; ++p) v *= y[k];
  return v;
}

/// Rows scaled to coprime integers.
MatrixQ primitive_rows(MatrixQ m) {
  for (Index i = 0; i < m.rows(); ++i) {
    Integer lcm = 1, gcd = 0;
    for (Index j = 0; j < m.cols(); ++j) lcm = boost::multiprecision::lcm(lcm, denominator(m(i, j)));
    for (Index j = 0; j < m.cols(); ++j) {
      m(i, j) *= lcm;
      gcd = boost::multiprecision::gcd(gcd, numerator(m(i, j)));
    }
    if (gcd > 1)
      for (Index j = 0; j < m.cols(); ++j) m(i, j) /= gcd;
  }
  return m;
}

bool annihilates(const std::vector<std::vector<Integer>>& rows, const MatrixQ& kernel) {
  for (Index k = 0; k < kernel.rows(); ++k) {
    std::vector<Integer> v;
    for (Index j = 0; j < kernel.cols(); ++j) {
      if (!is_integer(kernel(k, j))) return false;
      v.push_back(numerator(kernel(k, j)));
    }
    for (const auto& row : rows) {
      Integer acc = 0;
      for (std::size_t j = 0; j < v.size(); ++j)
        if (v[j] != 0) acc += row[j] * v[j];
      if (acc != 0) return false;
    }
  }
  return true;
}

/// The exact kernel, as primitive integer rows in reduced echelon form. The
/// modular kernel is lifted by rational reconstruction; verified lifts are
/// independent and number cols - rank_p >= cols - rank_Q, so they span. If a
/// lift fails, the kernel is recomputed by rational elimination.
MatrixQ exact_kernel(const ModularRowSpace& space, const std::vector<std::vector<Integer>>& rows,
                     std::vector<std::size_t> selected, Index cols) {
  const auto ker = space.kernel();
  MatrixQ lifted(static_cast<Index>(ker.size()), cols);
  bool ok = true;
  for (std::size_t k = 0; k < ker.size() && ok; ++k)
    for (Index j = 0; j < cols && ok; ++j) {
      const auto q = reconstruct(ker[k][static_cast<std::size_t>(j)]);
      if (q) lifted(static_cast<Index>(k), j) = *q;
      else ok = false;
    }
  if (ok) {
    lifted = primitive_rows(lifted);
    if (annihilates(rows, lifted)) return lifted;
  }
  while (true) {
    MatrixQ m(static_cast<Index>(selected.size()), cols);
    for (std::size_t i = 0; i < selected.size(); ++i)
      for (Index j = 0; j < cols; ++j) m(static_cast<Index>(i), j) = Rational(rows[selected[i]][static_cast<std::size_t>(j)]);
    const MatrixQ kernel = nullspace(m);
    const MatrixQ basis =
        kernel.cols() == 0 ? MatrixQ(0, cols) : primitive_rows(rref(MatrixQ(kernel.transpose())).reduced.topRows(kernel.cols()));
    if (annihilates(rows, basis)) return basis;
    // A row independent over Q but not mod p: add every row and retry.
    selected.resize(rows.size());
    std::iota(selected.begin(), selected.end(), 0);
  }
}

}  // namespace

RelationBasis relation_discovery(int degree, long samples, std::uint64_t seed) {
  if (degree < 1) throw std::invalid_argument("relation degree must be at least 1");
  RelationBasis out;
  out.degree = degree;
  out.monomials = monomials(degree);
  out.monomial_count = static_cast<long>(out.monomials.size());
  if (samples < out.monomial_count) throw std::invalid_argument("need at least as many samples as monomials");
  out.samples = samples;
  out.seed = seed;
  out.exact = degree <= 2;
  const auto configs = sample_configs(samples, seed);
  const auto cols = static_cast<Index>(out.monomial_count);
  long half_rank = 0;

  // Rows are screened for independence modulo p.
  std::vector<std::vector<Integer>> exact_rows;
  std::vector<std::size_t> selected;
  ModularRowSpace space(static_cast<std::size_t>(cols));
  constexpr long kBlock = 32;
  std::vector<ModRow> block;
  long block_start = 0;
  auto flush = [&] {
    for (auto k : space.add(std::move(block))) selected.push_back(static_cast<std::size_t>(block_start) + k);
    block.clear();
  };
  for (long s = 0; s < samples; ++s) {
    const auto y = standard_values(configs[static_cast<std::size_t>(s)]);
    ModRow row(static_cast<std::size_t>(cols));
    if (out.exact) {
      std::vector<Integer> exact_row;
      for (std::size_t j = 0; j < row.size(); ++j) {
        exact_row.push_back(numerator(monomial_value(out.monomials[j], y)));
        row[j] = reduce(exact_row.back());
      }
      exact_rows.push_back(std::move(exact_row));
    } else {
      std::vector<double> ym;
      for (const auto& v : y) ym.push_back(reduce(numerator(v)));
      for (std::size_t j = 0; j < row.size(); ++j) {
        double v = 1;
        const auto& e = out.monomials[j];
        for (std::size_t k = 0; k < e.size(); ++k)
          for (int p = 0; p < e[k]; ++p) v = mul_mod(v, ym[k]);
        row[j] = v;
      }
    }
    if (block.empty()) block_start = s;
    block.push_back(std::move(row));
    if (static_cast<long>(block.size()) == kBlock || s + 1 == samples / 2 || s + 1 == samples) flush();
    if (s + 1 == samples / 2) half_rank = static_cast<long>(space.rank());
  }
  out.rank = static_cast<long>(space.rank());
  out.basis = MatrixQ(0, cols);
  if (out.exact) {
    out.modulus = 0;
    out.basis = exact_kernel(space, exact_rows, selected, cols);
    out.rank = cols - out.basis.rows();
  } else {
    out.modulus = kPrime;
  }
  out.kernel_dimension = out.monomial_count - out.rank;
  out.stable = half_rank == out.rank;
  return out;
}

long mu_function_rank(long samples, std::uint64_t seed) {
  const auto& all = enumerate_tableaux();
  IncrementalRowSpace<Rational> space(static_cast<Index>(all.size()));
  for (const auto& c : sample_configs(samples, seed)) {
    VectorQ row(static_cast<Index>(all.size()));
    for (std::size_t k = 0; k < all.size(); ++k) row(static_cast<Index>(k)) = mu(all[k], c);
    space.add(std::move(row));
  }
  return static_cast<long>(space.rank());
}

bool quadric_space_invariant(const RelationBasis& r, const Perm8& sigma) {
  // y(sigma^-1 c) = M(sigma)^T y(c)
  const MatrixQ action = action_matrix(sigma).transpose();
  if (r.degree != 2 || !r.exact) throw std::invalid_argument("invariance check needs an exact degree-2 basis");
  const Index n = action.rows();
  const auto& mons = r.monomials;
  // Position of y_a y_b.
  std::map<std::pair<int, int>, Index> index;
  for (std::size_t j = 0; j < mons.size(); ++j) {
    std::vector<int> vars;
    for (int k = 0; k < static_cast<int>(n); ++k)
      for (int p = 0; p < mons[j][static_cast<std::size_t>(k)]; ++p) vars.push_back(k);
    index[{vars[0], vars[1]}] = static_cast<Index>(j);
  }
  const Index rank = static_cast<Index>(r.basis.rows());
  MatrixQ stacked(2 * rank, r.basis.cols());
  stacked.topRows(rank) = r.basis;
  for (Index i = 0; i < rank; ++i) {
    // Q(y) = y^T S y with S symmetric; Q(A y) = y^T A^T S A y.
    MatrixQ s = MatrixQ::Zero(n, n);
    for (const auto& [ab, j] : index) {
      const auto [a, b] = ab;
      if (a == b) s(a, a) = r.basis(i, j);
      else s(a, b) = s(b, a) = r.basis(i, j) / 2;
    }
    const MatrixQ t = action.transpose() * s * action;
    for (const auto& [ab, j] : index) {
      const auto [a, b] = ab;
      stacked(rank + i, j) = a == b ? t(a, a) : t(a, b) * 2;
    }
  }
  return octet::rank(stacked) == rank;
}

}  // namespace octet::config
