#pragma once

// Exact elimination over a field. Scalar must be an exact field type
// (Rational, or a prime-field element); nothing here compares against a
// tolerance.

#include "octet/exact.hpp"

#include <utility>
#include <vector>

namespace octet {

template <typename Scalar>
struct RowEchelon {
  Matrix<Scalar> reduced;     // reduced row echelon form, same shape as input
  std::vector<Index> pivots;  // pivot column of row i, i < rank
  Index rank() const { return static_cast<Index>(pivots.size()); }
};

template <typename Derived>
RowEchelon<typename Derived::Scalar> rref(const Eigen::MatrixBase<Derived>& a) {
  using Scalar = typename Derived::Scalar;
  RowEchelon<Scalar> out;
  out.reduced = a;
  Matrix<Scalar>& m = out.reduced;
  const Index rows = m.rows(), cols = m.cols();
  Index r = 0;
  for (Index c = 0; c < cols && r < rows; ++c) {
    Index p = r;
    while (p < rows && m(p, c) == Scalar(0)) ++p;
    if (p == rows) continue;
    if (p != r) m.row(p).swap(m.row(r));
    const Scalar inv = Scalar(1) / m(r, c);
    for (Index j = c; j < cols; ++j) m(r, j) *= inv;
    for (Index i = 0; i < rows; ++i) {
      if (i == r || m(i, c) == Scalar(0)) continue;
      const Scalar f = m(i, c);
      for (Index j = c; j < cols; ++j) m(i, j) -= f * m(r, j);
    }
    out.pivots.push_back(c);
    ++r;
  }
  return out;
}

template <typename Derived>
Index rank(const Eigen::MatrixBase<Derived>& a) {
  return rref(a).rank();
}

/// Basis of {x : a x = 0} as columns, read off the reduced echelon form:
/// one column per free variable, with a 1 in that variable's slot.
template <typename Derived>
Matrix<typename Derived::Scalar> nullspace(const Eigen::MatrixBase<Derived>& a) {
  using Scalar = typename Derived::Scalar;
  const auto e = rref(a);
  const Index cols = a.cols();
  std::vector<bool> is_pivot(static_cast<std::size_t>(cols), false);
  for (Index p : e.pivots) is_pivot[static_cast<std::size_t>(p)] = true;
  Matrix<Scalar> basis = Matrix<Scalar>::Zero(cols, cols - e.rank());
  Index k = 0;
  for (Index free = 0; free < cols; ++free) {
    if (is_pivot[static_cast<std::size_t>(free)]) continue;
    basis(free, k) = Scalar(1);
    for (Index i = 0; i < e.rank(); ++i)
      basis(e.pivots[static_cast<std::size_t>(i)], k) = -e.reduced(i, free);
    ++k;
  }
  return basis;
}

/// Column span membership: is v in span of the columns of basis?
template <typename DerivedA, typename DerivedV>
bool in_column_span(const Eigen::MatrixBase<DerivedA>& basis,
                    const Eigen::MatrixBase<DerivedV>& v) {
  using Scalar = typename DerivedA::Scalar;
  Matrix<Scalar> aug(basis.rows(), basis.cols() + 1);
  aug.leftCols(basis.cols()) = basis;
  aug.col(basis.cols()) = v;
  return rank(aug) == rank(basis);
}

/// Inverse of a square matrix via Gauss-Jordan; throws if singular.
template <typename Derived>
Matrix<typename Derived::Scalar> inverse(const Eigen::MatrixBase<Derived>& a) {
  using Scalar = typename Derived::Scalar;
  const Index n = a.rows();
  Matrix<Scalar> aug(n, 2 * n);
  aug.leftCols(n) = a;
  aug.rightCols(n) = Matrix<Scalar>::Identity(n, n);
  auto e = rref(aug);
  if (e.rank() < n || e.pivots[static_cast<std::size_t>(n - 1)] != n - 1)
    throw std::domain_error("singular matrix");
  return e.reduced.rightCols(n);
}

template <typename Derived>
typename Derived::Scalar determinant(const Eigen::MatrixBase<Derived>& a) {
  using Scalar = typename Derived::Scalar;
  Matrix<Scalar> m = a;
  const Index n = m.rows();
  Scalar det(1);
  for (Index c = 0; c < n; ++c) {
    Index p = c;
    while (p < n && m(p, c) == Scalar(0)) ++p;
    if (p == n) return Scalar(0);
    if (p != c) {
      m.row(p).swap(m.row(c));
      det = -det;
    }
    det *= m(c, c);
    for (Index i = c + 1; i < n; ++i) {
      if (m(i, c) == Scalar(0)) continue;
      const Scalar f = m(i, c) / m(c, c);
      for (Index j = c; j < n; ++j) m(i, j) -= f * m(c, j);
    }
  }
  return det;
}

/// Characteristic polynomial det(tI - A) by Faddeev-LeVerrier; coefficient
/// of t^k at index k (monic, so the last entry is 1).
template <typename Derived>
std::vector<typename Derived::Scalar> characteristic_polynomial(
    const Eigen::MatrixBase<Derived>& a) {
  using Scalar = typename Derived::Scalar;
  const Index n = a.rows();
  std::vector<Scalar> c(static_cast<std::size_t>(n + 1), Scalar(0));
  c[static_cast<std::size_t>(n)] = Scalar(1);
  Matrix<Scalar> m = Matrix<Scalar>::Zero(n, n);
  const Matrix<Scalar> id = Matrix<Scalar>::Identity(n, n);
  for (Index k = 1; k <= n; ++k) {
    m = a * m + c[static_cast<std::size_t>(n - k + 1)] * id;
    Matrix<Scalar> am = a * m;
    c[static_cast<std::size_t>(n - k)] = -am.trace() / Scalar(k);
  }
  return c;
}

struct Inertia {
  Index positive = 0, negative = 0, zero = 0;
  friend bool operator==(const Inertia&, const Inertia&) = default;
};

/// Sylvester inertia of a symmetric matrix by exact congruence
/// diagonalization.
template <typename Derived>
Inertia inertia(const Eigen::MatrixBase<Derived>& sym) {
  MatrixQ m = to_rational(sym);
  const Index n = m.rows();
  Inertia out;
  for (Index k = 0; k < n; ++k) {
    if (m(k, k) == 0) {
      // Bring a nonzero diagonal entry to position k, or create one.
      Index p = k + 1;
      while (p < n && m(p, p) == 0) ++p;
      if (p < n) {
        m.row(k).swap(m.row(p));
        m.col(k).swap(m.col(p));
      } else {
        Index q = k + 1;
        while (q < n && m(k, q) == 0) ++q;
        if (q == n) {
          ++out.zero;
          continue;
        }
        // x_k += x_q gives diagonal 2 m(k,q) since m(q,q) = 0.
        m.row(k) += m.row(q);
        m.col(k) += m.col(q);
      }
    }
    const Rational piv = m(k, k);
    (piv > 0 ? out.positive : out.negative) += 1;
    for (Index i = k + 1; i < n; ++i) {
      if (m(i, k) == 0) continue;
      const Rational f = m(i, k) / piv;
      m.row(i) -= f * m.row(k);
      m.col(i) -= f * m.col(k);
    }
  }
  return out;
}

/// Grows a row space one vector at a time, keeping a reduced basis. Used
/// where rows arrive from sampling and only the final rank/kernel matter.
template <typename Scalar>
class IncrementalRowSpace {
 public:
  explicit IncrementalRowSpace(Index cols) : cols_(cols) {}

  /// Returns true if the row increased the rank.
  bool add(Vector<Scalar> row) {
    for (std::size_t i = 0; i < basis_.size(); ++i) {
      const Scalar& c = row(pivots_[i]);
      if (c != Scalar(0)) row -= c * basis_[i];
    }
    Index p = 0;
    while (p < cols_ && row(p) == Scalar(0)) ++p;
    if (p == cols_) return false;
    row /= row(p);
    for (auto& b : basis_)
      if (b(p) != Scalar(0)) b -= b(p) * row;
    basis_.push_back(std::move(row));
    pivots_.push_back(p);
    return true;
  }

  Index rank() const { return static_cast<Index>(basis_.size()); }
  Index cols() const { return cols_; }

  Matrix<Scalar> rows() const {
    Matrix<Scalar> m(rank(), cols_);
    for (Index i = 0; i < rank(); ++i) m.row(i) = basis_[static_cast<std::size_t>(i)].transpose();
    return m;
  }

 private:
  Index cols_;
  std::vector<Vector<Scalar>> basis_;
  std::vector<Index> pivots_;
};

}  // namespace octet
