#include "octet/integer_matrix.hpp"

namespace octet {

std::vector<Integer> SmithForm::diagonal() const {
  std::vector<Integer> d;
  for (Index i = 0; i < std::min(D.rows(), D.cols()); ++i) d.push_back(D(i, i));
  return d;
}

namespace {

// Floor division for signed big integers.
Integer floor_div(const Integer& a, const Integer& b) {
  Integer q = a / b;
  if ((a % b != 0) && ((a < 0) != (b < 0))) q -= 1;
  return q;
}

}  // namespace

SmithForm smith_normal_form(const MatrixZ& a) {
  const Index m = a.rows(), n = a.cols();
  SmithForm s{MatrixZ::Identity(m, m), a, MatrixZ::Identity(n, n)};
  MatrixZ& d = s.D;

  for (Index k = 0; k < std::min(m, n); ++k) {
    while (true) {
      // Smallest nonzero entry of the trailing block becomes the pivot.
      Index pi = -1, pj = -1;
      for (Index i = k; i < m; ++i)
        for (Index j = k; j < n; ++j)
          if (d(i, j) != 0 && (pi < 0 || abs(d(i, j)) < abs(d(pi, pj)))) {
            pi = i;
            pj = j;
          }
      if (pi < 0) return s;
      if (pi != k) {
        d.row(pi).swap(d.row(k));
        s.P.row(pi).swap(s.P.row(k));
      }
      if (pj != k) {
        d.col(pj).swap(d.col(k));
        s.Q.col(pj).swap(s.Q.col(k));
      }
      bool clean = true;
      for (Index i = k + 1; i < m; ++i) {
        if (d(i, k) == 0) continue;
        const Integer f = floor_div(d(i, k), d(k, k));
        d.row(i) -= f * d.row(k);
        s.P.row(i) -= f * s.P.row(k);
        if (d(i, k) != 0) clean = false;
      }
      for (Index j = k + 1; j < n; ++j) {
        if (d(k, j) == 0) continue;
        const Integer f = floor_div(d(k, j), d(k, k));
        d.col(j) -= f * d.col(k);
        s.Q.col(j) -= f * s.Q.col(k);
        if (d(k, j) != 0) clean = false;
      }
      if (!clean) continue;
      // Divisibility: fold an offending row into row k and retry.
      Index bad = -1;
      for (Index i = k + 1; i < m && bad < 0; ++i)
        for (Index j = k + 1; j < n; ++j)
          if (d(i, j) % d(k, k) != 0) {
            bad = i;
            break;
          }
      if (bad < 0) break;
      d.row(k) += d.row(bad);
      s.P.row(k) += s.P.row(bad);
    }
    if (d(k, k) < 0) {
      d.row(k) *= -1;
      s.P.row(k) *= -1;
    }
  }
  return s;
}

namespace {

// In-place row echelon with unimodular row operations, mirrored on `t`.
// Returns the rank; rows >= rank of `h` are zero afterwards.
Index echelon_rows(MatrixZ& h, MatrixZ& t) {
  const Index m = h.rows(), n = h.cols();
  Index r = 0;
  for (Index c = 0; c < n && r < m; ++c) {
    while (true) {
      Index p = -1;
      for (Index i = r; i < m; ++i)
        if (h(i, c) != 0 && (p < 0 || abs(h(i, c)) < abs(h(p, c)))) p = i;
      if (p < 0) break;
      if (p != r) {
        h.row(p).swap(h.row(r));
        t.row(p).swap(t.row(r));
      }
      bool done = true;
      for (Index i = r + 1; i < m; ++i) {
        if (h(i, c) == 0) continue;
        const Integer f = floor_div(h(i, c), h(r, c));
        h.row(i) -= f * h.row(r);
        t.row(i) -= f * t.row(r);
        if (h(i, c) != 0) done = false;
      }
      if (done) break;
    }
    if (r < m && h(r, c) != 0) {
      if (h(r, c) < 0) {
        h.row(r) *= -1;
        t.row(r) *= -1;
      }
      for (Index i = 0; i < r; ++i) {
        const Integer f = floor_div(h(i, c), h(r, c));
        if (f == 0) continue;
        h.row(i) -= f * h.row(r);
        t.row(i) -= f * t.row(r);
      }
      ++r;
    }
  }
  return r;
}

}  // namespace

MatrixZ hermite_row_basis(const MatrixZ& a) {
  MatrixZ h = a;
  MatrixZ t = MatrixZ::Zero(a.rows(), 0);
  const Index r = echelon_rows(h, t);
  return h.topRows(r);
}

MatrixZ integer_kernel(const MatrixZ& a) {
  // Row-reduce a^T while tracking the transform; rows of the transform whose
  // image vanishes span the kernel.
  MatrixZ h = a.transpose();
  MatrixZ t = MatrixZ::Identity(a.cols(), a.cols());
  const Index r = echelon_rows(h, t);
  return t.bottomRows(a.cols() - r).transpose();
}

Integer common_denominator(const MatrixQ& m) {
  Integer l = 1;
  for (Index i = 0; i < m.rows(); ++i)
    for (Index j = 0; j < m.cols(); ++j) {
      const Integer d = denominator(m(i, j));
      l = l / gcd(l, d) * d;
    }
  return l;
}

}  // namespace octet
