#include "orbitkit/linalg.hpp"

#include <algorithm>

#include "orbitkit/errors.hpp"

namespace orbitkit {

QVec qvec_zero(int n) { return QVec(n, Rational(0)); }

bool qvec_is_zero(const QVec& v) {
  for (const auto& x : v)
    if (x != 0) return false;
  return true;
}

QVec qvec_add(const QVec& a, const QVec& b) {
  QVec r(a.size());
  for (size_t i = 0; i < a.size(); ++i) r[i] = a[i] + b[i];
  return r;
}

QVec qvec_sub(const QVec& a, const QVec& b) {
  QVec r(a.size());
  for (size_t i = 0; i < a.size(); ++i) r[i] = a[i] - b[i];
  return r;
}

QVec qvec_scale(const Rational& c, const QVec& v) {
  QVec r(v.size());
  for (size_t i = 0; i < v.size(); ++i) r[i] = c * v[i];
  return r;
}

QMat qmat_identity(int n) {
  QMat m(n, qvec_zero(n));
  for (int i = 0; i < n; ++i) m[i][i] = 1;
  return m;
}

QMat qmat_zero(int rows, int cols) { return QMat(rows, qvec_zero(cols)); }

QMat qmat_mul(const QMat& a, const QMat& b) {
  int n = static_cast<int>(a.size());
  int k = static_cast<int>(b.size());
  int m = k ? static_cast<int>(b[0].size()) : 0;
  QMat r = qmat_zero(n, m);
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < k; ++j) {
      if (a[i][j] == 0) continue;
      for (int l = 0; l < m; ++l)
        if (b[j][l] != 0) r[i][l] += a[i][j] * b[j][l];
    }
  return r;
}

QVec qmat_apply(const QMat& a, const QVec& v) {
  QVec r(a.size(), Rational(0));
  for (size_t i = 0; i < a.size(); ++i)
    for (size_t j = 0; j < v.size(); ++j)
      if (a[i][j] != 0 && v[j] != 0) r[i] += a[i][j] * v[j];
  return r;
}

QMat qmat_transpose(const QMat& a) {
  if (a.empty()) return a;
  QMat r(a[0].size(), QVec(a.size()));
  for (size_t i = 0; i < a.size(); ++i)
    for (size_t j = 0; j < a[0].size(); ++j) r[j][i] = a[i][j];
  return r;
}

QMat qmat_inverse(const QMat& a) {
  int n = static_cast<int>(a.size());
  QMat m = a;
  QMat inv = qmat_identity(n);
  for (int col = 0; col < n; ++col) {
    int piv = -1;
    for (int r = col; r < n; ++r)
      if (m[r][col] != 0) { piv = r; break; }
    if (piv < 0) throw OrbitkitError("qmat_inverse: singular matrix");
    std::swap(m[piv], m[col]);
    std::swap(inv[piv], inv[col]);
    Rational d = m[col][col];
    for (int j = 0; j < n; ++j) { m[col][j] /= d; inv[col][j] /= d; }
    for (int r = 0; r < n; ++r) {
      if (r == col || m[r][col] == 0) continue;
      Rational f = m[r][col];
      for (int j = 0; j < n; ++j) {
        m[r][j] -= f * m[col][j];
        inv[r][j] -= f * inv[col][j];
      }
    }
  }
  return inv;
}

int qmat_rank(QMat a) {
  int rank = 0;
  int rows = static_cast<int>(a.size());
  int cols = rows ? static_cast<int>(a[0].size()) : 0;
  for (int col = 0; col < cols && rank < rows; ++col) {
    int piv = -1;
    for (int r = rank; r < rows; ++r)
      if (a[r][col] != 0) { piv = r; break; }
    if (piv < 0) continue;
    std::swap(a[piv], a[rank]);
    for (int r = rank + 1; r < rows; ++r) {
      if (a[r][col] == 0) continue;
      Rational f = a[r][col] / a[rank][col];
      for (int j = col; j < cols; ++j) a[r][j] -= f * a[rank][j];
    }
    ++rank;
  }
  return rank;
}

QMat qmat_kernel(const QMat& a) {
  int rows = static_cast<int>(a.size());
  int cols = rows ? static_cast<int>(a[0].size()) : 0;
  QMat m = a;
  std::vector<int> pivot_col;
  int rank = 0;
  for (int col = 0; col < cols && rank < rows; ++col) {
    int piv = -1;
    for (int r = rank; r < rows; ++r)
      if (m[r][col] != 0) { piv = r; break; }
    if (piv < 0) continue;
    std::swap(m[piv], m[rank]);
    Rational d = m[rank][col];
    for (int j = 0; j < cols; ++j) m[rank][j] /= d;
    for (int r = 0; r < rows; ++r) {
      if (r == rank || m[r][col] == 0) continue;
      Rational f = m[r][col];
      for (int j = 0; j < cols; ++j) m[r][j] -= f * m[rank][j];
    }
    pivot_col.push_back(col);
    ++rank;
  }
  std::vector<bool> is_pivot(cols, false);
  for (int c : pivot_col) is_pivot[c] = true;
  QMat kernel;
  for (int free = 0; free < cols; ++free) {
    if (is_pivot[free]) continue;
    QVec v = qvec_zero(cols);
    v[free] = 1;
    for (int r = 0; r < rank; ++r) v[pivot_col[r]] = -m[r][free];
    kernel.push_back(std::move(v));
  }
  return kernel;
}

Subspace Subspace::span(int ambient, const std::vector<QVec>& vectors) {
  Subspace s(ambient);
  for (const auto& v : vectors) s.insert(v);
  return s;
}

Subspace Subspace::full(int ambient) {
  Subspace s(ambient);
  for (int i = 0; i < ambient; ++i) {
    QVec v = qvec_zero(ambient);
    v[i] = 1;
    s.insert(v);
  }
  return s;
}

QVec Subspace::reduce(const QVec& v) const {
  QVec r = v;
  for (size_t k = 0; k < rows_.size(); ++k) {
    const Rational& c = r[pivots_[k]];
    if (c != 0) {
      Rational f = c; // rows are monic at their pivot
      for (int j = 0; j < n_; ++j) r[j] -= f * rows_[k][j];
    }
  }
  return r;
}

bool Subspace::contains(const QVec& v) const { return qvec_is_zero(reduce(v)); }

bool Subspace::contains(const Subspace& other) const {
  for (const auto& v : other.rows_)
    if (!contains(v)) return false;
  return true;
}

bool Subspace::insert(const QVec& v) {
  QVec r = reduce(v);
  int piv = -1;
  for (int j = 0; j < n_; ++j)
    if (r[j] != 0) { piv = j; break; }
  if (piv < 0) return false;
  Rational d = r[piv];
  for (int j = 0; j < n_; ++j) r[j] /= d;
  // keep the basis fully reduced
  for (size_t k = 0; k < rows_.size(); ++k) {
    Rational f = rows_[k][piv];
    if (f != 0)
      for (int j = 0; j < n_; ++j) rows_[k][j] -= f * r[j];
  }
  size_t pos = 0;
  while (pos < pivots_.size() && pivots_[pos] < piv) ++pos;
  rows_.insert(rows_.begin() + pos, std::move(r));
  pivots_.insert(pivots_.begin() + pos, piv);
  return true;
}

Subspace Subspace::sum(const Subspace& other) const {
  Subspace s = *this;
  for (const auto& v : other.rows_) s.insert(v);
  return s;
}

bool Subspace::equals(const Subspace& other) const {
  return dim() == other.dim() && contains(other);
}

} // namespace orbitkit
