#include "orbitkit/algebra.hpp"

#include <utility>

#include "orbitkit/errors.hpp"

namespace orbitkit {

LieAlgebra LieAlgebra::validate(std::string name, std::vector<std::string> basis_labels,
                                std::vector<std::vector<QVec>> c) {
  LieAlgebra a;
  a.name_ = std::move(name);
  a.n_ = static_cast<int>(c.size());
  a.basis_labels_ = std::move(basis_labels);
  a.c_ = std::move(c);
  const int n = a.n_;

  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j)
      for (int k = 0; k < n; ++k)
        if (a.c_[i][j][k] != -a.c_[j][i][k])
          throw AntisymmetryViolation("c[" + std::to_string(i + 1) + "][" + std::to_string(j + 1) +
                                      "][" + std::to_string(k + 1) + "] breaks antisymmetry");

  // Jacobi: sum_m c[i][j][m] c[m][k][l] + cyclic = 0
  for (int i = 0; i < n; ++i)
    for (int j = i + 1; j < n; ++j)
      for (int k = j + 1; k < n; ++k)
        for (int l = 0; l < n; ++l) {
          Rational s(0);
          for (int m = 0; m < n; ++m) {
            s += a.c_[i][j][m] * a.c_[m][k][l];
            s += a.c_[j][k][m] * a.c_[m][i][l];
            s += a.c_[k][i][m] * a.c_[m][j][l];
          }
          if (s != 0)
            throw JacobiViolation("Jacobi fails at (" + std::to_string(i + 1) + "," +
                                  std::to_string(j + 1) + "," + std::to_string(k + 1) + "," +
                                  std::to_string(l + 1) + ")");
        }

  // Lower central series must reach {0} within n steps.
  Subspace current = Subspace::full(n);
  int cls = 0;
  while (!current.is_zero()) {
    if (cls > n) throw NotNilpotent("lower central series does not reach 0");
    Subspace next(n);
    for (int i = 0; i < n; ++i) {
      QVec xi = qvec_zero(n);
      xi[i] = 1;
      for (const auto& v : current.basis()) next.insert(a.bracket(xi, v));
    }
    if (!current.is_zero() && next.equals(current))
      throw NotNilpotent("lower central series stabilizes above 0");
    current = next;
    ++cls;
  }
  a.nilpotency_class_ = cls == 0 ? 0 : cls;
  return a;
}

QVec LieAlgebra::bracket(const QVec& x, const QVec& y) const {
  QVec r = qvec_zero(n_);
  for (int i = 0; i < n_; ++i) {
    if (x[i] == 0) continue;
    for (int j = 0; j < n_; ++j) {
      if (y[j] == 0) continue;
      Rational f = x[i] * y[j];
      for (int k = 0; k < n_; ++k)
        if (c_[i][j][k] != 0) r[k] += f * c_[i][j][k];
    }
  }
  return r;
}

QMat LieAlgebra::ad_matrix(const QVec& x) const {
  QMat m = qmat_zero(n_, n_);
  for (int j = 0; j < n_; ++j) {
    QVec ej = qvec_zero(n_);
    ej[j] = 1;
    QVec col = bracket(x, ej);
    for (int k = 0; k < n_; ++k) m[k][j] = col[k];
  }
  return m;
}

std::vector<Subspace> LieAlgebra::lower_central_series() const {
  std::vector<Subspace> series;
  Subspace current = Subspace::full(n_);
  series.push_back(current);
  while (!current.is_zero()) {
    Subspace next(n_);
    for (int i = 0; i < n_; ++i) {
      QVec xi = qvec_zero(n_);
      xi[i] = 1;
      for (const auto& v : current.basis()) next.insert(bracket(xi, v));
    }
    series.push_back(next);
    current = next;
  }
  return series;
}

std::vector<int> LieAlgebra::coordinate_weights() const {
  auto series = lower_central_series();
  std::vector<int> w(n_, 1);
  for (int j = 0; j < n_; ++j) {
    QVec ej = qvec_zero(n_);
    ej[j] = 1;
    for (size_t k = 0; k < series.size(); ++k)
      if (series[k].contains(ej)) w[j] = static_cast<int>(k) + 1;
  }
  return w;
}

LieAlgebra LieAlgebra::change_basis(const std::vector<QVec>& new_basis,
                                    std::vector<std::string> new_labels) const {
  const int n = n_;
  // An element with new coordinates y has old coordinates T^T y, where the
  // rows of T are the new basis vectors.
  QMat t;
  for (const auto& v : new_basis) t.push_back(v);
  QMat back = qmat_inverse(qmat_transpose(t));
  std::vector<std::vector<QVec>> c(n, std::vector<QVec>(n, qvec_zero(n)));
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j)
      c[i][j] = qmat_apply(back, bracket(new_basis[i], new_basis[j]));
  return LieAlgebra::validate(name_, std::move(new_labels), std::move(c));
}

bool Flag::is_identity() const {
  const int n = static_cast<int>(adapted_basis.size());
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j)
      if (adapted_basis[i][j] != ((i == j) ? 1 : 0)) return false;
  return true;
}

Flag jordan_holder_flag(const LieAlgebra& a) {
  const int n = a.dim();
  auto series = a.lower_central_series(); // C^1=g, ..., C^{c+1}=0
  Flag flag;
  flag.subspaces.push_back(Subspace(n)); // g_0 = 0
  Subspace current(n);
  std::vector<QVec> adapted;
  // Walk the series from the deepest nonzero term up to g, completing each
  // quotient with input-basis vectors in input order.
  for (int level = static_cast<int>(series.size()) - 2; level >= 0; --level) {
    const Subspace& target = series[level];
    // Prefer plain input-basis vectors, in input order.
    for (int i = 0; i < n; ++i) {
      QVec ei = qvec_zero(n);
      ei[i] = 1;
      if (!target.contains(ei) || current.contains(ei)) continue;
      current.insert(ei);
      adapted.push_back(ei);
      flag.subspaces.push_back(current);
    }
    // Quotients not reachable by input vectors: fall back to the echelon basis.
    for (const auto& v : target.basis()) {
      if (current.contains(v)) continue;
      current.insert(v);
      adapted.push_back(v);
      flag.subspaces.push_back(current);
    }
  }
  if (current.dim() != n) throw InternalInconsistency("flag construction incomplete");
  flag.adapted_basis = adapted;
  // Ideal property: [g, g_k] subset g_k.
  for (size_t k = 1; k < flag.subspaces.size(); ++k) {
    for (int i = 0; i < n; ++i) {
      QVec ei = qvec_zero(n);
      ei[i] = 1;
      for (const auto& v : flag.subspaces[k].basis())
        if (!flag.subspaces[k].contains(a.bracket(ei, v)))
          throw InternalInconsistency("flag subspace is not an ideal");
    }
  }
  return flag;
}

LieAlgebra adapted_form(const LieAlgebra& a, const Flag& flag) {
  if (flag.is_identity()) return a;
  std::vector<std::string> labels;
  for (int i = 0; i < a.dim(); ++i) labels.push_back("X" + std::to_string(i + 1));
  return a.change_basis(flag.adapted_basis, std::move(labels));
}

} // namespace orbitkit
