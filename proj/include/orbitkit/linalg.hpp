#ifndef ORBITKIT_LINALG_HPP
#define ORBITKIT_LINALG_HPP

#include <vector>

#include "orbitkit/rational.hpp"

namespace orbitkit {

using QVec = std::vector<Rational>;
using QMat = std::vector<QVec>; // row-major

QVec qvec_zero(int n);
bool qvec_is_zero(const QVec& v);
QVec qvec_add(const QVec& a, const QVec& b);
QVec qvec_sub(const QVec& a, const QVec& b);
QVec qvec_scale(const Rational& c, const QVec& v);

QMat qmat_identity(int n);
QMat qmat_zero(int rows, int cols);
QMat qmat_mul(const QMat& a, const QMat& b);
QVec qmat_apply(const QMat& a, const QVec& v);
QMat qmat_transpose(const QMat& a);
QMat qmat_inverse(const QMat& a); // throws OrbitkitError if singular
int qmat_rank(QMat a);
QMat qmat_kernel(const QMat& a); // rows span the right kernel of a

// Subspace of Q^n stored as a reduced row-echelon basis (deterministic:
// pivot = first nonzero coordinate, rows sorted by pivot column).
class Subspace {
public:
  Subspace() : n_(0) {}
  explicit Subspace(int ambient) : n_(ambient) {}
  static Subspace span(int ambient, const std::vector<QVec>& vectors);
  static Subspace full(int ambient);

  int ambient() const { return n_; }
  int dim() const { return static_cast<int>(rows_.size()); }
  const std::vector<QVec>& basis() const { return rows_; }

  bool contains(const QVec& v) const;
  bool contains(const Subspace& other) const;
  bool is_zero() const { return rows_.empty(); }

  // Returns true if v was independent (and inserted).
  bool insert(const QVec& v);

  Subspace sum(const Subspace& other) const;
  bool equals(const Subspace& other) const;

  // Residue of v after reduction against the echelon basis (zero iff contained).
  QVec reduce(const QVec& v) const;

private:
  int n_;
  std::vector<QVec> rows_;   // reduced echelon rows
  std::vector<int> pivots_;  // pivot column per row
};

} // namespace orbitkit

#endif
