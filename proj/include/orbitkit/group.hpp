#ifndef ORBITKIT_GROUP_HPP
#define ORBITKIT_GROUP_HPP

#include "orbitkit/algebra.hpp"
#include "orbitkit/bch.hpp"

namespace orbitkit {

// Group points are exponential coordinates in the adapted basis; exact mode
// is QVec, numeric mode double buffers. The two never mix in one computation.

inline QVec group_inverse(const QVec& x) {
  QVec r(x.size());
  for (size_t i = 0; i < x.size(); ++i) r[i] = -x[i];
  return r;
}

// Ad(exp x) = sum_k (ad x)^k / k!
QMat adjoint(const LieAlgebra& a, const QVec& x);

// Matrix of Ad*(exp x) on dual coordinates: <Ad*(x) l, V> = <l, Ad(x^{-1}) V>.
QMat coadjoint(const LieAlgebra& a, const QVec& x);

// Identity-centred symbolic product: each coordinate of x.y as a Poly in the
// 2n symbols (x_1..x_n, y_1..y_n).
std::vector<Poly> symbolic_product(const LieAlgebra& a);

// x^{-1}.t.y as polynomials in the 3n symbols (x, t, y), in that order.
std::vector<Poly> symbolic_two_sided(const LieAlgebra& a);

} // namespace orbitkit

#endif
