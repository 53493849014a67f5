#include "orbitkit/group.hpp"

namespace orbitkit {

QMat adjoint(const LieAlgebra& a, const QVec& x) {
  const int n = a.dim();
  QMat ad = a.ad_matrix(x);
  QMat result = qmat_identity(n);
  QMat power = qmat_identity(n);
  Rational fact(1);
  for (int k = 1; k <= a.nilpotency_class(); ++k) {
    power = qmat_mul(ad, power);
    fact *= k;
    bool zero = true;
    for (int i = 0; i < n && zero; ++i)
      for (int j = 0; j < n; ++j)
        if (power[i][j] != 0) { zero = false; break; }
    if (zero) break;
    for (int i = 0; i < n; ++i)
      for (int j = 0; j < n; ++j)
        if (power[i][j] != 0) result[i][j] += power[i][j] / fact;
  }
  return result;
}

QMat coadjoint(const LieAlgebra& a, const QVec& x) {
  return qmat_transpose(adjoint(a, group_inverse(x)));
}

std::vector<Poly> symbolic_product(const LieAlgebra& a) {
  const int n = a.dim();
  std::vector<Poly> x, y;
  for (int i = 0; i < n; ++i) x.push_back(Poly::variable(2 * n, i));
  for (int i = 0; i < n; ++i) y.push_back(Poly::variable(2 * n, n + i));
  return bch_symbolic(a, x, y);
}

std::vector<Poly> symbolic_two_sided(const LieAlgebra& a) {
  const int n = a.dim();
  std::vector<Poly> xinv, t, y;
  for (int i = 0; i < n; ++i) xinv.push_back(-Poly::variable(3 * n, i));
  for (int i = 0; i < n; ++i) t.push_back(Poly::variable(3 * n, n + i));
  for (int i = 0; i < n; ++i) y.push_back(Poly::variable(3 * n, 2 * n + i));
  auto left = bch_symbolic(a, xinv, t);
  return bch_symbolic(a, left, y);
}

} // namespace orbitkit
