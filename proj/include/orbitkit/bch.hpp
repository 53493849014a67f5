#ifndef ORBITKIT_BCH_HPP
#define ORBITKIT_BCH_HPP

#include <cstdint>
#include <vector>

#include "orbitkit/algebra.hpp"
#include "orbitkit/poly.hpp"

namespace orbitkit {

// One term of the Dynkin expansion of log(exp X exp Y): coefficient times the
// right-nested bracket [a1,[a2,[...,ak]]] of the letter word (0 = X, 1 = Y).
struct DynkinTerm {
  Rational coeff;
  std::vector<uint8_t> word;
};

inline constexpr int kMaxBchClass = 6;

// Terms of total degree <= cls, words with trivially zero brackets dropped.
// Generated once per degree from the Dynkin series (see tools/gen_dynkin.py
// for the standalone generator of the same table). Throws ClassTooHigh for
// cls > kMaxBchClass.
const std::vector<DynkinTerm>& dynkin_table(int cls);

// Exact CBH product of exponential coordinates.
QVec bch_exact(const LieAlgebra& a, const QVec& x, const QVec& y);

// CBH product with polynomial coordinates (x and y share one variable space).
std::vector<Poly> bch_symbolic(const LieAlgebra& a, const std::vector<Poly>& x,
                               const std::vector<Poly>& y);

// Dense double-precision structure constants for numeric-mode kernels.
struct NumAlgebra {
  int n = 0;
  int cls = 0;
  std::vector<double> c; // c[(i*n+j)*n+k]
  // axes whose product coordinate is a plain shift x_j + y_j (no bracket
  // corrections); used to keep grid interpolation low-dimensional.
  std::vector<bool> shift_only;

  static NumAlgebra from(const LieAlgebra& a);
  double cval(int i, int j, int k) const { return c[(i * n + j) * n + k]; }
};

// Numeric CBH product; out, x, y are length-n buffers (out distinct from x, y).
void bch_numeric(const NumAlgebra& a, const double* x, const double* y, double* out);

} // namespace orbitkit

#endif
