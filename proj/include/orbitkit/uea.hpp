#ifndef ORBITKIT_UEA_HPP
#define ORBITKIT_UEA_HPP

#include <map>
#include <string>
#include <vector>

#include "orbitkit/algebra.hpp"
#include "orbitkit/poly.hpp"

namespace orbitkit {

// Element of U(g_C) in PBW normal form relative to the flag order
// X_1 < X_2 < ... < X_n: terms map exponent vectors of X_1^{e1}...X_n^{en}
// to Gaussian-rational coefficients.
class UEAElement {
public:
  UEAElement() : n_(0) {}
  explicit UEAElement(int n) : n_(n) {}

  static UEAElement zero(int n) { return UEAElement(n); }
  static UEAElement one(int n);
  static UEAElement generator(int n, int index);
  static UEAElement scalar(int n, const GQ& c);

  int gens() const { return n_; }
  bool is_zero() const { return terms_.empty(); }
  const std::map<Mono, GQ, GrlexLess>& terms() const { return terms_; }

  void add_term(const Mono& m, const GQ& c);
  UEAElement operator-() const;
  UEAElement& operator+=(const UEAElement& o);
  UEAElement& operator-=(const UEAElement& o);
  friend UEAElement operator+(UEAElement a, const UEAElement& b) { a += b; return a; }
  friend UEAElement operator-(UEAElement a, const UEAElement& b) { a -= b; return a; }
  UEAElement scaled(const GQ& c) const;
  friend bool operator==(const UEAElement& a, const UEAElement& b) {
    return a.n_ == b.n_ && a.terms_ == b.terms_;
  }

  // Image under the abelianization U(g) -> S(g) (formally: same exponents as
  // a commutative polynomial). PBW-normal terms map term-by-term.
  Poly abelianization() const;

  std::string str(const std::vector<std::string>& names) const;

private:
  int n_;
  std::map<Mono, GQ, GrlexLess> terms_;
};

// Product with PBW straightening X_a X_b -> X_b X_a + [X_a, X_b] for a > b.
UEAElement uea_product(const LieAlgebra& alg, const UEAElement& a, const UEAElement& b);

// Normal form of an arbitrary word of generators (indices 0-based).
UEAElement uea_word(const LieAlgebra& alg, const std::vector<int>& word);

// Symmetrization map S(g_C) -> U(g_C): each commutative monomial Y1...Yk maps
// to (1/k!) sum over permutations. q is a commutative Poly whose variables are
// the flag generators. Throws DegreeTooHigh above max_degree.
UEAElement symmetrize(const LieAlgebra& alg, const Poly& q, int max_degree = 8);

} // namespace orbitkit

#endif
