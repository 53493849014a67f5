#ifndef ORBITKIT_POLY_HPP
#define ORBITKIT_POLY_HPP

#include <complex>
#include <map>
#include <string>
#include <vector>

#include "orbitkit/rational.hpp"

namespace orbitkit {

using Mono = std::vector<int>; // exponent vector

// Graded lexicographic: total degree first, then lex with variable 0 most
// significant. Canonical term order for storage and printing.
struct GrlexLess {
  bool operator()(const Mono& a, const Mono& b) const;
};

int mono_total_degree(const Mono& m);

// Exact multivariate polynomial over the Gaussian rationals.
class Poly {
public:
  Poly() : nvars_(0) {}
  explicit Poly(int nvars) : nvars_(nvars) {}

  static Poly constant(int nvars, const GQ& c);
  static Poly variable(int nvars, int index);

  int nvars() const { return nvars_; }
  bool is_zero() const { return terms_.empty(); }
  bool is_constant() const;
  GQ constant_term() const;
  int total_degree() const; // -1 for the zero polynomial
  int degree_in(int var) const;
  int weighted_degree(const std::vector<int>& weights) const; // -1 for zero

  const std::map<Mono, GQ, GrlexLess>& terms() const { return terms_; }
  GQ coeff(const Mono& m) const;

  // Leading monomial in grlex order; requires nonzero.
  const Mono& leading_monomial() const;
  const GQ& leading_coeff() const;

  void add_term(const Mono& m, const GQ& c);

  Poly operator-() const;
  Poly& operator+=(const Poly& o);
  Poly& operator-=(const Poly& o);
  friend Poly operator+(Poly a, const Poly& b) { a += b; return a; }
  friend Poly operator-(Poly a, const Poly& b) { a -= b; return a; }
  friend Poly operator*(const Poly& a, const Poly& b);
  Poly scaled(const GQ& c) const;
  friend bool operator==(const Poly& a, const Poly& b) { return a.nvars_ == b.nvars_ && a.terms_ == b.terms_; }

  Poly pow(int k) const;
  Poly derivative(int var) const;

  // Substitute variable i by images[i]; images share a common variable space.
  Poly substitute(const std::vector<Poly>& images) const;

  // Substitute rational values for the variables in `fixed` (by index),
  // keeping the same variable space (the fixed variables no longer occur).
  Poly specialize(const std::vector<std::pair<int, GQ>>& fixed) const;

  GQ eval(const std::vector<GQ>& values) const;
  std::complex<double> eval_complex(const std::vector<double>& values) const;

  // Collect terms by the exponents of the masked variables: returns pairs
  // (masked-exponent monomial, coefficient polynomial in the unmasked
  // variables, same variable space).
  std::vector<std::pair<Mono, Poly>> collect(const std::vector<bool>& mask) const;

  // Reinterpret over a larger/smaller variable space; var_map[i] = new index
  // of old variable i.
  Poly map_vars(const std::vector<int>& var_map, int new_nvars) const;

  std::string str(const std::vector<std::string>& names) const;

private:
  int nvars_;
  std::map<Mono, GQ, GrlexLess> terms_;
};

// Exact division q = a / b, throws OrbitkitError when not exactly divisible.
Poly poly_exact_div(const Poly& a, const Poly& b);

// Numeric (double-complex) polynomial for inner numeric loops.
struct NumPoly {
  int nvars = 0;
  std::vector<std::pair<std::complex<double>, Mono>> terms;

  static NumPoly from(const Poly& p);
  std::complex<double> eval(const double* values) const;
  double eval_real(const double* values) const; // ignores imaginary parts
};

std::vector<std::string> default_names(const std::string& stem, int n);

} // namespace orbitkit

#endif
