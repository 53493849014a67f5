#ifndef ORBITKIT_RATIONAL_HPP
#define ORBITKIT_RATIONAL_HPP

#include <gmpxx.h>
#include <complex>
#include <string>

#include "orbitkit/errors.hpp"

namespace orbitkit {

using Rational = mpq_class;

inline Rational rat(long num, long den = 1) {
  Rational r(num, den);
  r.canonicalize();
  return r;
}

// Accepts "p", "-p", "p/q". Throws ParseError on malformed input or q = 0.
inline Rational parse_rational(const std::string& s) {
  if (s.empty()) throw ParseError("empty rational literal");
  try {
    Rational r(s);
    if (r.get_den() == 0) throw ParseError("zero denominator in '" + s + "'");
    r.canonicalize();
    return r;
  } catch (const std::invalid_argument&) {
    throw ParseError("malformed rational '" + s + "'");
  }
}

inline std::string rat_str(const Rational& r) { return r.get_str(); }

inline double rat_d(const Rational& r) { return r.get_d(); }

// Gaussian rational a + b*i, the coefficient field for all symbolic work.
struct GQ {
  Rational re, im;

  GQ() : re(0), im(0) {}
  GQ(long n) : re(n), im(0) {}
  GQ(const Rational& r) : re(r), im(0) {}
  GQ(Rational r, Rational i) : re(std::move(r)), im(std::move(i)) {}

  static GQ i() { return GQ(Rational(0), Rational(1)); }

  bool is_zero() const { return re == 0 && im == 0; }
  bool is_real() const { return im == 0; }

  GQ operator-() const { return GQ(-re, -im); }
  GQ conj() const { return GQ(re, -im); }

  GQ& operator+=(const GQ& o) { re += o.re; im += o.im; return *this; }
  GQ& operator-=(const GQ& o) { re -= o.re; im -= o.im; return *this; }
  GQ& operator*=(const GQ& o) {
    Rational r = re * o.re - im * o.im;
    Rational i = re * o.im + im * o.re;
    re = r; im = i;
    return *this;
  }

  friend GQ operator+(GQ a, const GQ& b) { a += b; return a; }
  friend GQ operator-(GQ a, const GQ& b) { a -= b; return a; }
  friend GQ operator*(GQ a, const GQ& b) { a *= b; return a; }
  friend GQ operator/(const GQ& a, const GQ& b) {
    Rational n = b.re * b.re + b.im * b.im;
    if (n == 0) throw OrbitkitError("division by zero GQ");
    return GQ((a.re * b.re + a.im * b.im) / n, (a.im * b.re - a.re * b.im) / n);
  }
  friend bool operator==(const GQ& a, const GQ& b) { return a.re == b.re && a.im == b.im; }
  friend bool operator!=(const GQ& a, const GQ& b) { return !(a == b); }

  std::complex<double> to_complex() const { return {re.get_d(), im.get_d()}; }

  // "3", "-1/2", "i", "-2/3 i", "1+1/2 i"
  std::string str() const {
    if (im == 0) return re.get_str();
    std::string is;
    if (im == 1) is = "i";
    else if (im == -1) is = "-i";
    else is = im.get_str() + " i";
    if (re == 0) return is;
    if (im > 0) return re.get_str() + "+" + is;
    return re.get_str() + is;
  }
};

} // namespace orbitkit

#endif
