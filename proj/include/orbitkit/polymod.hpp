#ifndef ORBITKIT_POLYMOD_HPP
#define ORBITKIT_POLYMOD_HPP

#include <optional>

#include "orbitkit/group.hpp"

namespace orbitkit {

// Convention used throughout: (lambda(x)p)(t) = p(x^{-1}.t) and
// (rho(y)p)(t) = p(t.y).

// p(x^{-1}.t) for a fixed rational point x.
Poly left_translate(const LieAlgebra& a, const Poly& p, const QVec& x);
// p(t.y) for a fixed rational point y.
Poly right_translate(const LieAlgebra& a, const Poly& p, const QVec& y);

// p(s^{-1}.t) / p(t.s) over the 2n symbols (s_1..s_n, t_1..t_n).
Poly left_translate_symbolic(const LieAlgebra& a, const Poly& p);
Poly right_translate_symbolic(const LieAlgebra& a, const Poly& p);

// Echelonized span of polynomials under the weighted-graded order used for
// Jordan-Hoelder bases (weights = lower-central-series depths; translation
// strictly lowers the weighted degree, which makes both actions triangular).
class PolySpan {
public:
  PolySpan(int nvars, std::vector<int> weights);

  // Full-reduction insert; returns true when independent.
  bool insert(const Poly& p);
  bool contains(const Poly& p) const;
  Poly reduce(const Poly& p) const;
  int dim() const { return static_cast<int>(rows_.size()); }

  // Basis sorted ascending by leading monomial (weighted order), monic.
  std::vector<Poly> sorted_basis() const;

  bool mono_less(const Mono& x, const Mono& y) const;

private:
  int nvars_;
  std::vector<int> weights_;
  std::vector<Poly> rows_; // kept sorted ascending by leading monomial
};

// V_p with a Jordan-Hoelder basis p_1, ..., p_m (p_1 spans the trivial
// quotient, p_m is the generator) and the triangular action matrices of both
// translations: a[j][i] and b[j][i] are the coefficients of p_{i+1} in
// lambda(s) p_{j+1} resp. rho(s) p_{j+1}, polynomials in s.
struct TranslationModule {
  Poly generator;
  std::vector<Poly> basis; // ascending Jordan-Hoelder order
  std::vector<std::vector<Poly>> a;
  std::vector<std::vector<Poly>> b;

  int dim() const { return static_cast<int>(basis.size()); }
};

// Span of all two-sided translates of p, with triangular matrices.
TranslationModule module_closure(const LieAlgebra& a, const Poly& p);

// Jordan-Hoelder basis for a user-supplied translation-closed span; throws
// NotInvariant when the span is not closed under both translations.
TranslationModule jh_basis(const LieAlgebra& a, const std::vector<Poly>& span,
                           std::optional<Poly> generator = std::nullopt);

// dim V_p
int g_degree(const LieAlgebra& a, const Poly& p);

} // namespace orbitkit

#endif
