#include "orbitkit/polymod.hpp"

#include <algorithm>

#include "orbitkit/errors.hpp"

namespace orbitkit {

namespace {

std::vector<Poly> constant_polys(int nvars, const QVec& x) {
  std::vector<Poly> r;
  r.reserve(x.size());
  for (const auto& c : x) r.push_back(Poly::constant(nvars, GQ(c)));
  return r;
}

std::vector<Poly> var_polys(int nvars, int offset, int count) {
  std::vector<Poly> r;
  r.reserve(count);
  for (int i = 0; i < count; ++i) r.push_back(Poly::variable(nvars, offset + i));
  return r;
}

} // namespace

Poly left_translate(const LieAlgebra& a, const Poly& p, const QVec& x) {
  const int n = a.dim();
  auto prod = bch_symbolic(a, constant_polys(n, group_inverse(x)), var_polys(n, 0, n));
  return p.substitute(prod);
}

Poly right_translate(const LieAlgebra& a, const Poly& p, const QVec& y) {
  const int n = a.dim();
  auto prod = bch_symbolic(a, var_polys(n, 0, n), constant_polys(n, y));
  return p.substitute(prod);
}

Poly left_translate_symbolic(const LieAlgebra& a, const Poly& p) {
  const int n = a.dim();
  std::vector<Poly> sinv = var_polys(2 * n, 0, n);
  for (auto& q : sinv) q = -q;
  auto prod = bch_symbolic(a, sinv, var_polys(2 * n, n, n));
  return p.substitute(prod);
}

Poly right_translate_symbolic(const LieAlgebra& a, const Poly& p) {
  const int n = a.dim();
  auto prod = bch_symbolic(a, var_polys(2 * n, n, n), var_polys(2 * n, 0, n));
  return p.substitute(prod);
}

PolySpan::PolySpan(int nvars, std::vector<int> weights)
    : nvars_(nvars), weights_(std::move(weights)) {}

bool PolySpan::mono_less(const Mono& x, const Mono& y) const {
  int wx = 0, wy = 0;
  for (int i = 0; i < nvars_; ++i) {
    wx += x[i] * weights_[i];
    wy += y[i] * weights_[i];
  }
  if (wx != wy) return wx < wy;
  return GrlexLess{}(x, y);
}

namespace {
Mono weighted_leading(const Poly& p, const PolySpan& span) {
  const Mono* best = nullptr;
  for (const auto& [m, c] : p.terms())
    if (!best || span.mono_less(*best, m)) best = &m;
  return *best;
}
} // namespace

Poly PolySpan::reduce(const Poly& p) const {
  Poly r = p;
  for (const auto& row : rows_) {
    if (r.is_zero()) break;
    Mono lm = weighted_leading(row, *this);
    GQ c = r.coeff(lm);
    if (!c.is_zero()) r -= row.scaled(c);
  }
  return r;
}

bool PolySpan::contains(const Poly& p) const { return reduce(p).is_zero(); }

bool PolySpan::insert(const Poly& p) {
  Poly r = reduce(p);
  if (r.is_zero()) return false;
  Mono lm = weighted_leading(r, *this);
  r = r.scaled(GQ(1) / r.coeff(lm));
  // keep the set fully reduced
  for (auto& row : rows_) {
    GQ c = row.coeff(lm);
    if (!c.is_zero()) row -= r.scaled(c);
  }
  auto pos = rows_.begin();
  while (pos != rows_.end() && mono_less(weighted_leading(*pos, *this), lm)) ++pos;
  rows_.insert(pos, std::move(r));
  return true;
}

std::vector<Poly> PolySpan::sorted_basis() const { return rows_; }

namespace {

// All coefficient polynomials (in t) of p(x^{-1}.t.y) expanded in (x, y).
std::vector<Poly> translate_coefficients(const LieAlgebra& a, const Poly& p) {
  const int n = a.dim();
  auto prod = symbolic_two_sided(a); // vars: x(0..n-1), t(n..2n-1), y(2n..3n-1)
  Poly expanded = p.substitute(prod);
  std::vector<bool> mask(3 * n, true); // mask = x and y variables
  for (int i = n; i < 2 * n; ++i) mask[i] = false;
  std::vector<int> to_t(3 * n, -1);
  for (int i = 0; i < n; ++i) to_t[n + i] = i;
  std::vector<Poly> coeffs;
  for (const auto& [outer, inner] : expanded.collect(mask))
    coeffs.push_back(inner.map_vars(to_t, n));
  return coeffs;
}

struct ActionMatrices {
  std::vector<std::vector<Poly>> a, b;
};

// Expand lambda(s)p_j and rho(s)p_j over the basis; coefficients are
// polynomials in s. Throws NotInvariant if an expansion escapes the span.
ActionMatrices action_matrices(const LieAlgebra& alg, const std::vector<Poly>& basis,
                               const PolySpan& span) {
  const int n = alg.dim();
  const int m = static_cast<int>(basis.size());
  ActionMatrices out;
  out.a.assign(m, std::vector<Poly>(m, Poly(n)));
  out.b.assign(m, std::vector<Poly>(m, Poly(n)));

  // leading monomials (in t) of the basis, embedded in the (s,t) space
  std::vector<Mono> leading(m);
  std::vector<GQ> lead_coeff(m);
  for (int i = 0; i < m; ++i) {
    leading[i] = weighted_leading(basis[i], span);
    lead_coeff[i] = basis[i].coeff(leading[i]);
  }

  std::vector<int> t_embed(n), s_keep(2 * n, -1);
  for (int i = 0; i < n; ++i) t_embed[i] = n + i; // t-space -> second block
  for (int i = 0; i < n; ++i) s_keep[i] = i;

  std::vector<bool> tmask(2 * n, false);
  for (int i = n; i < 2 * n; ++i) tmask[i] = true;

  for (int side = 0; side < 2; ++side) {
    auto& mat = side == 0 ? out.a : out.b;
    for (int j = 0; j < m; ++j) {
      Poly r = side == 0 ? left_translate_symbolic(alg, basis[j])
                         : right_translate_symbolic(alg, basis[j]);
      // descending reduction against leading t-monomials
      for (int i = m - 1; i >= 0; --i) {
        Mono target(2 * n, 0);
        for (int v = 0; v < n; ++v) target[n + v] = leading[i][v];
        // coefficient of the t-monomial `target` as a polynomial in s
        Poly cs(2 * n);
        for (const auto& [mono, c] : r.terms()) {
          bool match = true;
          for (int v = 0; v < n; ++v)
            if (mono[n + v] != target[n + v]) { match = false; break; }
          if (match) {
            Mono sm(2 * n, 0);
            for (int v = 0; v < n; ++v) sm[v] = mono[v];
            cs.add_term(sm, c);
          }
        }
        if (cs.is_zero()) continue;
        Poly coeff_s = cs.map_vars(s_keep, n).scaled(GQ(1) / lead_coeff[i]);
        mat[j][i] = coeff_s;
        // subtract coeff_s(s) * basis[i](t) inside the (s,t) space
        Poly basis_st = basis[i].map_vars(t_embed, 2 * n);
        Poly coeff_st = cs.scaled(GQ(1) / lead_coeff[i]);
        r -= coeff_st * basis_st;
      }
      if (!r.is_zero())
        throw NotInvariant("translate of basis element " + std::to_string(j + 1) +
                           " is not in the span");
    }
  }
  return out;
}

} // namespace

TranslationModule module_closure(const LieAlgebra& a, const Poly& p) {
  if (p.is_zero()) throw OrbitkitError("module_closure of the zero polynomial");
  const int n = a.dim();
  PolySpan span(n, a.coordinate_weights());
  std::vector<Poly> queue{p};
  span.insert(p);
  // One expansion already spans V_p; the loop doubles as a consistency check
  // and terminates because V_p is finite dimensional.
  while (!queue.empty()) {
    Poly q = queue.back();
    queue.pop_back();
    for (const auto& c : translate_coefficients(a, q))
      if (span.insert(c)) queue.push_back(c);
  }
  return jh_basis(a, span.sorted_basis(), p);
}

TranslationModule jh_basis(const LieAlgebra& a, const std::vector<Poly>& vecs,
                           std::optional<Poly> generator) {
  const int n = a.dim();
  PolySpan span(n, a.coordinate_weights());
  for (const auto& v : vecs) span.insert(v);

  // Closure check: every coefficient of every two-sided translate must stay in.
  for (const auto& v : span.sorted_basis())
    for (const auto& c : translate_coefficients(a, v))
      if (!span.contains(c)) throw NotInvariant("span is not closed under translations");

  TranslationModule mod;
  mod.basis = span.sorted_basis();
  const int m = static_cast<int>(mod.basis.size());
  if (generator) {
    if (!span.contains(*generator)) throw OrbitkitError("generator not inside the span");
    // The generator sits in the top Jordan-Hoelder slot; keep it verbatim when
    // its leading monomial matches (always the case for module_closure).
    if (m > 0 && weighted_leading(*generator, span) == weighted_leading(mod.basis[m - 1], span))
      mod.basis[m - 1] = *generator;
    mod.generator = *generator;
  } else if (m > 0) {
    mod.generator = mod.basis[m - 1];
  }

  auto mats = action_matrices(a, mod.basis, span);
  mod.a = std::move(mats.a);
  mod.b = std::move(mats.b);
  return mod;
}

int g_degree(const LieAlgebra& a, const Poly& p) {
  if (p.is_zero()) throw OrbitkitError("g_degree of the zero polynomial");
  if (p.is_constant()) return 1;
  return module_closure(a, p).dim();
}

} // namespace orbitkit
