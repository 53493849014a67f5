#include "orbitkit/bch.hpp"

#include <map>
#include <mutex>

#include "orbitkit/errors.hpp"

namespace orbitkit {

namespace {

Rational factorial(int k) {
  Rational r(1);
  for (int i = 2; i <= k; ++i) r *= i;
  return r;
}

// Enumerate block sequences ((p1,q1),...,(pm,qm)), (pi,qi) != (0,0), of total
// degree k, and accumulate the Dynkin coefficient
//   (-1)^{m-1} / (m * k * prod pi! qi!)
// onto the concatenated word X^{p1} Y^{q1} ... X^{pm} Y^{qm}.
void enumerate(int degree_left, int m_so_far, const Rational& fact_prod,
               std::vector<uint8_t>& word, std::map<std::vector<uint8_t>, Rational>& acc,
               int total_degree) {
  if (degree_left == 0) {
    Rational coeff = Rational((m_so_far % 2 == 1) ? 1 : -1) /
                     (Rational(m_so_far) * Rational(total_degree) * fact_prod);
    acc[word] += coeff;
    return;
  }
  for (int p = 0; p <= degree_left; ++p) {
    for (int q = 0; q + p <= degree_left; ++q) {
      if (p + q == 0) continue;
      size_t old_size = word.size();
      word.insert(word.end(), p, uint8_t{0});
      word.insert(word.end(), q, uint8_t{1});
      enumerate(degree_left - p - q, m_so_far + 1, fact_prod * factorial(p) * factorial(q),
                word, acc, total_degree);
      word.resize(old_size);
    }
  }
}

std::vector<DynkinTerm> build_table(int cls) {
  std::map<std::vector<uint8_t>, Rational> acc;
  for (int k = 1; k <= cls; ++k) {
    std::vector<uint8_t> word;
    enumerate(k, 0, Rational(1), word, acc, k);
  }
  std::vector<DynkinTerm> table;
  for (auto& [word, coeff] : acc) {
    if (coeff == 0) continue;
    // [.,[a,a]] innermost is zero
    size_t k = word.size();
    if (k >= 2 && word[k - 1] == word[k - 2]) continue;
    table.push_back({coeff, word});
  }
  return table;
}

} // namespace

const std::vector<DynkinTerm>& dynkin_table(int cls) {
  if (cls < 1) cls = 1;
  if (cls > kMaxBchClass)
    throw ClassTooHigh("nilpotency class " + std::to_string(cls) + " exceeds the Dynkin table depth " +
                       std::to_string(kMaxBchClass));
  static std::vector<DynkinTerm> tables[kMaxBchClass + 1];
  static std::once_flag built[kMaxBchClass + 1];
  std::call_once(built[cls], [cls] { tables[cls] = build_table(cls); });
  return tables[cls];
}

QVec bch_exact(const LieAlgebra& a, const QVec& x, const QVec& y) {
  const auto& table = dynkin_table(a.nilpotency_class());
  QVec out = qvec_zero(a.dim());
  for (const auto& term : table) {
    const size_t k = term.word.size();
    QVec v = term.word[k - 1] ? y : x;
    bool dead = false;
    for (size_t i = k - 1; i-- > 0;) {
      v = a.bracket(term.word[i] ? y : x, v);
      if (qvec_is_zero(v)) { dead = true; break; }
    }
    if (dead) continue;
    for (int j = 0; j < a.dim(); ++j)
      if (v[j] != 0) out[j] += term.coeff * v[j];
  }
  return out;
}

namespace {

std::vector<Poly> poly_bracket(const LieAlgebra& a, const std::vector<Poly>& x,
                               const std::vector<Poly>& y) {
  const int n = a.dim();
  const int nv = x[0].nvars();
  std::vector<Poly> r(n, Poly(nv));
  for (int i = 0; i < n; ++i) {
    if (x[i].is_zero()) continue;
    for (int j = 0; j < n; ++j) {
      if (y[j].is_zero()) continue;
      Poly f = x[i] * y[j];
      for (int k = 0; k < n; ++k)
        if (a.c(i, j, k) != 0) r[k] += f.scaled(GQ(a.c(i, j, k)));
    }
  }
  return r;
}

bool poly_vec_zero(const std::vector<Poly>& v) {
  for (const auto& p : v)
    if (!p.is_zero()) return false;
  return true;
}

} // namespace

std::vector<Poly> bch_symbolic(const LieAlgebra& a, const std::vector<Poly>& x,
                               const std::vector<Poly>& y) {
  const auto& table = dynkin_table(a.nilpotency_class());
  const int n = a.dim();
  const int nv = x[0].nvars();
  std::vector<Poly> out(n, Poly(nv));
  for (const auto& term : table) {
    const size_t k = term.word.size();
    std::vector<Poly> v = term.word[k - 1] ? y : x;
    bool dead = false;
    for (size_t i = k - 1; i-- > 0;) {
      v = poly_bracket(a, term.word[i] ? y : x, v);
      if (poly_vec_zero(v)) { dead = true; break; }
    }
    if (dead) continue;
    for (int j = 0; j < n; ++j)
      if (!v[j].is_zero()) out[j] += v[j].scaled(GQ(term.coeff));
  }
  return out;
}

NumAlgebra NumAlgebra::from(const LieAlgebra& a) {
  NumAlgebra na;
  na.n = a.dim();
  na.cls = a.nilpotency_class();
  na.c.assign(static_cast<size_t>(na.n) * na.n * na.n, 0.0);
  for (int i = 0; i < na.n; ++i)
    for (int j = 0; j < na.n; ++j)
      for (int k = 0; k < na.n; ++k)
        na.c[(static_cast<size_t>(i) * na.n + j) * na.n + k] = a.c(i, j, k).get_d();
  // coordinate k receives bracket corrections iff some c[i][j][k] != 0
  na.shift_only.assign(na.n, true);
  for (int i = 0; i < na.n; ++i)
    for (int j = 0; j < na.n; ++j)
      for (int k = 0; k < na.n; ++k)
        if (a.c(i, j, k) != 0) na.shift_only[k] = false;
  return na;
}

void bch_numeric(const NumAlgebra& a, const double* x, const double* y, double* out) {
  const auto& table = dynkin_table(a.cls);
  const int n = a.n;
  for (int j = 0; j < n; ++j) out[j] = 0.0;
  double buf1[16], buf2[16];
  for (const auto& term : table) {
    const size_t k = term.word.size();
    const double* v = term.word[k - 1] ? y : x;
    double* cur = buf1;
    double* nxt = buf2;
    bool dead = false;
    for (size_t step = k - 1; step-- > 0;) {
      const double* u = term.word[step] ? y : x;
      bool all_zero = true;
      for (int kk = 0; kk < n; ++kk) {
        double s = 0.0;
        for (int i = 0; i < n; ++i) {
          if (u[i] == 0.0) continue;
          for (int j = 0; j < n; ++j) {
            double cc = a.cval(i, j, kk);
            if (cc != 0.0 && v[j] != 0.0) s += u[i] * v[j] * cc;
          }
        }
        nxt[kk] = s;
        if (s != 0.0) all_zero = false;
      }
      if (all_zero) { dead = true; break; }
      v = nxt;
      std::swap(cur, nxt);
    }
    if (dead) continue;
    double cf = term.coeff.get_d();
    for (int j = 0; j < n; ++j) out[j] += cf * v[j];
  }
}

} // namespace orbitkit
