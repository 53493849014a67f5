#include "orbitkit/uea.hpp"

#include <algorithm>
#include <sstream>

#include "orbitkit/errors.hpp"

namespace orbitkit {

UEAElement UEAElement::one(int n) {
  UEAElement e(n);
  e.terms_[Mono(n, 0)] = GQ(1);
  return e;
}

UEAElement UEAElement::generator(int n, int index) {
  UEAElement e(n);
  Mono m(n, 0);
  m[index] = 1;
  e.terms_[m] = GQ(1);
  return e;
}

UEAElement UEAElement::scalar(int n, const GQ& c) {
  UEAElement e(n);
  if (!c.is_zero()) e.terms_[Mono(n, 0)] = c;
  return e;
}

void UEAElement::add_term(const Mono& m, const GQ& c) {
  if (c.is_zero()) return;
  auto it = terms_.find(m);
  if (it == terms_.end()) {
    terms_[m] = c;
  } else {
    it->second += c;
    if (it->second.is_zero()) terms_.erase(it);
  }
}

UEAElement UEAElement::operator-() const {
  UEAElement r(n_);
  for (const auto& [m, c] : terms_) r.terms_[m] = -c;
  return r;
}

UEAElement& UEAElement::operator+=(const UEAElement& o) {
  for (const auto& [m, c] : o.terms_) add_term(m, c);
  return *this;
}

UEAElement& UEAElement::operator-=(const UEAElement& o) {
  for (const auto& [m, c] : o.terms_) add_term(m, -c);
  return *this;
}

UEAElement UEAElement::scaled(const GQ& c) const {
  UEAElement r(n_);
  if (c.is_zero()) return r;
  for (const auto& [m, k] : terms_) r.terms_[m] = k * c;
  return r;
}

Poly UEAElement::abelianization() const {
  Poly p(n_);
  for (const auto& [m, c] : terms_) p.add_term(m, c);
  return p;
}

std::string UEAElement::str(const std::vector<std::string>& names) const {
  if (terms_.empty()) return "0";
  std::ostringstream out;
  bool first = true;
  for (auto it = terms_.rbegin(); it != terms_.rend(); ++it) {
    const auto& [m, c] = *it;
    std::string cs = c.str();
    bool negated = false;
    if (c.is_real() && c.re < 0) {
      negated = true;
      cs = (-c).str();
    }
    if (first) {
      if (negated) out << "-";
      first = false;
    } else {
      out << (negated ? " - " : " + ");
    }
    bool has_vars = mono_total_degree(m) > 0;
    if (cs != "1" || !has_vars) {
      if (c.is_real() && c.im == 0)
        out << cs;
      else
        out << "(" << cs << ")";
      if (has_vars) out << " ";
    }
    bool first_var = true;
    for (int i = 0; i < n_; ++i) {
      if (m[i] == 0) continue;
      if (!first_var) out << " ";
      first_var = false;
      out << names[i];
      if (m[i] > 1) out << "^" << m[i];
    }
  }
  return out.str();
}

namespace {

// Multiply a PBW-normal element by a single generator on the right.
UEAElement mul_generator(const LieAlgebra& alg, const UEAElement& e, int gen) {
  const int n = e.gens();
  UEAElement out(n);
  for (const auto& [m, c] : e.terms()) {
    // word m * X_gen: if gen is >= every index in m, just append
    int max_idx = -1;
    for (int i = n - 1; i >= 0; --i)
      if (m[i] > 0) { max_idx = i; break; }
    if (max_idx <= gen) {
      Mono mm = m;
      mm[gen] += 1;
      out.add_term(mm, c);
      continue;
    }
    // m = m' * X_a with a = max_idx > gen:
    // m * X_gen = (m' * X_gen) * X_a + m' * [X_a, X_gen]
    Mono mp = m;
    mp[max_idx] -= 1;
    UEAElement prefix(n);
    prefix.add_term(mp, c);
    UEAElement swapped = mul_generator(alg, mul_generator(alg, prefix, gen), max_idx);
    out += swapped;
    for (int k = 0; k < n; ++k) {
      const Rational& ck = alg.c(max_idx, gen, k);
      if (ck != 0) out += mul_generator(alg, prefix, k).scaled(GQ(ck));
    }
  }
  return out;
}

} // namespace

UEAElement uea_product(const LieAlgebra& alg, const UEAElement& a, const UEAElement& b) {
  const int n = a.gens();
  UEAElement out(n);
  for (const auto& [mb, cb] : b.terms()) {
    UEAElement acc = a.scaled(cb);
    for (int i = 0; i < n; ++i)
      for (int e = 0; e < mb[i]; ++e) acc = mul_generator(alg, acc, i);
    out += acc;
  }
  return out;
}

UEAElement uea_word(const LieAlgebra& alg, const std::vector<int>& word) {
  UEAElement e = UEAElement::one(alg.dim());
  for (int g : word) e = mul_generator(alg, e, g);
  return e;
}

UEAElement symmetrize(const LieAlgebra& alg, const Poly& q, int max_degree) {
  const int n = alg.dim();
  UEAElement out(n);
  for (const auto& [m, c] : q.terms()) {
    int k = mono_total_degree(m);
    if (k > max_degree)
      throw DegreeTooHigh("symmetrize: monomial degree " + std::to_string(k) + " exceeds " +
                          std::to_string(max_degree));
    if (k == 0) {
      out += UEAElement::scalar(n, c);
      continue;
    }
    std::vector<int> letters;
    for (int i = 0; i < n; ++i) letters.insert(letters.end(), m[i], i);
    // distinct permutations, each with weight (prod m_i!) / k!
    Rational weight(1);
    for (int i = 0; i < n; ++i)
      for (int e = 2; e <= m[i]; ++e) weight *= e;
    for (int e = 2; e <= k; ++e) weight /= e;
    std::sort(letters.begin(), letters.end());
    UEAElement sym(n);
    do {
      sym += uea_word(alg, letters);
    } while (std::next_permutation(letters.begin(), letters.end()));
    out += sym.scaled(c * GQ(weight));
  }
  return out;
}

} // namespace orbitkit
