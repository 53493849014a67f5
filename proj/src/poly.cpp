#include "orbitkit/poly.hpp"

#include <algorithm>
#include <sstream>

#include "orbitkit/errors.hpp"

namespace orbitkit {

bool GrlexLess::operator()(const Mono& a, const Mono& b) const {
  int da = mono_total_degree(a), db = mono_total_degree(b);
  if (da != db) return da < db;
  // within a degree: lex, variable 0 most significant
  for (size_t i = 0; i < a.size() && i < b.size(); ++i)
    if (a[i] != b[i]) return a[i] < b[i];
  return a.size() < b.size();
}

int mono_total_degree(const Mono& m) {
  int d = 0;
  for (int e : m) d += e;
  return d;
}

Poly Poly::constant(int nvars, const GQ& c) {
  Poly p(nvars);
  if (!c.is_zero()) p.terms_[Mono(nvars, 0)] = c;
  return p;
}

Poly Poly::variable(int nvars, int index) {
  Poly p(nvars);
  Mono m(nvars, 0);
  m[index] = 1;
  p.terms_[m] = GQ(1);
  return p;
}

bool Poly::is_constant() const {
  return terms_.empty() || (terms_.size() == 1 && mono_total_degree(terms_.begin()->first) == 0);
}

GQ Poly::constant_term() const {
  auto it = terms_.find(Mono(nvars_, 0));
  return it == terms_.end() ? GQ() : it->second;
}

int Poly::total_degree() const {
  if (terms_.empty()) return -1;
  return mono_total_degree(terms_.rbegin()->first);
}

int Poly::degree_in(int var) const {
  int d = 0;
  for (const auto& [m, c] : terms_) d = std::max(d, m[var]);
  return terms_.empty() ? -1 : d;
}

int Poly::weighted_degree(const std::vector<int>& weights) const {
  if (terms_.empty()) return -1;
  int best = 0;
  for (const auto& [m, c] : terms_) {
    int w = 0;
    for (size_t i = 0; i < m.size(); ++i) w += m[i] * weights[i];
    best = std::max(best, w);
  }
  return best;
}

GQ Poly::coeff(const Mono& m) const {
  auto it = terms_.find(m);
  return it == terms_.end() ? GQ() : it->second;
}

const Mono& Poly::leading_monomial() const {
  if (terms_.empty()) throw OrbitkitError("leading_monomial of zero polynomial");
  return terms_.rbegin()->first;
}

const GQ& Poly::leading_coeff() const {
  if (terms_.empty()) throw OrbitkitError("leading_coeff of zero polynomial");
  return terms_.rbegin()->second;
}

void Poly::add_term(const Mono& m, const GQ& c) {
  if (c.is_zero()) return;
  auto it = terms_.find(m);
  if (it == terms_.end()) {
    terms_[m] = c;
  } else {
    it->second += c;
    if (it->second.is_zero()) terms_.erase(it);
  }
}

Poly Poly::operator-() const {
  Poly r(nvars_);
  for (const auto& [m, c] : terms_) r.terms_[m] = -c;
  return r;
}

Poly& Poly::operator+=(const Poly& o) {
  for (const auto& [m, c] : o.terms_) add_term(m, c);
  return *this;
}

Poly& Poly::operator-=(const Poly& o) {
  for (const auto& [m, c] : o.terms_) add_term(m, -c);
  return *this;
}

Poly operator*(const Poly& a, const Poly& b) {
  Poly r(a.nvars_);
  for (const auto& [ma, ca] : a.terms_)
    for (const auto& [mb, cb] : b.terms_) {
      Mono m(a.nvars_);
      for (int i = 0; i < a.nvars_; ++i) m[i] = ma[i] + mb[i];
      r.add_term(m, ca * cb);
    }
  return r;
}

Poly Poly::scaled(const GQ& c) const {
  Poly r(nvars_);
  if (c.is_zero()) return r;
  for (const auto& [m, k] : terms_) r.terms_[m] = k * c;
  return r;
}

Poly Poly::pow(int k) const {
  Poly r = Poly::constant(nvars_, GQ(1));
  for (int i = 0; i < k; ++i) r = r * (*this);
  return r;
}

Poly Poly::derivative(int var) const {
  Poly r(nvars_);
  for (const auto& [m, c] : terms_) {
    if (m[var] == 0) continue;
    Mono d = m;
    d[var] -= 1;
    r.add_term(d, c * GQ(Rational(m[var])));
  }
  return r;
}

Poly Poly::substitute(const std::vector<Poly>& images) const {
  if (images.size() != static_cast<size_t>(nvars_))
    throw OrbitkitError("substitute: arity mismatch");
  int out_vars = images.empty() ? 0 : images[0].nvars();
  Poly r(out_vars);
  for (const auto& [m, c] : terms_) {
    Poly t = Poly::constant(out_vars, c);
    for (int i = 0; i < nvars_; ++i)
      if (m[i] > 0) t = t * images[i].pow(m[i]);
    r += t;
  }
  return r;
}

Poly Poly::specialize(const std::vector<std::pair<int, GQ>>& fixed) const {
  Poly r(nvars_);
  for (const auto& [m, c] : terms_) {
    GQ k = c;
    Mono mm = m;
    for (const auto& [var, val] : fixed) {
      for (int e = 0; e < m[var]; ++e) k *= val;
      mm[var] = 0;
    }
    r.add_term(mm, k);
  }
  return r;
}

GQ Poly::eval(const std::vector<GQ>& values) const {
  GQ acc;
  for (const auto& [m, c] : terms_) {
    GQ t = c;
    for (int i = 0; i < nvars_; ++i)
      for (int e = 0; e < m[i]; ++e) t *= values[i];
    acc += t;
  }
  return acc;
}

std::complex<double> Poly::eval_complex(const std::vector<double>& values) const {
  std::complex<double> acc(0.0, 0.0);
  for (const auto& [m, c] : terms_) {
    double t = 1.0;
    for (int i = 0; i < nvars_; ++i)
      for (int e = 0; e < m[i]; ++e) t *= values[i];
    acc += c.to_complex() * t;
  }
  return acc;
}

std::vector<std::pair<Mono, Poly>> Poly::collect(const std::vector<bool>& mask) const {
  std::map<Mono, Poly, GrlexLess> groups;
  for (const auto& [m, c] : terms_) {
    Mono outer(nvars_, 0), inner(nvars_, 0);
    for (int i = 0; i < nvars_; ++i)
      (mask[i] ? outer[i] : inner[i]) = m[i];
    auto it = groups.find(outer);
    if (it == groups.end()) it = groups.emplace(outer, Poly(nvars_)).first;
    it->second.add_term(inner, c);
  }
  return {groups.begin(), groups.end()};
}

Poly Poly::map_vars(const std::vector<int>& var_map, int new_nvars) const {
  Poly r(new_nvars);
  for (const auto& [m, c] : terms_) {
    Mono mm(new_nvars, 0);
    for (int i = 0; i < nvars_; ++i) {
      if (m[i] == 0) continue;
      if (var_map[i] < 0) throw OrbitkitError("map_vars: dropped variable occurs");
      mm[var_map[i]] += m[i];
    }
    r.add_term(mm, c);
  }
  return r;
}

std::string Poly::str(const std::vector<std::string>& names) const {
  if (terms_.empty()) return "0";
  std::ostringstream out;
  bool first = true;
  // leading term first
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
    bool unit = (cs == "1");
    if (!unit || !has_vars) {
      if (c.is_real())
        out << cs;
      else
        out << "(" << cs << ")";
      if (has_vars) out << " ";
    }
    bool first_var = true;
    for (int i = 0; i < nvars_; ++i) {
      if (m[i] == 0) continue;
      if (!first_var) out << " ";
      first_var = false;
      out << names[i];
      if (m[i] > 1) out << "^" << m[i];
    }
  }
  return out.str();
}

Poly poly_exact_div(const Poly& a, const Poly& b) {
  if (b.is_zero()) throw OrbitkitError("poly_exact_div: division by zero");
  Poly rem = a;
  Poly quot(a.nvars());
  const Mono& lb = b.leading_monomial();
  const GQ& cb = b.leading_coeff();
  while (!rem.is_zero()) {
    const Mono& lr = rem.leading_monomial();
    Mono q(lr.size());
    for (size_t i = 0; i < lr.size(); ++i) {
      q[i] = lr[i] - lb[i];
      if (q[i] < 0) throw OrbitkitError("poly_exact_div: not divisible");
    }
    GQ qc = rem.leading_coeff() / cb;
    Poly qt(a.nvars());
    qt.add_term(q, qc);
    quot += qt;
    rem -= qt * b;
  }
  return quot;
}

NumPoly NumPoly::from(const Poly& p) {
  NumPoly np;
  np.nvars = p.nvars();
  for (const auto& [m, c] : p.terms()) np.terms.emplace_back(c.to_complex(), m);
  return np;
}

std::complex<double> NumPoly::eval(const double* values) const {
  std::complex<double> acc(0.0, 0.0);
  for (const auto& [c, m] : terms) {
    double t = 1.0;
    for (int i = 0; i < nvars; ++i)
      for (int e = 0; e < m[i]; ++e) t *= values[i];
    acc += c * t;
  }
  return acc;
}

double NumPoly::eval_real(const double* values) const {
  double acc = 0.0;
  for (const auto& [c, m] : terms) {
    double t = 1.0;
    for (int i = 0; i < nvars; ++i)
      for (int e = 0; e < m[i]; ++e) t *= values[i];
    acc += c.real() * t;
  }
  return acc;
}

std::vector<std::string> default_names(const std::string& stem, int n) {
  std::vector<std::string> names;
  names.reserve(n);
  for (int i = 0; i < n; ++i) names.push_back(stem + std::to_string(i + 1));
  return names;
}

} // namespace orbitkit
