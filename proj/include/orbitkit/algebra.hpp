#ifndef ORBITKIT_ALGEBRA_HPP
#define ORBITKIT_ALGEBRA_HPP

#include <string>
#include <vector>

#include "orbitkit/linalg.hpp"

namespace orbitkit {

// Nilpotent Lie algebra over Q given by structure constants
// c[i][j][k] = coefficient of X_k in [X_i, X_j] (0-based indices).
class LieAlgebra {
public:
  LieAlgebra() : n_(0), nilpotency_class_(0) {}

  // Validates antisymmetry, Jacobi and nilpotency; computes the class.
  static LieAlgebra validate(std::string name, std::vector<std::string> basis_labels,
                             std::vector<std::vector<QVec>> c);

  int dim() const { return n_; }
  int nilpotency_class() const { return nilpotency_class_; }
  const std::string& name() const { return name_; }
  const std::vector<std::string>& basis_labels() const { return basis_labels_; }
  const Rational& c(int i, int j, int k) const { return c_[i][j][k]; }

  bool is_abelian() const { return nilpotency_class_ <= 1; }

  // [X, Y] for coordinate vectors.
  QVec bracket(const QVec& x, const QVec& y) const;

  // Matrix of ad(X): (ad X)Y = [X, Y].
  QMat ad_matrix(const QVec& x) const;

  // C^1 = g, C^{k+1} = [g, C^k], down to {0}. Includes both endpoints.
  std::vector<Subspace> lower_central_series() const;

  // LCS depth of each basis vector of the ambient space is not well defined;
  // weight(j) = max{k : X_j in C^k} for the *current* basis. Used to grade
  // polynomial translation modules.
  std::vector<int> coordinate_weights() const;

  // Structure constants rewritten in a new basis. rows of basis_cols are the
  // new basis vectors expressed over the current basis.
  LieAlgebra change_basis(const std::vector<QVec>& new_basis,
                          std::vector<std::string> new_labels) const;

private:
  std::string name_;
  int n_;
  int nilpotency_class_;
  std::vector<std::string> basis_labels_;
  std::vector<std::vector<QVec>> c_; // n x n x n
};

// Jordan-Hoelder flag g_0 < g_1 < ... < g_n with one-dimensional ideal steps.
// adapted_basis[k] is X_{k+1} expressed over the input basis.
struct Flag {
  std::vector<QVec> adapted_basis;
  std::vector<Subspace> subspaces; // g_0 .. g_n

  bool is_identity() const;
};

// Refines the lower central series, completing each quotient by input-basis
// vectors in input order.
Flag jordan_holder_flag(const LieAlgebra& a);

// The algebra rewritten in the adapted basis of its Jordan-Hoelder flag.
// Labels are kept when the flag is the identity permutation, else renamed X1..Xn.
LieAlgebra adapted_form(const LieAlgebra& a, const Flag& flag);

} // namespace orbitkit

#endif
