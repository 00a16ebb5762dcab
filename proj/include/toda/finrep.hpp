#pragma once

#include <vector>

#include "toda/group.hpp"

namespace toda {

/// Polynomial section space span{(a_1...a_{n-1}) a^alpha : |alpha| <= m} with
/// graded-lexicographic ordering. homogeneous_only keeps |alpha| == m.
class FinRepSpace {
 public:
  FinRepSpace(int n, int degree, bool homogeneous_only = false);

  int n() const { return n_; }
  int degree() const { return degree_; }
  long dimension() const { return static_cast<long>(exponents_.size()); }
  const std::vector<std::vector<int>>& exponents() const { return exponents_; }

  /// Monomial value (a_1...a_{n-1}) * a^alpha at a point.
  double monomial(long index, const Vector& a) const;

 private:
  int n_;
  int degree_;
  std::vector<std::vector<int>> exponents_;
};

/// Representation matrix of g on the space: diagonal, with entries
/// prod_i (L_{i+1,i+1}/L_ii)^{1 + alpha_i}.
struct RepMatrix {
  Vector diagonal;

  Matrix dense() const {
    Matrix m = Matrix::Zero(diagonal.size(), diagonal.size());
    m.diagonal() = diagonal;
    return m;
  }
  double det() const { return diagonal.prod(); }
};

RepMatrix rep_matrix(const GroupElement& g, const FinRepSpace& space);

/// Max-entry residual of rho(g1 g2) - rho(g1) rho(g2).
double homomorphism_check(const GroupElement& g1, const GroupElement& g2,
                          const FinRepSpace& space);

/// L^2 norm of basis monomial `index` under the e^{-sum a_i^2} prod da_i
/// weight on (0, inf)^{n-1}, by Gauss-Legendre quadrature.
double gaussian_monomial_norm(const FinRepSpace& space, long index);

struct NonUnitarityWitness {
  GroupElement g;
  long basis_index;
  double ratio;  // ||rho(g) s|| / ||s||, quadrature-evaluated
};

/// Finds a diagonal g (d in {2, 4} on the leading axis) and a basis section
/// whose norm ratio deviates from 1 by more than 0.1, demonstrating that the
/// Gaussian-normalized inner product breaks unitarity.
NonUnitarityWitness nonunitarity_witness(const FinRepSpace& space);

}  // namespace toda
