#pragma once

#include <vector>

#include "toda/rng.hpp"
#include "toda/state.hpp"

namespace toda {

/// Lower-triangular real matrix with unit determinant and strictly positive
/// diagonal entries.
class GroupElement {
 public:
  explicit GroupElement(Matrix L);

  static GroupElement identity(int n);

  /// Lower-triangular with entries in [-2, 2]; diagonals drawn in
  /// [diag_lo, diag_hi] and rescaled to determinant one.
  static GroupElement random(int n, Rng& rng, double diag_lo = 0.3, double diag_hi = 2.0);

  int n() const { return static_cast<int>(L_.rows()); }
  const Matrix& matrix() const { return L_; }
  double operator()(int i, int j) const { return L_(i, j); }

  GroupElement inverse() const;
  GroupElement operator*(const GroupElement& rhs) const;

 private:
  Matrix L_;
};

/// Lower-triangular real matrix with zero trace.
class LieAlgebraElement {
 public:
  explicit LieAlgebraElement(Matrix l);

  int n() const { return static_cast<int>(l_.rows()); }
  const Matrix& matrix() const { return l_; }

  bool strictly_lower(double tol = 0.0) const;

 private:
  Matrix l_;
};

/// Basis of the trace-zero lower-triangular algebra: strictly lower E_ij
/// followed by the traceless diagonals E_kk - E_{k+1,k+1}.
std::vector<LieAlgebraElement> algebra_basis(int n);

/// Strictly lower part only (the polarization subalgebra).
std::vector<LieAlgebraElement> strictly_lower_basis(int n);

}  // namespace toda
