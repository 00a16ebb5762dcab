#include "toda/group.hpp"

#include <cmath>

namespace toda {

GroupElement::GroupElement(Matrix L) {
  if (L.rows() != L.cols() || L.rows() < 2) throw DimensionMismatch("square matrix, n >= 2");
  const int n = static_cast<int>(L.rows());
  double logdet = 0.0;
  for (int i = 0; i < n; ++i) {
    for (int j = i + 1; j < n; ++j)
      if (L(i, j) != 0.0) throw SingularGroupElement("entries above the diagonal must be zero");
    if (!(L(i, i) > 0.0)) throw SingularGroupElement("diagonal entries must be positive");
    logdet += std::log(L(i, i));
  }
  if (std::abs(logdet) > 1e-12 * n)
    throw SingularGroupElement("determinant must equal one");
  L_ = std::move(L);
}

GroupElement GroupElement::identity(int n) { return GroupElement(Matrix::Identity(n, n)); }

GroupElement GroupElement::random(int n, Rng& rng, double diag_lo, double diag_hi) {
  Matrix L = Matrix::Zero(n, n);
  for (int i = 0; i < n; ++i) {
    for (int j = 0; j < i; ++j) L(i, j) = rng.uniform(-2.0, 2.0);
    L(i, i) = rng.uniform(diag_lo, diag_hi);
  }
  // Rescale the diagonal to determinant one (geometric mean normalization).
  double logdet = 0.0;
  for (int i = 0; i < n; ++i) logdet += std::log(L(i, i));
  const double scale = std::exp(-logdet / n);
  for (int i = 0; i < n; ++i) L(i, i) *= scale;
  return GroupElement(std::move(L));
}

GroupElement GroupElement::inverse() const {
  const int m = n();
  Matrix inv = L_.triangularView<Eigen::Lower>().solve(Matrix::Identity(m, m));
  // The solve leaves exact zeros above the diagonal, but make sure the
  // diagonal stays positive enough to re-validate.
  return GroupElement(std::move(inv));
}

GroupElement GroupElement::operator*(const GroupElement& rhs) const {
  Matrix prod = L_ * rhs.matrix();
  prod.triangularView<Eigen::StrictlyUpper>().setZero();
  return GroupElement(std::move(prod));
}

LieAlgebraElement::LieAlgebraElement(Matrix l) {
  if (l.rows() != l.cols() || l.rows() < 2) throw DimensionMismatch("square matrix, n >= 2");
  const int n = static_cast<int>(l.rows());
  for (int i = 0; i < n; ++i)
    for (int j = i + 1; j < n; ++j)
      if (l(i, j) != 0.0) throw DimensionMismatch("entries above the diagonal must be zero");
  if (std::abs(l.trace()) > 1e-12 * std::max(1.0, l.cwiseAbs().maxCoeff()))
    throw DimensionMismatch("trace must vanish");
  l_ = std::move(l);
}

bool LieAlgebraElement::strictly_lower(double tol) const {
  for (int i = 0; i < n(); ++i)
    if (std::abs(l_(i, i)) > tol) return false;
  return true;
}

std::vector<LieAlgebraElement> strictly_lower_basis(int n) {
  std::vector<LieAlgebraElement> basis;
  for (int i = 1; i < n; ++i)
    for (int j = 0; j < i; ++j) {
      Matrix e = Matrix::Zero(n, n);
      e(i, j) = 1.0;
      basis.emplace_back(std::move(e));
    }
  return basis;
}

std::vector<LieAlgebraElement> algebra_basis(int n) {
  std::vector<LieAlgebraElement> basis = strictly_lower_basis(n);
  for (int k = 0; k + 1 < n; ++k) {
    Matrix d = Matrix::Zero(n, n);
    d(k, k) = 1.0;
    d(k + 1, k + 1) = -1.0;
    basis.emplace_back(std::move(d));
  }
  return basis;
}

}  // namespace toda
