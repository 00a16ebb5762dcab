#include "toda/finrep.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>

#include "toda/quadrature.hpp"

namespace toda {

namespace {

void enumerate(int axes, int degree, std::vector<int>& cur, int used,
               std::vector<std::vector<int>>& out, bool homogeneous_only) {
  if (static_cast<int>(cur.size()) == axes) {
    if (!homogeneous_only || used == degree) out.push_back(cur);
    return;
  }
  for (int e = 0; e + used <= degree; ++e) {
    cur.push_back(e);
    enumerate(axes, degree, cur, used + e, out, homogeneous_only);
    cur.pop_back();
  }
}

}  // namespace

FinRepSpace::FinRepSpace(int n, int degree, bool homogeneous_only) : n_(n), degree_(degree) {
  if (n < 2 || degree < 0) throw DimensionMismatch("n >= 2 and degree >= 0 required");
  std::vector<int> cur;
  enumerate(n - 1, degree, cur, 0, exponents_, homogeneous_only);
  std::sort(exponents_.begin(), exponents_.end(), [](const auto& a, const auto& b) {
    const int ta = std::accumulate(a.begin(), a.end(), 0);
    const int tb = std::accumulate(b.begin(), b.end(), 0);
    if (ta != tb) return ta < tb;
    return a < b;
  });
}

double FinRepSpace::monomial(long index, const Vector& a) const {
  if (index < 0 || index >= dimension()) throw IndexOutOfRange("monomial index out of range");
  if (a.size() != n_ - 1) throw DimensionMismatch("point dimension mismatch");
  double v = 1.0;
  for (int k = 0; k + 1 < n_; ++k) v *= std::pow(a[k], 1 + exponents_[index][k]);
  return v;
}

RepMatrix rep_matrix(const GroupElement& g, const FinRepSpace& space) {
  if (g.n() != space.n()) throw DimensionMismatch("group element and space size mismatch");
  const int d = space.n() - 1;
  Vector r(d);
  for (int i = 0; i < d; ++i) r[i] = g(i + 1, i + 1) / g(i, i);
  RepMatrix rho;
  rho.diagonal.resize(space.dimension());
  for (long j = 0; j < space.dimension(); ++j) {
    double v = 1.0;
    for (int i = 0; i < d; ++i) v *= std::pow(r[i], 1 + space.exponents()[j][i]);
    rho.diagonal[j] = v;
  }
  return rho;
}

double homomorphism_check(const GroupElement& g1, const GroupElement& g2,
                          const FinRepSpace& space) {
  const RepMatrix lhs = rep_matrix(g1 * g2, space);
  const RepMatrix r1 = rep_matrix(g1, space);
  const RepMatrix r2 = rep_matrix(g2, space);
  return (lhs.diagonal - r1.diagonal.cwiseProduct(r2.diagonal)).cwiseAbs().maxCoeff();
}

double gaussian_monomial_norm(const FinRepSpace& space, long index) {
  const int d = space.n() - 1;
  // e^{-a^2} a^{2(1+alpha)} is negligible past a ~ 9 for the degrees here.
  const double norm2 = integrate_box(
      [&](const Vector& a) {
        const double s = space.monomial(index, a);
        return s * s * std::exp(-a.squaredNorm());
      },
      d, 0.0, 9.0, 80);
  return std::sqrt(norm2);
}

NonUnitarityWitness nonunitarity_witness(const FinRepSpace& space) {
  const int n = space.n();
  for (double d : {2.0, 4.0}) {
    Matrix L = Matrix::Identity(n, n);
    L(0, 0) = d;
    L(1, 1) = 1.0 / d;
    GroupElement g(L);
    const RepMatrix rho = rep_matrix(g, space);
    for (long j = 0; j < space.dimension(); ++j) {
      const double base = gaussian_monomial_norm(space, j);
      // rho(g) scales the monomial, so the moved norm is quadrature-evaluated
      // on the scaled section.
      const int axes = n - 1;
      Vector scale(axes);
      for (int i = 0; i < axes; ++i) scale[i] = g(i + 1, i + 1) / g(i, i);
      const double moved = std::sqrt(integrate_box(
          [&](const Vector& a) {
            const double s = space.monomial(j, scale.cwiseProduct(a));
            return s * s * std::exp(-a.squaredNorm());
          },
          axes, 0.0, 9.0, 80));
      const double ratio = moved / base;
      if (std::abs(ratio - 1.0) > 0.1) return NonUnitarityWitness{g, j, ratio};
    }
  }
  throw WitnessNotFound("no diagonal witness found; the representation should not be unitary");
}

}  // namespace toda
