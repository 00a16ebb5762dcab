#pragma once

#include <optional>
#include <vector>

#include "toda/quantization.hpp"

namespace toda {

/// Orthonormal Hermite function h_m on the real line.
double hermite_function(int m, double x);

/// Truncated product basis phi_i(a) = prod_k h_{i_k}(log a_k): degrees
/// 0..degree-1 per axis, total dimension degree^{n-1}. Axis 0 varies fastest
/// in the flattened index.
struct BasisSpec {
  int n = 2;
  int degree = 8;

  int axes() const { return n - 1; }
  long dimension() const {
    long d = 1;
    for (int k = 0; k < axes(); ++k) d *= degree;
    return d;
  }
  std::vector<int> unflatten(long index) const;
};

double basis_function(const BasisSpec& spec, long index, const Vector& a);

Section section_from_coefficients(const BasisSpec& spec, Vector coeffs);

/// Truncated Rawnsley state at x: coefficients phi_i(x), the Riesz
/// representative of evaluation at x on the truncated span.
struct CoherentVector {
  Vector base_point;
  Vector coeffs;
};
CoherentVector coherent_vector(const BasisSpec& spec, const Vector& x);

/// Reproducing kernel K(x, y) = sum phi_i(x) phi_i(y).
double kernel(const BasisSpec& spec, const Vector& x, const Vector& y);

/// Checks that the group-moved coherent state matches the Rawnsley one:
/// both sides of  c * s1(g x)/s(g x) = (g^{-1} s1)(x)/s(x)  with c = 1 are
/// evaluated through independent code paths (point action vs section
/// pullback) for seeded sections s1 in the truncated span; returns the
/// largest relative residual. The trivializing section s defaults to the
/// constant 1 and must stay away from zero on the sample.
double group_coherent_check(const GroupElement& g, const Vector& x, const BasisSpec& spec,
                            Rng& rng, int samples = 8,
                            const std::optional<Section>& trivializing = std::nullopt);

}  // namespace toda
