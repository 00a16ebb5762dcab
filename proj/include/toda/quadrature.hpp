#pragma once

#include <functional>
#include <vector>

#include "toda/state.hpp"

namespace toda {

struct QuadratureRule {
  std::vector<double> nodes;
  std::vector<double> weights;
};

/// Gauss-Legendre rule with m nodes on [-1, 1].
QuadratureRule gauss_legendre(int m);

/// The same rule mapped to [lo, hi].
QuadratureRule gauss_legendre(int m, double lo, double hi);

/// Tensorized integration of f over [lo, hi]^dim with m nodes per axis.
double integrate_box(const std::function<double(const Vector&)>& f, int dim, double lo,
                     double hi, int m);

}  // namespace toda
