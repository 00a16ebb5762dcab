#include "toda/quadrature.hpp"

#include <cmath>

namespace toda {

QuadratureRule gauss_legendre(int m) {
  QuadratureRule rule;
  rule.nodes.resize(m);
  rule.weights.resize(m);
  // Newton on P_m with the Chebyshev-angle initial guess.
  for (int i = 0; i < (m + 1) / 2; ++i) {
    double x = std::cos(M_PI * (i + 0.75) / (m + 0.5));
    double pp = 0.0;
    for (int iter = 0; iter < 100; ++iter) {
      double p0 = 1.0, p1 = x;
      for (int k = 2; k <= m; ++k) {
        const double p2 = ((2.0 * k - 1.0) * x * p1 - (k - 1.0) * p0) / k;
        p0 = p1;
        p1 = p2;
      }
      pp = m * (x * p1 - p0) / (x * x - 1.0);
      const double dx = p1 / pp;
      x -= dx;
      if (std::abs(dx) < 1e-15) break;
    }
    rule.nodes[i] = -x;
    rule.nodes[m - 1 - i] = x;
    const double w = 2.0 / ((1.0 - x * x) * pp * pp);
    rule.weights[i] = w;
    rule.weights[m - 1 - i] = w;
  }
  return rule;
}

QuadratureRule gauss_legendre(int m, double lo, double hi) {
  QuadratureRule rule = gauss_legendre(m);
  const double mid = 0.5 * (lo + hi), half = 0.5 * (hi - lo);
  for (int i = 0; i < m; ++i) {
    rule.nodes[i] = mid + half * rule.nodes[i];
    rule.weights[i] *= half;
  }
  return rule;
}

double integrate_box(const std::function<double(const Vector&)>& f, int dim, double lo,
                     double hi, int m) {
  const QuadratureRule rule = gauss_legendre(m, lo, hi);
  Vector x(dim);
  std::vector<int> idx(dim, 0);
  double sum = 0.0;
  while (true) {
    double w = 1.0;
    for (int k = 0; k < dim; ++k) {
      x[k] = rule.nodes[idx[k]];
      w *= rule.weights[idx[k]];
    }
    sum += w * f(x);
    int k = 0;
    for (; k < dim; ++k) {
      if (++idx[k] < m) break;
      idx[k] = 0;
    }
    if (k == dim) break;
  }
  return sum;
}

}  // namespace toda
