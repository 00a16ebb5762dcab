#include "toda/coherent.hpp"

#include <cmath>

namespace toda {

double hermite_function(int m, double x) {
  // Orthonormal recurrence: h_m = x sqrt(2/m) h_{m-1} - sqrt((m-1)/m) h_{m-2}.
  const double h0 = std::pow(M_PI, -0.25) * std::exp(-0.5 * x * x);
  if (m == 0) return h0;
  double prev = h0;
  double cur = std::sqrt(2.0) * x * h0;
  for (int k = 2; k <= m; ++k) {
    const double next = std::sqrt(2.0 / k) * x * cur - std::sqrt((k - 1.0) / k) * prev;
    prev = cur;
    cur = next;
  }
  return cur;
}

std::vector<int> BasisSpec::unflatten(long index) const {
  if (index < 0 || index >= dimension()) throw IndexOutOfRange("basis index out of range");
  std::vector<int> multi(axes());
  for (int k = 0; k < axes(); ++k) {
    multi[k] = static_cast<int>(index % degree);
    index /= degree;
  }
  return multi;
}

double basis_function(const BasisSpec& spec, long index, const Vector& a) {
  const std::vector<int> multi = spec.unflatten(index);
  if (a.size() != spec.axes()) throw DimensionMismatch("point dimension mismatch");
  double v = 1.0;
  for (int k = 0; k < spec.axes(); ++k) v *= hermite_function(multi[k], std::log(a[k]));
  return v;
}

Section section_from_coefficients(const BasisSpec& spec, Vector coeffs) {
  if (coeffs.size() != spec.dimension()) throw DimensionMismatch("coefficient count mismatch");
  return Section(spec.n, [spec, coeffs = std::move(coeffs)](const Vector& a) -> Complex {
    // Evaluate all per-axis Hermite values once, then contract.
    const int d = spec.axes();
    Matrix h(d, spec.degree);
    for (int k = 0; k < d; ++k) {
      const double x = std::log(a[k]);
      for (int m = 0; m < spec.degree; ++m) h(k, m) = hermite_function(m, x);
    }
    double sum = 0.0;
    for (long i = 0; i < coeffs.size(); ++i) {
      double phi = 1.0;
      long rest = i;
      for (int k = 0; k < d; ++k) {
        phi *= h(k, static_cast<int>(rest % spec.degree));
        rest /= spec.degree;
      }
      sum += coeffs[i] * phi;
    }
    return sum;
  });
}

CoherentVector coherent_vector(const BasisSpec& spec, const Vector& x) {
  if (x.size() != spec.axes()) throw DimensionMismatch("point dimension mismatch");
  for (Eigen::Index i = 0; i < x.size(); ++i)
    if (!(x[i] > 0.0)) throw NonPositiveOffDiagonal("base point must have positive entries");
  CoherentVector cv;
  cv.base_point = x;
  cv.coeffs.resize(spec.dimension());
  for (long i = 0; i < spec.dimension(); ++i) cv.coeffs[i] = basis_function(spec, i, x);
  return cv;
}

double kernel(const BasisSpec& spec, const Vector& x, const Vector& y) {
  double sum = 0.0;
  for (long i = 0; i < spec.dimension(); ++i)
    sum += basis_function(spec, i, x) * basis_function(spec, i, y);
  return sum;
}

double group_coherent_check(const GroupElement& g, const Vector& x, const BasisSpec& spec,
                            Rng& rng, int samples,
                            const std::optional<Section>& trivializing) {
  if (g.n() != spec.n) throw DimensionMismatch("group element and basis size mismatch");
  const int d = spec.axes();
  const Section s = trivializing.value_or(
      Section(spec.n, [](const Vector&) -> Complex { return 1.0; }));

  // Forward point action a -> (L_ii / L_{i+1,i+1}) a.
  Vector gx(d);
  for (int i = 0; i < d; ++i) gx[i] = g(i, i) / g(i + 1, i + 1) * x[i];

  const Complex s_at_gx = s(gx);
  const Complex s_at_x = s(x);
  if (std::abs(s_at_gx) < 1e-12 || std::abs(s_at_x) < 1e-12)
    throw TrivializationVanishes("trivializing section vanishes on the sample");

  const GroupElement g_inv = g.inverse();
  double worst = 0.0;
  for (int t = 0; t < samples; ++t) {
    Vector coeffs(spec.dimension());
    for (long i = 0; i < coeffs.size(); ++i) coeffs[i] = rng.uniform(-1.0, 1.0);
    const Section s1 = section_from_coefficients(spec, coeffs);
    const Complex lhs = s1(gx) / s_at_gx;                       // c = 1
    const Complex rhs = act_on_section(g_inv, s1)(x) / s_at_x;  // induced action route
    const double rel = std::abs(lhs - rhs) / std::max(1.0, std::abs(lhs));
    worst = std::max(worst, rel);
  }
  return worst;
}

}  // namespace toda
