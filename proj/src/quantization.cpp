#include "toda/quantization.hpp"

#include <cmath>

#include "toda/quadrature.hpp"

namespace toda {

namespace {

Complex quad_inner(const Section& s1, const Section& s2, int dim, double X, int m) {
  const QuadratureRule rule = gauss_legendre(m, -X, X);
  Vector a(dim);
  std::vector<int> idx(dim, 0);
  Complex sum = 0.0;
  while (true) {
    double w = 1.0;
    for (int k = 0; k < dim; ++k) {
      a[k] = std::exp(rule.nodes[idx[k]]);
      w *= rule.weights[idx[k]];
    }
    sum += w * std::conj(s1(a)) * s2(a);
    int k = 0;
    for (; k < dim; ++k) {
      if (++idx[k] < m) break;
      idx[k] = 0;
    }
    if (k == dim) break;
  }
  return sum;
}

}  // namespace

double WeightedMeasure::gaussian_factor() const {
  return std::pow(M_PI, 0.5 * (n - 1));
}

Complex weighted_inner_product(const Section& s1, const Section& s2, const WeightedMeasure& m) {
  if (s1.n() != m.n || s2.n() != m.n) throw DimensionMismatch("section/measure size mismatch");
  const int dim = m.n - 1;
  const Complex coarse = quad_inner(s1, s2, dim, m.log_box, m.nodes);
  const Complex fine = quad_inner(s1, s2, dim, m.log_box, 2 * m.nodes);
  if (std::abs(fine - coarse) > 1e-8 * std::max(1.0, std::abs(fine)))
    throw NonConvergentQuadrature("inner product did not settle under node doubling");
  return fine;
}

Complex weighted_inner_product_raw(const Section& s1, const Section& s2,
                                   const WeightedMeasure& m) {
  if (s1.n() != m.n || s2.n() != m.n) throw DimensionMismatch("section/measure size mismatch");
  return quad_inner(s1, s2, m.n - 1, m.log_box, m.nodes);
}

Section act_on_section(const GroupElement& g, const Section& s) {
  if (g.n() != s.n()) throw DimensionMismatch("group element and section size mismatch");
  const int d = g.n() - 1;
  Vector scale(d);
  for (int i = 0; i < d; ++i) scale[i] = g(i + 1, i + 1) / g(i, i);
  return Section(s.n(), [scale, s](const Vector& a) {
    return s(scale.cwiseProduct(a));
  });
}

Covector symplectic_potential(const TodaPhasePoint& s) {
  const int d = s.n() - 1;
  const CanonicalPoint c = to_canonical(s);
  Covector th;
  th.theta_a.resize(d);
  th.theta_p = Vector::Zero(d);
  for (int i = 0; i < d; ++i) th.theta_a[i] = c.p[i] / s.a()[i];
  return th;
}

double symplectic_potential_dtheta(const TodaPhasePoint& s, const TangentCoords& v1,
                                   const TangentCoords& v2) {
  // d(theta)(X, Y) = X[theta(Y)] - Y[theta(X)] for constant coordinate fields.
  const CanonicalPoint c0 = to_canonical(s);
  const int d = s.n() - 1;
  const auto theta_of = [d](const Vector& a, const Vector& p, const TangentCoords& v) {
    double t = 0.0;
    for (int i = 0; i < d; ++i) t += p[i] / a[i] * v.da[i];
    return t;
  };
  const auto shift = [&](const TangentCoords& dir, double eps, const TangentCoords& v) {
    Vector a = s.a() + eps * dir.da;
    Vector p = c0.p + eps * dir.dp;
    return theta_of(a, p, v);
  };
  const double h = 1e-6;
  const double d1 = (shift(v1, h, v2) - shift(v1, -h, v2)) / (2.0 * h);
  const double d2 = (shift(v2, h, v1) - shift(v2, -h, v1)) / (2.0 * h);
  return d1 - d2;
}

double hamiltonian_function(const LieAlgebraElement& l, const TodaPhasePoint& s) {
  if (l.n() != s.n()) throw DimensionMismatch("algebra element and state size mismatch");
  if (!l.strictly_lower(1e-14))
    throw DimensionMismatch("polarization element must be strictly lower");
  double h = 0.0;
  for (int i = 0; i + 1 < s.n(); ++i) h += l.matrix()(i + 1, i) * s.a()[i];
  return h;
}

TangentCoords polarization_field(const LieAlgebraElement& l, const TodaPhasePoint& s) {
  if (l.n() != s.n()) throw DimensionMismatch("algebra element and state size mismatch");
  if (!l.strictly_lower(1e-14))
    throw DimensionMismatch("polarization element must be strictly lower");
  const int d = s.n() - 1;
  TangentCoords t;
  t.da = Vector::Zero(d);
  t.dp.resize(d);
  for (int i = 0; i < d; ++i) t.dp[i] = s.a()[i] * l.matrix()(i + 1, i);
  return t;
}

PrequantumOperator::PrequantumOperator(PhaseFunction f, int n) : f_(std::move(f)), n_(n) {
  // The field X_f stays tangent to span{d/dp} under bracketing with it iff
  // the p-Hessian of f vanishes; probe a few chart points.
  const int d = n_ - 1;
  const double h = 1e-4;
  Rng rng(77);
  for (int sample = 0; sample < 4 && polarization_preserving_; ++sample) {
    Vector a(d), p(d);
    for (int i = 0; i < d; ++i) {
      a[i] = rng.uniform(0.4, 2.0);
      p[i] = rng.uniform(-1.0, 1.0);
    }
    for (int i = 0; i < d; ++i)
      for (int j = 0; j < d; ++j) {
        Vector pp = p;
        pp[i] += h;
        pp[j] += h;
        double v = f_(a, pp);
        pp[j] -= 2 * h;
        v -= f_(a, pp);
        pp[i] -= 2 * h;
        v += f_(a, pp);
        pp[j] += 2 * h;
        v -= f_(a, pp);
        if (std::abs(v / (4 * h * h)) > 1e-4) polarization_preserving_ = false;
      }
  }
}

PhaseSection PrequantumOperator::apply(const PhaseSection& s) const {
  const PhaseFunction f = f_;
  const int d = n_ - 1;
  return [f, s, d](const Vector& a, const Vector& p) -> Complex {
    const double h = 1e-5;
    // Hamiltonian field of f with i_X omega = df: X = f_p d/dq - f_q d/dp,
    // i.e. da_i = a_i f_{p_i}, dp_i = -a_i f_{a_i}.
    Vector da(d), dp(d);
    for (int i = 0; i < d; ++i) {
      Vector pp = p;
      pp[i] = p[i] + h;
      const double fup = f(a, pp);
      pp[i] = p[i] - h;
      const double fdn = f(a, pp);
      da[i] = a[i] * (fup - fdn) / (2.0 * h);
      Vector aa = a;
      const double ha = h * std::max(1.0, std::abs(a[i]));
      aa[i] = a[i] + ha;
      const double gup = f(aa, p);
      aa[i] = a[i] - ha;
      const double gdn = f(aa, p);
      dp[i] = -a[i] * (gup - gdn) / (2.0 * ha);
    }
    // Directional derivative of the section along X_f.
    Complex xs = 0.0;
    for (int i = 0; i < d; ++i) {
      if (da[i] != 0.0) {
        Vector aa = a;
        const double ha = h * std::max(1.0, std::abs(a[i]));
        aa[i] = a[i] + ha;
        Complex up = s(aa, p);
        aa[i] = a[i] - ha;
        Complex dn = s(aa, p);
        xs += da[i] * (up - dn) / (2.0 * ha);
      }
      if (dp[i] != 0.0) {
        Vector pp = p;
        pp[i] = p[i] + h;
        Complex up = s(a, pp);
        pp[i] = p[i] - h;
        Complex dn = s(a, pp);
        xs += dp[i] * (up - dn) / (2.0 * h);
      }
    }
    double theta_x = 0.0;
    for (int i = 0; i < d; ++i) theta_x += p[i] / a[i] * da[i];
    const Complex two_pi_i(0.0, 2.0 * M_PI);
    return xs - two_pi_i * theta_x * s(a, p) + two_pi_i * f(a, p) * s(a, p);
  };
}

PrequantumOperator prequantum_operator(PhaseFunction f, int n) {
  return PrequantumOperator(std::move(f), n);
}

WaveFunction momentum_operator(int axis, const WaveFunction& f, double fd_step) {
  return [axis, f, fd_step](const Vector& q) -> Complex {
    Vector qq = q;
    qq[axis] = q[axis] + fd_step;
    const Complex up = f(qq);
    qq[axis] = q[axis] - fd_step;
    const Complex dn = f(qq);
    return Complex(0.0, -1.0) * (up - dn) / (2.0 * fd_step);
  };
}

WaveFunction position_operator(int axis, const WaveFunction& f) {
  return [axis, f](const Vector& q) { return q[axis] * f(q); };
}

}  // namespace toda
