#pragma once

#include <complex>
#include <functional>

#include "toda/group.hpp"
#include "toda/orbit.hpp"

namespace toda {

using Complex = std::complex<double>;

/// Element of the polarized Hilbert space: a function of the a-variables.
class Section {
 public:
  using Fn = std::function<Complex(const Vector& a)>;

  Section(int n, Fn fn) : n_(n), fn_(std::move(fn)) {}

  int n() const { return n_; }
  Complex operator()(const Vector& a) const { return fn_(a); }

 private:
  int n_;
  Fn fn_;
};

/// The Gaussian-weighted Liouville volume e^{-sum p_i^2} prod da_i/a_i dp_i
/// with the p-Gaussian normalized away, leaving prod da_i/a_i. In x = log a
/// the inner product is plain L^2(R^{n-1}), evaluated by tensor
/// Gauss-Legendre on [-log_box, log_box]^{n-1}.
struct WeightedMeasure {
  int n;
  double log_box = 12.0;
  int nodes = 96;

  /// Raw value of the p-Gaussian integral, pi^{(n-1)/2}; recorded as
  /// metadata, already divided out of the inner product.
  double gaussian_factor() const;
};

/// c-normalized <s1, s2>; evaluated twice (nodes and 2*nodes per axis) and
/// rejected with NonConvergentQuadrature when the refinement moves the value
/// by more than 1e-8 relative.
Complex weighted_inner_product(const Section& s1, const Section& s2, const WeightedMeasure& m);

/// Single-rule evaluation without the refinement guard; for convergence
/// studies of the quadrature itself.
Complex weighted_inner_product_raw(const Section& s1, const Section& s2,
                                   const WeightedMeasure& m);

/// (g s)(a) = s(g^{-1} a), with (g^{-1} a)_i = (L_{i+1,i+1}/L_ii) a_i.
Section act_on_section(const GroupElement& g, const Section& s);

/// Symplectic potential theta = sum (p_i/a_i) da_i at the given point.
struct Covector {
  Vector theta_a;
  Vector theta_p;

  double operator()(const TangentCoords& v) const {
    return theta_a.dot(v.da) + theta_p.dot(v.dp);
  }
};
Covector symplectic_potential(const TodaPhasePoint& s);

/// d(theta)(v1, v2) by central finite differences in the (a, p) chart; used
/// to confirm d(theta) equals the orbit form.
double symplectic_potential_dtheta(const TodaPhasePoint& s, const TangentCoords& v1,
                                   const TangentCoords& v2);

/// H_l = sum l_{i+1,i} a_i for strictly lower l (equals Tr(l A)).
double hamiltonian_function(const LieAlgebraElement& l, const TodaPhasePoint& s);

/// Fundamental field X_l = sum a_i l_{i+1,i} d/dp_i; lies in the
/// polarization span{d/dp_i} and is omega-dual to dH_l.
TangentCoords polarization_field(const LieAlgebraElement& l, const TodaPhasePoint& s);

/// Smooth observable on the (a, p) chart of the orbit.
using PhaseFunction = std::function<double(const Vector& a, const Vector& p)>;
/// Prequantum wavefunction over the same chart.
using PhaseSection = std::function<Complex(const Vector& a, const Vector& p)>;

/// Kostant-Souriau assignment f -> nabla_{X_f} + 2 pi i f in the global
/// trivialization. Derivatives are applied by central differences.
class PrequantumOperator {
 public:
  PrequantumOperator(PhaseFunction f, int n);

  PhaseSection apply(const PhaseSection& s) const;

  /// False when [X-bar, X_f] leaves the polarization, detected through the
  /// p-Hessian of f at sample points; such f do not survive quantization.
  bool polarization_preserving() const { return polarization_preserving_; }

 private:
  PhaseFunction f_;
  int n_;
  bool polarization_preserving_ = true;
};

PrequantumOperator prequantum_operator(PhaseFunction f, int n);

/// The -i d/dq_i and multiplication-by-q_i operators used to assemble the
/// quantum Hamiltonian.
using WaveFunction = std::function<Complex(const Vector& q)>;
WaveFunction momentum_operator(int axis, const WaveFunction& f, double fd_step = 1e-5);
WaveFunction position_operator(int axis, const WaveFunction& f);

}  // namespace toda
