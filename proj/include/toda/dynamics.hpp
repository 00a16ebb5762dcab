#pragma once

#include <string>
#include <vector>

#include "toda/core.hpp"

namespace toda {

struct Trajectory {
  std::vector<double> times;
  std::vector<CanonicalPoint> points;
  double trace_c = 0.0;
  double step = 0.0;
  std::string integrator_name = "stormer-verlet";
  /// Set when the integration hit a non-finite state and stopped early.
  bool truncated = false;
};

struct ConservationReport {
  /// Relative drift of Tr(A^k), k = 1..n, for the triangular representative.
  /// Only k = 1 (the trace) is an invariant of the flow; higher powers are
  /// reported as diagnostics of the orbit motion itself.
  std::vector<double> trace_power_drift;
  /// Relative drift of Tr(J^k) for the symmetric Jacobi matrix; conserved.
  std::vector<double> jacobi_trace_power_drift;
  /// Relative drift of the Jacobi (Toda) spectrum; conserved.
  double eigenvalue_drift = 0.0;
  double energy_drift = 0.0;
};

/// The conserved energy of the reduced flow: the canonical Hamiltonian plus
/// the end term 2 (trace_c - p_{n-1})^2 that the (q, p) chart hides. Without
/// that term the flow is a chain with one fixed end and the Toda spectrum is
/// not preserved.
double conserved_energy(const CanonicalPoint& c, double trace_c);

/// q'_i = dH/dp_i, p'_i = -dH/dq_i for the reduced open-Toda flow, i.e. the
/// canonical Hamiltonian with p_0 = 0 and p_n read as trace_c.
void hamiltonian_vector_field(const CanonicalPoint& c, double trace_c, Vector& dq, Vector& dp);

/// One kick-drift-kick step of Stormer-Verlet. Templated so derivatives of
/// the step map can be taken by complex perturbation.
template <typename Scalar>
void verlet_step(Eigen::Matrix<Scalar, Eigen::Dynamic, 1>& q,
                 Eigen::Matrix<Scalar, Eigen::Dynamic, 1>& p, double trace_c, double dt) {
  using Vec = Eigen::Matrix<Scalar, Eigen::Dynamic, 1>;
  const auto grad_v = [](const Vec& qq) {
    using std::exp;
    Vec g(qq.size());
    for (Eigen::Index i = 0; i < qq.size(); ++i) g[i] = Scalar(8.0) * exp(Scalar(2.0) * qq[i]);
    return g;
  };
  const auto grad_t = [trace_c](const Vec& pp) {
    const Eigen::Index m = pp.size();
    Vec g(m);
    for (Eigen::Index i = 0; i < m; ++i) {
      const Scalar lo = pp[i] - (i > 0 ? pp[i - 1] : Scalar(0.0));
      const Scalar hi = (i + 1 < m ? pp[i + 1] : Scalar(trace_c)) - pp[i];
      g[i] = Scalar(4.0) * (lo - hi);
    }
    return g;
  };
  p -= (0.5 * dt) * grad_v(q);
  q += dt * grad_t(p);
  p -= (0.5 * dt) * grad_v(q);
}

/// Integrates from c0 with fixed step dt up to t_end (inclusive endpoint).
/// A non-finite state stops the run and flags the partial trajectory.
Trajectory integrate(const CanonicalPoint& c0, double trace_c, double t_end, double dt);

ConservationReport conservation_report(const Trajectory& tr);

/// Columns: t, q_i, p_i, H, Tr(A^2).., and the Jacobi eigenvalues. A nonempty
/// meta string is embedded as a leading comment line.
void write_trajectory_csv(const Trajectory& tr, const std::string& path,
                          const std::string& meta = "");

}  // namespace toda
