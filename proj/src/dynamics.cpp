#include "toda/dynamics.hpp"

#include <Eigen/Eigenvalues>
#include <cmath>
#include <cstdio>

#include "toda/json_io.hpp"

namespace toda {

double conserved_energy(const CanonicalPoint& c, double trace_c) {
  const double bn = trace_c - c.p[c.dim() - 1];
  return classical_hamiltonian(c) + 2.0 * bn * bn;
}

void hamiltonian_vector_field(const CanonicalPoint& c, double trace_c, Vector& dq, Vector& dp) {
  const int m = c.dim();
  dq.resize(m);
  dp.resize(m);
  for (int i = 0; i < m; ++i) {
    const double lo = c.p[i] - (i > 0 ? c.p[i - 1] : 0.0);
    const double hi = (i + 1 < m ? c.p[i + 1] : trace_c) - c.p[i];
    dq[i] = 4.0 * (lo - hi);
    dp[i] = -8.0 * std::exp(2.0 * c.q[i]);
    if (!std::isfinite(dp[i])) throw OverflowError("force overflowed");
  }
}

Trajectory integrate(const CanonicalPoint& c0, double trace_c, double t_end, double dt) {
  if (!(dt > 0.0) || !(t_end > 0.0)) throw DimensionMismatch("dt > 0 and t_end > 0 required");
  const long steps = std::lround(t_end / dt);
  Trajectory tr;
  tr.trace_c = trace_c;
  tr.step = dt;
  tr.times.reserve(steps + 1);
  tr.points.reserve(steps + 1);
  Vector q = c0.q, p = c0.p;
  tr.times.push_back(0.0);
  tr.points.push_back(c0);
  for (long k = 1; k <= steps; ++k) {
    verlet_step(q, p, trace_c, dt);
    if (!q.allFinite() || !p.allFinite()) {
      tr.truncated = true;
      break;
    }
    tr.times.push_back(k * dt);
    tr.points.push_back(CanonicalPoint{q, p});
  }
  return tr;
}

ConservationReport conservation_report(const Trajectory& tr) {
  if (tr.points.empty()) throw DimensionMismatch("empty trajectory");
  const int n = tr.points.front().dim() + 1;
  ConservationReport rep;
  rep.trace_power_drift.assign(n, 0.0);
  rep.jacobi_trace_power_drift.assign(n, 0.0);

  const TodaPhasePoint s0 = from_canonical(tr.points.front(), tr.trace_c);
  Vector ref_tr(n), ref_jtr(n);
  for (int k = 1; k <= n; ++k) ref_tr[k - 1] = integral_of_motion(s0, k);
  const Matrix J0 = jacobi_matrix(s0);
  Eigen::SelfAdjointEigenSolver<Matrix> es0(J0);
  const Vector ref_ev = es0.eigenvalues();
  Matrix Jp = Matrix::Identity(n, n);
  for (int k = 1; k <= n; ++k) {
    Jp *= J0;
    ref_jtr[k - 1] = Jp.trace();
  }
  const double h0 = conserved_energy(tr.points.front(), tr.trace_c);

  for (const auto& c : tr.points) {
    const TodaPhasePoint s = from_canonical(c, tr.trace_c);
    for (int k = 1; k <= n; ++k) {
      const double d = std::abs(integral_of_motion(s, k) - ref_tr[k - 1]) /
                       std::max(1.0, std::abs(ref_tr[k - 1]));
      rep.trace_power_drift[k - 1] = std::max(rep.trace_power_drift[k - 1], d);
    }
    const Matrix J = jacobi_matrix(s);
    Eigen::SelfAdjointEigenSolver<Matrix> es(J);
    const Vector ev = es.eigenvalues();
    for (int i = 0; i < n; ++i) {
      const double d = std::abs(ev[i] - ref_ev[i]) / std::max(1.0, std::abs(ref_ev[i]));
      rep.eigenvalue_drift = std::max(rep.eigenvalue_drift, d);
    }
    Matrix P = Matrix::Identity(n, n);
    for (int k = 1; k <= n; ++k) {
      P *= J;
      const double d = std::abs(P.trace() - ref_jtr[k - 1]) /
                       std::max(1.0, std::abs(ref_jtr[k - 1]));
      rep.jacobi_trace_power_drift[k - 1] = std::max(rep.jacobi_trace_power_drift[k - 1], d);
    }
    const double d = std::abs(classical_hamiltonian(c) - h0) / std::max(1.0, std::abs(h0));
    rep.energy_drift = std::max(rep.energy_drift, d);
  }
  return rep;
}

void write_trajectory_csv(const Trajectory& tr, const std::string& path,
                          const std::string& meta) {
  CsvWriter csv(path);
  if (!meta.empty()) csv.comment(meta);
  const int m = tr.points.empty() ? 0 : tr.points.front().dim();
  const int n = m + 1;
  std::vector<std::string> header{"t"};
  for (int i = 1; i <= m; ++i) header.push_back("q_" + std::to_string(i));
  for (int i = 1; i <= m; ++i) header.push_back("p_" + std::to_string(i));
  header.push_back("H");
  for (int k = 2; k <= n; ++k) header.push_back("trA" + std::to_string(k));
  for (int i = 1; i <= n; ++i) header.push_back("lambda_" + std::to_string(i));
  csv.header(header);
  for (std::size_t r = 0; r < tr.points.size(); ++r) {
    const auto& c = tr.points[r];
    std::vector<double> row{tr.times[r]};
    for (int i = 0; i < m; ++i) row.push_back(c.q[i]);
    for (int i = 0; i < m; ++i) row.push_back(c.p[i]);
    row.push_back(classical_hamiltonian(c));
    const TodaPhasePoint s = from_canonical(c, tr.trace_c);
    for (int k = 2; k <= n; ++k) row.push_back(integral_of_motion(s, k));
    Eigen::SelfAdjointEigenSolver<Matrix> es(jacobi_matrix(s));
    for (int i = 0; i < n; ++i) row.push_back(es.eigenvalues()[i]);
    csv.row(row);
  }
}

}  // namespace toda
