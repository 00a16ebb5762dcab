#pragma once

#include <Eigen/SparseCore>
#include <vector>

#include "toda/state.hpp"

namespace toda {

using SparseMatrix = Eigen::SparseMatrix<double>;

enum class Chart { Q, Z };

/// Box-truncated tensor-grid discretization of the quantum Hamiltonian with
/// Dirichlet walls.
///
/// Q chart:  -2 d/dq_1^2 - 2 sum_{i>=2} (d/dq_i - d/dq_{i-1})^2 + 4 sum e^{2 q_i}
/// Z chart:  -2 sum d/dz_i^2 + 4 (sum e^{2(z_i - z_{i+1})} + e^{2 z_{n-1}})
struct SpectralProblem {
  int n = 2;
  Chart chart = Chart::Q;
  std::vector<std::pair<double, double>> box;  // per-axis (lo, hi)
  std::vector<int> grid;                       // per-axis interior point count

  int dim_axes() const { return n - 1; }
  double spacing(int axis) const {
    return (box[axis].second - box[axis].first) / (grid[axis] + 1);
  }
};

SparseMatrix build_hamiltonian(const SpectralProblem& problem);

/// The Z-chart operator assembled over a Q-chart box: the change of charts is
/// the unimodular shear z_i - z_{i+1} = q_i, so a box in one chart is not a
/// box in the other. This assembly walks the sheared lattice directions
/// inside the q-box (all axes must share the grid spacing), giving the same
/// domain as build_hamiltonian on the Q chart — the dual-route discretization
/// of one continuum problem.
SparseMatrix build_hamiltonian_matched_z(const SpectralProblem& q_problem);

struct EigenResult {
  Vector values;     // ascending
  Matrix vectors;    // columns, unit norm
  Vector residuals;  // ||M v - lambda v|| / ||v||
};

/// k smallest eigenpairs of a symmetric matrix: dense solve for small or
/// near-full problems, shift-invert Lanczos (full reorthogonalization,
/// deterministic start vector) otherwise. Residuals are checked to 1e-8.
EigenResult eigen_solve(const SparseMatrix& M, int k);

/// Grid coordinates along one axis (interior points only).
std::vector<double> grid_axis(const SpectralProblem& problem, int axis);

}  // namespace toda
