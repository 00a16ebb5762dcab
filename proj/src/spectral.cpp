#include "toda/spectral.hpp"

#include <Eigen/Eigenvalues>
#include <Eigen/SparseCholesky>
#include <cmath>
#include <random>

#include "toda/errors.hpp"

namespace toda {

namespace {

void validate(const SpectralProblem& pb) {
  const int d = pb.dim_axes();
  if (pb.n < 2) throw DimensionMismatch("n >= 2 required");
  if (static_cast<int>(pb.box.size()) != d || static_cast<int>(pb.grid.size()) != d)
    throw DimensionMismatch("need n-1 box ranges and grid counts");
  for (int k = 0; k < d; ++k) {
    if (!(pb.box[k].first < pb.box[k].second))
      throw DimensionMismatch("box lower bound must be below upper bound");
    if (pb.grid[k] < 8) throw GridTooCoarse("grid counts must be >= 8");
  }
}

long flatten(const std::vector<int>& idx, const std::vector<int>& grid) {
  long flat = 0;
  for (int k = static_cast<int>(grid.size()) - 1; k >= 0; --k)
    flat = flat * grid[k] + idx[k];
  return flat;
}

bool advance(std::vector<int>& idx, const std::vector<int>& grid) {
  for (std::size_t k = 0; k < grid.size(); ++k) {
    if (++idx[k] < grid[k]) return true;
    idx[k] = 0;
  }
  return false;
}

// Potential 4 sum e^{2 q_i}; the z-chart potential reduces to the same values
// once the node is expressed in q-coordinates.
double potential_q(const Vector& q) {
  double v = 0.0;
  for (Eigen::Index i = 0; i < q.size(); ++i) v += std::exp(2.0 * q[i]);
  return 4.0 * v;
}

}  // namespace

std::vector<double> grid_axis(const SpectralProblem& pb, int axis) {
  std::vector<double> xs(pb.grid[axis]);
  const double h = pb.spacing(axis);
  for (int j = 0; j < pb.grid[axis]; ++j) xs[j] = pb.box[axis].first + (j + 1) * h;
  return xs;
}

SparseMatrix build_hamiltonian(const SpectralProblem& pb) {
  validate(pb);
  const int d = pb.dim_axes();
  long dim = 1;
  for (int k = 0; k < d; ++k) dim *= pb.grid[k];

  // Kinetic quadratic form: xi_1^2 + sum (xi_i - xi_{i-1})^2 in the q chart,
  // the identity in the z chart.
  Vector kdiag = Vector::Ones(d);
  Vector koff = Vector::Zero(std::max(0, d - 1));
  if (pb.chart == Chart::Q) {
    for (int i = 0; i < d - 1; ++i) {
      kdiag[i] = 2.0;
      koff[i] = -1.0;
    }
    kdiag[d - 1] = 1.0;
  }

  std::vector<Eigen::Triplet<double>> trip;
  trip.reserve(static_cast<std::size_t>(dim) * (2 * d + 1 + (pb.chart == Chart::Q ? 4 * (d - 1) : 0)));

  std::vector<std::vector<double>> axis(d);
  for (int k = 0; k < d; ++k) axis[k] = grid_axis(pb, k);

  std::vector<int> idx(d, 0);
  Vector x(d);
  do {
    const long row = flatten(idx, pb.grid);
    double diag = 0.0;
    for (int k = 0; k < d; ++k) x[k] = axis[k][idx[k]];
    if (pb.chart == Chart::Q) {
      diag += potential_q(x);
    } else {
      Vector q(d);
      for (int i = 0; i < d - 1; ++i) q[i] = x[i] - x[i + 1];
      q[d - 1] = x[d - 1];
      diag += potential_q(q);
    }
    for (int k = 0; k < d; ++k) {
      const double h = pb.spacing(k);
      const double c = -2.0 * kdiag[k];  // coefficient of d^2/dx_k^2
      diag += -2.0 * c / (h * h);
      for (int dir : {-1, +1}) {
        const int j = idx[k] + dir;
        if (j < 0 || j >= pb.grid[k]) continue;
        std::vector<int> nb = idx;
        nb[k] = j;
        trip.emplace_back(row, flatten(nb, pb.grid), c / (h * h));
      }
    }
    if (pb.chart == Chart::Q) {
      for (int k = 0; k + 1 < d; ++k) {
        // -4 * K_{k,k+1} * d^2/(dx_k dx_{k+1}) with the centered cross stencil.
        const double c = -4.0 * koff[k] / (4.0 * pb.spacing(k) * pb.spacing(k + 1));
        for (int s1 : {-1, +1})
          for (int s2 : {-1, +1}) {
            const int j1 = idx[k] + s1, j2 = idx[k + 1] + s2;
            if (j1 < 0 || j1 >= pb.grid[k] || j2 < 0 || j2 >= pb.grid[k + 1]) continue;
            std::vector<int> nb = idx;
            nb[k] = j1;
            nb[k + 1] = j2;
            trip.emplace_back(row, flatten(nb, pb.grid), c * s1 * s2);
          }
      }
    }
    trip.emplace_back(row, row, diag);
  } while (advance(idx, pb.grid));

  SparseMatrix M(dim, dim);
  M.setFromTriplets(trip.begin(), trip.end());
  M.makeCompressed();
  return M;
}

SparseMatrix build_hamiltonian_matched_z(const SpectralProblem& pb) {
  if (pb.chart != Chart::Q)
    throw DimensionMismatch("matched-z assembly takes the q-chart problem");
  validate(pb);
  const int d = pb.dim_axes();
  const double h = pb.spacing(0);
  for (int k = 1; k < d; ++k)
    if (std::abs(pb.spacing(k) - h) > 1e-12 * h)
      throw DimensionMismatch("matched-z assembly needs one shared grid spacing");

  long dim = 1;
  for (int k = 0; k < d; ++k) dim *= pb.grid[k];
  std::vector<std::vector<double>> axis(d);
  for (int k = 0; k < d; ++k) axis[k] = grid_axis(pb, k);

  // Unit z-directions on the q-lattice: d/dz_1 steps axis 0; d/dz_k for k >= 2
  // steps axis k-2 down and axis k-1 up (z_i - z_{i+1} = q_i is the shear).
  std::vector<std::vector<int>> dirs;
  {
    std::vector<int> e(d, 0);
    e[0] = 1;
    dirs.push_back(e);
  }
  for (int k = 2; k <= d; ++k) {
    std::vector<int> e(d, 0);
    e[k - 2] = -1;
    e[k - 1] = 1;
    dirs.push_back(e);
  }

  std::vector<Eigen::Triplet<double>> trip;
  trip.reserve(static_cast<std::size_t>(dim) * (2 * d + 1));
  std::vector<int> idx(d, 0);
  Vector q(d);
  do {
    const long row = flatten(idx, pb.grid);
    for (int k = 0; k < d; ++k) q[k] = axis[k][idx[k]];
    double diag = potential_q(q);
    for (const auto& e : dirs) {
      diag += 4.0 / (h * h);
      for (int sgn : {-1, +1}) {
        std::vector<int> nb = idx;
        bool inside = true;
        for (int k = 0; k < d; ++k) {
          nb[k] += sgn * e[k];
          if (nb[k] < 0 || nb[k] >= pb.grid[k]) inside = false;
        }
        if (inside) trip.emplace_back(row, flatten(nb, pb.grid), -2.0 / (h * h));
      }
    }
    trip.emplace_back(row, row, diag);
  } while (advance(idx, pb.grid));

  SparseMatrix M(dim, dim);
  M.setFromTriplets(trip.begin(), trip.end());
  M.makeCompressed();
  return M;
}

namespace {

Vector deterministic_start(long dim) {
  std::mt19937_64 gen(0x10da5eedULL);
  Vector v(dim);
  for (long i = 0; i < dim; ++i)
    v[i] = 2.0 * (static_cast<double>(gen() >> 11) * 0x1.0p-53) - 1.0;
  v.normalize();
  return v;
}

EigenResult dense_solve(const SparseMatrix& M, int k) {
  const Matrix Md = Matrix(M);
  Eigen::SelfAdjointEigenSolver<Matrix> es(Md);
  EigenResult out;
  out.values = es.eigenvalues().head(k);
  out.vectors = es.eigenvectors().leftCols(k);
  out.residuals.resize(k);
  for (int i = 0; i < k; ++i)
    out.residuals[i] = (M * out.vectors.col(i) - out.values[i] * out.vectors.col(i)).norm();
  return out;
}

}  // namespace

EigenResult eigen_solve(const SparseMatrix& M, int k) {
  const long dim = M.rows();
  if (M.rows() != M.cols()) throw DimensionMismatch("square matrix required");
  if (k < 1 || k > dim) throw BadOrder("need 1 <= k <= dim");
  if (dim <= 600 || k >= dim / 2) return dense_solve(M, k);

  Eigen::SimplicialLDLT<SparseMatrix> ldlt(M);
  if (ldlt.info() != Eigen::Success)
    throw ConvergenceFailure("sparse factorization failed");

  const Vector v0 = deterministic_start(dim);
  int m = std::min<long>(dim, std::max(2 * k + 30, 50));
  const int m_cap = static_cast<int>(std::min<long>(dim, 400));

  while (true) {
    std::vector<Vector> V;
    V.reserve(m + 1);
    std::vector<double> alpha, beta;
    V.push_back(v0);
    for (int j = 0; j < m; ++j) {
      Vector w = ldlt.solve(V[j]);
      if (j > 0) w -= beta[j - 1] * V[j - 1];
      const double a = V[j].dot(w);
      alpha.push_back(a);
      w -= a * V[j];
      for (int pass = 0; pass < 2; ++pass)
        for (const auto& vi : V) w -= vi.dot(w) * vi;
      const double b = w.norm();
      if (b < 1e-13) break;  // exact invariant subspace
      beta.push_back(b);
      V.push_back(w / b);
    }
    const int mm = static_cast<int>(alpha.size());
    Matrix T = Matrix::Zero(mm, mm);
    for (int i = 0; i < mm; ++i) {
      T(i, i) = alpha[i];
      if (i + 1 < mm) T(i, i + 1) = T(i + 1, i) = beta[i];
    }
    Eigen::SelfAdjointEigenSolver<Matrix> es(T);

    if (mm >= k) {
      // Largest Ritz values of M^{-1} are the smallest eigenvalues of M.
      EigenResult out;
      out.values.resize(k);
      out.vectors.resize(dim, k);
      out.residuals.resize(k);
      bool ok = true;
      for (int i = 0; i < k; ++i) {
        const int col = mm - 1 - i;
        Vector x = Vector::Zero(dim);
        for (int j = 0; j < mm; ++j) x += es.eigenvectors()(j, col) * V[j];
        x.normalize();
        const double lambda = x.dot(M * x);
        const double res = (M * x - lambda * x).norm();
        out.values[k - 1 - i] = lambda;
        out.vectors.col(k - 1 - i) = x;
        out.residuals[k - 1 - i] = res;
        if (res > 1e-8) ok = false;
      }
      if (ok) return out;
    }
    if (m >= m_cap)
      throw ConvergenceFailure("Lanczos stalled at " + std::to_string(m) +
                               " iterations without meeting the residual target");
    m = std::min(m_cap, 2 * m);
  }
}

}  // namespace toda
