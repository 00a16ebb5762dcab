#include "toda/core.hpp"

#include <cmath>

namespace toda {

namespace {

void require_finite(const Vector& v, const char* what) {
  if (!v.allFinite()) throw NonFiniteState(std::string(what) + " has non-finite entries");
}

}  // namespace

TodaPhasePoint::TodaPhasePoint(Vector a, Vector b) : TodaPhasePoint(a, b, b.sum()) {}

TodaPhasePoint::TodaPhasePoint(Vector a, Vector b, double trace_c) {
  if (b.size() < 2 || a.size() + 1 != b.size())
    throw DimensionMismatch("need len(b) = len(a)+1 >= 2");
  require_finite(a, "a");
  require_finite(b, "b");
  for (Eigen::Index i = 0; i < a.size(); ++i)
    if (a[i] <= 0.0)
      throw NonPositiveOffDiagonal("a[" + std::to_string(i) + "] = " +
                                   std::to_string(a[i]) + " must be positive");
  if (std::abs(b.sum() - trace_c) > 1e-12 * std::max(1.0, b.lpNorm<1>()))
    throw DimensionMismatch("sum(b) does not match the trace constant");
  a_ = std::move(a);
  b_ = std::move(b);
  trace_c_ = trace_c;
}

TodaPhasePoint TodaPhasePoint::unchecked(Vector a, Vector b) {
  TodaPhasePoint s;
  s.a_ = std::move(a);
  s.b_ = std::move(b);
  s.trace_c_ = s.b_.sum();
  return s;
}

LaxMatrix::LaxMatrix(Vector diag, Vector super) : diag_(std::move(diag)), super_(std::move(super)) {
  if (super_.size() + 1 != diag_.size())
    throw DimensionMismatch("superdiagonal must have length n-1");
}

double LaxMatrix::trace() const { return diag_.sum(); }

Matrix LaxMatrix::dense() const {
  const int m = n();
  Matrix A = Matrix::Zero(m, m);
  A.diagonal() = diag_;
  for (int i = 0; i + 1 < m; ++i) A(i, i + 1) = super_[i];
  return A;
}

TodaPhasePoint make_state(const Vector& a, const Vector& b) { return TodaPhasePoint(a, b); }

TodaPhasePoint physical_to_orbit(const PhysicalPoint& pt) {
  require_finite(pt.x, "x");
  require_finite(pt.y, "y");
  if (pt.x.size() != pt.y.size() || pt.x.size() < 2)
    throw DimensionMismatch("x and y must have equal length >= 2");
  const int n = static_cast<int>(pt.x.size());
  Vector a(n - 1), b(n);
  for (int i = 0; i + 1 < n; ++i) a[i] = 0.5 * std::exp(0.5 * (pt.x[i] - pt.x[i + 1]));
  for (int i = 0; i < n; ++i) b[i] = 0.5 * pt.y[i];
  return TodaPhasePoint(a, b);
}

PhysicalPoint orbit_to_physical(const TodaPhasePoint& s) {
  const int n = s.n();
  // x_i - x_{i+1} = 2 log(2 a_i); the lost center of mass is fixed by sum x = 0.
  Vector x(n), y(n);
  x[0] = 0.0;
  for (int i = 1; i < n; ++i) x[i] = x[i - 1] - 2.0 * std::log(2.0 * s.a()[i - 1]);
  x.array() -= x.mean();
  y = 2.0 * s.b();
  return PhysicalPoint{std::move(x), std::move(y)};
}

CanonicalPoint to_canonical(const TodaPhasePoint& s) {
  const int m = s.n() - 1;
  CanonicalPoint c;
  c.q.resize(m);
  c.p.resize(m);
  double run = 0.0;
  for (int i = 0; i < m; ++i) {
    c.q[i] = std::log(s.a()[i]);
    run += s.b()[i];
    c.p[i] = run;
  }
  return c;
}

TodaPhasePoint from_canonical(const CanonicalPoint& c, double trace_c) {
  require_finite(c.q, "q");
  require_finite(c.p, "p");
  if (c.q.size() != c.p.size() || c.q.size() < 1)
    throw DimensionMismatch("q and p must have equal length >= 1");
  const int m = static_cast<int>(c.q.size());
  Vector a(m), b(m + 1);
  for (int i = 0; i < m; ++i) a[i] = std::exp(c.q[i]);
  b[0] = c.p[0];
  for (int i = 1; i < m; ++i) b[i] = c.p[i] - c.p[i - 1];
  b[m] = trace_c - c.p[m - 1];
  return TodaPhasePoint(a, b, trace_c);
}

LaxMatrix lax_matrix(const TodaPhasePoint& s) { return LaxMatrix(s.b(), s.a()); }

double classical_hamiltonian(const CanonicalPoint& c) {
  const int m = c.dim();
  double kinetic = 0.0, potential = 0.0;
  double prev = 0.0;
  for (int i = 0; i < m; ++i) {
    const double d = c.p[i] - prev;
    kinetic += d * d;
    prev = c.p[i];
    potential += std::exp(2.0 * c.q[i]);
  }
  const double h = 2.0 * kinetic + 4.0 * potential;
  if (!std::isfinite(h)) throw OverflowError("hamiltonian overflowed");
  return h;
}

double integral_of_motion(const TodaPhasePoint& s, int k) {
  if (k < 1 || k > s.n()) throw BadOrder("k must satisfy 1 <= k <= n");
  if (k == 1) return s.trace_c();
  // Powers of an upper-triangular matrix are upper-triangular with diagonal
  // entries b_i^k, so the trace reduces to a power sum.
  double t = 0.0;
  for (int i = 0; i < s.n(); ++i) t += std::pow(s.b()[i], k);
  return t;
}

Matrix jacobi_matrix(const TodaPhasePoint& s) {
  const int n = s.n();
  Matrix J = Matrix::Zero(n, n);
  J.diagonal() = s.b();
  for (int i = 0; i + 1 < n; ++i) J(i, i + 1) = J(i + 1, i) = s.a()[i];
  return J;
}

}  // namespace toda
