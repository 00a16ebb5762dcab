#pragma once

#include <Eigen/Dense>

#include "toda/errors.hpp"

namespace toda {

using Vector = Eigen::VectorXd;
using Matrix = Eigen::MatrixXd;

/// Point of the open Toda phase space in orbit coordinates: positive
/// off-diagonals a (length n-1), diagonals b (length n), fixed trace.
class TodaPhasePoint {
 public:
  TodaPhasePoint(Vector a, Vector b);

  /// Keeps the caller's trace constant; sum(b) must match it to 1e-12.
  TodaPhasePoint(Vector a, Vector b, double trace_c);

  /// Skips the a_i > 0 check; used to probe degenerate (non-Toda) points.
  static TodaPhasePoint unchecked(Vector a, Vector b);

  int n() const { return static_cast<int>(b_.size()); }
  const Vector& a() const { return a_; }
  const Vector& b() const { return b_; }
  double trace_c() const { return trace_c_; }

 private:
  TodaPhasePoint() = default;
  Vector a_;
  Vector b_;
  double trace_c_ = 0.0;
};

/// Darboux coordinates q_i = log a_i, p_i = b_1 + ... + b_i.
struct CanonicalPoint {
  Vector q;
  Vector p;

  int dim() const { return static_cast<int>(q.size()); }
};

/// Particle positions/momenta of the physical chain.
struct PhysicalPoint {
  Vector x;
  Vector y;
};

/// Upper-bidiagonal orbit representative: diagonal = b, superdiagonal = a.
class LaxMatrix {
 public:
  LaxMatrix(Vector diag, Vector super);

  int n() const { return static_cast<int>(diag_.size()); }
  const Vector& diag() const { return diag_; }
  const Vector& super() const { return super_; }
  double trace() const;

  /// Dense n x n matrix; entries off the two stored bands are exactly zero.
  Matrix dense() const;

 private:
  Vector diag_;
  Vector super_;
};

}  // namespace toda
