#pragma once

#include <functional>

#include "toda/core.hpp"
#include "toda/group.hpp"

namespace toda {

/// Tangent vector to the orbit in (a, p) coordinates.
struct TangentCoords {
  Vector da;
  Vector dp;
};

/// Scalar observable of the orbit point (a function of a and b).
using ScalarField = std::function<double(const TodaPhasePoint&)>;

/// Coadjoint action [g u g^{-1}]_+ (strictly lower entries zeroed). Acting on
/// a Toda matrix keeps the upper-bidiagonal shape, the positive superdiagonal
/// and the trace.
LaxMatrix coadjoint_action(const GroupElement& g, const LaxMatrix& u);

/// Closed-form action on orbit coordinates:
///   a_i -> (L_ii / L_{i+1,i+1}) a_i,
///   b_i -> b_i + (L_{i,i-1}/L_ii) a_{i-1} - (L_{i+1,i}/L_{i+1,i+1}) a_i,
/// with out-of-range terms dropped.
TodaPhasePoint action_on_coordinates(const GroupElement& g, const TodaPhasePoint& s);

/// Derivative of the action: the tangent vector [A, l]_+ expressed in (a, p).
TangentCoords tangent_from_algebra(const TodaPhasePoint& s, const LieAlgebraElement& l);

/// Numerical rank (relative SVD threshold 1e-10) of span{[A, l]_+} with l
/// running over the trace-zero lower-triangular basis. 2(n-1) at Toda points.
int orbit_tangent_rank(const TodaPhasePoint& s);

/// Kostant-Kirillov form on algebra directions: Tr(A [l1, l2]).
double kk_form_matrix(const TodaPhasePoint& s, const LieAlgebraElement& l1,
                      const LieAlgebraElement& l2);

/// Same form in coordinates: sum (1/a_i)(d1a_i d2p_i - d2a_i d1p_i).
double kk_form_coords(const TodaPhasePoint& s, const TangentCoords& v1, const TangentCoords& v2);

/// Adler's bracket, with partials taken by central differences
/// (step 1e-6 * max(1, |coord|)).
double poisson_bracket(const ScalarField& f, const ScalarField& h, const TodaPhasePoint& s);

/// Sign relating poisson_bracket to the form-induced bracket, calibrated once
/// from {q_1, p_1} = +1 at a reference state.
double poisson_sign_calibration(int n);

/// Canonical bracket f_q h_p - f_p h_q evaluated through the (a, b) chart; the
/// independent route used to cross-check poisson_bracket.
double canonical_bracket(const ScalarField& f, const ScalarField& h, const TodaPhasePoint& s);

struct PolarizationReport {
  bool closed_under_bracket = false;
  bool quotient_dimension = false;
  bool pairing_vanishes = false;
  bool sum_with_conjugate_closed = false;

  bool all() const {
    return closed_under_bracket && quotient_dimension && pairing_vanishes &&
           sum_with_conjugate_closed;
  }
};

/// Checks the strictly-lower subalgebra against the four polarization
/// criteria. With perturb_with_diagonal a diagonal generator is adjoined, the
/// standard negative control (the pairing criterion must then fail).
PolarizationReport verify_polarization(int n, bool perturb_with_diagonal = false);

}  // namespace toda
