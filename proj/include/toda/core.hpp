#pragma once

#include "toda/state.hpp"

namespace toda {

/// Validates and builds an orbit point; trace_c is fixed to sum(b).
TodaPhasePoint make_state(const Vector& a, const Vector& b);

/// Flaschka map for the open chain: a_i = e^{(x_i - x_{i+1})/2}/2, b_i = y_i/2.
TodaPhasePoint physical_to_orbit(const PhysicalPoint& pt);

/// Inverse Flaschka map in the center-of-mass gauge (sum x_i = 0).
PhysicalPoint orbit_to_physical(const TodaPhasePoint& s);

CanonicalPoint to_canonical(const TodaPhasePoint& s);
TodaPhasePoint from_canonical(const CanonicalPoint& c, double trace_c);

LaxMatrix lax_matrix(const TodaPhasePoint& s);

/// H(q,p) = 2 sum (p_i - p_{i-1})^2 + 4 sum e^{2 q_i}, p_0 = 0.
/// Throws OverflowError when e^{2 q_i} leaves the representable range.
double classical_hamiltonian(const CanonicalPoint& c);

/// Tr(A^k) of the upper-bidiagonal representative, 1 <= k <= n.
/// k = 1 returns trace_c exactly.
double integral_of_motion(const TodaPhasePoint& s, int k);

/// Symmetric Jacobi form of the orbit data: tridiag(a; b; a). The Toda flow
/// preserves its spectrum, which the triangular representative does not see.
Matrix jacobi_matrix(const TodaPhasePoint& s);

}  // namespace toda
