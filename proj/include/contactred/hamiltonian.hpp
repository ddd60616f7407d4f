#pragma once

#include "contactred/scalar_field.hpp"

namespace contactred {

/// X_H = dH/dp_i d/dq^i - dH/dq^i d/dp_i on a symplectic chart.
TangentVector xh_symplectic(const ScalarField& H, const Point& pt);

/// Contact Hamiltonian vector field in Darboux coordinates:
///   X_H = dH/dp_i d/dq^i - (dH/dq^i + p_i dH/dz) d/dp_i
///         + (p_i dH/dp_i - H) d/dz.
TangentVector xh_contact(const ScalarField& H, const Point& pt);

/// Hamiltonian vector field matching the chart kind of pt.
TangentVector xh(const ScalarField& H, const Point& pt);

/// Rate of change of H along its own contact flow: -H dH/dz.
double dissipation_rate(const ScalarField& H, const Point& pt);

/// Divergence of X_H on a contact chart, computed as the finite-difference
/// trace of the Jacobian of xh_contact (central step 1e-5). Contract:
/// equals -(n+1) dH/dz, the Darboux volume coefficient being constant.
double divergence_contact(const ScalarField& H, const Point& pt);

} // namespace contactred
