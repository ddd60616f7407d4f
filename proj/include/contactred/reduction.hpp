#pragma once

#include "contactred/symmetry.hpp"

namespace contactred {

/**
 * A momentum-level-set reduction realized through an explicit coordinate
 * chart with a project/section pair; the general leaf-space quotient is
 * replaced by the global product structure each action family provides.
 *
 * Invariants: project(section(y)) = y to 1e-10, full_H(section(y)) =
 * reduced_H(y), momentum(section(y)) = mu. reduced_H is the composition
 * full_H . section, with the gradient pulled back through the section
 * Jacobian, so the compatibility identity holds by construction.
 */
struct ReducedSystem {
    Chart reduced_chart;
    ScalarField full_H;
    ScalarField reduced_H;
    std::function<Point(const Point&)> project;    // full (on level set) -> reduced
    std::function<Point(const Point&)> section;    // reduced -> full (on level set)
    std::function<Eigen::MatrixXd(const Point&)> section_jacobian;   // at reduced point
    Eigen::VectorXd mu;
    ActionFamily family;
    int k;
};

/// Rebuild the acting group of a reduction on its full chart.
GroupAction action_for(const ReducedSystem& reduced, const Chart& full_chart);

/// Quotient by translations of q_1..q_k on a symplectic chart. The reduced
/// chart is symplectic with n-k degrees of freedom; the section inserts
/// q_1..q_k = 0 and p_1..p_k = mu. Rejects k = n (zero-dimensional quotient)
/// and non-invariant H (sampled residual >= 1e-9).
ReducedSystem reduce_translation_symplectic(const ScalarField& H, int k,
                                            const Eigen::VectorXd& mu,
                                            std::uint64_t seed = 0);

/// SO(3) reduction of a spherically symmetric H at mu = (0, 0, mu0), mu0 != 0.
/// Reduced chart is symplectic n = 1 with coordinates (r, p_r);
/// project(q, p) = (|q|, q.p/|q|), section(r, p_r) = (q = (r,0,0),
/// p = (p_r, mu0/r, 0)). Sections differing by the residual S^1 isotropy are
/// equivalent; flow commutation is section-independent. The projection is
/// singular at the origin (domain error).
ReducedSystem reduce_so3(const ScalarField& H, double mu0, std::uint64_t seed = 0);

/// Quotient by contact translations of q_1..q_k at momentum level mu = 0,
/// the only level preserved by the dissipative flow of an invariant H when
/// R(H) != 0; nonzero mu is rejected with that explanation. The reduced
/// chart is contact with n-k degrees of freedom (k = n leaves the pure
/// (z) chart), and the reduced Reeb field is the projection of the full one.
ReducedSystem reduce_contact_translation(const ScalarField& H, int k,
                                         const Eigen::VectorXd& mu,
                                         std::uint64_t seed = 0);

/// Integrates the full flow from x0 and the reduced flow from project(x0) on
/// the shared fixed-step grid and returns max_t ||project(full(t)) - red(t)||.
/// x0 must lie on the mu level set to 1e-9.
double check_commutation(const ScalarField& full_H, const ReducedSystem& reduced,
                         const Point& x0, const IntegratorConfig& cfg);

/**
 * Reconstruction of the full dynamics from a reduced trajectory:
 * d(t) = section(y(t)), the algebraic problem xi(t)_M(d) = X_H(d) - d'(t)
 * is solved by least squares over the algebra basis (residual above 1e-6 is
 * an error signaling a section/trajectory inconsistency), the group curve is
 * integrated by quadrature of xi(t), and c(t) = act(g(t), d(t)).
 */
Trajectory reconstruct(const Trajectory& reduced_traj, const ReducedSystem& reduced,
                       const GroupAction& action);

struct TangencyReport {
    double equality_residual = 0.0;         // complement(level set) vs orbit tangent
    double orbit_in_level_residual = 0.0;   // T(Gx) subset T(level set)
    double vertical_residual = 0.0;         // Reeb onto T(level set), contact only
};

/// Orbit/level-set tangency identities for the abelian families: the
/// level-set tangent space is the numerical null space of the momentum
/// Jacobian, its omega- resp. Lambda-complement must equal the orbit
/// tangent, and contact level sets consist of vertical points.
TangencyReport level_set_tangency_check(const GroupAction& action, const Point& pt);

} // namespace contactred
