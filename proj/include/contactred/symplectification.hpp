#pragma once

#include "contactred/rng.hpp"
#include "contactred/symmetry.hpp"

namespace contactred {

/// The symplectified chart over a contact chart (extra coordinate t last).
Chart symplectify(const Chart& contact_chart);

/// Base contact point under the projection M x R -> M.
Point base_point(const Point& pt);
/// Base components of a tangent vector on the symplectified chart.
TangentVector base_vector(const TangentVector& v);

/// alpha = -e^t eta, evaluated on the base part of v (alpha has no dt term).
double alpha(const Point& pt, const TangentVector& v);

/// Omega = -d(alpha) = e^t (d(eta) + dt ^ eta):
///   Omega(u, v) = e^t [ d(eta)(u_b, v_b) + u_t eta(v_b) - v_t eta(u_b) ].
double omega_lifted(const Point& pt, const TangentVector& u, const TangentVector& v);

/// Lift tangent-space samples of a contact submanifold N to N x R: base
/// vectors zero-padded in t, plus the d/dt direction.
std::vector<SubspaceBasis> lift_submanifold(const std::vector<SubspaceBasis>& samples);

struct LiftedComplementReport {
    double equality_residual = 0.0;    // Omega-complement of the lift vs
                                       // Lambda-complement of the base, x {0}
    double t_component = 0.0;          // max |t entry| over complement vectors
    double horizontality = 0.0;        // max |eta| over complement vectors
};

/// (T N x R)^perp = (T N)^{perp_Lambda} x {0} for coisotropic N of vertical,
/// non-horizontal points; horizontal samples are rejected.
LiftedComplementReport lifted_complement_check(const std::vector<SubspaceBasis>& samples);

/// Momentum of the symplectificated action: e^t J(base). The direct
/// definition alpha(xi_{M x R}) with xi_{M x R} = (xi_M, 0) is exposed
/// separately as a cross-check.
MomentumValue lifted_momentum(const GroupAction& base_action, const Point& pt);
MomentumValue lifted_momentum_direct(const GroupAction& base_action, const Point& pt);

/// Invariance of alpha under the symplectificated action: max over random
/// tangent vectors of |alpha(image)(pushforward v) - alpha(pt)(v)|, with the
/// exact affine pushforward of the family.
double lifted_action_invariance_check(const GroupAction& base_action, const GroupElement& g,
                                      const Point& pt, Rng& rng, int samples = 32);

/// Pull-back residual of Omega under the symplectificated action at random
/// tangent pairs.
double lifted_omega_invariance_check(const GroupAction& base_action, const GroupElement& g,
                                     const Point& pt, Rng& rng, int samples = 32);

struct CommutativityReport {
    int n = 0;
    int k = 0;
    int samples = 0;
    /// max |Omega_bar(H_* u, H_* v) - Omega_tilde(u, v)| over sampled pairs.
    double form_residual = 0.0;
    /// Independence of the section used to represent quotient tangent
    /// vectors, probed with a second section offset along an orbit.
    double section_independence = 0.0;
};

/**
 * The commutativity theorem at mu = 0 for the contact translation family:
 *
 *   path A symplectifies the reduced contact chart; path B reduces the
 *   symplectified chart by realizing J~^{-1}(0) = {p_1..p_k = 0} x R_t and
 *   quotienting by the q_1..q_k translations, evaluating the reduced form on
 *   section-lifted representatives. In the shared (q'', p'', z, t)
 *   coordinates the symplectomorphism is the identity, and the two forms are
 *   compared on random tangent pairs at random points.
 *
 * Requesting mu != 0 is an error: J~^{-1}(mu) is not J^{-1}(mu) x R, because
 * the lifted momentum scales by e^t (see mu_probe).
 */
CommutativityReport check_commutativity(int n, int k, std::uint64_t seed, int samples = 1000);

struct MuProbe {
    Eigen::VectorXd base_momentum;     // J(x) = mu
    Eigen::VectorXd lifted_momentum;   // e^t mu
    double t = 0.0;
    double gap = 0.0;                  // |e^t mu - mu|_inf; > 0 breaks the product level set
};

/// Diagnostic for the mu != 0 obstruction: at a base point with J = mu and
/// t != 0, the lifted momentum e^t mu leaves the mu level.
MuProbe mu_probe(int n, int k, const Eigen::VectorXd& mu, double t);

} // namespace contactred
