#pragma once

#include "contactred/dynamics.hpp"
#include "contactred/point.hpp"
#include "contactred/rng.hpp"
#include "contactred/scalar_field.hpp"

namespace contactred {

enum class ActionFamily { LiftedTranslation, LiftedRotationSO3, ContactTranslation };

std::string to_string(ActionFamily family);

/// Lie algebra element: xi in R^k for the translation families, xi in R^3
/// identified with so(3) via the hat map for rotations.
using AlgebraElement = Eigen::VectorXd;

/// Momentum value, coordinates in g* under the dot-product identification.
using MomentumValue = Eigen::VectorXd;

/// xi^ as a 3x3 antisymmetric matrix, so that xi^ v = xi x v.
Eigen::Matrix3d hat(const Eigen::Vector3d& xi);

/// A group element of one of the three families. Rotations are validated:
/// ||O^T O - I|| < 1e-10 and det O > 0.
class GroupElement {
public:
    static GroupElement translation(Eigen::VectorXd a);
    static GroupElement rotation(const Eigen::Matrix3d& O);

    bool is_rotation() const { return is_rotation_; }
    const Eigen::VectorXd& translation_vector() const;
    const Eigen::Matrix3d& rotation_matrix() const;

private:
    GroupElement() = default;
    bool is_rotation_ = false;
    Eigen::VectorXd a_;
    Eigen::Matrix3d O_;
};

/**
 * One of three concrete symmetry families:
 *
 *  - LiftedTranslation(k) on symplectic charts: the cotangent lift of
 *    q_{1..k} -> q_{1..k} + a, with momentum J = (p_1..p_k).
 *  - LiftedRotationSO3 on the symplectic chart n = 3: (q, p) -> (Oq, Op),
 *    with momentum J = q x p.
 *  - ContactTranslation(k) on contact charts: q_{1..k} -> q_{1..k} + a,
 *    a contactomorphism, with contact momentum J(x)xi = -eta(xi_M) = p . xi.
 *
 * These cover the worked momentum-map examples (linear momentum, angular
 * momentum, contact momentum) and every reduction scenario in this library.
 * The surface (act, exp, generator, momentum, coadjoint) is the extension
 * point for further families.
 */
class GroupAction {
public:
    static GroupAction lifted_translation(const Chart& chart, int k);
    static GroupAction so3(const Chart& chart);
    static GroupAction contact_translation(const Chart& chart, int k);

    ActionFamily family() const { return family_; }
    const Chart& chart() const { return chart_; }
    int k() const { return k_; }
    int algebra_dim() const;
    bool is_abelian() const { return family_ != ActionFamily::LiftedRotationSO3; }

    Point act(const GroupElement& g, const Point& pt) const;
    GroupElement exp(const AlgebraElement& xi, double t = 1.0) const;
    /// Infinitesimal generator xi_M(x), closed form per family.
    TangentVector generator(const AlgebraElement& xi, const Point& pt) const;
    MomentumValue momentum(const Point& pt) const;
    /// J-hat(xi)(x) = J(x) . xi.
    double momentum_hat(const AlgebraElement& xi, const Point& pt) const;
    /// Ad*_{g^-1} mu under the dot-product identification: identity for the
    /// abelian families, mu -> O mu for rotations.
    MomentumValue coadjoint(const GroupElement& g, const MomentumValue& mu) const;
    /// Exact pushforward of tangent vectors (the families are affine/linear).
    TangentVector push_forward(const GroupElement& g, const TangentVector& v) const;
    GroupElement identity() const;
    GroupElement random_element(Rng& rng) const;

    /// d(momentum)/dx by central differences; rows indexed by the algebra basis.
    Eigen::MatrixXd momentum_jacobian_fd(const Point& pt) const;

private:
    GroupAction(ActionFamily family, Chart chart, int k)
        : family_(family), chart_(chart), k_(k) {}
    ActionFamily family_;
    Chart chart_;
    int k_;
};

/// Max |H(act(g, x)) - H(x)| over sampled random (g, x).
double invariance_residual(const GroupAction& action, const ScalarField& H, Rng& rng,
                           int samples = 32, double box = 1.0);

/// Observables "J1".."Jd" recording the momentum components along a flow.
std::vector<Observable> momentum_observables(const GroupAction& action);

/// Momentum condition residual at pt: finite-difference d(J-hat(xi)) against
/// flat(xi_M) (symplectic) resp. i_{xi_M} d(eta) (contact), max over the
/// algebra basis, componentwise.
double check_momentum_condition(const GroupAction& action, const Point& pt);

/// Equivariance residual |J(act(g, x)) - Ad*_{g^-1} J(x)|_inf.
double check_equivariance(const GroupAction& action, const GroupElement& g, const Point& pt);

struct MomentumDriftReport {
    std::vector<double> residual;   // per recorded time, max over components
    double max_residual = 0.0;
};

/// Conservation of J along a symplectic flow of an invariant H, or the decay
/// law J-hat(xi)(t) = J-hat(xi)(0) exp(-int R(H) dt) along a contact flow.
/// The invariance precondition is asserted by randomized sampling (< 1e-9).
MomentumDriftReport momentum_dissipation_check(const GroupAction& action, const ScalarField& H,
                                               const Trajectory& traj, Rng& rng);

} // namespace contactred
