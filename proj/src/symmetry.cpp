#include "contactred/symmetry.hpp"

#include <cmath>

#include "contactred/geometry.hpp"

namespace contactred {

using Eigen::Matrix3d;
using Eigen::MatrixXd;
using Eigen::Vector3d;
using Eigen::VectorXd;

std::string to_string(ActionFamily family) {
    switch (family) {
        case ActionFamily::LiftedTranslation:  return "lifted_translation";
        case ActionFamily::LiftedRotationSO3:  return "lifted_rotation_so3";
        case ActionFamily::ContactTranslation: return "contact_translation";
    }
    return "?";
}

Matrix3d hat(const Vector3d& xi) {
    Matrix3d m;
    m <<     0, -xi[2],  xi[1],
         xi[2],      0, -xi[0],
        -xi[1],  xi[0],      0;
    return m;
}

GroupElement GroupElement::translation(VectorXd a) {
    if (!a.allFinite()) throw std::invalid_argument("translation entries must be finite");
    GroupElement g;
    g.is_rotation_ = false;
    g.a_ = std::move(a);
    return g;
}

GroupElement GroupElement::rotation(const Matrix3d& O) {
    if ((O.transpose() * O - Matrix3d::Identity()).norm() >= 1e-10)
        throw std::invalid_argument("rotation matrix is not orthonormal");
    if (O.determinant() <= 0.0)
        throw std::invalid_argument("rotation matrix must have det +1");
    GroupElement g;
    g.is_rotation_ = true;
    g.O_ = O;
    return g;
}

const VectorXd& GroupElement::translation_vector() const {
    if (is_rotation_) throw std::logic_error("group element is a rotation");
    return a_;
}

const Matrix3d& GroupElement::rotation_matrix() const {
    if (!is_rotation_) throw std::logic_error("group element is a translation");
    return O_;
}

GroupAction GroupAction::lifted_translation(const Chart& chart, int k) {
    require_kind(chart, ChartKind::Symplectic, "lifted_translation");
    if (k < 1 || k > chart.dof())
        throw std::invalid_argument("lifted_translation requires 1 <= k <= n");
    return GroupAction(ActionFamily::LiftedTranslation, chart, k);
}

GroupAction GroupAction::so3(const Chart& chart) {
    require_kind(chart, ChartKind::Symplectic, "so3");
    if (chart.dof() != 3) throw std::invalid_argument("so3 action requires n = 3");
    return GroupAction(ActionFamily::LiftedRotationSO3, chart, 3);
}

GroupAction GroupAction::contact_translation(const Chart& chart, int k) {
    require_kind(chart, ChartKind::Contact, "contact_translation");
    if (k < 1 || k > chart.dof())
        throw std::invalid_argument("contact_translation requires 1 <= k <= n");
    return GroupAction(ActionFamily::ContactTranslation, chart, k);
}

int GroupAction::algebra_dim() const {
    return family_ == ActionFamily::LiftedRotationSO3 ? 3 : k_;
}

Point GroupAction::act(const GroupElement& g, const Point& pt) const {
    require_same_chart(chart_, pt.chart, "GroupAction::act");
    VectorXd coords = pt.coords;
    if (family_ == ActionFamily::LiftedRotationSO3) {
        const Matrix3d& O = g.rotation_matrix();
        coords.head(3) = O * pt.q_block();
        coords.segment(3, 3) = O * pt.p_block();   // row form p O^T equals O p
        return Point(chart_, std::move(coords));
    }
    const VectorXd& a = g.translation_vector();
    if (a.size() != k_)
        throw std::invalid_argument("translation vector must have k entries");
    coords.head(k_) += a;
    return Point(chart_, std::move(coords));
}

GroupElement GroupAction::exp(const AlgebraElement& xi, double t) const {
    if (xi.size() != algebra_dim())
        throw std::invalid_argument("algebra element has wrong dimension");
    if (family_ != ActionFamily::LiftedRotationSO3)
        return GroupElement::translation(t * xi);
    // Rodrigues formula for exp(t xi^)
    Vector3d axis = xi;
    const double theta = t * axis.norm();
    Matrix3d K = hat(Vector3d(t * axis));
    if (std::abs(theta) < 1e-12)
        return GroupElement::rotation(Matrix3d(Matrix3d::Identity() + K + 0.5 * K * K));
    K /= theta;
    Matrix3d O = Matrix3d::Identity() + std::sin(theta) * K +
                 (1.0 - std::cos(theta)) * K * K;
    return GroupElement::rotation(O);
}

TangentVector GroupAction::generator(const AlgebraElement& xi, const Point& pt) const {
    require_same_chart(chart_, pt.chart, "GroupAction::generator");
    if (xi.size() != algebra_dim())
        throw std::invalid_argument("algebra element has wrong dimension");
    VectorXd c = VectorXd::Zero(chart_.dim());
    if (family_ == ActionFamily::LiftedRotationSO3) {
        Vector3d v = xi;
        c.head(3) = v.cross(Vector3d(pt.q_block()));
        c.segment(3, 3) = v.cross(Vector3d(pt.p_block()));
    } else {
        c.head(k_) = xi;
    }
    return TangentVector(pt, std::move(c));
}

MomentumValue GroupAction::momentum(const Point& pt) const {
    require_same_chart(chart_, pt.chart, "GroupAction::momentum");
    if (family_ == ActionFamily::LiftedRotationSO3) {
        Vector3d q = pt.q_block();
        Vector3d p = pt.p_block();
        return q.cross(p);
    }
    return pt.p_block().head(k_);
}

double GroupAction::momentum_hat(const AlgebraElement& xi, const Point& pt) const {
    if (xi.size() != algebra_dim())
        throw std::invalid_argument("algebra element has wrong dimension");
    return momentum(pt).dot(xi);
}

MomentumValue GroupAction::coadjoint(const GroupElement& g, const MomentumValue& mu) const {
    if (mu.size() != algebra_dim())
        throw std::invalid_argument("momentum value has wrong dimension");
    if (family_ == ActionFamily::LiftedRotationSO3)
        return g.rotation_matrix() * mu;
    return mu;   // abelian: Ad* is trivial
}

TangentVector GroupAction::push_forward(const GroupElement& g, const TangentVector& v) const {
    require_same_chart(chart_, v.base.chart, "GroupAction::push_forward");
    Point image = act(g, v.base);
    if (family_ != ActionFamily::LiftedRotationSO3)
        return TangentVector(image, v.components);   // translations: identity on components
    VectorXd c = v.components;
    const Matrix3d& O = g.rotation_matrix();
    c.head(3) = O * v.components.head(3);
    c.segment(3, 3) = O * v.components.segment(3, 3);
    return TangentVector(image, std::move(c));
}

GroupElement GroupAction::identity() const {
    if (family_ == ActionFamily::LiftedRotationSO3)
        return GroupElement::rotation(Matrix3d::Identity());
    return GroupElement::translation(VectorXd::Zero(k_));
}

GroupElement GroupAction::random_element(Rng& rng) const {
    if (family_ == ActionFamily::LiftedRotationSO3) {
        Vector3d axis = rng.normal_vector(3);
        double norm = axis.norm();
        if (norm < 1e-12) axis = Vector3d::UnitZ(); else axis /= norm;
        double angle = rng.uniform(0.0, 2.0 * std::numbers::pi);
        return exp(AlgebraElement(angle * axis), 1.0);
    }
    return GroupElement::translation(rng.uniform_vector(k_, -2.0, 2.0));
}

MatrixXd GroupAction::momentum_jacobian_fd(const Point& pt) const {
    const int d = algebra_dim();
    MatrixXd jac(d, chart_.dim());
    for (int j = 0; j < chart_.dim(); ++j) {
        const double h = fd_step(pt.coords[j]);
        VectorXd forward = pt.coords, backward = pt.coords;
        forward[j] += h;
        backward[j] -= h;
        jac.col(j) = (momentum(Point(chart_, forward)) - momentum(Point(chart_, backward))) /
                     (2.0 * h);
    }
    return jac;
}

std::vector<Observable> momentum_observables(const GroupAction& action) {
    std::vector<Observable> obs;
    for (int a = 0; a < action.algebra_dim(); ++a)
        obs.emplace_back("J" + std::to_string(a + 1), [action, a](const Point& pt) {
            return action.momentum(pt)[a];
        });
    return obs;
}

double invariance_residual(const GroupAction& action, const ScalarField& H, Rng& rng,
                           int samples, double box) {
    require_same_chart(action.chart(), H.chart(), "invariance_residual");
    double worst = 0.0;
    for (int s = 0; s < samples; ++s) {
        Point pt(action.chart(), rng.uniform_vector(action.chart().dim(), -box, box));
        GroupElement g = action.random_element(rng);
        worst = std::max(worst, std::abs(H(action.act(g, pt)) - H(pt)));
    }
    return worst;
}

namespace {

// i_v d(eta) as covector components: (-v_p, v_q, 0).
VectorXd interior_deta(const Point& pt, const TangentVector& v) {
    const int n = pt.chart.dof();
    VectorXd c = VectorXd::Zero(pt.chart.dim());
    for (int i = 0; i < n; ++i) {
        c[pt.chart.q_index(i)] = -v.components[pt.chart.p_index(i)];
        c[pt.chart.p_index(i)] = v.components[pt.chart.q_index(i)];
    }
    return c;
}

} // namespace

double check_momentum_condition(const GroupAction& action, const Point& pt) {
    require_same_chart(action.chart(), pt.chart, "check_momentum_condition");
    const Chart& chart = action.chart();
    double worst = 0.0;
    for (int a = 0; a < action.algebra_dim(); ++a) {
        AlgebraElement xi = VectorXd::Zero(action.algebra_dim());
        xi[a] = 1.0;
        ScalarField j_hat(chart,
                          [&action, xi](const Point& x) { return action.momentum_hat(xi, x); },
                          "J_hat");
        VectorXd d_jhat = j_hat.grad(pt).components;   // central differences
        TangentVector gen = action.generator(xi, pt);
        VectorXd target = chart.kind() == ChartKind::Symplectic
                              ? flat_symplectic(pt, gen).components
                              : interior_deta(pt, gen);
        worst = std::max(worst, (d_jhat - target).cwiseAbs().maxCoeff());
    }
    return worst;
}

double check_equivariance(const GroupAction& action, const GroupElement& g, const Point& pt) {
    MomentumValue moved = action.momentum(action.act(g, pt));
    MomentumValue coad = action.coadjoint(g, action.momentum(pt));
    return (moved - coad).cwiseAbs().maxCoeff();
}

MomentumDriftReport momentum_dissipation_check(const GroupAction& action, const ScalarField& H,
                                               const Trajectory& traj, Rng& rng) {
    require_same_chart(action.chart(), H.chart(), "momentum_dissipation_check");
    require_same_chart(action.chart(), traj.chart, "momentum_dissipation_check");
    const double inv = invariance_residual(action, H, rng);
    if (inv >= 1e-9)
        throw std::invalid_argument(
            "momentum_dissipation_check: H is not invariant under the action (sampled residual " +
            std::to_string(inv) + ")");

    MomentumDriftReport report;
    if (traj.size() == 0) return report;
    MomentumValue j0 = action.momentum(traj.state_point(0));

    std::vector<double> decay(traj.size(), 1.0);
    if (traj.chart.kind() == ChartKind::Contact) {
        std::vector<double> reeb_h(traj.size());
        for (std::size_t i = 0; i < traj.size(); ++i)
            reeb_h[i] = H.reeb_derivative(traj.state_point(i));
        std::vector<double> integral = cumulative_trapezoid(traj.times, reeb_h);
        for (std::size_t i = 0; i < traj.size(); ++i) decay[i] = std::exp(-integral[i]);
    }

    report.residual.resize(traj.size());
    for (std::size_t i = 0; i < traj.size(); ++i) {
        MomentumValue ji = action.momentum(traj.state_point(i));
        report.residual[i] = (ji - decay[i] * j0).cwiseAbs().maxCoeff();
        report.max_residual = std::max(report.max_residual, report.residual[i]);
    }
    return report;
}

} // namespace contactred
