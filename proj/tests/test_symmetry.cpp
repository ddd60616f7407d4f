#include <doctest.h>

#include "contactred/geometry.hpp"
#include "contactred/hamiltonian.hpp"
#include "contactred/symmetry.hpp"
#include "oracles.hpp"

using namespace contactred;
using Eigen::Matrix3d;
using Eigen::Vector3d;
using Eigen::VectorXd;

namespace {

Point random_point(const Chart& chart, Rng& rng, double box = 1.0) {
    return Point(chart, rng.uniform_vector(chart.dim(), -box, box));
}

} // namespace

TEST_SUITE("symmetry") {

TEST_CASE("act: identity and family formulas") {
    Rng rng(61);
    Chart sympl3 = Chart::symplectic(3);
    GroupAction rot = GroupAction::so3(sympl3);
    Point pt = random_point(sympl3, rng);
    CHECK((rot.act(rot.identity(), pt).coords - pt.coords).cwiseAbs().maxCoeff() == 0.0);

    for (int i = 0; i < 50; ++i) {
        GroupElement g = rot.random_element(rng);
        Point moved = rot.act(g, pt);
        Vector3d q = pt.q_block(), p = pt.p_block();
        Vector3d Oq = moved.q_block(), Op = moved.p_block();
        CHECK(std::abs(Oq.norm() - q.norm()) < 1e-12);
        CHECK(std::abs(Op.norm() - p.norm()) < 1e-12);
        CHECK((Oq.cross(Op) - g.rotation_matrix() * q.cross(p)).cwiseAbs().maxCoeff() < 1e-12);
    }

    Chart contact = Chart::contact(2);
    GroupAction trans = GroupAction::contact_translation(contact, 2);
    Point x = random_point(contact, rng);
    GroupElement shift = GroupElement::translation(Eigen::Vector2d(0.5, -1.0));
    Point y = trans.act(shift, x);
    CHECK(y.q(0) == doctest::Approx(x.q(0) + 0.5));
    CHECK(y.q(1) == doctest::Approx(x.q(1) - 1.0));
    CHECK((y.p_block() - x.p_block()).cwiseAbs().maxCoeff() == 0.0);
    CHECK(y.z() == x.z());
}

TEST_CASE("contact translations are contactomorphisms") {
    Chart contact = Chart::contact(2);
    GroupAction trans = GroupAction::contact_translation(contact, 1);
    Rng rng(62);
    for (int i = 0; i < 50; ++i) {
        Point pt = random_point(contact, rng);
        GroupElement g = trans.random_element(rng);
        Point image = trans.act(g, pt);
        TangentVector v(pt, rng.uniform_vector(contact.dim(), -1.0, 1.0));
        TangentVector pushed = trans.push_forward(g, v);
        CHECK(std::abs(eta(image, pushed) - eta(pt, v)) < 1e-12);
        TangentVector u(pt, rng.uniform_vector(contact.dim(), -1.0, 1.0));
        TangentVector pushed_u = trans.push_forward(g, u);
        CHECK(std::abs(d_eta(image, pushed_u, pushed) - d_eta(pt, u, v)) < 1e-12);
    }
}

TEST_CASE("exp: one-parameter subgroup and Rodrigues") {
    Chart sympl3 = Chart::symplectic(3);
    GroupAction rot = GroupAction::so3(sympl3);

    AlgebraElement xi = Vector3d(0.0, 0.0, 1.0);
    GroupElement quarter = rot.exp(xi, std::numbers::pi / 2.0);
    Matrix3d expected;
    expected << 0, -1, 0,
                1,  0, 0,
                0,  0, 1;
    CHECK((quarter.rotation_matrix() - expected).cwiseAbs().maxCoeff() < 1e-12);

    CHECK((rot.exp(xi, 0.0).rotation_matrix() - Matrix3d::Identity()).norm() < 1e-15);

    Rng rng(63);
    for (int i = 0; i < 20; ++i) {
        AlgebraElement w = rng.normal_vector(3);
        double s = rng.uniform(-2.0, 2.0), t = rng.uniform(-2.0, 2.0);
        Matrix3d lhs = rot.exp(w, s).rotation_matrix() * rot.exp(w, t).rotation_matrix();
        Matrix3d rhs = rot.exp(w, s + t).rotation_matrix();
        CHECK((lhs - rhs).cwiseAbs().maxCoeff() < 1e-12);
    }

    // cross-check against the axis-angle rotation oracle
    for (int i = 0; i < 20; ++i) {
        Vector3d axis = rng.normal_vector(3).normalized();
        double angle = rng.uniform(-3.0, 3.0);
        Matrix3d O = rot.exp(AlgebraElement(axis), angle).rotation_matrix();
        Vector3d v = rng.normal_vector(3);
        CHECK((O * v - oracles::rotate_axis_angle(axis, angle, v)).cwiseAbs().maxCoeff() <
              1e-12);
    }
}

TEST_CASE("generators: closed form against difference quotients") {
    Rng rng(64);
    struct Case {
        GroupAction action;
        Chart chart;
    };
    Chart sympl2 = Chart::symplectic(2);
    Chart sympl3 = Chart::symplectic(3);
    Chart contact2 = Chart::contact(2);
    std::vector<GroupAction> actions = {GroupAction::lifted_translation(sympl2, 1),
                                        GroupAction::so3(sympl3),
                                        GroupAction::contact_translation(contact2, 2)};
    for (const auto& action : actions) {
        for (int i = 0; i < 30; ++i) {
            Point pt = random_point(action.chart(), rng);
            AlgebraElement xi = rng.uniform_vector(action.algebra_dim(), -1.0, 1.0);
            VectorXd closed = action.generator(xi, pt).components;
            const double h = 1e-6;
            VectorXd forward = action.act(action.exp(xi, h), pt).coords;
            VectorXd backward = action.act(action.exp(xi, -h), pt).coords;
            VectorXd fd = (forward - backward) / (2.0 * h);
            CHECK((closed - fd).cwiseAbs().maxCoeff() < 1e-7);
        }
    }

    // SO(3) textbook value: xi = e_z at q = e_x gives the q-part e_y
    GroupAction rot = GroupAction::so3(sympl3);
    VectorXd coords = VectorXd::Zero(6);
    coords[0] = 1.0;
    Point pt(sympl3, coords);
    VectorXd gen = rot.generator(Vector3d(0.0, 0.0, 1.0), pt).components;
    CHECK(gen[1] == doctest::Approx(1.0));
    CHECK(gen.cwiseAbs().sum() == doctest::Approx(1.0));

    // translations: generator independent of the point
    GroupAction trans = GroupAction::lifted_translation(sympl2, 1);
    AlgebraElement xi(1);
    xi << 0.7;
    VectorXd g1 = trans.generator(xi, random_point(sympl2, rng)).components;
    VectorXd g2 = trans.generator(xi, random_point(sympl2, rng)).components;
    CHECK((g1 - g2).cwiseAbs().maxCoeff() == 0.0);
}

TEST_CASE("momentum values") {
    Chart sympl2 = Chart::symplectic(2);
    GroupAction trans = GroupAction::lifted_translation(sympl2, 2);
    VectorXd coords(4);
    coords << 5.0, -2.0, 3.0, -1.0;
    MomentumValue j = trans.momentum(Point(sympl2, coords));
    CHECK(j[0] == doctest::Approx(3.0));
    CHECK(j[1] == doctest::Approx(-1.0));

    Chart sympl3 = Chart::symplectic(3);
    GroupAction rot = GroupAction::so3(sympl3);
    VectorXd qp = VectorXd::Zero(6);
    qp[0] = 1.0;   // q = e_x
    qp[4] = 1.0;   // p = e_y
    MomentumValue L = rot.momentum(Point(sympl3, qp));
    CHECK((L - Vector3d(0.0, 0.0, 1.0)).cwiseAbs().maxCoeff() < 1e-15);

    Chart contact = Chart::contact(2);
    GroupAction ctrans = GroupAction::contact_translation(contact, 1);
    VectorXd x = VectorXd::Zero(5);
    x[0] = 0.3;
    x[4] = 0.9;
    CHECK(ctrans.momentum(Point(contact, x))[0] == doctest::Approx(0.0));
}

TEST_CASE("momentum condition") {
    Rng rng(65);
    Chart sympl2 = Chart::symplectic(2);
    Chart sympl3 = Chart::symplectic(3);
    Chart contact2 = Chart::contact(2);
    std::vector<GroupAction> actions = {GroupAction::lifted_translation(sympl2, 1),
                                        GroupAction::so3(sympl3),
                                        GroupAction::contact_translation(contact2, 2)};
    for (const auto& action : actions) {
        for (int i = 0; i < 200; ++i) {
            Point pt = random_point(action.chart(), rng);
            CHECK(check_momentum_condition(action, pt) < 1e-6);
        }
    }

    // the contact momentum generates the action: X_{J-hat(xi)} = xi_M
    GroupAction ctrans = GroupAction::contact_translation(contact2, 2);
    for (int i = 0; i < 20; ++i) {
        Point pt = random_point(contact2, rng);
        AlgebraElement xi = rng.uniform_vector(2, -1.0, 1.0);
        ScalarField j_hat(contact2,
                          [&ctrans, xi](const Point& x) { return ctrans.momentum_hat(xi, x); },
                          "J_hat");
        VectorXd field = xh_contact(j_hat, pt).components;
        VectorXd gen = ctrans.generator(xi, pt).components;
        CHECK((field - gen).cwiseAbs().maxCoeff() < 1e-9);
    }
}

TEST_CASE("equivariance") {
    Rng rng(66);
    Chart sympl3 = Chart::symplectic(3);
    GroupAction rot = GroupAction::so3(sympl3);
    for (int i = 0; i < 200; ++i) {
        Point pt = random_point(sympl3, rng);
        GroupElement g = rot.random_element(rng);
        CHECK(check_equivariance(rot, g, pt) < 1e-12);
    }
    CHECK(check_equivariance(rot, rot.identity(), random_point(sympl3, rng)) == 0.0);

    Chart sympl2 = Chart::symplectic(2);
    GroupAction trans = GroupAction::lifted_translation(sympl2, 2);
    for (int i = 0; i < 50; ++i) {
        Point pt = random_point(sympl2, rng);
        CHECK(check_equivariance(trans, trans.random_element(rng), pt) < 1e-12);
    }
}

TEST_CASE("momentum drift along flows") {
    Rng rng(67);
    IntegratorConfig cfg;
    cfg.t1 = 10.0;
    cfg.record_every = 10;

    // central potential: angular momentum conserved
    Chart sympl3 = Chart::symplectic(3);
    ScalarField kepler = central_potential(sympl3, 1.0, kepler_potential());
    GroupAction rot = GroupAction::so3(sympl3);
    VectorXd x0(6);
    x0 << 1.0, 0.0, 0.0, 0.1, 1.0, 0.0;
    Trajectory traj = flow_hamiltonian(kepler, Point(sympl3, x0), cfg);
    MomentumDriftReport report = momentum_dissipation_check(rot, kepler, traj, rng);
    CHECK(report.max_residual < 1e-8);

    // contact free damped particle: p(t) = p(0) e^{-gamma t}
    Chart contact = Chart::contact(1);
    const double gamma = 0.2;
    ScalarField damped = contact_damped(contact, 1.0, zero_potential(), gamma);
    GroupAction ctrans = GroupAction::contact_translation(contact, 1);
    IntegratorConfig cfg5;
    cfg5.t1 = 5.0;
    Point y0(contact, Eigen::Vector3d(0.0, 0.8, 0.1));
    Trajectory dtraj = flow_hamiltonian(damped, y0, cfg5);
    MomentumDriftReport dreport = momentum_dissipation_check(ctrans, damped, dtraj, rng);
    CHECK(dreport.max_residual < 1e-6);

    // mu = 0 stays zero
    Point zero_level(contact, Eigen::Vector3d(0.4, 0.0, 0.7));
    Trajectory ztraj = flow_hamiltonian(damped, zero_level, cfg5);
    MomentumDriftReport zreport = momentum_dissipation_check(ctrans, damped, ztraj, rng);
    CHECK(zreport.max_residual < 1e-9);
    for (std::size_t i = 0; i < ztraj.size(); ++i)
        CHECK(std::abs(ztraj.states[i][contact.p_index(0)]) < 1e-9);

    // non-invariant H is rejected
    Chart sympl2 = Chart::symplectic(2);
    ScalarField tilted = separable_mechanical(sympl2, 1.0, harmonic_potential(1.0));
    GroupAction trans = GroupAction::lifted_translation(sympl2, 1);
    Trajectory straj =
        flow_hamiltonian(tilted, Point(sympl2, VectorXd::Ones(4)), cfg5);
    CHECK_THROWS_AS(momentum_dissipation_check(trans, tilted, straj, rng),
                    std::invalid_argument);
}

TEST_CASE("group element validation") {
    Matrix3d skew;
    skew << 1, 0.5, 0,
            0, 1, 0,
            0, 0, 1;
    CHECK_THROWS_AS(GroupElement::rotation(skew), std::invalid_argument);
    Matrix3d reflect = Matrix3d::Identity();
    reflect(2, 2) = -1.0;
    CHECK_THROWS_AS(GroupElement::rotation(reflect), std::invalid_argument);
    CHECK_THROWS_AS(GroupAction::so3(Chart::symplectic(2)), std::invalid_argument);
    CHECK_THROWS_AS(GroupAction::lifted_translation(Chart::symplectic(2), 3),
                    std::invalid_argument);
}

} // TEST_SUITE
