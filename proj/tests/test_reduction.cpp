#include <doctest.h>

#include "contactred/geometry.hpp"
#include "contactred/hamiltonian.hpp"
#include "contactred/reduction.hpp"
#include "oracles.hpp"

using namespace contactred;
using Eigen::VectorXd;

namespace {

IntegratorConfig rk4_config(double t1, double h = 1e-3, int record_every = 1) {
    IntegratorConfig cfg;
    cfg.step = h;
    cfg.t1 = t1;
    cfg.record_every = record_every;
    return cfg;
}

} // namespace

TEST_SUITE("reduction") {

TEST_CASE("translation reduction: substitution oracle") {
    Chart chart = Chart::symplectic(2);
    // H = (p1^2 + p2^2)/2 + U(q2), invariant under q1 translations
    ScalarField H = separable_mechanical(chart, 1.0, harmonic_potential(1.0, 1));
    const double c = 0.8;
    VectorXd mu(1);
    mu << c;
    ReducedSystem red = reduce_translation_symplectic(H, 1, mu);
    CHECK(red.reduced_chart.dof() == 1);

    Rng rng(71);
    for (int i = 0; i < 50; ++i) {
        Point y(red.reduced_chart, rng.uniform_vector(2, -1.0, 1.0));
        const double q2 = y.coords[0], p2 = y.coords[1];
        double expected = 0.5 * p2 * p2 + 0.5 * q2 * q2 + 0.5 * c * c;
        CHECK(red.reduced_H(y) == doctest::Approx(expected).epsilon(1e-12));
        // project . section = id, momentum(section) = mu, H(section) = H_mu
        Point back = red.project(red.section(y));
        CHECK((back.coords - y.coords).cwiseAbs().maxCoeff() < 1e-10);
        GroupAction action = action_for(red, chart);
        CHECK((action.momentum(red.section(y)) - mu).cwiseAbs().maxCoeff() < 1e-15);
        CHECK(H(red.section(y)) == doctest::Approx(red.reduced_H(y)).epsilon(1e-14));
    }

    // mu = 0 on a free particle reduces to a free particle
    ScalarField free_H = separable_mechanical(chart, 1.0, zero_potential());
    ReducedSystem free_red = reduce_translation_symplectic(free_H, 1, VectorXd::Zero(1));
    Point y0(free_red.reduced_chart, Eigen::Vector2d(0.0, 0.7));
    CHECK(free_red.reduced_H(y0) == doctest::Approx(0.5 * 0.49));

    // quadratic H: both flows are linear, commutation near machine accuracy
    VectorXd x0(4);
    x0 << 0.0, 0.5, c, -0.3;
    CHECK(check_commutation(H, red, Point(chart, x0), rk4_config(5.0)) < 1e-8);

    // rejected configurations
    CHECK_THROWS_AS(reduce_translation_symplectic(H, 2, VectorXd::Zero(2)),
                    std::invalid_argument);   // k = n
    ScalarField tilted = separable_mechanical(chart, 1.0, harmonic_potential(1.0));
    CHECK_THROWS_AS(reduce_translation_symplectic(tilted, 1, mu), std::invalid_argument);
}

TEST_CASE("so3 reduction: Kepler") {
    Chart chart = Chart::symplectic(3);
    ScalarField H = central_potential(chart, 1.0, kepler_potential());
    ReducedSystem red = reduce_so3(H, 1.0);
    CHECK(red.reduced_chart.dof() == 1);

    // effective potential: H_mu = p_r^2/2 + mu0^2/(2 r^2) - 1/r
    Rng rng(72);
    for (int i = 0; i < 30; ++i) {
        const double r = rng.uniform(0.4, 2.0), pr = rng.uniform(-1.0, 1.0);
        Point y(red.reduced_chart, Eigen::Vector2d(r, pr));
        double expected = 0.5 * pr * pr + 0.5 / (r * r) - 1.0 / r;
        CHECK(red.reduced_H(y) == doctest::Approx(expected).epsilon(1e-12));
        Point back = red.project(red.section(y));
        CHECK((back.coords - y.coords).cwiseAbs().maxCoeff() < 1e-12);
        GroupAction rot = action_for(red, chart);
        CHECK((rot.momentum(red.section(y)) - red.mu).cwiseAbs().maxCoeff() < 1e-12);
    }

    // circular orbit seed r = 1 (the minimum of the effective potential)
    Point seed(red.reduced_chart, Eigen::Vector2d(1.0, 0.0));
    CHECK(std::abs(red.reduced_H.grad(seed).components[0]) < 1e-12);
    Trajectory circ = flow_hamiltonian(red.reduced_H, seed, rk4_config(5.0, 1e-3, 10));
    for (const auto& state : circ.states) CHECK(std::abs(state[0] - 1.0) < 1e-6);

    // eccentric orbit: commutation of projection and flows
    VectorXd x0(6);
    x0 << 1.0, 0.0, 0.0, 0.1, 1.0, 0.0;   // J = (0, 0, 1)
    CHECK(check_commutation(H, red, Point(chart, x0), rk4_config(5.0)) < 1e-5);

    CHECK_THROWS_AS(reduce_so3(H, 0.0), std::invalid_argument);
    Point degenerate(red.reduced_chart, Eigen::Vector2d(-0.2, 0.0));
    CHECK_THROWS_AS(red.section(degenerate), std::domain_error);
    CHECK_THROWS_AS(red.project(Point::origin(chart)), std::domain_error);
    // off the level set
    VectorXd off(6);
    off << 1.0, 0.0, 0.0, 0.0, 0.5, 0.0;
    CHECK_THROWS_AS(check_commutation(H, red, Point(chart, off), rk4_config(1.0)),
                    std::invalid_argument);
}

TEST_CASE("contact translation reduction") {
    Chart chart = Chart::contact(1);
    const double gamma = 0.3;
    ScalarField H = contact_damped(chart, 1.0, zero_potential(), gamma);
    ReducedSystem red = reduce_contact_translation(H, 1, VectorXd::Zero(1));
    CHECK(red.reduced_chart.kind() == ChartKind::Contact);
    CHECK(red.reduced_chart.dof() == 0);
    CHECK(red.reduced_chart.dim() == 1);

    // reduced Hamiltonian is gamma z and the reduced flow is z' = -gamma z
    Point z0(red.reduced_chart, VectorXd::Constant(1, 2.0));
    CHECK(red.reduced_H(z0) == doctest::Approx(gamma * 2.0));
    Trajectory traj = flow_hamiltonian(red.reduced_H, z0, rk4_config(3.0, 1e-3, 10));
    for (std::size_t i = 0; i < traj.size(); ++i)
        CHECK(std::abs(traj.states[i][0] - 2.0 * std::exp(-gamma * traj.times[i])) < 1e-9);

    // Reeb projects to the reduced Reeb
    Rng rng(73);
    for (int i = 0; i < 20; ++i) {
        VectorXd x = rng.uniform_vector(3, -1.0, 1.0);
        x[chart.p_index(0)] = 0.0;
        Point pt(chart, x);
        // the projection is linear here, so the pushforward is the same map
        VectorXd projected_reeb =
            red.project(Point(chart, VectorXd(x + reeb(pt).components))).coords -
            red.project(pt).coords;
        CHECK((projected_reeb - reeb(red.project(pt)).components).cwiseAbs().maxCoeff() <
              1e-14);
        // H_mu . project = H on the level set
        CHECK(red.reduced_H(red.project(pt)) == doctest::Approx(H(pt)).epsilon(1e-12));
    }

    // commutation over the zero level
    VectorXd x0(3);
    x0 << 0.4, 0.0, 1.2;
    CHECK(check_commutation(H, red, Point(chart, x0), rk4_config(10.0)) < 1e-7);

    // nonzero mu is rejected with the decay explanation
    VectorXd bad_mu(1);
    bad_mu << 0.2;
    CHECK_THROWS_WITH_AS(reduce_contact_translation(H, 1, bad_mu),
                         doctest::Contains("only mu = 0"), std::invalid_argument);

    // a richer contact reduction: n = 2, k = 1
    Chart big = Chart::contact(2);
    ScalarField H2 = contact_damped(big, 1.0, harmonic_potential(1.0, 1), 0.2);
    ReducedSystem red2 = reduce_contact_translation(H2, 1, VectorXd::Zero(1));
    CHECK(red2.reduced_chart.dof() == 1);
    VectorXd y0(5);
    y0 << 0.3, 0.7, 0.0, -0.2, 0.5;
    CHECK(check_commutation(H2, red2, Point(big, y0), rk4_config(10.0)) < 1e-7);
}

TEST_CASE("reconstruction: Kepler circular orbit") {
    Chart chart = Chart::symplectic(3);
    ScalarField H = central_potential(chart, 1.0, kepler_potential());
    ReducedSystem red = reduce_so3(H, 1.0);
    GroupAction rot = action_for(red, chart);

    Point seed(red.reduced_chart, Eigen::Vector2d(1.0, 0.0));
    Trajectory reduced_traj = flow_hamiltonian(red.reduced_H, seed, rk4_config(5.0));
    Trajectory rebuilt = reconstruct(reduced_traj, red, rot);

    // closed form: q(t) = (cos t, sin t, 0) at omega = mu0 / (m r^2) = 1
    for (std::size_t i = 0; i < rebuilt.size(); i += 100) {
        const double t = rebuilt.times[i];
        CHECK(std::abs(rebuilt.states[i][0] - std::cos(t)) < 1e-6);
        CHECK(std::abs(rebuilt.states[i][1] - std::sin(t)) < 1e-6);
        CHECK(std::abs(rebuilt.states[i][2]) < 1e-12);
    }

    // matches the directly integrated full flow
    Trajectory direct =
        flow_hamiltonian(H, red.section(seed), rk4_config(5.0));
    REQUIRE(direct.size() == rebuilt.size());
    double worst = 0.0;
    for (std::size_t i = 0; i < direct.size(); ++i)
        worst = std::max(worst, (direct.states[i] - rebuilt.states[i]).norm());
    CHECK(worst < 1e-4);
}

TEST_CASE("reconstruction: eccentric Kepler orbit") {
    Chart chart = Chart::symplectic(3);
    ScalarField H = central_potential(chart, 1.0, kepler_potential());
    ReducedSystem red = reduce_so3(H, 1.0);
    GroupAction rot = action_for(red, chart);

    Point seed(red.reduced_chart, Eigen::Vector2d(1.0, 0.1));
    Trajectory reduced_traj = flow_hamiltonian(red.reduced_H, seed, rk4_config(5.0));
    Trajectory rebuilt = reconstruct(reduced_traj, red, rot);
    Trajectory direct = flow_hamiltonian(H, red.section(seed), rk4_config(5.0));
    REQUIRE(direct.size() == rebuilt.size());
    double worst = 0.0;
    for (std::size_t i = 0; i < direct.size(); ++i)
        worst = std::max(worst, (direct.states[i] - rebuilt.states[i]).norm());
    CHECK(worst < 1e-4);
}

TEST_CASE("reconstruction: contact translation with drift") {
    Chart chart = Chart::contact(2);
    VectorXd drift(2);
    drift << 0.3, 0.0;
    ScalarField H = translation_invariant(chart, 1.0, drift, 0.2);
    ReducedSystem red = reduce_contact_translation(H, 1, VectorXd::Zero(1));
    GroupAction trans = action_for(red, chart);

    VectorXd y0(3);
    y0 << 0.5, -0.4, 0.8;   // (q2, p2, z)
    Trajectory reduced_traj =
        flow_hamiltonian(red.reduced_H, Point(red.reduced_chart, y0), rk4_config(5.0));
    Trajectory rebuilt = reconstruct(reduced_traj, red, trans);
    Trajectory direct = flow_hamiltonian(
        H, red.section(Point(red.reduced_chart, y0)), rk4_config(5.0));
    REQUIRE(direct.size() == rebuilt.size());
    double worst = 0.0;
    for (std::size_t i = 0; i < direct.size(); ++i)
        worst = std::max(worst, (direct.states[i] - rebuilt.states[i]).norm());
    CHECK(worst < 1e-8);

    // trivial group curve: when X_H(d) = d' the reconstruction is the section
    VectorXd rest(3);
    rest << 0.0, 0.0, 0.6;
    ScalarField no_drift = translation_invariant(chart, 1.0, VectorXd::Zero(2), 0.2);
    ReducedSystem red0 = reduce_contact_translation(no_drift, 1, VectorXd::Zero(1));
    Trajectory rtraj =
        flow_hamiltonian(red0.reduced_H, Point(red0.reduced_chart, rest), rk4_config(2.0));
    Trajectory rb = reconstruct(rtraj, red0, action_for(red0, chart));
    for (std::size_t i = 0; i < rb.size(); ++i) {
        Point d = red0.section(rtraj.state_point(i));
        CHECK((rb.states[i] - d.coords).cwiseAbs().maxCoeff() < 1e-12);
    }
}

TEST_CASE("level set tangency") {
    Rng rng(74);
    // symplectic translations, k = 1, n = 2
    Chart sympl = Chart::symplectic(2);
    GroupAction trans = GroupAction::lifted_translation(sympl, 1);
    for (int i = 0; i < 10; ++i) {
        Point pt(sympl, rng.uniform_vector(4, -1.0, 1.0));
        TangencyReport report = level_set_tangency_check(trans, pt);
        CHECK(report.equality_residual < 1e-9);
        CHECK(report.orbit_in_level_residual < 1e-9);
    }
    // contact translations at mu = 0: vertical points
    Chart contact = Chart::contact(2);
    GroupAction ctrans = GroupAction::contact_translation(contact, 1);
    for (int i = 0; i < 10; ++i) {
        VectorXd x = rng.uniform_vector(5, -1.0, 1.0);
        x[contact.p_index(0)] = 0.0;
        TangencyReport report = level_set_tangency_check(ctrans, Point(contact, x));
        CHECK(report.equality_residual < 1e-9);
        CHECK(report.orbit_in_level_residual < 1e-9);
        CHECK(report.vertical_residual < 1e-10);
    }
    // SO(3) has G_mu != G at generic mu
    GroupAction rot = GroupAction::so3(Chart::symplectic(3));
    CHECK_THROWS_AS(level_set_tangency_check(rot, Point::origin(Chart::symplectic(3))),
                    std::invalid_argument);
}

} // TEST_SUITE
