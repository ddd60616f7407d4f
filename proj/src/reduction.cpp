#include "contactred/reduction.hpp"

#include <cmath>

#include "contactred/geometry.hpp"
#include "contactred/hamiltonian.hpp"
#include "contactred/linalg.hpp"

namespace contactred {

using Eigen::MatrixXd;
using Eigen::Vector3d;
using Eigen::VectorXd;

namespace {

constexpr double kInvarianceTol = 1e-9;
constexpr double kLevelSetTol = 1e-9;
constexpr double kLeastSquaresTol = 1e-6;

void require_invariant(const GroupAction& action, const ScalarField& H, std::uint64_t seed,
                       const char* op) {
    Rng rng(fnv1a("invariance") ^ seed);
    const double residual = invariance_residual(action, H, rng);
    if (residual >= kInvarianceTol)
        throw std::invalid_argument(std::string(op) + ": H is not invariant under the action " +
                                    "(sampled residual " + std::to_string(residual) + ")");
}

ScalarField compose_with_section(const ScalarField& H, Chart reduced_chart,
                                 std::function<Point(const Point&)> section,
                                 std::function<MatrixXd(const Point&)> section_jacobian) {
    auto eval = [H, section](const Point& y) { return H(section(y)); };
    auto grad = [H, section, section_jacobian](const Point& y) {
        VectorXd g_full = H.grad(section(y)).components;
        return VectorXd(section_jacobian(y).transpose() * g_full);
    };
    return ScalarField(reduced_chart, eval, grad, H.name() + "_reduced");
}

} // namespace

GroupAction action_for(const ReducedSystem& reduced, const Chart& full_chart) {
    switch (reduced.family) {
        case ActionFamily::LiftedTranslation:
            return GroupAction::lifted_translation(full_chart, reduced.k);
        case ActionFamily::LiftedRotationSO3:
            return GroupAction::so3(full_chart);
        case ActionFamily::ContactTranslation:
            return GroupAction::contact_translation(full_chart, reduced.k);
    }
    throw std::logic_error("unknown action family");
}

ReducedSystem reduce_translation_symplectic(const ScalarField& H, int k, const VectorXd& mu,
                                            std::uint64_t seed) {
    const Chart& chart = H.chart();
    require_kind(chart, ChartKind::Symplectic, "reduce_translation_symplectic");
    const int n = chart.dof();
    if (k == n)
        throw std::invalid_argument(
            "reduce_translation_symplectic: k = n gives a zero-dimensional quotient");
    GroupAction action = GroupAction::lifted_translation(chart, k);
    if (mu.size() != k)
        throw std::invalid_argument("mu must have k entries");
    require_invariant(action, H, seed, "reduce_translation_symplectic");

    Chart reduced_chart = Chart::symplectic(n - k);
    const int m = n - k;
    auto project = [chart, reduced_chart, n, k, m](const Point& x) {
        VectorXd y(2 * m);
        y.head(m) = x.coords.segment(k, m);
        y.tail(m) = x.coords.segment(n + k, m);
        return Point(reduced_chart, std::move(y));
    };
    VectorXd mu_copy = mu;
    auto section = [chart, n, k, m, mu_copy](const Point& y) {
        VectorXd x = VectorXd::Zero(2 * n);
        x.segment(k, m) = y.coords.head(m);
        x.segment(n, k) = mu_copy;
        x.segment(n + k, m) = y.coords.tail(m);
        return Point(chart, std::move(x));
    };
    MatrixXd jac = MatrixXd::Zero(2 * n, 2 * m);
    for (int j = 0; j < m; ++j) {
        jac(k + j, j) = 1.0;
        jac(n + k + j, m + j) = 1.0;
    }
    auto section_jacobian = [jac](const Point&) { return jac; };

    return ReducedSystem{reduced_chart,
                         H,
                         compose_with_section(H, reduced_chart, section, section_jacobian),
                         project,
                         section,
                         section_jacobian,
                         mu,
                         ActionFamily::LiftedTranslation,
                         k};
}

ReducedSystem reduce_so3(const ScalarField& H, double mu0, std::uint64_t seed) {
    const Chart& chart = H.chart();
    require_kind(chart, ChartKind::Symplectic, "reduce_so3");
    if (chart.dof() != 3) throw std::invalid_argument("reduce_so3 requires n = 3");
    if (mu0 == 0.0)
        throw std::invalid_argument("reduce_so3: mu0 = 0 is not a free level; choose mu0 != 0");
    GroupAction action = GroupAction::so3(chart);
    require_invariant(action, H, seed, "reduce_so3");

    Chart reduced_chart = Chart::symplectic(1);
    auto project = [chart, reduced_chart](const Point& x) {
        Vector3d q = x.q_block();
        const double r = q.norm();
        if (r < 1e-12)
            throw std::domain_error("reduce_so3: projection is singular at the origin");
        Vector3d p = x.p_block();
        VectorXd y(2);
        y << r, q.dot(p) / r;
        return Point(reduced_chart, std::move(y));
    };
    auto section = [chart, mu0](const Point& y) {
        const double r = y.coords[0];
        if (r <= 0.0)
            throw std::domain_error("reduce_so3: section requires r > 0");
        VectorXd x = VectorXd::Zero(6);
        x[0] = r;
        x[3] = y.coords[1];
        x[4] = mu0 / r;
        return Point(chart, std::move(x));
    };
    auto section_jacobian = [mu0](const Point& y) {
        const double r = y.coords[0];
        MatrixXd jac = MatrixXd::Zero(6, 2);
        jac(0, 0) = 1.0;
        jac(4, 0) = -mu0 / (r * r);
        jac(3, 1) = 1.0;
        return jac;
    };

    VectorXd mu(3);
    mu << 0.0, 0.0, mu0;
    return ReducedSystem{reduced_chart,
                         H,
                         compose_with_section(H, reduced_chart, section, section_jacobian),
                         project,
                         section,
                         section_jacobian,
                         mu,
                         ActionFamily::LiftedRotationSO3,
                         3};
}

ReducedSystem reduce_contact_translation(const ScalarField& H, int k, const VectorXd& mu,
                                         std::uint64_t seed) {
    const Chart& chart = H.chart();
    require_kind(chart, ChartKind::Contact, "reduce_contact_translation");
    const int n = chart.dof();
    GroupAction action = GroupAction::contact_translation(chart, k);
    if (mu.size() != k)
        throw std::invalid_argument("mu must have k entries");
    if (mu.cwiseAbs().maxCoeff() != 0.0)
        throw std::invalid_argument(
            "reduce_contact_translation: only mu = 0 is supported; the contact flow of an "
            "invariant H rescales the momentum by exp(-int R(H) dt), so nonzero levels are "
            "not preserved when R(H) != 0");
    require_invariant(action, H, seed, "reduce_contact_translation");

    Chart reduced_chart = Chart::contact(n - k);
    const int m = n - k;
    auto project = [chart, reduced_chart, n, k, m](const Point& x) {
        VectorXd y(2 * m + 1);
        y.head(m) = x.coords.segment(k, m);
        y.segment(m, m) = x.coords.segment(n + k, m);
        y[2 * m] = x.coords[2 * n];
        return Point(reduced_chart, std::move(y));
    };
    auto section = [chart, n, k, m](const Point& y) {
        VectorXd x = VectorXd::Zero(2 * n + 1);
        x.segment(k, m) = y.coords.head(m);
        x.segment(n + k, m) = y.coords.segment(m, m);
        x[2 * n] = y.coords[2 * m];
        return Point(chart, std::move(x));
    };
    MatrixXd jac = MatrixXd::Zero(2 * n + 1, 2 * m + 1);
    for (int j = 0; j < m; ++j) {
        jac(k + j, j) = 1.0;
        jac(n + k + j, m + j) = 1.0;
    }
    jac(2 * n, 2 * m) = 1.0;
    auto section_jacobian = [jac](const Point&) { return jac; };

    return ReducedSystem{reduced_chart,
                         H,
                         compose_with_section(H, reduced_chart, section, section_jacobian),
                         project,
                         section,
                         section_jacobian,
                         mu,
                         ActionFamily::ContactTranslation,
                         k};
}

double check_commutation(const ScalarField& full_H, const ReducedSystem& reduced,
                         const Point& x0, const IntegratorConfig& cfg) {
    if (cfg.method != IntegratorMethod::RK4)
        throw std::invalid_argument("check_commutation compares flows on a shared grid; "
                                    "use the fixed-step method");
    GroupAction action = action_for(reduced, full_H.chart());
    VectorXd j0 = action.momentum(x0);
    if ((j0 - reduced.mu).cwiseAbs().maxCoeff() >= kLevelSetTol)
        throw std::invalid_argument("check_commutation: x0 is off the mu level set");

    Trajectory full = flow_hamiltonian(full_H, x0, cfg);
    Trajectory red = flow_hamiltonian(reduced.reduced_H, reduced.project(x0), cfg);
    if (full.aborted()) throw std::runtime_error("full flow aborted: " + full.abort_reason);
    if (red.aborted()) throw std::runtime_error("reduced flow aborted: " + red.abort_reason);
    if (full.size() != red.size())
        throw std::runtime_error("check_commutation: flows recorded different grids");

    double deviation = 0.0;
    for (std::size_t i = 0; i < full.size(); ++i) {
        Point projected = reduced.project(full.state_point(i));
        deviation = std::max(deviation, (projected.coords - red.states[i]).norm());
    }
    return deviation;
}

Trajectory reconstruct(const Trajectory& reduced_traj, const ReducedSystem& reduced,
                       const GroupAction& action) {
    require_same_chart(reduced_traj.chart, reduced.reduced_chart, "reconstruct");
    require_same_chart(action.chart(), reduced.full_H.chart(), "reconstruct");
    const int alg_dim = action.algebra_dim();

    // xi(t) from the algebraic problem xi_M(d) = X_H(d) - d'(t).
    std::vector<Point> sections;
    sections.reserve(reduced_traj.size());
    std::vector<VectorXd> xi_series(reduced_traj.size());
    for (std::size_t i = 0; i < reduced_traj.size(); ++i) {
        Point y = reduced_traj.state_point(i);
        Point d = reduced.section(y);
        sections.push_back(d);
        VectorXd y_dot = xh(reduced.reduced_H, y).components;
        VectorXd d_dot = reduced.section_jacobian(y) * y_dot;
        VectorXd rhs = xh(reduced.full_H, d).components - d_dot;

        MatrixXd gen(action.chart().dim(), alg_dim);
        for (int a = 0; a < alg_dim; ++a) {
            AlgebraElement e = VectorXd::Zero(alg_dim);
            e[a] = 1.0;
            gen.col(a) = action.generator(e, d).components;
        }
        VectorXd xi = gen.colPivHouseholderQr().solve(rhs);
        const double residual = (gen * xi - rhs).norm();
        if (residual > kLeastSquaresTol)
            throw std::runtime_error(
                "reconstruct: generator least-squares residual " + std::to_string(residual) +
                " exceeds 1e-6 (section inconsistent with the reduced trajectory)");
        xi_series[i] = std::move(xi);
    }

    // g(t) by quadrature of xi(t); the SO(3) case stays on the one-parameter
    // subgroup of rotations about the momentum axis.
    std::vector<VectorXd> theta(reduced_traj.size(), VectorXd::Zero(alg_dim));
    for (std::size_t i = 1; i < reduced_traj.size(); ++i) {
        const double dt = reduced_traj.times[i] - reduced_traj.times[i - 1];
        theta[i] = theta[i - 1] + 0.5 * dt * (xi_series[i] + xi_series[i - 1]);
    }

    Trajectory out(action.chart());
    out.observable_names.push_back("H");
    out.observable_series.emplace_back();
    for (std::size_t i = 0; i < reduced_traj.size(); ++i) {
        GroupElement g = action.exp(theta[i], 1.0);
        Point c = action.act(g, sections[i]);
        out.times.push_back(reduced_traj.times[i]);
        out.states.push_back(c.coords);
        out.observable_series[0].push_back(reduced.full_H(c));
    }
    return out;
}

TangencyReport level_set_tangency_check(const GroupAction& action, const Point& pt) {
    if (!action.is_abelian())
        throw std::invalid_argument(
            "level_set_tangency_check applies to the abelian families (G_mu = G)");
    MatrixXd j_jac = action.momentum_jacobian_fd(pt);
    if (linalg::rank(j_jac.transpose()) < action.algebra_dim())
        throw std::invalid_argument("level_set_tangency_check: momentum Jacobian is rank "
                                    "deficient (mu is not a regular value)");
    MatrixXd level_tangent = linalg::null_space(j_jac);
    SubspaceBasis level_basis(pt, level_tangent);

    MatrixXd orbit(pt.chart.dim(), action.algebra_dim());
    for (int a = 0; a < action.algebra_dim(); ++a) {
        AlgebraElement e = VectorXd::Zero(action.algebra_dim());
        e[a] = 1.0;
        orbit.col(a) = action.generator(e, pt).components;
    }

    SubspaceBasis complement = pt.chart.kind() == ChartKind::Symplectic
                                   ? complement_omega(level_basis)
                                   : complement_lambda(level_basis);

    TangencyReport report;
    report.equality_residual =
        linalg::subspace_equality_residual(complement.vectors(), orbit);
    report.orbit_in_level_residual = linalg::containment_residual(level_tangent, orbit);
    if (pt.chart.kind() == ChartKind::Contact)
        report.vertical_residual =
            linalg::projection_residual(level_tangent, reeb(pt).components);
    return report;
}

} // namespace contactred
