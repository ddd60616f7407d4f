#include "contactred/scalar_field.hpp"

#include <cmath>

namespace contactred {

using Eigen::VectorXd;

double fd_step(double coord) {
    return std::max(1e-6, 1e-6 * std::abs(coord));
}

ScalarField::ScalarField(Chart chart, Eval eval, std::string name)
    : chart_(chart), eval_(std::move(eval)), name_(std::move(name)) {}

ScalarField::ScalarField(Chart chart, Eval eval, Grad grad, std::string name)
    : chart_(chart), eval_(std::move(eval)), grad_(std::move(grad)), name_(std::move(name)) {}

double ScalarField::operator()(const Point& pt) const {
    require_same_chart(chart_, pt.chart, "ScalarField::eval");
    double value = eval_(pt);
    if (!std::isfinite(value))
        throw std::runtime_error("ScalarField '" + name_ + "': non-finite evaluation");
    return value;
}

Covector ScalarField::grad(const Point& pt) const {
    require_same_chart(chart_, pt.chart, "ScalarField::grad");
    if (grad_) {
        VectorXd g = grad_(pt);
        if (!g.allFinite())
            throw std::runtime_error("ScalarField '" + name_ + "': non-finite gradient");
        return Covector(pt, std::move(g));
    }
    VectorXd g(chart_.dim());
    for (int i = 0; i < chart_.dim(); ++i) {
        const double h = fd_step(pt.coords[i]);
        VectorXd forward = pt.coords, backward = pt.coords;
        forward[i] += h;
        backward[i] -= h;
        g[i] = ((*this)(Point(chart_, forward)) - (*this)(Point(chart_, backward))) / (2.0 * h);
    }
    if (!g.allFinite())
        throw std::runtime_error("ScalarField '" + name_ + "': non-finite gradient");
    return Covector(pt, std::move(g));
}

double ScalarField::reeb_derivative(const Point& pt) const {
    if (!chart_.has_z()) return 0.0;
    return grad(pt).components[chart_.z_index()];
}

ScalarField operator+(const ScalarField& a, const ScalarField& b) {
    require_same_chart(a.chart_, b.chart_, "ScalarField sum");
    ScalarField::Grad grad;
    if (a.grad_ && b.grad_)
        grad = [ga = a.grad_, gb = b.grad_](const Point& pt) {
            return VectorXd(ga(pt) + gb(pt));
        };
    return ScalarField(
        a.chart_,
        [ea = a.eval_, eb = b.eval_](const Point& pt) { return ea(pt) + eb(pt); },
        std::move(grad), a.name_ + "+" + b.name_);
}

ScalarField operator*(double c, const ScalarField& f) {
    ScalarField::Grad grad;
    if (f.grad_)
        grad = [c, g = f.grad_](const Point& pt) { return VectorXd(c * g(pt)); };
    return ScalarField(
        f.chart_, [c, e = f.eval_](const Point& pt) { return c * e(pt); },
        std::move(grad), std::to_string(c) + "*" + f.name_);
}

double gradient_check(const ScalarField& f, const Point& pt) {
    if (!f.has_analytic_grad()) return 0.0;
    ScalarField numeric(f.chart(), [&f](const Point& x) { return f(x); }, "numeric");
    VectorXd analytic = f.grad(pt).components;
    VectorXd fd = numeric.grad(pt).components;
    double worst = 0.0;
    for (int i = 0; i < analytic.size(); ++i) {
        double scale = std::max({1.0, std::abs(analytic[i]), std::abs(fd[i])});
        worst = std::max(worst, std::abs(analytic[i] - fd[i]) / scale);
    }
    return worst;
}

Potential zero_potential() {
    return Potential{[](const VectorXd& q) { (void)q; return 0.0; },
                     [](const VectorXd& q) { return VectorXd(VectorXd::Zero(q.size())); },
                     "zero"};
}

Potential harmonic_potential(double k, int from) {
    return Potential{
        [k, from](const VectorXd& q) {
            return 0.5 * k * q.tail(q.size() - from).squaredNorm();
        },
        [k, from](const VectorXd& q) {
            VectorXd g = k * q;
            g.head(from).setZero();
            return g;
        },
        "harmonic"};
}

RadialPotential kepler_potential(double strength) {
    return RadialPotential{[strength](double r) { return -strength / r; },
                           [strength](double r) { return strength / (r * r); },
                           "kepler"};
}

RadialPotential harmonic_radial_potential(double k) {
    return RadialPotential{[k](double r) { return 0.5 * k * r * r; },
                           [k](double r) { return k * r; },
                           "harmonic_radial"};
}

namespace {

ScalarField mechanical_part(const Chart& chart, double mass, const Potential& U) {
    if (mass <= 0.0) throw std::invalid_argument("mass must be positive");
    const int n = chart.dof();
    auto eval = [mass, U](const Point& pt) {
        return pt.p_block().squaredNorm() / (2.0 * mass) + U.value(pt.q_block());
    };
    auto grad = [mass, U, n](const Point& pt) {
        VectorXd g = VectorXd::Zero(pt.chart.dim());
        g.head(n) = U.gradient(pt.q_block());
        g.segment(n, n) = pt.p_block() / mass;
        return g;
    };
    return ScalarField(chart, eval, grad, "mechanical(" + U.name + ")");
}

} // namespace

ScalarField separable_mechanical(const Chart& chart, double mass, const Potential& U) {
    require_kind(chart, ChartKind::Symplectic, "separable_mechanical");
    return mechanical_part(chart, mass, U);
}

ScalarField linear_in_z(const Chart& chart, double gamma) {
    require_kind(chart, ChartKind::Contact, "linear_in_z");
    if (!std::isfinite(gamma)) throw std::invalid_argument("gamma must be finite");
    auto eval = [gamma](const Point& pt) { return gamma * pt.z(); };
    auto grad = [gamma](const Point& pt) {
        VectorXd g = VectorXd::Zero(pt.chart.dim());
        g[pt.chart.z_index()] = gamma;
        return g;
    };
    return ScalarField(chart, eval, grad, "gamma*z");
}

ScalarField contact_damped(const Chart& chart, double mass, const Potential& U, double gamma) {
    require_kind(chart, ChartKind::Contact, "contact_damped");
    return mechanical_part(chart, mass, U) + linear_in_z(chart, gamma);
}

ScalarField central_potential(const Chart& chart, double mass, const RadialPotential& U) {
    require_kind(chart, ChartKind::Symplectic, "central_potential");
    if (chart.dof() != 3)
        throw std::invalid_argument("central_potential requires a symplectic chart with n = 3");
    if (mass <= 0.0) throw std::invalid_argument("mass must be positive");
    auto eval = [mass, U](const Point& pt) {
        return pt.p_block().squaredNorm() / (2.0 * mass) + U.value(pt.q_block().norm());
    };
    auto grad = [mass, U](const Point& pt) {
        VectorXd q = pt.q_block();
        const double r = q.norm();
        VectorXd g(pt.chart.dim());
        g.head(3) = (U.deriv(r) / r) * q;
        g.tail(3) = pt.p_block() / mass;
        return g;
    };
    return ScalarField(chart, eval, grad, "central(" + U.name + ")");
}

ScalarField translation_invariant(const Chart& chart, double kinetic,
                                  const Eigen::VectorXd& drift, double gamma) {
    require_kind(chart, ChartKind::Contact, "translation_invariant");
    const int n = chart.dof();
    if (drift.size() != n)
        throw std::invalid_argument("translation_invariant: drift must have n entries");
    VectorXd v = drift;
    auto eval = [kinetic, v, gamma](const Point& pt) {
        VectorXd p = pt.p_block();
        return 0.5 * kinetic * p.squaredNorm() + v.dot(p) + gamma * pt.z();
    };
    auto grad = [kinetic, v, gamma, n](const Point& pt) {
        VectorXd g = VectorXd::Zero(pt.chart.dim());
        g.segment(n, n) = kinetic * pt.p_block() + v;
        g[pt.chart.z_index()] = gamma;
        return g;
    };
    return ScalarField(chart, eval, grad, "translation_invariant");
}

} // namespace contactred
