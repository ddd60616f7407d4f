#pragma once

#include <functional>
#include <string>

#include "contactred/point.hpp"

namespace contactred {

/// Central finite-difference step for coordinate i: max(1e-6, 1e-6*|x_i|).
double fd_step(double coord);

/**
 * A scalar field on a chart, with an optional analytic gradient. Evaluators
 * must be pure. When no gradient is supplied, grad() falls back to central
 * finite differences with the adaptive step above; identities checked
 * through the numeric path hold to about 1e-5, analytic gradients give
 * 1e-10-grade residuals.
 */
class ScalarField {
public:
    using Eval = std::function<double(const Point&)>;
    using Grad = std::function<Eigen::VectorXd(const Point&)>;

    ScalarField(Chart chart, Eval eval, std::string name);
    ScalarField(Chart chart, Eval eval, Grad grad, std::string name);

    const Chart& chart() const { return chart_; }
    const std::string& name() const { return name_; }
    bool has_analytic_grad() const { return static_cast<bool>(grad_); }

    double operator()(const Point& pt) const;
    Covector grad(const Point& pt) const;

    /// dH/dz, zero on symplectic charts.
    double reeb_derivative(const Point& pt) const;

    friend ScalarField operator+(const ScalarField& a, const ScalarField& b);
    friend ScalarField operator*(double c, const ScalarField& f);

private:
    Chart chart_;
    Eval eval_;
    Grad grad_;   // may be empty
    std::string name_;
};

/// Max relative mismatch between the analytic gradient and central
/// differences at pt; 0 when no analytic gradient is attached.
double gradient_check(const ScalarField& f, const Point& pt);

// ---------------------------------------------------------------------------
// Potentials over the configuration block.
// ---------------------------------------------------------------------------

struct Potential {
    std::function<double(const Eigen::VectorXd&)> value;
    std::function<Eigen::VectorXd(const Eigen::VectorXd&)> gradient;
    std::string name;
};

Potential zero_potential();
/// (k/2) sum_{i >= from} q_i^2; `from` lets the leading coordinates stay cyclic.
Potential harmonic_potential(double k, int from = 0);

/// Radial potential U(r) with derivative, for central-force Hamiltonians.
struct RadialPotential {
    std::function<double(double)> value;
    std::function<double(double)> deriv;
    std::string name;
};

RadialPotential kepler_potential(double strength = 1.0);   // -strength / r
RadialPotential harmonic_radial_potential(double k);       // (k/2) r^2

// ---------------------------------------------------------------------------
// Builtin Hamiltonian families. All carry analytic gradients.
// ---------------------------------------------------------------------------

/// H = (1/2m) |p|^2 + U(q) on a symplectic chart.
ScalarField separable_mechanical(const Chart& chart, double mass, const Potential& U);

/// H = (1/2m) |p|^2 + U(q) + gamma z on a contact chart.
ScalarField contact_damped(const Chart& chart, double mass, const Potential& U, double gamma);

/// H = (1/2m) |p|^2 + U(|q|) on the symplectic chart with n = 3.
ScalarField central_potential(const Chart& chart, double mass, const RadialPotential& U);

/// H = (a/2) |p|^2 + v . p + gamma z on a contact chart; independent of every
/// q, hence invariant under contact translations of any block.
ScalarField translation_invariant(const Chart& chart, double kinetic,
                                  const Eigen::VectorXd& drift, double gamma);

/// gamma z on a contact chart.
ScalarField linear_in_z(const Chart& chart, double gamma);

} // namespace contactred
