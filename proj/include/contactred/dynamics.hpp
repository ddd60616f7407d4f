#pragma once

#include <functional>
#include <optional>
#include <ostream>
#include <string>
#include <utility>
#include <vector>

#include "contactred/scalar_field.hpp"

namespace contactred {

enum class IntegratorMethod { RK4, RK45 };

struct IntegratorConfig {
    IntegratorMethod method = IntegratorMethod::RK4;
    double step = 1e-3;          // fixed step (RK4) / initial step (RK45)
    double rel_tol = 1e-9;       // adaptive only
    double abs_tol = 1e-12;      // adaptive only
    double t0 = 0.0;
    double t1 = 1.0;
    int record_every = 1;

    void validate() const;
};

/**
 * A recorded integral curve: strictly increasing times, states on one chart,
 * and named observable series recomputed from the states (never integrated
 * separately, so the monitor stays an independent check).
 *
 * On blow-up (some |x_i| > 1e12 or a non-finite state) or adaptive step
 * underflow (h < 1e-14) the integration aborts and the partial trajectory is
 * returned with `abort_reason` set.
 */
struct Trajectory {
    Chart chart;
    std::vector<double> times;
    std::vector<Eigen::VectorXd> states;
    std::vector<std::string> observable_names;
    std::vector<std::vector<double>> observable_series;
    std::string abort_reason;   // empty on clean completion

    explicit Trajectory(Chart chart_) : chart(chart_) {}

    std::size_t size() const { return times.size(); }
    bool aborted() const { return !abort_reason.empty(); }
    Point state_point(std::size_t i) const { return Point(chart, states.at(i)); }
    const std::vector<double>& observable(const std::string& name) const;

    /// CSV: header `t,<coord names>,<observable names>`, one row per record,
    /// 17-significant-digit decimal floats.
    void write_csv(std::ostream& os) const;
    std::string to_csv() const;
};

using VectorField = std::function<TangentVector(const Point&)>;
using Observable = std::pair<std::string, std::function<double(const Point&)>>;

/// Integrate an autonomous vector field from x0.
Trajectory flow(const VectorField& field, const Point& x0, const IntegratorConfig& cfg,
                const std::vector<Observable>& observables = {});

/// Integrate the Hamiltonian vector field matching the chart kind; records
/// "H" (and "dissipation_rate" on contact charts) plus any extra observables.
Trajectory flow_hamiltonian(const ScalarField& H, const Point& x0, const IntegratorConfig& cfg,
                            const std::vector<Observable>& extra = {});

/// Along-flow invariant summary. `samples == 0` marks the empty report of a
/// zero-length trajectory.
struct InvariantReport {
    int samples = 0;
    double energy_drift = 0.0;         // max |H(t) - H(0)|
    double gamma = 0.0;                // R(H) at the initial state (contact)
    double gamma_variation = 0.0;      // max |R(H)(x(t)) - gamma|
    double decay_residual = 0.0;       // max |H(t) - H(0) e^{-gamma t}|
    double decay_residual_rel = 0.0;   // decay_residual / |H(0)|
    double dissipation_residual = 0.0; // max |dH/dt (FD in t) - dissipation_rate|
    bool empty() const { return samples == 0; }
};

InvariantReport monitor(const Trajectory& traj, const ScalarField& H);

/// Flow-Jacobian determinant against the divergence prediction
/// exp(-(n+1) \int R(H) dt). The variational equation is re-integrated on
/// the trajectory's grid (one RK4 step per recorded interval; record every
/// step for volume checks), with the Jacobian of X_H by central differences.
struct VolumeCheck {
    std::vector<double> determinant;
    std::vector<double> predicted;
    std::vector<double> ratio;
};

VolumeCheck variational_volume(const Trajectory& traj, const ScalarField& H);

/// Cumulative trapezoid of samples f(t_i) on the trajectory grid.
std::vector<double> cumulative_trapezoid(const std::vector<double>& times,
                                         const std::vector<double>& values);

} // namespace contactred
