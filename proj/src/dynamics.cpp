#include "contactred/dynamics.hpp"

#include <cmath>
#include <cstdio>
#include <sstream>

#include "contactred/hamiltonian.hpp"

namespace contactred {

using Eigen::MatrixXd;
using Eigen::VectorXd;

namespace {

constexpr double kBlowupLimit = 1e12;
constexpr double kMinStep = 1e-14;

using RawField = std::function<VectorXd(const VectorXd&)>;

bool state_ok(const VectorXd& x) {
    return x.allFinite() && x.cwiseAbs().maxCoeff() <= kBlowupLimit;
}

VectorXd rk4_step(const RawField& f, const VectorXd& x, double h) {
    VectorXd k1 = f(x);
    VectorXd k2 = f(x + 0.5 * h * k1);
    VectorXd k3 = f(x + 0.5 * h * k2);
    VectorXd k4 = f(x + h * k3);
    return x + (h / 6.0) * (k1 + 2.0 * k2 + 2.0 * k3 + k4);
}

// Dormand-Prince 5(4) pair.
struct Dopri5Result {
    VectorXd y5;
    double error;   // scaled error norm; accept when <= 1
};

Dopri5Result dopri5_step(const RawField& f, const VectorXd& x, double h,
                         double rel_tol, double abs_tol) {
    static const double a21 = 1.0 / 5;
    static const double a31 = 3.0 / 40, a32 = 9.0 / 40;
    static const double a41 = 44.0 / 45, a42 = -56.0 / 15, a43 = 32.0 / 9;
    static const double a51 = 19372.0 / 6561, a52 = -25360.0 / 2187,
                        a53 = 64448.0 / 6561, a54 = -212.0 / 729;
    static const double a61 = 9017.0 / 3168, a62 = -355.0 / 33, a63 = 46732.0 / 5247,
                        a64 = 49.0 / 176, a65 = -5103.0 / 18656;
    static const double b1 = 35.0 / 384, b3 = 500.0 / 1113, b4 = 125.0 / 192,
                        b5 = -2187.0 / 6784, b6 = 11.0 / 84;
    static const double e1 = 71.0 / 57600, e3 = -71.0 / 16695, e4 = 71.0 / 1920,
                        e5 = -17253.0 / 339200, e6 = 22.0 / 525, e7 = -1.0 / 40;

    VectorXd k1 = f(x);
    VectorXd k2 = f(x + h * (a21 * k1));
    VectorXd k3 = f(x + h * (a31 * k1 + a32 * k2));
    VectorXd k4 = f(x + h * (a41 * k1 + a42 * k2 + a43 * k3));
    VectorXd k5 = f(x + h * (a51 * k1 + a52 * k2 + a53 * k3 + a54 * k4));
    VectorXd k6 = f(x + h * (a61 * k1 + a62 * k2 + a63 * k3 + a64 * k4 + a65 * k5));
    VectorXd y5 = x + h * (b1 * k1 + b3 * k3 + b4 * k4 + b5 * k5 + b6 * k6);
    VectorXd k7 = f(y5);
    VectorXd err = h * (e1 * k1 + e3 * k3 + e4 * k4 + e5 * k5 + e6 * k6 + e7 * k7);

    double norm = 0.0;
    for (int i = 0; i < x.size(); ++i) {
        double scale = abs_tol + rel_tol * std::max(std::abs(x[i]), std::abs(y5[i]));
        norm = std::max(norm, std::abs(err[i]) / scale);
    }
    return {std::move(y5), norm};
}

void append_format(std::string& out, double v) {
    char buf[40];
    std::snprintf(buf, sizeof(buf), "%.17g", v);
    out += buf;
}

} // namespace

void IntegratorConfig::validate() const {
    if (!(step > 0.0)) throw std::invalid_argument("integrator step must be positive");
    if (!(t1 > t0)) throw std::invalid_argument("t_span must satisfy t1 > t0");
    if (!(rel_tol > 0.0) || !(abs_tol > 0.0))
        throw std::invalid_argument("integrator tolerances must be positive");
    if (record_every < 1) throw std::invalid_argument("record_every must be >= 1");
}

const std::vector<double>& Trajectory::observable(const std::string& name) const {
    for (std::size_t i = 0; i < observable_names.size(); ++i)
        if (observable_names[i] == name) return observable_series[i];
    throw std::out_of_range("trajectory has no observable named '" + name + "'");
}

void Trajectory::write_csv(std::ostream& os) const { os << to_csv(); }

std::string Trajectory::to_csv() const {
    std::string out = "t";
    for (int i = 0; i < chart.dim(); ++i) out += "," + chart.coord_name(i);
    for (const auto& name : observable_names) out += "," + name;
    out += "\n";
    for (std::size_t row = 0; row < times.size(); ++row) {
        append_format(out, times[row]);
        for (int i = 0; i < chart.dim(); ++i) {
            out += ",";
            append_format(out, states[row][i]);
        }
        for (const auto& series : observable_series) {
            out += ",";
            append_format(out, series[row]);
        }
        out += "\n";
    }
    return out;
}

namespace {

struct Recorder {
    Trajectory* traj;
    const std::vector<Observable>* observables;

    void operator()(double t, const VectorXd& x) {
        traj->times.push_back(t);
        traj->states.push_back(x);
        Point pt(traj->chart, x);
        for (std::size_t i = 0; i < observables->size(); ++i)
            traj->observable_series[i].push_back((*observables)[i].second(pt));
    }
};

} // namespace

Trajectory flow(const VectorField& field, const Point& x0, const IntegratorConfig& cfg,
                const std::vector<Observable>& observables) {
    cfg.validate();
    Trajectory traj(x0.chart);
    for (const auto& obs : observables) {
        traj.observable_names.push_back(obs.first);
        traj.observable_series.emplace_back();
    }
    RawField f = [&](const VectorXd& x) {
        return field(Point(x0.chart, x)).components;
    };
    Recorder record{&traj, &observables};

    double t = cfg.t0;
    VectorXd x = x0.coords;
    record(t, x);

    if (cfg.method == IntegratorMethod::RK4) {
        const double span = cfg.t1 - cfg.t0;
        const long steps = std::max(1L, std::lround(std::ceil(span / cfg.step - 1e-12)));
        long done = 0;
        while (done < steps) {
            double h = std::min(cfg.step, cfg.t1 - t);
            VectorXd next = rk4_step(f, x, h);
            ++done;
            t = (done == steps) ? cfg.t1 : cfg.t0 + static_cast<double>(done) * cfg.step;
            if (!state_ok(next)) {
                traj.abort_reason = "state blow-up at t=" + std::to_string(t);
                return traj;
            }
            x = std::move(next);
            if (done % cfg.record_every == 0 || done == steps) record(t, x);
        }
        return traj;
    }

    // Adaptive RK45 (Dormand-Prince)
    double h = std::min(cfg.step, cfg.t1 - cfg.t0);
    long accepted = 0;
    while (t < cfg.t1 - 1e-15 * std::max(1.0, std::abs(cfg.t1))) {
        h = std::min(h, cfg.t1 - t);
        if (h < kMinStep) {
            traj.abort_reason = "adaptive step underflow at t=" + std::to_string(t);
            return traj;
        }
        Dopri5Result result = dopri5_step(f, x, h, cfg.rel_tol, cfg.abs_tol);
        if (!result.y5.allFinite()) {
            traj.abort_reason = "state blow-up at t=" + std::to_string(t);
            return traj;
        }
        if (result.error <= 1.0) {
            t += h;
            x = std::move(result.y5);
            if (!state_ok(x)) {
                traj.abort_reason = "state blow-up at t=" + std::to_string(t);
                return traj;
            }
            ++accepted;
            bool last = t >= cfg.t1 - 1e-15 * std::max(1.0, std::abs(cfg.t1));
            if (accepted % cfg.record_every == 0 || last) record(t, x);
        }
        double factor = 0.9 * std::pow(std::max(result.error, 1e-10), -0.2);
        h *= std::clamp(factor, 0.2, 5.0);
    }
    return traj;
}

Trajectory flow_hamiltonian(const ScalarField& H, const Point& x0, const IntegratorConfig& cfg,
                            const std::vector<Observable>& extra) {
    std::vector<Observable> observables;
    observables.emplace_back("H", [&H](const Point& pt) { return H(pt); });
    if (x0.chart.kind() == ChartKind::Contact)
        observables.emplace_back("dissipation_rate",
                                 [&H](const Point& pt) { return dissipation_rate(H, pt); });
    for (const auto& obs : extra) observables.push_back(obs);
    return flow([&H](const Point& pt) { return xh(H, pt); }, x0, cfg, observables);
}

InvariantReport monitor(const Trajectory& traj, const ScalarField& H) {
    require_same_chart(traj.chart, H.chart(), "monitor");
    InvariantReport report;
    if (traj.size() <= 1) return report;
    report.samples = static_cast<int>(traj.size());

    std::vector<double> energy(traj.size());
    for (std::size_t i = 0; i < traj.size(); ++i) energy[i] = H(traj.state_point(i));
    const double h0 = energy.front();
    for (double e : energy) report.energy_drift = std::max(report.energy_drift, std::abs(e - h0));

    if (traj.chart.kind() != ChartKind::Contact) return report;

    report.gamma = H.reeb_derivative(traj.state_point(0));
    std::vector<double> rate(traj.size());
    for (std::size_t i = 0; i < traj.size(); ++i) {
        Point pt = traj.state_point(i);
        rate[i] = dissipation_rate(H, pt);
        report.gamma_variation =
            std::max(report.gamma_variation, std::abs(H.reeb_derivative(pt) - report.gamma));
    }
    const double t_start = traj.times.front();
    for (std::size_t i = 0; i < traj.size(); ++i) {
        double predicted = h0 * std::exp(-report.gamma * (traj.times[i] - t_start));
        report.decay_residual = std::max(report.decay_residual, std::abs(energy[i] - predicted));
    }
    report.decay_residual_rel =
        h0 != 0.0 ? report.decay_residual / std::abs(h0) : report.decay_residual;

    for (std::size_t i = 1; i + 1 < traj.size(); ++i) {
        double dt = traj.times[i + 1] - traj.times[i - 1];
        double dHdt = (energy[i + 1] - energy[i - 1]) / dt;
        report.dissipation_residual =
            std::max(report.dissipation_residual, std::abs(dHdt - rate[i]));
    }
    return report;
}

std::vector<double> cumulative_trapezoid(const std::vector<double>& times,
                                         const std::vector<double>& values) {
    if (times.size() != values.size())
        throw std::invalid_argument("cumulative_trapezoid: length mismatch");
    std::vector<double> out(times.size(), 0.0);
    for (std::size_t i = 1; i < times.size(); ++i)
        out[i] = out[i - 1] + 0.5 * (values[i] + values[i - 1]) * (times[i] - times[i - 1]);
    return out;
}

VolumeCheck variational_volume(const Trajectory& traj, const ScalarField& H) {
    require_kind(traj.chart, ChartKind::Contact, "variational_volume");
    require_same_chart(traj.chart, H.chart(), "variational_volume");
    VolumeCheck check;
    if (traj.size() == 0) return check;

    const int dim = traj.chart.dim();
    const double fd_h = 1e-5;
    auto field = [&](const VectorXd& x) {
        return xh_contact(H, Point(traj.chart, x)).components;
    };
    auto jacobian = [&](const VectorXd& x) {
        MatrixXd jac(dim, dim);
        for (int j = 0; j < dim; ++j) {
            VectorXd forward = x, backward = x;
            forward[j] += fd_h;
            backward[j] -= fd_h;
            jac.col(j) = (field(forward) - field(backward)) / (2.0 * fd_h);
        }
        return jac;
    };
    // Augmented system: state x plus the flow Jacobian Phi, dPhi/dt = DX_H(x) Phi.
    auto augmented = [&](const VectorXd& s) {
        VectorXd x = s.head(dim);
        MatrixXd phi = Eigen::Map<const MatrixXd>(s.data() + dim, dim, dim);
        MatrixXd dphi = jacobian(x) * phi;
        VectorXd ds(dim + dim * dim);
        ds.head(dim) = field(x);
        Eigen::Map<MatrixXd>(ds.data() + dim, dim, dim) = dphi;
        return ds;
    };

    VectorXd s(dim + dim * dim);
    s.head(dim) = traj.states.front();
    Eigen::Map<MatrixXd>(s.data() + dim, dim, dim) = MatrixXd::Identity(dim, dim);

    std::vector<double> reeb_h(traj.size());
    check.determinant.resize(traj.size());
    for (std::size_t i = 0; i < traj.size(); ++i) {
        if (i > 0) {
            double h = traj.times[i] - traj.times[i - 1];
            s = rk4_step(augmented, s, h);
        }
        MatrixXd phi = Eigen::Map<const MatrixXd>(s.data() + dim, dim, dim);
        check.determinant[i] = phi.determinant();
        reeb_h[i] = H.reeb_derivative(Point(traj.chart, VectorXd(s.head(dim))));
    }
    std::vector<double> integral = cumulative_trapezoid(traj.times, reeb_h);
    const double factor = traj.chart.dof() + 1;
    check.predicted.resize(traj.size());
    check.ratio.resize(traj.size());
    for (std::size_t i = 0; i < traj.size(); ++i) {
        check.predicted[i] = std::exp(-factor * integral[i]);
        check.ratio[i] = check.determinant[i] / check.predicted[i];
    }
    return check;
}

} // namespace contactred
