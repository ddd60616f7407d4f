#include "contactred/hamiltonian.hpp"

#include <cmath>

namespace contactred {

using Eigen::VectorXd;

TangentVector xh_symplectic(const ScalarField& H, const Point& pt) {
    require_kind(pt.chart, ChartKind::Symplectic, "xh_symplectic");
    const int n = pt.chart.dof();
    VectorXd dH = H.grad(pt).components;
    VectorXd field(pt.chart.dim());
    for (int i = 0; i < n; ++i) {
        field[pt.chart.q_index(i)] = dH[pt.chart.p_index(i)];
        field[pt.chart.p_index(i)] = -dH[pt.chart.q_index(i)];
    }
    return TangentVector(pt, std::move(field));
}

TangentVector xh_contact(const ScalarField& H, const Point& pt) {
    require_kind(pt.chart, ChartKind::Contact, "xh_contact");
    const int n = pt.chart.dof();
    VectorXd dH = H.grad(pt).components;
    const double dHdz = dH[pt.chart.z_index()];
    VectorXd field(pt.chart.dim());
    double p_dot_dHdp = 0.0;
    for (int i = 0; i < n; ++i) {
        const double dHdp = dH[pt.chart.p_index(i)];
        field[pt.chart.q_index(i)] = dHdp;
        field[pt.chart.p_index(i)] = -(dH[pt.chart.q_index(i)] + pt.p(i) * dHdz);
        p_dot_dHdp += pt.p(i) * dHdp;
    }
    field[pt.chart.z_index()] = p_dot_dHdp - H(pt);
    return TangentVector(pt, std::move(field));
}

TangentVector xh(const ScalarField& H, const Point& pt) {
    switch (pt.chart.kind()) {
        case ChartKind::Symplectic: return xh_symplectic(H, pt);
        case ChartKind::Contact:    return xh_contact(H, pt);
        default:
            throw ChartMismatch("xh: no Hamiltonian vector field on symplectified charts");
    }
}

double dissipation_rate(const ScalarField& H, const Point& pt) {
    require_kind(pt.chart, ChartKind::Contact, "dissipation_rate");
    return -H(pt) * H.reeb_derivative(pt);
}

double divergence_contact(const ScalarField& H, const Point& pt) {
    require_kind(pt.chart, ChartKind::Contact, "divergence_contact");
    const double h = 1e-5;
    double trace = 0.0;
    for (int i = 0; i < pt.chart.dim(); ++i) {
        VectorXd forward = pt.coords, backward = pt.coords;
        forward[i] += h;
        backward[i] -= h;
        const double df = xh_contact(H, Point(pt.chart, forward)).components[i];
        const double db = xh_contact(H, Point(pt.chart, backward)).components[i];
        trace += (df - db) / (2.0 * h);
    }
    if (!std::isfinite(trace))
        throw std::runtime_error("divergence_contact: non-finite derivatives");
    return trace;
}

} // namespace contactred
