#include "contactred/geometry.hpp"

#include "contactred/linalg.hpp"
#include "contactred/symplectification.hpp"

namespace contactred {

using Eigen::MatrixXd;
using Eigen::VectorXd;

namespace {

constexpr double kContainTol = 1e-8;   // subspace containment residual
constexpr double kPositionTol = 1e-9;  // horizontal / vertical residuals
constexpr double kDropTol = 1e-10;     // singular values dropped after sharp_lambda

} // namespace

double eta(const Point& pt, const TangentVector& v) {
    require_kind(pt.chart, ChartKind::Contact, "eta");
    require_same_chart(pt.chart, v.base.chart, "eta");
    const int n = pt.chart.dof();
    double value = v.components[pt.chart.z_index()];
    for (int i = 0; i < n; ++i) value -= pt.p(i) * v.components[pt.chart.q_index(i)];
    return value;
}

double d_eta(const Point& pt, const TangentVector& u, const TangentVector& v) {
    require_kind(pt.chart, ChartKind::Contact, "d_eta");
    require_same_chart(pt.chart, u.base.chart, "d_eta");
    require_same_chart(pt.chart, v.base.chart, "d_eta");
    const int n = pt.chart.dof();
    double value = 0.0;
    for (int i = 0; i < n; ++i) {
        value += u.components[pt.chart.q_index(i)] * v.components[pt.chart.p_index(i)] -
                 u.components[pt.chart.p_index(i)] * v.components[pt.chart.q_index(i)];
    }
    return value;
}

double omega_symplectic(const Point& pt, const TangentVector& u, const TangentVector& v) {
    require_kind(pt.chart, ChartKind::Symplectic, "omega_symplectic");
    require_same_chart(pt.chart, u.base.chart, "omega_symplectic");
    require_same_chart(pt.chart, v.base.chart, "omega_symplectic");
    const int n = pt.chart.dof();
    double value = 0.0;
    for (int i = 0; i < n; ++i) {
        value += u.components[pt.chart.q_index(i)] * v.components[pt.chart.p_index(i)] -
                 u.components[pt.chart.p_index(i)] * v.components[pt.chart.q_index(i)];
    }
    return value;
}

TangentVector reeb(const Point& pt) {
    require_kind(pt.chart, ChartKind::Contact, "reeb");
    VectorXd c = VectorXd::Zero(pt.chart.dim());
    c[pt.chart.z_index()] = 1.0;
    return TangentVector(pt, std::move(c));
}

Covector eta_covector(const Point& pt) {
    require_kind(pt.chart, ChartKind::Contact, "eta_covector");
    const int n = pt.chart.dof();
    VectorXd c = VectorXd::Zero(pt.chart.dim());
    for (int i = 0; i < n; ++i) c[pt.chart.q_index(i)] = -pt.p(i);
    c[pt.chart.z_index()] = 1.0;
    return Covector(pt, std::move(c));
}

Covector liouville_covector(const Point& pt) {
    require_kind(pt.chart, ChartKind::Symplectic, "liouville_covector");
    const int n = pt.chart.dof();
    VectorXd c = VectorXd::Zero(pt.chart.dim());
    for (int i = 0; i < n; ++i) c[pt.chart.q_index(i)] = pt.p(i);
    return Covector(pt, std::move(c));
}

Covector flat_contact(const Point& pt, const TangentVector& v) {
    require_kind(pt.chart, ChartKind::Contact, "flat_contact");
    require_same_chart(pt.chart, v.base.chart, "flat_contact");
    const int n = pt.chart.dof();
    const double eta_v = eta(pt, v);
    VectorXd c(pt.chart.dim());
    for (int i = 0; i < n; ++i) {
        // i_v d(eta) picks -v_p in the q slot and +v_q in the p slot
        c[pt.chart.q_index(i)] = -v.components[pt.chart.p_index(i)] - eta_v * pt.p(i);
        c[pt.chart.p_index(i)] = v.components[pt.chart.q_index(i)];
    }
    c[pt.chart.z_index()] = eta_v;
    return Covector(pt, std::move(c));
}

MatrixXd flat_contact_matrix(const Point& pt) {
    require_kind(pt.chart, ChartKind::Contact, "flat_contact_matrix");
    const int dim = pt.chart.dim();
    MatrixXd m(dim, dim);
    for (int j = 0; j < dim; ++j) {
        VectorXd e = VectorXd::Zero(dim);
        e[j] = 1.0;
        m.col(j) = flat_contact(pt, TangentVector(pt, std::move(e))).components;
    }
    return m;
}

TangentVector sharp_contact(const Point& pt, const Covector& a) {
    require_kind(pt.chart, ChartKind::Contact, "sharp_contact");
    require_same_chart(pt.chart, a.base.chart, "sharp_contact");
    MatrixXd m = flat_contact_matrix(pt);
    VectorXd x = m.partialPivLu().solve(a.components);
    const double residual = (m * x - a.components).norm();
    if (residual > 1e-8)
        throw std::runtime_error("sharp_contact: solve residual " + std::to_string(residual) +
                                 " exceeds 1e-8 (corrupted chart data)");
    return TangentVector(pt, std::move(x));
}

Covector flat_symplectic(const Point& pt, const TangentVector& v) {
    require_kind(pt.chart, ChartKind::Symplectic, "flat_symplectic");
    require_same_chart(pt.chart, v.base.chart, "flat_symplectic");
    const int n = pt.chart.dof();
    VectorXd c(pt.chart.dim());
    for (int i = 0; i < n; ++i) {
        c[pt.chart.q_index(i)] = -v.components[pt.chart.p_index(i)];
        c[pt.chart.p_index(i)] = v.components[pt.chart.q_index(i)];
    }
    return Covector(pt, std::move(c));
}

TangentVector sharp_symplectic(const Point& pt, const Covector& a) {
    require_kind(pt.chart, ChartKind::Symplectic, "sharp_symplectic");
    require_same_chart(pt.chart, a.base.chart, "sharp_symplectic");
    const int n = pt.chart.dof();
    VectorXd c(pt.chart.dim());
    for (int i = 0; i < n; ++i) {
        c[pt.chart.q_index(i)] = a.components[pt.chart.p_index(i)];
        c[pt.chart.p_index(i)] = -a.components[pt.chart.q_index(i)];
    }
    return TangentVector(pt, std::move(c));
}

TangentVector sharp_lambda(const Point& pt, const Covector& a) {
    require_kind(pt.chart, ChartKind::Contact, "sharp_lambda");
    TangentVector sharp_a = sharp_contact(pt, a);
    const double a_reeb = a.components[pt.chart.z_index()];
    VectorXd c = sharp_a.components;
    c[pt.chart.z_index()] -= a_reeb;
    return TangentVector(pt, std::move(c));
}

std::vector<Covector> annihilator(const SubspaceBasis& B) {
    const int dim = B.dim();
    const int r = B.rank();
    if (r > 0 && linalg::rank(B.vectors()) < r)
        throw std::invalid_argument("annihilator: rank-deficient input basis");
    MatrixXd normal;
    if (r == 0) {
        normal = MatrixXd::Identity(dim, dim);
    } else {
        Eigen::JacobiSVD<MatrixXd> svd(B.vectors(), Eigen::ComputeFullU);
        normal = svd.matrixU().rightCols(dim - r);
    }
    std::vector<Covector> out;
    out.reserve(normal.cols());
    for (int j = 0; j < normal.cols(); ++j)
        out.emplace_back(B.base(), normal.col(j));
    return out;
}

SubspaceBasis complement_omega(const SubspaceBasis& B) {
    require_kind(B.base().chart, ChartKind::Symplectic, "complement_omega");
    auto ann = annihilator(B);
    MatrixXd image(B.dim(), static_cast<Eigen::Index>(ann.size()));
    for (std::size_t j = 0; j < ann.size(); ++j)
        image.col(static_cast<Eigen::Index>(j)) =
            sharp_symplectic(B.base(), ann[j]).components;
    return SubspaceBasis(B.base(), image);
}

SubspaceBasis complement_lambda(const SubspaceBasis& B) {
    require_kind(B.base().chart, ChartKind::Contact, "complement_lambda");
    auto ann = annihilator(B);
    if (ann.empty()) return SubspaceBasis::empty(B.base());
    MatrixXd image(B.dim(), static_cast<Eigen::Index>(ann.size()));
    for (std::size_t j = 0; j < ann.size(); ++j)
        image.col(static_cast<Eigen::Index>(j)) = sharp_lambda(B.base(), ann[j]).components;
    return SubspaceBasis(B.base(), linalg::column_space(image, kDropTol));
}

SubspaceBasis complement_deta(const SubspaceBasis& B) {
    require_kind(B.base().chart, ChartKind::Contact, "complement_deta");
    MatrixXd pairing(B.rank(), B.dim());
    for (int a = 0; a < B.rank(); ++a) {
        TangentVector b = B.vector(a);
        for (int j = 0; j < B.dim(); ++j) {
            VectorXd e = VectorXd::Zero(B.dim());
            e[j] = 1.0;
            pairing(a, j) = d_eta(B.base(), b, TangentVector(B.base(), std::move(e)));
        }
    }
    return SubspaceBasis(B.base(), linalg::null_space(pairing));
}

SubspaceBasis complement_lifted_omega(const SubspaceBasis& B) {
    require_kind(B.base().chart, ChartKind::Symplectified, "complement_lifted_omega");
    MatrixXd pairing(B.rank(), B.dim());
    for (int a = 0; a < B.rank(); ++a) {
        TangentVector b = B.vector(a);
        for (int j = 0; j < B.dim(); ++j) {
            VectorXd e = VectorXd::Zero(B.dim());
            e[j] = 1.0;
            pairing(a, j) = omega_lifted(B.base(), b, TangentVector(B.base(), std::move(e)));
        }
    }
    return SubspaceBasis(B.base(), linalg::null_space(pairing));
}

PointPosition classify_point(const SubspaceBasis& B) {
    require_kind(B.base().chart, ChartKind::Contact, "classify_point");
    double worst_eta = 0.0;
    for (int j = 0; j < B.rank(); ++j) {
        TangentVector b = B.vector(j);
        worst_eta = std::max(worst_eta,
                             std::abs(eta(B.base(), b)) / std::max(1.0, b.components.norm()));
    }
    if (worst_eta < kPositionTol) return PointPosition::Horizontal;
    VectorXd reeb_dir = reeb(B.base()).components;
    if (linalg::projection_residual(B.vectors(), reeb_dir) < kPositionTol)
        return PointPosition::Vertical;
    return PointPosition::Oblique;
}

namespace {

SubmanifoldClass classify_symplectic_like(const SubspaceBasis& B, const SubspaceBasis& comp,
                                          int lagrangian_dim) {
    const bool iso = linalg::containment_residual(comp.vectors(), B.vectors()) < kContainTol;
    if (iso) return B.rank() == lagrangian_dim ? SubmanifoldClass::Lagrangian
                                               : SubmanifoldClass::Isotropic;
    if (linalg::intersect(B.vectors(), comp.vectors()).cols() == 0)
        return SubmanifoldClass::SymplecticSub;
    if (linalg::containment_residual(B.vectors(), comp.vectors()) < kContainTol)
        return SubmanifoldClass::Coisotropic;
    return SubmanifoldClass::None;
}

} // namespace

SubmanifoldClass classify_subspace(const SubspaceBasis& B) {
    switch (B.base().chart.kind()) {
        case ChartKind::Symplectic:
            return classify_symplectic_like(B, complement_omega(B), B.base().chart.dof());
        case ChartKind::Symplectified:
            return classify_symplectic_like(B, complement_lifted_omega(B),
                                            B.base().chart.dim() / 2);
        case ChartKind::Contact: {
            SubspaceBasis comp = complement_lambda(B);
            const bool iso = linalg::containment_residual(comp.vectors(), B.vectors()) < kContainTol;
            if (iso) return B.rank() == B.base().chart.dof() ? SubmanifoldClass::Legendrian
                                                             : SubmanifoldClass::Isotropic;
            if (linalg::containment_residual(B.vectors(), comp.vectors()) < kContainTol)
                return SubmanifoldClass::Coisotropic;
            return SubmanifoldClass::None;
        }
    }
    return SubmanifoldClass::None;
}

ClassificationReport classify_submanifold(const std::vector<SubspaceBasis>& samples) {
    ClassificationReport report;
    report.verdict = SubmanifoldClass::None;
    if (samples.empty()) return report;
    for (std::size_t i = 1; i < samples.size(); ++i)
        require_same_chart(samples[0].base().chart, samples[i].base().chart,
                           "classify_submanifold");
    report.per_sample.reserve(samples.size());
    for (const auto& sample : samples) report.per_sample.push_back(classify_subspace(sample));
    report.verdict = report.per_sample.front();
    for (auto c : report.per_sample)
        if (c != report.verdict) { report.verdict = SubmanifoldClass::None; break; }
    return report;
}

std::string to_string(SubmanifoldClass c) {
    switch (c) {
        case SubmanifoldClass::Isotropic:     return "isotropic";
        case SubmanifoldClass::Coisotropic:   return "coisotropic";
        case SubmanifoldClass::Legendrian:    return "legendrian";
        case SubmanifoldClass::Lagrangian:    return "lagrangian";
        case SubmanifoldClass::SymplecticSub: return "symplectic";
        case SubmanifoldClass::None:          return "none";
    }
    return "?";
}

std::string to_string(PointPosition p) {
    switch (p) {
        case PointPosition::Horizontal: return "horizontal";
        case PointPosition::Vertical:   return "vertical";
        case PointPosition::Oblique:    return "oblique";
    }
    return "?";
}

} // namespace contactred
