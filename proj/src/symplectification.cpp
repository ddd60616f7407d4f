#include "contactred/symplectification.hpp"

#include <cmath>

#include "contactred/geometry.hpp"
#include "contactred/linalg.hpp"

namespace contactred {

using Eigen::MatrixXd;
using Eigen::VectorXd;

Chart symplectify(const Chart& contact_chart) {
    require_kind(contact_chart, ChartKind::Contact, "symplectify");
    return Chart::symplectified(contact_chart.dof());
}

Point base_point(const Point& pt) {
    require_kind(pt.chart, ChartKind::Symplectified, "base_point");
    return Point(pt.chart.base(), pt.coords.head(pt.chart.dim() - 1));
}

TangentVector base_vector(const TangentVector& v) {
    return TangentVector(base_point(v.base), v.components.head(v.base.chart.dim() - 1));
}

double alpha(const Point& pt, const TangentVector& v) {
    require_kind(pt.chart, ChartKind::Symplectified, "alpha");
    require_same_chart(pt.chart, v.base.chart, "alpha");
    return -std::exp(pt.t()) * eta(base_point(pt), base_vector(v));
}

double omega_lifted(const Point& pt, const TangentVector& u, const TangentVector& v) {
    require_kind(pt.chart, ChartKind::Symplectified, "omega_lifted");
    require_same_chart(pt.chart, u.base.chart, "omega_lifted");
    require_same_chart(pt.chart, v.base.chart, "omega_lifted");
    Point base = base_point(pt);
    TangentVector ub = base_vector(u);
    TangentVector vb = base_vector(v);
    const double ut = u.components[pt.chart.t_index()];
    const double vt = v.components[pt.chart.t_index()];
    return std::exp(pt.t()) *
           (d_eta(base, ub, vb) + ut * eta(base, vb) - vt * eta(base, ub));
}

std::vector<SubspaceBasis> lift_submanifold(const std::vector<SubspaceBasis>& samples) {
    std::vector<SubspaceBasis> lifted;
    lifted.reserve(samples.size());
    for (const auto& sample : samples) {
        require_kind(sample.base().chart, ChartKind::Contact, "lift_submanifold");
        Chart big = symplectify(sample.base().chart);
        VectorXd coords(big.dim());
        coords << sample.base().coords, 0.0;
        Point pt(big, std::move(coords));
        MatrixXd vectors = MatrixXd::Zero(big.dim(), sample.rank() + 1);
        vectors.topLeftCorner(sample.dim(), sample.rank()) = sample.vectors();
        vectors(big.t_index(), sample.rank()) = 1.0;
        lifted.emplace_back(pt, std::move(vectors));
    }
    return lifted;
}

LiftedComplementReport lifted_complement_check(const std::vector<SubspaceBasis>& samples) {
    LiftedComplementReport report;
    for (const auto& sample : samples) {
        require_kind(sample.base().chart, ChartKind::Contact, "lifted_complement_check");
        if (classify_point(sample) == PointPosition::Horizontal)
            throw std::invalid_argument(
                "lifted_complement_check: the hypothesis excludes horizontal points");
        SubspaceBasis base_complement = complement_lambda(sample);
        Chart big = symplectify(sample.base().chart);
        for (double t : {-0.5, 0.0, 1.0}) {
            VectorXd coords(big.dim());
            coords << sample.base().coords, t;
            Point pt(big, std::move(coords));
            MatrixXd vectors = MatrixXd::Zero(big.dim(), sample.rank() + 1);
            vectors.topLeftCorner(sample.dim(), sample.rank()) = sample.vectors();
            vectors(big.t_index(), sample.rank()) = 1.0;
            SubspaceBasis lifted(pt, vectors);

            SubspaceBasis omega_comp = complement_lifted_omega(lifted);
            MatrixXd padded = MatrixXd::Zero(big.dim(), base_complement.rank());
            padded.topRows(sample.dim()) = base_complement.vectors();

            report.equality_residual = std::max(
                report.equality_residual,
                linalg::subspace_equality_residual(omega_comp.vectors(), padded));
            for (int j = 0; j < omega_comp.rank(); ++j) {
                VectorXd col = omega_comp.vectors().col(j);
                col /= col.norm();
                report.t_component =
                    std::max(report.t_component, std::abs(col[big.t_index()]));
                TangentVector h(pt, col);
                report.horizontality = std::max(
                    report.horizontality, std::abs(eta(base_point(pt), base_vector(h))));
            }
        }
    }
    return report;
}

namespace {

void require_contact_family(const GroupAction& action, const char* op) {
    if (action.family() != ActionFamily::ContactTranslation)
        throw std::invalid_argument(std::string(op) +
                                    " expects a contact action family on the base");
}

} // namespace

MomentumValue lifted_momentum(const GroupAction& base_action, const Point& pt) {
    require_contact_family(base_action, "lifted_momentum");
    require_kind(pt.chart, ChartKind::Symplectified, "lifted_momentum");
    require_same_chart(base_action.chart(), pt.chart.base(), "lifted_momentum");
    return std::exp(pt.t()) * base_action.momentum(base_point(pt));
}

MomentumValue lifted_momentum_direct(const GroupAction& base_action, const Point& pt) {
    require_contact_family(base_action, "lifted_momentum_direct");
    require_kind(pt.chart, ChartKind::Symplectified, "lifted_momentum_direct");
    Point base = base_point(pt);
    require_same_chart(base_action.chart(), base.chart, "lifted_momentum_direct");
    VectorXd j(base_action.algebra_dim());
    for (int a = 0; a < base_action.algebra_dim(); ++a) {
        AlgebraElement xi = VectorXd::Zero(base_action.algebra_dim());
        xi[a] = 1.0;
        VectorXd lifted_gen(pt.chart.dim());
        lifted_gen << base_action.generator(xi, base).components, 0.0;
        j[a] = alpha(pt, TangentVector(pt, std::move(lifted_gen)));
    }
    return j;
}

double lifted_action_invariance_check(const GroupAction& base_action, const GroupElement& g,
                                      const Point& pt, Rng& rng, int samples) {
    require_contact_family(base_action, "lifted_action_invariance_check");
    require_kind(pt.chart, ChartKind::Symplectified, "lifted_action_invariance_check");
    Point base = base_point(pt);
    Point moved_base = base_action.act(g, base);
    VectorXd image_coords(pt.chart.dim());
    image_coords << moved_base.coords, pt.t();
    Point image(pt.chart, std::move(image_coords));

    double worst = 0.0;
    for (int s = 0; s < samples; ++s) {
        VectorXd c = rng.uniform_vector(pt.chart.dim(), -1.0, 1.0);
        // translations push tangent components forward unchanged
        double before = alpha(pt, TangentVector(pt, c));
        double after = alpha(image, TangentVector(image, c));
        worst = std::max(worst, std::abs(after - before));
    }
    return worst;
}

double lifted_omega_invariance_check(const GroupAction& base_action, const GroupElement& g,
                                     const Point& pt, Rng& rng, int samples) {
    require_contact_family(base_action, "lifted_omega_invariance_check");
    require_kind(pt.chart, ChartKind::Symplectified, "lifted_omega_invariance_check");
    Point base = base_point(pt);
    Point moved_base = base_action.act(g, base);
    VectorXd image_coords(pt.chart.dim());
    image_coords << moved_base.coords, pt.t();
    Point image(pt.chart, std::move(image_coords));

    double worst = 0.0;
    for (int s = 0; s < samples; ++s) {
        VectorXd cu = rng.uniform_vector(pt.chart.dim(), -1.0, 1.0);
        VectorXd cv = rng.uniform_vector(pt.chart.dim(), -1.0, 1.0);
        double before = omega_lifted(pt, TangentVector(pt, cu), TangentVector(pt, cv));
        double after =
            omega_lifted(image, TangentVector(image, cu), TangentVector(image, cv));
        worst = std::max(worst, std::abs(after - before));
    }
    return worst;
}

CommutativityReport check_commutativity(int n, int k, std::uint64_t seed, int samples) {
    if (n < 1 || k < 1 || k > n)
        throw std::invalid_argument("check_commutativity requires 1 <= k <= n");
    CommutativityReport report;
    report.n = n;
    report.k = k;
    report.samples = samples;

    // Path A: symplectification of the reduced contact chart.
    Chart small_sympl = Chart::symplectified(n - k);
    // Path B: reduction of the symplectified chart. J~^{-1}(0) is
    // {p_1..p_k = 0} x R_t; the quotient drops q_1..q_k and p_1..p_k, and
    // quotient tangent vectors are evaluated through section lifts.
    Chart big_sympl = Chart::symplectified(n);
    const int m = n - k;

    auto lift_coords = [&](const VectorXd& y, double q_offset) {
        VectorXd x = VectorXd::Zero(big_sympl.dim());
        x.head(k).setConstant(q_offset);      // q_1..q_k along the orbit
        x.segment(k, m) = y.head(m);          // q''
        x.segment(n + k, m) = y.segment(m, m);  // p'' (p_1..p_k stay 0 on the level set)
        x[big_sympl.z_index()] = y[small_sympl.z_index()];
        x[big_sympl.t_index()] = y[small_sympl.t_index()];
        return x;
    };
    auto lift_vector = [&](const VectorXd& u) {
        VectorXd w = VectorXd::Zero(big_sympl.dim());
        w.segment(k, m) = u.head(m);
        w.segment(n + k, m) = u.segment(m, m);
        w[big_sympl.z_index()] = u[small_sympl.z_index()];
        w[big_sympl.t_index()] = u[small_sympl.t_index()];
        return w;
    };

    Rng rng(seed);
    for (int s = 0; s < samples; ++s) {
        VectorXd y = rng.uniform_vector(small_sympl.dim(), -1.0, 1.0);
        VectorXd u = rng.uniform_vector(small_sympl.dim(), -1.0, 1.0);
        VectorXd v = rng.uniform_vector(small_sympl.dim(), -1.0, 1.0);

        Point small_pt(small_sympl, y);
        double omega_bar =
            omega_lifted(small_pt, TangentVector(small_pt, u), TangentVector(small_pt, v));

        Point lifted_pt(big_sympl, lift_coords(y, 0.0));
        double omega_tilde = omega_lifted(lifted_pt, TangentVector(lifted_pt, lift_vector(u)),
                                          TangentVector(lifted_pt, lift_vector(v)));
        // H([x, t]) = ([x]_Lambda, t) is the identity in these coordinates.
        report.form_residual =
            std::max(report.form_residual, std::abs(omega_bar - omega_tilde));

        Point offset_pt(big_sympl, lift_coords(y, rng.uniform(0.5, 1.5)));
        double omega_offset = omega_lifted(offset_pt, TangentVector(offset_pt, lift_vector(u)),
                                           TangentVector(offset_pt, lift_vector(v)));
        report.section_independence =
            std::max(report.section_independence, std::abs(omega_tilde - omega_offset));
    }
    return report;
}

MuProbe mu_probe(int n, int k, const VectorXd& mu, double t) {
    if (n < 1 || k < 1 || k > n)
        throw std::invalid_argument("mu_probe requires 1 <= k <= n");
    if (mu.size() != k) throw std::invalid_argument("mu must have k entries");
    Chart contact = Chart::contact(n);
    GroupAction action = GroupAction::contact_translation(contact, k);
    VectorXd coords = VectorXd::Zero(contact.dim());
    coords.segment(n, k) = mu;   // J(x) = (p_1..p_k) = mu
    Point base(contact, std::move(coords));

    Chart big = symplectify(contact);
    VectorXd lifted_coords(big.dim());
    lifted_coords << base.coords, t;
    Point lifted(big, std::move(lifted_coords));

    MuProbe probe;
    probe.base_momentum = action.momentum(base);
    probe.lifted_momentum = lifted_momentum(action, lifted);
    probe.t = t;
    probe.gap = (probe.lifted_momentum - probe.base_momentum).cwiseAbs().maxCoeff();
    return probe;
}

} // namespace contactred
