#include "contactred/submanifolds.hpp"

namespace contactred {

using Eigen::MatrixXd;
using Eigen::VectorXd;

namespace {

MatrixXd coordinate_columns(int dim, const std::vector<int>& indices) {
    MatrixXd m = MatrixXd::Zero(dim, static_cast<Eigen::Index>(indices.size()));
    for (std::size_t j = 0; j < indices.size(); ++j) m(indices[j], static_cast<Eigen::Index>(j)) = 1.0;
    return m;
}

} // namespace

std::vector<SubmanifoldSamples> contact_corpus(int n, Rng& rng, int points_per) {
    if (n < 1) throw std::invalid_argument("contact_corpus requires n >= 1");
    Chart chart = Chart::contact(n);
    const int dim = chart.dim();
    std::vector<SubmanifoldSamples> corpus;

    std::vector<int> q_block, p_block;
    for (int i = 0; i < n; ++i) q_block.push_back(chart.q_index(i));
    for (int i = 0; i < n; ++i) p_block.push_back(chart.p_index(i));

    {   // {p = 0, z = 0}, tangent = q-block
        SubmanifoldSamples s{"zero_section", SubmanifoldClass::Legendrian, {}};
        for (int i = 0; i < points_per; ++i) {
            VectorXd x = VectorXd::Zero(dim);
            x.head(n) = rng.uniform_vector(n, -1.0, 1.0);
            s.samples.emplace_back(Point(chart, x), coordinate_columns(dim, q_block));
        }
        corpus.push_back(std::move(s));
    }
    {   // {q = 0, z = 0}, tangent = p-block
        SubmanifoldSamples s{"fiber", SubmanifoldClass::Legendrian, {}};
        for (int i = 0; i < points_per; ++i) {
            VectorXd x = VectorXd::Zero(dim);
            x.segment(n, n) = rng.uniform_vector(n, -1.0, 1.0);
            s.samples.emplace_back(Point(chart, x), coordinate_columns(dim, p_block));
        }
        corpus.push_back(std::move(s));
    }
    {   // {p = dq f, z = f} with f = |q|^2 / 2; tangent columns (e_i, e_i, q_i)
        SubmanifoldSamples s{"graph", SubmanifoldClass::Legendrian, {}};
        for (int i = 0; i < points_per; ++i) {
            VectorXd q = rng.uniform_vector(n, -1.0, 1.0);
            VectorXd x(dim);
            x << q, q, 0.5 * q.squaredNorm();
            MatrixXd tangent = MatrixXd::Zero(dim, n);
            for (int j = 0; j < n; ++j) {
                tangent(chart.q_index(j), j) = 1.0;
                tangent(chart.p_index(j), j) = 1.0;
                tangent(chart.z_index(), j) = q[j];
            }
            s.samples.emplace_back(Point(chart, x), std::move(tangent));
        }
        corpus.push_back(std::move(s));
    }
    {   // {p_1 = 0}; tangent = everything but d/dp_1
        SubmanifoldSamples s{"vertical_slab", SubmanifoldClass::Coisotropic, {}};
        for (int i = 0; i < points_per; ++i) {
            VectorXd x = rng.uniform_vector(dim, -1.0, 1.0);
            x[chart.p_index(0)] = 0.0;
            std::vector<int> idx;
            for (int j = 0; j < dim; ++j)
                if (j != chart.p_index(0)) idx.push_back(j);
            s.samples.emplace_back(Point(chart, x), coordinate_columns(dim, idx));
        }
        corpus.push_back(std::move(s));
    }
    {   // {z = 0}; tangent = q- and p-blocks
        SubmanifoldSamples s{"zero_level", SubmanifoldClass::Coisotropic, {}};
        std::vector<int> idx = q_block;
        idx.insert(idx.end(), p_block.begin(), p_block.end());
        for (int i = 0; i < points_per; ++i) {
            VectorXd x = rng.uniform_vector(dim, -1.0, 1.0);
            x[chart.z_index()] = 0.0;
            s.samples.emplace_back(Point(chart, x), coordinate_columns(dim, idx));
        }
        corpus.push_back(std::move(s));
    }
    if (n >= 2) {   // line along d/dq^1 inside {p_1 = 0}
        SubmanifoldSamples s{"isotropic_line", SubmanifoldClass::Isotropic, {}};
        for (int i = 0; i < points_per; ++i) {
            VectorXd x = rng.uniform_vector(dim, -1.0, 1.0);
            x[chart.p_index(0)] = 0.0;
            s.samples.emplace_back(Point(chart, x),
                                   coordinate_columns(dim, {chart.q_index(0)}));
        }
        corpus.push_back(std::move(s));
    }
    return corpus;
}

std::vector<SubmanifoldSamples> symplectic_corpus(int n, Rng& rng, int points_per) {
    if (n < 1) throw std::invalid_argument("symplectic_corpus requires n >= 1");
    Chart chart = Chart::symplectic(n);
    const int dim = chart.dim();
    std::vector<SubmanifoldSamples> corpus;

    std::vector<int> q_block, p_block;
    for (int i = 0; i < n; ++i) q_block.push_back(chart.q_index(i));
    for (int i = 0; i < n; ++i) p_block.push_back(chart.p_index(i));

    {   // {p = 0}
        SubmanifoldSamples s{"zero_section", SubmanifoldClass::Lagrangian, {}};
        for (int i = 0; i < points_per; ++i) {
            VectorXd x = VectorXd::Zero(dim);
            x.head(n) = rng.uniform_vector(n, -1.0, 1.0);
            s.samples.emplace_back(Point(chart, x), coordinate_columns(dim, q_block));
        }
        corpus.push_back(std::move(s));
    }
    {   // {p = dq f} with f = |q|^2 / 2
        SubmanifoldSamples s{"graph", SubmanifoldClass::Lagrangian, {}};
        for (int i = 0; i < points_per; ++i) {
            VectorXd q = rng.uniform_vector(n, -1.0, 1.0);
            VectorXd x(dim);
            x << q, q;
            MatrixXd tangent = MatrixXd::Zero(dim, n);
            for (int j = 0; j < n; ++j) {
                tangent(chart.q_index(j), j) = 1.0;
                tangent(chart.p_index(j), j) = 1.0;
            }
            s.samples.emplace_back(Point(chart, x), std::move(tangent));
        }
        corpus.push_back(std::move(s));
    }
    if (n >= 2) {
        {   // {p_1 = 0}
            SubmanifoldSamples s{"coisotropic_slab", SubmanifoldClass::Coisotropic, {}};
            for (int i = 0; i < points_per; ++i) {
                VectorXd x = rng.uniform_vector(dim, -1.0, 1.0);
                x[chart.p_index(0)] = 0.0;
                std::vector<int> idx;
                for (int j = 0; j < dim; ++j)
                    if (j != chart.p_index(0)) idx.push_back(j);
                s.samples.emplace_back(Point(chart, x), coordinate_columns(dim, idx));
            }
            corpus.push_back(std::move(s));
        }
        {
            SubmanifoldSamples s{"isotropic_line", SubmanifoldClass::Isotropic, {}};
            for (int i = 0; i < points_per; ++i) {
                Point pt(chart, rng.uniform_vector(dim, -1.0, 1.0));
                s.samples.emplace_back(pt, coordinate_columns(dim, {chart.q_index(0)}));
            }
            corpus.push_back(std::move(s));
        }
        {
            SubmanifoldSamples s{"symplectic_plane", SubmanifoldClass::SymplecticSub, {}};
            for (int i = 0; i < points_per; ++i) {
                Point pt(chart, rng.uniform_vector(dim, -1.0, 1.0));
                s.samples.emplace_back(
                    pt, coordinate_columns(dim, {chart.q_index(0), chart.p_index(0)}));
            }
            corpus.push_back(std::move(s));
        }
    }
    return corpus;
}

} // namespace contactred
