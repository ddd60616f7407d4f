#include "contactred/linalg.hpp"

namespace contactred::linalg {

using Eigen::MatrixXd;
using Eigen::VectorXd;

MatrixXd column_space(const MatrixXd& m, double drop_tol) {
    if (m.cols() == 0) return MatrixXd(m.rows(), 0);
    Eigen::JacobiSVD<MatrixXd> svd(m, Eigen::ComputeThinU);
    int r = 0;
    for (int i = 0; i < svd.singularValues().size(); ++i)
        if (svd.singularValues()[i] > drop_tol) ++r;
    return svd.matrixU().leftCols(r);
}

MatrixXd null_space(const MatrixXd& m, double drop_tol) {
    if (m.rows() == 0) return MatrixXd::Identity(m.cols(), m.cols());
    Eigen::JacobiSVD<MatrixXd> svd(m, Eigen::ComputeFullV);
    int r = 0;
    for (int i = 0; i < svd.singularValues().size(); ++i)
        if (svd.singularValues()[i] > drop_tol) ++r;
    return svd.matrixV().rightCols(m.cols() - r);
}

int rank(const MatrixXd& m, double tol) {
    if (m.cols() == 0) return 0;
    MatrixXd normalized = m;
    for (int j = 0; j < normalized.cols(); ++j) {
        double norm = normalized.col(j).norm();
        if (norm > 0) normalized.col(j) /= norm;
    }
    Eigen::JacobiSVD<MatrixXd> svd(normalized);
    int r = 0;
    for (int i = 0; i < svd.singularValues().size(); ++i)
        if (svd.singularValues()[i] > tol) ++r;
    return r;
}

double projection_residual(const MatrixXd& basis, const VectorXd& v) {
    MatrixXd q = column_space(basis);
    VectorXd residual = v - q * (q.transpose() * v);
    return residual.norm() / std::max(1.0, v.norm());
}

double containment_residual(const MatrixXd& b, const MatrixXd& a) {
    MatrixXd q = column_space(b);
    double worst = 0.0;
    for (int j = 0; j < a.cols(); ++j) {
        VectorXd v = a.col(j);
        VectorXd residual = v - q * (q.transpose() * v);
        worst = std::max(worst, residual.norm() / std::max(1.0, v.norm()));
    }
    return worst;
}

double subspace_equality_residual(const MatrixXd& a, const MatrixXd& b) {
    return std::max(containment_residual(b, a), containment_residual(a, b));
}

MatrixXd intersect(const MatrixXd& a, const MatrixXd& b, double drop_tol) {
    MatrixXd qa = column_space(a, drop_tol);
    MatrixXd qb = column_space(b, drop_tol);
    if (qa.cols() == 0 || qb.cols() == 0) return MatrixXd(a.rows(), 0);
    // v in both spans iff v = qa x = qb y, i.e. [qa -qb](x;y) = 0
    MatrixXd stacked(a.rows(), qa.cols() + qb.cols());
    stacked << qa, -qb;
    MatrixXd kernel = null_space(stacked, drop_tol);
    if (kernel.cols() == 0) return MatrixXd(a.rows(), 0);
    return column_space(qa * kernel.topRows(qa.cols()), drop_tol);
}

MatrixXd sum(const MatrixXd& a, const MatrixXd& b, double drop_tol) {
    MatrixXd stacked(a.rows(), a.cols() + b.cols());
    stacked << a, b;
    return column_space(stacked, drop_tol);
}

} // namespace contactred::linalg
