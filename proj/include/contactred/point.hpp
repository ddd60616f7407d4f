#pragma once

#include <Eigen/Dense>
#include <vector>

#include "contactred/chart.hpp"

namespace contactred {

/// A point of a Darboux chart. Coordinates are validated to be finite and
/// of the chart's dimension on construction.
struct Point {
    Chart chart;
    Eigen::VectorXd coords;

    Point(Chart chart_, Eigen::VectorXd coords_);

    double q(int i) const { return coords[chart.q_index(i)]; }
    double p(int i) const { return coords[chart.p_index(i)]; }
    double z() const { return coords[chart.z_index()]; }
    double t() const { return coords[chart.t_index()]; }

    Eigen::VectorXd q_block() const { return coords.head(chart.dof()); }
    Eigen::VectorXd p_block() const { return coords.segment(chart.dof(), chart.dof()); }

    /// Origin of the chart (all coordinates zero).
    static Point origin(Chart chart_);
};

/// A tangent vector anchored at a base point.
struct TangentVector {
    Point base;
    Eigen::VectorXd components;

    TangentVector(Point base_, Eigen::VectorXd components_);

    Eigen::VectorXd q_block() const { return components.head(base.chart.dof()); }
    Eigen::VectorXd p_block() const { return components.segment(base.chart.dof(), base.chart.dof()); }
};

/// A covector anchored at a base point.
struct Covector {
    Point base;
    Eigen::VectorXd components;

    Covector(Point base_, Eigen::VectorXd components_);

    double pair(const TangentVector& v) const;
};

/// A basis of a linear subspace of the tangent space at `base`, stored as
/// matrix columns. Construction rejects (numerically) dependent vectors:
/// after normalizing columns, the smallest singular value must exceed 1e-9.
class SubspaceBasis {
public:
    SubspaceBasis(Point base_, Eigen::MatrixXd vectors_);
    SubspaceBasis(Point base_, const std::vector<TangentVector>& vectors_);

    const Point& base() const { return base_; }
    const Eigen::MatrixXd& vectors() const { return vectors_; }
    int rank() const { return static_cast<int>(vectors_.cols()); }
    int dim() const { return static_cast<int>(vectors_.rows()); }

    TangentVector vector(int j) const;

    /// An empty basis (rank 0) at `base`, spanning the zero subspace.
    static SubspaceBasis empty(Point base_);

private:
    Point base_;
    Eigen::MatrixXd vectors_;   // dim x rank
};

} // namespace contactred
