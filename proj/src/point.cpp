#include "contactred/point.hpp"

#include "contactred/linalg.hpp"

namespace contactred {

namespace {

void require_finite_sized(const Chart& chart, const Eigen::VectorXd& v, const char* what) {
    if (v.size() != chart.dim())
        throw std::invalid_argument(std::string(what) + ": expected " +
                                    std::to_string(chart.dim()) + " entries, got " +
                                    std::to_string(v.size()));
    if (!v.allFinite())
        throw std::invalid_argument(std::string(what) + ": entries must be finite");
}

} // namespace

Point::Point(Chart chart_, Eigen::VectorXd coords_)
    : chart(chart_), coords(std::move(coords_)) {
    require_finite_sized(chart, coords, "Point");
}

Point Point::origin(Chart chart_) {
    return Point(chart_, Eigen::VectorXd::Zero(chart_.dim()));
}

TangentVector::TangentVector(Point base_, Eigen::VectorXd components_)
    : base(std::move(base_)), components(std::move(components_)) {
    require_finite_sized(base.chart, components, "TangentVector");
}

Covector::Covector(Point base_, Eigen::VectorXd components_)
    : base(std::move(base_)), components(std::move(components_)) {
    require_finite_sized(base.chart, components, "Covector");
}

double Covector::pair(const TangentVector& v) const {
    require_same_chart(base.chart, v.base.chart, "Covector::pair");
    return components.dot(v.components);
}

SubspaceBasis::SubspaceBasis(Point base_in, Eigen::MatrixXd vectors_in)
    : base_(std::move(base_in)), vectors_(std::move(vectors_in)) {
    if (vectors_.cols() == 0) {
        vectors_.resize(base_.chart.dim(), 0);
        return;
    }
    if (vectors_.rows() != base_.chart.dim())
        throw std::invalid_argument("SubspaceBasis: vector length must equal chart dim");
    if (!vectors_.allFinite())
        throw std::invalid_argument("SubspaceBasis: entries must be finite");
    if (linalg::rank(vectors_) != vectors_.cols())
        throw std::invalid_argument("SubspaceBasis: vectors are linearly dependent");
}

SubspaceBasis::SubspaceBasis(Point base_in, const std::vector<TangentVector>& vectors_in)
    : SubspaceBasis(base_in, [&] {
          Eigen::MatrixXd m(base_in.chart.dim(), vectors_in.size());
          for (std::size_t j = 0; j < vectors_in.size(); ++j) {
              require_same_chart(base_in.chart, vectors_in[j].base.chart, "SubspaceBasis");
              m.col(static_cast<Eigen::Index>(j)) = vectors_in[j].components;
          }
          return m;
      }()) {}

TangentVector SubspaceBasis::vector(int j) const {
    if (j < 0 || j >= rank()) throw std::out_of_range("basis vector index");
    return TangentVector(base_, vectors_.col(j));
}

SubspaceBasis SubspaceBasis::empty(Point base_) {
    return SubspaceBasis(base_, Eigen::MatrixXd(base_.chart.dim(), 0));
}

} // namespace contactred
