#include "gtb/curve.hpp"

#include <cmath>
#include <string>
#include <utility>

#include "gtb/basis.hpp"
#include "gtb/error.hpp"

namespace gtb {

ControlPolygon::ControlPolygon(Eigen::MatrixXd points) : points_(std::move(points)) {
    if (points_.rows() < 2) fail(ErrorCode::BadCount, "a control polygon needs at least 2 points");
    if (points_.cols() != 2 && points_.cols() != 3) {
        fail(ErrorCode::DimensionMismatch, "points must be 2D or 3D, got dimension " + std::to_string(points_.cols()));
    }
    if (!points_.allFinite()) fail(ErrorCode::NonFinite, "control point coordinate is not finite");
}

ControlPolygon ControlPolygon::from_points(const std::vector<std::vector<double>>& points) {
    const std::size_t d = points.empty() ? 0 : points.front().size();
    Eigen::MatrixXd m(static_cast<Eigen::Index>(points.size()), static_cast<Eigen::Index>(d));
    for (std::size_t i = 0; i < points.size(); ++i) {
        if (points[i].size() != d) {
            fail(ErrorCode::DimensionMismatch, "point " + std::to_string(i) + " has dimension " +
                                                   std::to_string(points[i].size()) + ", expected " + std::to_string(d));
        }
        for (std::size_t k = 0; k < d; ++k) m(static_cast<Eigen::Index>(i), static_cast<Eigen::Index>(k)) = points[i][k];
    }
    return ControlPolygon(std::move(m));
}

std::vector<std::vector<double>> ControlPolygon::to_points() const {
    std::vector<std::vector<double>> out(size(), std::vector<double>(dim()));
    for (std::size_t i = 0; i < size(); ++i) {
        for (std::size_t k = 0; k < dim(); ++k) {
            out[i][k] = points_(static_cast<Eigen::Index>(i), static_cast<Eigen::Index>(k));
        }
    }
    return out;
}

GTBezierCurve::GTBezierCurve(NodeSet nodeset, WeightVector weights, ControlPolygon control)
    : nodeset_(std::move(nodeset)), weights_(std::move(weights)), control_(std::move(control)) {
    require_matching(nodeset_, weights_);
    if (control_.size() != nodeset_.size()) {
        fail(ErrorCode::CountMismatch, "control point count " + std::to_string(control_.size()) +
                                           " != node count " + std::to_string(nodeset_.size()));
    }
}

Point eval_curve(const GTBezierCurve& c, double t) {
    const BasisValues basis = eval_rational_basis(c.nodeset(), c.weights(), t);
    const Eigen::Map<const Eigen::VectorXd> b(basis.values.data(), static_cast<Eigen::Index>(basis.values.size()));
    return c.control().points().transpose() * b;
}

Eigen::MatrixXd sample_polyline(const GTBezierCurve& c, std::size_t count) {
    if (count < 2) fail(ErrorCode::BadCount, "polyline needs at least 2 samples");
    const double a0 = c.nodeset().front();
    const double an = c.nodeset().back();
    Eigen::MatrixXd out(static_cast<Eigen::Index>(count), static_cast<Eigen::Index>(c.dim()));
    for (std::size_t k = 0; k < count; ++k) {
        const double t = k + 1 == count ? an : a0 + (an - a0) * static_cast<double>(k) / static_cast<double>(count - 1);
        out.row(static_cast<Eigen::Index>(k)) = eval_curve(c, t).transpose();
    }
    return out;
}

GTBezierCurve classical_bezier(const ControlPolygon& control) {
    return GTBezierCurve(bernstein_equivalent_nodeset(control.size() - 1), WeightVector::unit(control.size()), control);
}

GTBezierCurve rational_bezier(const ControlPolygon& control, const WeightVector& w) {
    if (w.size() != control.size()) fail(ErrorCode::CountMismatch, "weight count differs from control point count");
    return GTBezierCurve(bernstein_equivalent_nodeset(control.size() - 1), w, control);
}

}  // namespace gtb
