#pragma once

#include <cstddef>
#include <vector>

#include <Eigen/Dense>

#include "gtb/node_set.hpp"

namespace gtb {

using Point = Eigen::VectorXd;

// Ordered points in R^2 or R^3, stored one point per row.
class ControlPolygon {
public:
    // Throws BadCount (< 2 points), DimensionMismatch, NonFinite.
    explicit ControlPolygon(Eigen::MatrixXd points);
    static ControlPolygon from_points(const std::vector<std::vector<double>>& points);

    std::size_t size() const noexcept { return static_cast<std::size_t>(points_.rows()); }
    std::size_t dim() const noexcept { return static_cast<std::size_t>(points_.cols()); }
    Point point(std::size_t i) const { return points_.row(static_cast<Eigen::Index>(i)).transpose(); }
    const Eigen::MatrixXd& points() const noexcept { return points_; }
    std::vector<std::vector<double>> to_points() const;

private:
    Eigen::MatrixXd points_;
};

class GTBezierCurve {
public:
    // Throws CountMismatch unless nodes, weights and control points agree in count.
    GTBezierCurve(NodeSet nodeset, WeightVector weights, ControlPolygon control);

    const NodeSet& nodeset() const noexcept { return nodeset_; }
    const WeightVector& weights() const noexcept { return weights_; }
    const ControlPolygon& control() const noexcept { return control_; }
    std::size_t dim() const noexcept { return control_.dim(); }

private:
    NodeSet nodeset_;
    WeightVector weights_;
    ControlPolygon control_;
};

// P(t) = sum_i P_i T_i(t).
Point eval_curve(const GTBezierCurve& c, double t);

// count >= 2 uniformly spaced parameters including both ends; one point per row.
Eigen::MatrixXd sample_polyline(const GTBezierCurve& c, std::size_t count);

// Degree-n Bezier curve as a GT-Bezier curve on nodes 0..n; evaluate at t = n x.
GTBezierCurve classical_bezier(const ControlPolygon& control);
GTBezierCurve rational_bezier(const ControlPolygon& control, const WeightVector& w);

}  // namespace gtb
