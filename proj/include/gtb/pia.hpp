#pragma once

#include <cstddef>
#include <vector>

#include <Eigen/Dense>

#include "gtb/curve.hpp"
#include "gtb/node_set.hpp"

namespace gtb {

// Data points P_0..P_n with their parameters t_0 < ... < t_n in [a0, an].
class FitProblem {
public:
    // Throws CountMismatch when data, params and nodes differ in count and
    // BadParams when params are not strictly increasing inside the domain.
    FitProblem(ControlPolygon data, std::vector<double> params, NodeSet nodeset, WeightVector weights);

    const ControlPolygon& data() const noexcept { return data_; }
    const std::vector<double>& params() const noexcept { return params_; }
    const NodeSet& nodeset() const noexcept { return nodeset_; }
    const WeightVector& weights() const noexcept { return weights_; }
    std::size_t size() const noexcept { return params_.size(); }

    GTBezierCurve curve_with(const ControlPolygon& control) const { return {nodeset_, weights_, control}; }

private:
    ControlPolygon data_;
    std::vector<double> params_;
    NodeSet nodeset_;
    WeightVector weights_;
};

struct PiaState {
    ControlPolygon control;
    std::size_t iteration = 0;
    // error_history[k] = max_i |Delta_i^k|, recorded by the k-th step.
    std::vector<double> error_history;
    // Fit error of the current control points; set by pia_run.
    double residual = 0.0;
    bool converged = false;
};

inline constexpr double kDivergenceFactor = 1e6;

PiaState pia_init(const FitProblem& p);

// Delta_i = P_i - C(t_i) for the curve with the state's control points, one per row.
Eigen::MatrixXd adjustment_vectors(const FitProblem& p, const PiaState& s);

// max_i of the Euclidean row norms.
double max_row_norm(const Eigen::MatrixXd& vectors);

PiaState pia_step(const FitProblem& p, const PiaState& s);

// Steps until the current fit error is <= tol or max_iter steps are done.
// Throws Diverged when an error exceeds kDivergenceFactor * the first error or
// stops being finite.
PiaState pia_run(const FitProblem& p, std::size_t max_iter, double tol);

// Spectral radius of I - C for the rational collocation matrix C at the
// problem's parameters; PIA converges when it is < 1.
double iteration_spectrum(const FitProblem& p);

}  // namespace gtb
