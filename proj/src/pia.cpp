#include "gtb/pia.hpp"

#include <cmath>
#include <complex>
#include <string>
#include <utility>

#include "gtb/error.hpp"
#include "gtb/total_positivity.hpp"

namespace gtb {

FitProblem::FitProblem(ControlPolygon data, std::vector<double> params, NodeSet nodeset, WeightVector weights)
    : data_(std::move(data)), params_(std::move(params)), nodeset_(std::move(nodeset)), weights_(std::move(weights)) {
    if (data_.size() != params_.size() || params_.size() != nodeset_.size()) {
        fail(ErrorCode::CountMismatch, "data (" + std::to_string(data_.size()) + "), params (" +
                                           std::to_string(params_.size()) + ") and nodes (" +
                                           std::to_string(nodeset_.size()) + ") must have equal counts");
    }
    require_matching(nodeset_, weights_);
    for (std::size_t i = 0; i < params_.size(); ++i) {
        if (!nodeset_.contains(params_[i])) fail(ErrorCode::BadParams, "param " + std::to_string(i) + " outside [a0, an]");
        if (i > 0 && !(params_[i] > params_[i - 1])) fail(ErrorCode::BadParams, "params must be strictly increasing");
    }
}

PiaState pia_init(const FitProblem& p) { return PiaState{p.data(), 0, {}, 0.0, false}; }

Eigen::MatrixXd adjustment_vectors(const FitProblem& p, const PiaState& s) {
    const GTBezierCurve curve = p.curve_with(s.control);
    Eigen::MatrixXd delta = p.data().points();
    for (std::size_t i = 0; i < p.size(); ++i) {
        delta.row(static_cast<Eigen::Index>(i)) -= eval_curve(curve, p.params()[i]).transpose();
    }
    return delta;
}

double max_row_norm(const Eigen::MatrixXd& vectors) {
    return vectors.rows() == 0 ? 0.0 : vectors.rowwise().norm().maxCoeff();
}

namespace {

PiaState apply(const PiaState& s, const Eigen::MatrixXd& delta, double error) {
    PiaState next{ControlPolygon(s.control.points() + delta), s.iteration + 1, s.error_history, error, false};
    next.error_history.push_back(error);
    return next;
}

}  // namespace

PiaState pia_step(const FitProblem& p, const PiaState& s) {
    const Eigen::MatrixXd delta = adjustment_vectors(p, s);
    return apply(s, delta, max_row_norm(delta));
}

PiaState pia_run(const FitProblem& p, std::size_t max_iter, double tol) {
    if (max_iter < 1) fail(ErrorCode::BadCount, "max_iter must be >= 1");
    if (!(tol >= 0.0)) fail(ErrorCode::BadParams, "tol must be >= 0");
    PiaState state = pia_init(p);
    double first = -1.0;
    while (true) {
        const Eigen::MatrixXd delta = adjustment_vectors(p, state);
        const double error = max_row_norm(delta);
        if (first < 0.0) first = error;
        if (!std::isfinite(error) || error > kDivergenceFactor * first) {
            fail(ErrorCode::Diverged, "fit error " + std::to_string(error) + " at iteration " +
                                          std::to_string(state.iteration) + " (initial " + std::to_string(first) + ")");
        }
        state.residual = error;
        if (error <= tol) {
            state.converged = true;
            return state;
        }
        if (state.iteration == max_iter) return state;
        state = apply(state, delta, error);
    }
}

namespace {

// Smallest eigenvalue of a nonsingular matrix by inverse iteration with a
// fixed LU factorization.
double inverse_iteration(const DenseMatrix& c, double guess) {
    LuDecomposition lu(c);
    if (lu.singular()) return 0.0;
    const std::size_t n = c.rows();
    std::vector<double> v(n, 1.0 / std::sqrt(static_cast<double>(n)));
    // Alternating start: the eigenvector of the smallest eigenvalue of a TP
    // matrix alternates in sign.
    for (std::size_t k = 0; k < n; ++k) v[k] *= (k % 2 == 0) ? 1.0 : -1.0;
    double lambda = guess;
    for (int it = 0; it < 200; ++it) {
        std::vector<double> y = lu.solve(v);
        double norm = 0.0, dot = 0.0;
        for (std::size_t k = 0; k < n; ++k) {
            norm += y[k] * y[k];
            dot += y[k] * v[k];
        }
        norm = std::sqrt(norm);
        if (!(norm > 0.0) || !std::isfinite(norm)) break;
        const double next = 1.0 / dot;
        for (std::size_t k = 0; k < n; ++k) v[k] = y[k] / norm;
        if (std::abs(next - lambda) <= 1e-14 * std::abs(next)) {
            lambda = next;
            break;
        }
        lambda = next;
    }
    return lambda;
}

}  // namespace

double iteration_spectrum(const FitProblem& p) {
    const DenseMatrix c = rational_collocation_matrix(p.nodeset(), p.weights(), p.params());
    const auto n = static_cast<Eigen::Index>(c.rows());
    Eigen::MatrixXd m(n, n);
    for (Eigen::Index i = 0; i < n; ++i) {
        for (Eigen::Index j = 0; j < n; ++j) m(i, j) = c(static_cast<std::size_t>(i), static_cast<std::size_t>(j));
    }
    const Eigen::EigenSolver<Eigen::MatrixXd> solver(m, false);
    const Eigen::VectorXcd mu = solver.eigenvalues();
    double radius = 0.0;
    Eigen::Index arg = 0;
    for (Eigen::Index k = 0; k < mu.size(); ++k) {
        const double r = std::abs(std::complex<double>(1.0, 0.0) - mu(k));
        if (r > radius) {
            radius = r;
            arg = k;
        }
    }
    // A nearly singular C puts 1 - lambda_min within rounding of 1; the
    // dense eigensolver only resolves lambda_min to absolute accuracy, so
    // refine a real one by inverse iteration, which resolves it relatively.
    const std::complex<double> worst = mu(arg);
    if (worst.imag() == 0.0 && std::abs(worst.real()) < 1e-3) {
        const double refined = inverse_iteration(c, worst.real());
        if (std::isfinite(refined)) radius = std::abs(1.0 - refined);
    }
    return radius;
}

}  // namespace gtb
