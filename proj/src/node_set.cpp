#include "gtb/node_set.hpp"

#include <algorithm>
#include <cmath>
#include <string>

#include "gtb/error.hpp"

namespace gtb {

NodeSet NodeSet::validate(std::vector<double> nodes, std::vector<double> coefficients, double scale,
                          ScaleMode mode) {
    if (nodes.size() < 2) {
        fail(ErrorCode::EmptyNodes, "need at least 2 nodes, got " + std::to_string(nodes.size()));
    }
    for (double a : nodes) {
        if (!std::isfinite(a)) fail(ErrorCode::NonFinite, "node is not finite");
    }
    for (std::size_t i = 1; i < nodes.size(); ++i) {
        if (nodes[i] < nodes[i - 1]) {
            fail(ErrorCode::UnsortedNodes, "node " + std::to_string(i) + " is smaller than its predecessor");
        }
    }
    if (!(nodes.front() < nodes.back())) fail(ErrorCode::DegenerateRange, "a_0 must be < a_n");
    if (coefficients.size() != nodes.size()) {
        fail(ErrorCode::LengthMismatch, "coefficient count " + std::to_string(coefficients.size()) +
                                            " != node count " + std::to_string(nodes.size()));
    }
    for (std::size_t i = 0; i < coefficients.size(); ++i) {
        if (!(coefficients[i] > 0.0) || !std::isfinite(coefficients[i])) {
            fail(ErrorCode::NonPositiveCoefficient, "coefficient " + std::to_string(i) + " must be > 0");
        }
    }
    if (!(scale > 0.0) || !std::isfinite(scale)) fail(ErrorCode::NonPositiveScale, "scale must be > 0");

    NodeSet ns;
    ns.nodes_ = std::move(nodes);
    ns.coefficients_ = std::move(coefficients);
    ns.nominal_scale_ = scale;
    ns.mode_ = mode;
    ns.scale_ = mode == ScaleMode::PerUnitDomain ? scale / ns.domain_length() : scale;
    return ns;
}

NodeSet NodeSet::with_unit_coefficients(std::vector<double> nodes, double scale, ScaleMode mode) {
    std::vector<double> c(nodes.size(), 1.0);
    return validate(std::move(nodes), std::move(c), scale, mode);
}

bool NodeSet::has_repeated_nodes() const noexcept {
    for (std::size_t i = 1; i < nodes_.size(); ++i) {
        if (nodes_[i] == nodes_[i - 1]) return true;
    }
    return false;
}

WeightVector WeightVector::validate(std::vector<double> weights) {
    if (weights.empty()) fail(ErrorCode::LengthMismatch, "weight vector is empty");
    for (std::size_t i = 0; i < weights.size(); ++i) {
        if (!(weights[i] > 0.0) || !std::isfinite(weights[i])) {
            fail(ErrorCode::NonPositiveWeight, "weight " + std::to_string(i) + " must be > 0");
        }
    }
    WeightVector w;
    w.weights_ = std::move(weights);
    return w;
}

WeightVector WeightVector::unit(std::size_t count) { return validate(std::vector<double>(count, 1.0)); }

void require_matching(const NodeSet& ns, const WeightVector& w) {
    if (w.size() != ns.size()) {
        fail(ErrorCode::CountMismatch,
             "weight count " + std::to_string(w.size()) + " != node count " + std::to_string(ns.size()));
    }
}

double binomial(std::size_t n, std::size_t k) {
    if (k > n) return 0.0;
    k = std::min(k, n - k);
    double r = 1.0;
    for (std::size_t j = 1; j <= k; ++j) r = r * static_cast<double>(n - k + j) / static_cast<double>(j);
    return std::round(r);
}

NodeSet bernstein_equivalent_nodeset(std::size_t degree) {
    if (degree < 1) fail(ErrorCode::EmptyNodes, "Bernstein degree must be >= 1");
    const double n = static_cast<double>(degree);
    const double nn = std::pow(n, n);
    std::vector<double> nodes(degree + 1), c(degree + 1);
    for (std::size_t i = 0; i <= degree; ++i) {
        nodes[i] = static_cast<double>(i);
        c[i] = binomial(degree, i) / nn;
    }
    return NodeSet::validate(std::move(nodes), std::move(c), 1.0);
}

}  // namespace gtb
