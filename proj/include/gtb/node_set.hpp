#pragma once

#include <cstddef>
#include <span>
#include <vector>

namespace gtb {

// How the scale l enters h0(t) = l (t - a0), h1(t) = l (an - t).
//  Absolute:      l is used as given.
//  PerUnitDomain: l is measured per unit length of [a0, an], i.e. the
//                 effective scale is l / (an - a0). The rational basis then
//                 only depends on the relative node positions.
enum class ScaleMode { Absolute, PerUnitDomain };

// Sorted real nodes a_0 <= ... <= a_n (a_0 < a_n) with positive per-node
// coefficients and a positive scale. Only constructible through validate().
class NodeSet {
public:
    static NodeSet validate(std::vector<double> nodes, std::vector<double> coefficients, double scale,
                            ScaleMode mode = ScaleMode::Absolute);

    // Coefficients default to 1.
    static NodeSet with_unit_coefficients(std::vector<double> nodes, double scale,
                                          ScaleMode mode = ScaleMode::Absolute);

    std::span<const double> nodes() const noexcept { return nodes_; }
    std::span<const double> coefficients() const noexcept { return coefficients_; }
    double node(std::size_t i) const { return nodes_.at(i); }
    double coefficient(std::size_t i) const { return coefficients_.at(i); }

    // Scale as supplied, together with its interpretation.
    double nominal_scale() const noexcept { return nominal_scale_; }
    ScaleMode scale_mode() const noexcept { return mode_; }
    // Scale that multiplies (t - a0), (an - t) and the exponents.
    double scale() const noexcept { return scale_; }

    std::size_t size() const noexcept { return nodes_.size(); }
    std::size_t degree() const noexcept { return nodes_.size() - 1; }
    double front() const noexcept { return nodes_.front(); }
    double back() const noexcept { return nodes_.back(); }
    double domain_length() const noexcept { return back() - front(); }
    bool contains(double t) const noexcept { return t >= front() && t <= back(); }
    bool has_repeated_nodes() const noexcept;

private:
    NodeSet() = default;

    std::vector<double> nodes_;
    std::vector<double> coefficients_;
    double nominal_scale_ = 1.0;
    double scale_ = 1.0;
    ScaleMode mode_ = ScaleMode::Absolute;
};

// Positive weights of the rational basis.
class WeightVector {
public:
    static WeightVector validate(std::vector<double> weights);
    static WeightVector unit(std::size_t count);

    std::span<const double> values() const noexcept { return weights_; }
    double operator[](std::size_t i) const { return weights_.at(i); }
    std::size_t size() const noexcept { return weights_.size(); }

private:
    WeightVector() = default;
    std::vector<double> weights_;
};

// Throws CountMismatch unless |w| == |ns|.
void require_matching(const NodeSet& ns, const WeightVector& w);

// Nodes 0..n, coefficients C(n,i)/n^n, scale 1: at t = n x the basis equals the
// degree-n Bernstein basis at x.
NodeSet bernstein_equivalent_nodeset(std::size_t degree);

double binomial(std::size_t n, std::size_t k);

}  // namespace gtb
