#include "gtb/basis.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <string>

#include "gtb/error.hpp"

namespace gtb {
namespace {

constexpr double kNegInf = -std::numeric_limits<double>::infinity();

void check_domain(const NodeSet& ns, double t) {
    if (!ns.contains(t)) {
        fail(ErrorCode::OutOfDomain,
             "t=" + std::to_string(t) + " outside [" + std::to_string(ns.front()) + ", " + std::to_string(ns.back()) + "]");
    }
}

void check_index(const NodeSet& ns, std::size_t i) {
    if (i >= ns.size()) {
        fail(ErrorCode::IndexOutOfRange, "basis index " + std::to_string(i) + " >= " + std::to_string(ns.size()));
    }
}

// exponent * ln(h), with 0 * ln(0) taken as 0.
double power_term(double exponent, double log_h) { return exponent == 0.0 ? 0.0 : exponent * log_h; }

double log_beta_unchecked(const NodeSet& ns, std::size_t i, double t) {
    const double l = ns.scale();
    const double a0 = ns.front();
    const double an = ns.back();
    const double ai = ns.node(i);
    const double log_h0 = t == a0 ? kNegInf : std::log(l * (t - a0));
    const double log_h1 = t == an ? kNegInf : std::log(l * (an - t));
    return std::log(ns.coefficient(i)) + power_term(l * (ai - a0), log_h0) + power_term(l * (an - ai), log_h1);
}

}  // namespace

double log_gt_basis(const NodeSet& ns, std::size_t i, double t) {
    check_index(ns, i);
    check_domain(ns, t);
    return log_beta_unchecked(ns, i, t);
}

double eval_gt_basis(const NodeSet& ns, std::size_t i, double t) { return std::exp(log_gt_basis(ns, i, t)); }

BasisValues eval_gt_basis_all(const NodeSet& ns, double t) {
    check_domain(ns, t);
    BasisValues out{std::vector<double>(ns.size()), t, false};
    for (std::size_t i = 0; i < ns.size(); ++i) out.values[i] = std::exp(log_beta_unchecked(ns, i, t));
    return out;
}

BasisValues eval_rational_basis(const NodeSet& ns, const WeightVector& w, double t) {
    require_matching(ns, w);
    check_domain(ns, t);
    const std::size_t n1 = ns.size();
    BasisValues out{std::vector<double>(n1, 0.0), t, true};

    // Endpoints: only nodes coinciding with the endpoint survive, so the row is
    // (1,0,...,0) or (0,...,0,1) for distinct end nodes.
    if (t == ns.front() || t == ns.back()) {
        const double end = t == ns.front() ? ns.front() : ns.back();
        double sum = 0.0;
        for (std::size_t i = 0; i < n1; ++i) {
            if (ns.node(i) == end) {
                out.values[i] = w[i] * ns.coefficient(i);
                sum += out.values[i];
            }
        }
        for (double& v : out.values) v /= sum;
        return out;
    }

    std::vector<double> logs(n1);
    double peak = kNegInf;
    for (std::size_t i = 0; i < n1; ++i) {
        logs[i] = std::log(w[i]) + log_beta_unchecked(ns, i, t);
        peak = std::max(peak, logs[i]);
    }
    if (!std::isfinite(peak)) fail(ErrorCode::ZeroDenominator, "all basis terms vanish at t=" + std::to_string(t));
    double sum = 0.0;
    for (std::size_t i = 0; i < n1; ++i) {
        out.values[i] = std::exp(logs[i] - peak);
        sum += out.values[i];
    }
    for (double& v : out.values) v /= sum;
    return out;
}

double bernstein_reference(std::size_t degree, std::size_t i, double x) {
    if (i > degree) fail(ErrorCode::IndexOutOfRange, "Bernstein index exceeds degree");
    if (!(x >= 0.0 && x <= 1.0)) fail(ErrorCode::OutOfDomain, "Bernstein parameter outside [0,1]");
    return binomial(degree, i) * std::pow(x, static_cast<double>(i)) *
           std::pow(1.0 - x, static_cast<double>(degree - i));
}

}  // namespace gtb
