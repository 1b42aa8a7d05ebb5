#pragma once

#include <cstddef>
#include <vector>

#include "gtb/node_set.hpp"

namespace gtb {

struct BasisValues {
    std::vector<double> values;
    double parameter = 0.0;
    bool normalized = false;  // true for the rational basis T, false for raw beta
};

// ln beta_i(t); -inf where beta_i(t) = 0. Uses 0^0 = 1 at the endpoints.
double log_gt_basis(const NodeSet& ns, std::size_t i, double t);

// beta_i(t) = c_i h0(t)^h0(a_i) h1(t)^h1(a_i), h0(t) = l (t - a0), h1(t) = l (an - t).
// The raw value can overflow to +inf for large l (an - a0); prefer the rational
// basis or log_gt_basis in that regime.
double eval_gt_basis(const NodeSet& ns, std::size_t i, double t);

// All raw values beta_0(t) .. beta_n(t).
BasisValues eval_gt_basis_all(const NodeSet& ns, double t);

// T_i(t) = w_i beta_i(t) / sum_j w_j beta_j(t), evaluated with the largest log
// term factored out so no intermediate overflows.
BasisValues eval_rational_basis(const NodeSet& ns, const WeightVector& w, double t);

// Classical B^n_i(x) = C(n,i) x^i (1-x)^(n-i).
double bernstein_reference(std::size_t degree, std::size_t i, double x);

}  // namespace gtb
