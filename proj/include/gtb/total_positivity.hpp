#pragma once

#include <cstddef>
#include <optional>
#include <span>
#include <vector>

#include "gtb/dense_matrix.hpp"
#include "gtb/node_set.hpp"

namespace gtb {

// Entry (i, j) = beta_j(t_i). Params must be strictly increasing and inside
// [a0, an].
DenseMatrix collocation_matrix(const NodeSet& ns, std::span<const double> params);

// Entry (i, j) = T_j(t_i); every row sums to 1.
DenseMatrix rational_collocation_matrix(const NodeSet& ns, const WeightVector& w, std::span<const double> params);

// Power matrix with entries x_i^(l k_j), x_i = (t_i - a0) / (an - t_i),
// k_j = a_j - a0. It differs from the collocation matrix only by positive row
// and column factors. A parameter at a0 gives the border row (1, 0, ..., 0)
// and one at an gives (0, ..., 0, 1) (a row rescaled by x^(-l k_n) in the
// limit). With strict_interior, touching an endpoint is an OutOfDomain error.
DenseMatrix power_reduction(const NodeSet& ns, std::span<const double> params, bool strict_interior);

// Generalized Vandermonde matrix W(t; alpha): s_j t_i^alpha_j above the
// diagonal, t_i^alpha_j on and below it. signs[j-1] is s_j for j = 1..n.
struct GenVandermondeSpec {
    std::vector<double> t;
    std::vector<double> alpha;
    std::vector<int> signs;
};

// Throws InvalidSpec when t is not positive, alpha is not strictly increasing,
// a sign is not +-1, or the chain t_i >(s_i = 1) / >=(s_i = -1) t_{i-1} breaks.
void validate(const GenVandermondeSpec& spec);
DenseMatrix generalized_vandermonde(const GenVandermondeSpec& spec);

enum class TpMethod { Contiguous, Exhaustive };

constexpr double kDefaultTpTolerance = 1e-9;
constexpr std::size_t kMaxExhaustiveDimension = 8;

struct MinorWitness {
    std::vector<std::size_t> rows;
    std::vector<std::size_t> cols;
    double value = 0.0;       // raw determinant
    double normalized = 0.0;  // value / product of the selected rows' Euclidean norms
};

// Minors are judged relative to the product of the Euclidean norms of the
// selected rows (the Hadamard bound), so the tolerance is scale free.
struct TpReport {
    bool is_tp = false;
    bool is_stp = false;
    // True when is_tp is a certificate: exhaustive enumeration, or the
    // contiguous test found every window strictly positive.
    bool certified = false;
    // Smallest normalized minor over consecutive row/column windows.
    double min_contiguous_minor = 0.0;
    // Smallest normalized minor over everything examined.
    double min_minor = 0.0;
    std::size_t minors_checked = 0;
    std::optional<MinorWitness> witness;  // the most negative minor examined
    TpMethod method = TpMethod::Exhaustive;
};

TpReport is_totally_positive(const DenseMatrix& m, double tol = kDefaultTpTolerance,
                             TpMethod method = TpMethod::Exhaustive);

}  // namespace gtb
