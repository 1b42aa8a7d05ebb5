#include "gtb/total_positivity.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numeric>
#include <string>

#include "gtb/basis.hpp"
#include "gtb/error.hpp"

namespace gtb {
namespace {

void check_params(const NodeSet& ns, std::span<const double> params) {
    if (params.empty()) fail(ErrorCode::UnsortedParams, "parameter list is empty");
    for (std::size_t i = 0; i < params.size(); ++i) {
        if (!ns.contains(params[i])) {
            fail(ErrorCode::OutOfDomain, "parameter " + std::to_string(i) + " outside the node interval");
        }
        if (i > 0 && !(params[i] > params[i - 1])) {
            fail(ErrorCode::UnsortedParams, "parameters must be strictly increasing");
        }
    }
}

// Advances idx to the next k-subset of {0..n-1} in lexicographic order.
bool next_combination(std::vector<std::size_t>& idx, std::size_t n) {
    const std::size_t k = idx.size();
    for (std::size_t pos = k; pos-- > 0;) {
        if (idx[pos] < n - k + pos) {
            ++idx[pos];
            for (std::size_t q = pos + 1; q < k; ++q) idx[q] = idx[q - 1] + 1;
            return true;
        }
    }
    return false;
}

double hadamard_scale(const DenseMatrix& m, std::span<const std::size_t> rows, std::span<const std::size_t> cols) {
    double scale = 1.0;
    for (std::size_t r : rows) {
        double sq = 0.0;
        for (std::size_t c : cols) sq += m(r, c) * m(r, c);
        scale *= std::sqrt(sq);
    }
    return scale;
}

class MinorTally {
public:
    MinorTally(const DenseMatrix& m, double tol) : m_(m), tol_(tol) {}

    void visit(std::span<const std::size_t> rows, std::span<const std::size_t> cols, bool contiguous) {
        const double value = minor_det(m_, rows, cols);
        const double scale = hadamard_scale(m_, rows, cols);
        const double normalized = scale > 0.0 ? value / scale : 0.0;
        ++checked_;
        if (normalized < -tol_) all_nonnegative_ = false;
        if (!(normalized > tol_)) all_positive_ = false;
        if (contiguous) min_contiguous_ = std::min(min_contiguous_, normalized);
        if (!worst_ || normalized < worst_->normalized) {
            worst_ = MinorWitness{{rows.begin(), rows.end()}, {cols.begin(), cols.end()}, value, normalized};
        }
    }

    TpReport report(TpMethod method) const {
        TpReport r;
        r.method = method;
        r.is_tp = all_nonnegative_;
        r.is_stp = all_positive_;
        r.certified = method == TpMethod::Exhaustive || all_positive_;
        r.min_contiguous_minor = min_contiguous_;
        r.min_minor = worst_ ? worst_->normalized : 0.0;
        r.minors_checked = checked_;
        r.witness = worst_;
        return r;
    }

private:
    const DenseMatrix& m_;
    double tol_;
    bool all_nonnegative_ = true;
    bool all_positive_ = true;
    double min_contiguous_ = std::numeric_limits<double>::infinity();
    std::size_t checked_ = 0;
    std::optional<MinorWitness> worst_;
};

bool is_window(std::span<const std::size_t> idx) {
    for (std::size_t q = 1; q < idx.size(); ++q) {
        if (idx[q] != idx[q - 1] + 1) return false;
    }
    return true;
}

}  // namespace

DenseMatrix collocation_matrix(const NodeSet& ns, std::span<const double> params) {
    check_params(ns, params);
    DenseMatrix out(params.size(), ns.size());
    for (std::size_t i = 0; i < params.size(); ++i) {
        const auto row = eval_gt_basis_all(ns, params[i]);
        std::copy(row.values.begin(), row.values.end(), out.row(i).begin());
    }
    out.require_finite();
    return out;
}

DenseMatrix rational_collocation_matrix(const NodeSet& ns, const WeightVector& w, std::span<const double> params) {
    require_matching(ns, w);
    check_params(ns, params);
    DenseMatrix out(params.size(), ns.size());
    for (std::size_t i = 0; i < params.size(); ++i) {
        const auto row = eval_rational_basis(ns, w, params[i]);
        std::copy(row.values.begin(), row.values.end(), out.row(i).begin());
    }
    return out;
}

DenseMatrix power_reduction(const NodeSet& ns, std::span<const double> params, bool strict_interior) {
    check_params(ns, params);
    const double a0 = ns.front();
    const double an = ns.back();
    const double l = ns.scale();
    const std::size_t cols = ns.size();
    DenseMatrix out(params.size(), cols);
    for (std::size_t i = 0; i < params.size(); ++i) {
        const double t = params[i];
        const bool at_left = t == a0;
        const bool at_right = t == an;
        if (strict_interior && (at_left || at_right)) {
            fail(ErrorCode::OutOfDomain, "parameter " + std::to_string(i) + " touches the boundary");
        }
        for (std::size_t j = 0; j < cols; ++j) {
            if (at_left) {
                out(i, j) = ns.node(j) == a0 ? 1.0 : 0.0;
            } else if (at_right) {
                out(i, j) = ns.node(j) == an ? 1.0 : 0.0;
            } else {
                const double x = (t - a0) / (an - t);
                const double k = ns.node(j) - a0;
                out(i, j) = k == 0.0 ? 1.0 : std::exp(l * k * std::log(x));
            }
        }
    }
    out.require_finite();
    return out;
}

void validate(const GenVandermondeSpec& spec) {
    const std::size_t n1 = spec.t.size();
    if (n1 == 0) fail(ErrorCode::InvalidSpec, "empty t");
    if (spec.alpha.size() != n1) fail(ErrorCode::InvalidSpec, "alpha length differs from t length");
    if (spec.signs.size() + 1 != n1) fail(ErrorCode::InvalidSpec, "need exactly n signs s_1..s_n");
    for (std::size_t i = 0; i < n1; ++i) {
        if (!(spec.t[i] > 0.0) || !std::isfinite(spec.t[i])) fail(ErrorCode::InvalidSpec, "t must be positive");
        if (!std::isfinite(spec.alpha[i])) fail(ErrorCode::InvalidSpec, "alpha must be finite");
        if (i == 0) continue;
        if (!(spec.alpha[i] > spec.alpha[i - 1])) fail(ErrorCode::InvalidSpec, "alpha must be strictly increasing");
        const int s = spec.signs[i - 1];
        if (s != 1 && s != -1) fail(ErrorCode::InvalidSpec, "signs must be +1 or -1");
        const bool ordered = s == 1 ? spec.t[i] > spec.t[i - 1] : spec.t[i] >= spec.t[i - 1];
        if (!ordered) fail(ErrorCode::InvalidSpec, "t ordering chain broken at index " + std::to_string(i));
    }
}

DenseMatrix generalized_vandermonde(const GenVandermondeSpec& spec) {
    validate(spec);
    const std::size_t n1 = spec.t.size();
    DenseMatrix out(n1, n1);
    for (std::size_t i = 0; i < n1; ++i) {
        for (std::size_t j = 0; j < n1; ++j) {
            const double v = std::pow(spec.t[i], spec.alpha[j]);
            out(i, j) = j > i ? spec.signs[j - 1] * v : v;
        }
    }
    out.require_finite();
    return out;
}

TpReport is_totally_positive(const DenseMatrix& m, double tol, TpMethod method) {
    if (m.empty()) fail(ErrorCode::BadIndexSet, "matrix is empty");
    if (!(tol >= 0.0)) fail(ErrorCode::InvalidSpec, "tolerance must be >= 0");
    const std::size_t rows = m.rows();
    const std::size_t cols = m.cols();
    const std::size_t order = std::min(rows, cols);
    MinorTally tally(m, tol);

    if (method == TpMethod::Exhaustive) {
        if (std::max(rows, cols) > kMaxExhaustiveDimension) {
            fail(ErrorCode::TooLargeForExhaustive, "exhaustive enumeration is capped at dimension " +
                                                       std::to_string(kMaxExhaustiveDimension));
        }
        for (std::size_t k = 1; k <= order; ++k) {
            std::vector<std::size_t> ri(k);
            std::iota(ri.begin(), ri.end(), std::size_t{0});
            do {
                std::vector<std::size_t> ci(k);
                std::iota(ci.begin(), ci.end(), std::size_t{0});
                const bool row_window = is_window(ri);
                do {
                    tally.visit(ri, ci, row_window && is_window(ci));
                } while (next_combination(ci, cols));
            } while (next_combination(ri, rows));
        }
        return tally.report(method);
    }

    for (std::size_t k = 1; k <= order; ++k) {
        std::vector<std::size_t> ri(k), ci(k);
        for (std::size_t r0 = 0; r0 + k <= rows; ++r0) {
            std::iota(ri.begin(), ri.end(), r0);
            for (std::size_t c0 = 0; c0 + k <= cols; ++c0) {
                std::iota(ci.begin(), ci.end(), c0);
                tally.visit(ri, ci, true);
            }
        }
    }
    return tally.report(method);
}

}  // namespace gtb
