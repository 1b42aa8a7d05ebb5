#include "gtb/dense_matrix.hpp"

#include <cmath>
#include <numeric>
#include <string>
#include <utility>

#include "gtb/error.hpp"

namespace gtb {

DenseMatrix::DenseMatrix(std::size_t rows, std::size_t cols, double fill)
    : rows_(rows), cols_(cols), entries_(rows * cols, fill) {
    require_finite();
}

DenseMatrix::DenseMatrix(std::size_t rows, std::size_t cols, std::vector<double> entries)
    : rows_(rows), cols_(cols), entries_(std::move(entries)) {
    if (entries_.size() != rows_ * cols_) {
        fail(ErrorCode::LengthMismatch, "matrix entry count " + std::to_string(entries_.size()) + " != " +
                                            std::to_string(rows_) + "x" + std::to_string(cols_));
    }
    require_finite();
}

DenseMatrix::DenseMatrix(std::initializer_list<std::initializer_list<double>> rows) {
    rows_ = rows.size();
    cols_ = rows_ == 0 ? 0 : rows.begin()->size();
    entries_.reserve(rows_ * cols_);
    for (const auto& r : rows) {
        if (r.size() != cols_) fail(ErrorCode::LengthMismatch, "ragged matrix literal");
        entries_.insert(entries_.end(), r.begin(), r.end());
    }
    require_finite();
}

DenseMatrix DenseMatrix::identity(std::size_t n) {
    DenseMatrix m(n, n);
    for (std::size_t i = 0; i < n; ++i) m(i, i) = 1.0;
    return m;
}

void DenseMatrix::require_finite() const {
    for (std::size_t k = 0; k < entries_.size(); ++k) {
        if (!std::isfinite(entries_[k])) {
            fail(ErrorCode::NonFinite, "matrix entry (" + std::to_string(k / cols_) + "," +
                                           std::to_string(k % cols_) + ") is not finite");
        }
    }
}

DenseMatrix DenseMatrix::scaled(std::span<const double> row_factors, std::span<const double> col_factors) const {
    if (row_factors.size() != rows_ || col_factors.size() != cols_) {
        fail(ErrorCode::LengthMismatch, "scaling factor count does not match matrix shape");
    }
    DenseMatrix out = *this;
    for (std::size_t r = 0; r < rows_; ++r) {
        for (std::size_t c = 0; c < cols_; ++c) out(r, c) *= row_factors[r] * col_factors[c];
    }
    out.require_finite();
    return out;
}

DenseMatrix multiply(const DenseMatrix& a, const DenseMatrix& b) {
    if (a.cols() != b.rows()) fail(ErrorCode::LengthMismatch, "inner dimensions differ");
    DenseMatrix out(a.rows(), b.cols());
    for (std::size_t i = 0; i < a.rows(); ++i) {
        for (std::size_t k = 0; k < a.cols(); ++k) {
            const double aik = a(i, k);
            for (std::size_t j = 0; j < b.cols(); ++j) out(i, j) += aik * b(k, j);
        }
    }
    return out;
}

LuDecomposition::LuDecomposition(DenseMatrix m) : lu_(std::move(m)), perm_(lu_.rows()) {
    if (lu_.rows() != lu_.cols()) fail(ErrorCode::LengthMismatch, "LU needs a square matrix");
    const std::size_t n = lu_.rows();
    std::iota(perm_.begin(), perm_.end(), std::size_t{0});
    for (std::size_t k = 0; k < n; ++k) {
        std::size_t p = k;
        double best = std::abs(lu_(k, k));
        for (std::size_t r = k + 1; r < n; ++r) {
            if (std::abs(lu_(r, k)) > best) {
                best = std::abs(lu_(r, k));
                p = r;
            }
        }
        if (best == 0.0) {
            singular_ = true;
            continue;
        }
        if (p != k) {
            for (std::size_t c = 0; c < n; ++c) std::swap(lu_(k, c), lu_(p, c));
            std::swap(perm_[k], perm_[p]);
            sign_ = -sign_;
        }
        const double pivot = lu_(k, k);
        for (std::size_t r = k + 1; r < n; ++r) {
            const double f = lu_(r, k) / pivot;
            lu_(r, k) = f;
            if (f == 0.0) continue;
            for (std::size_t c = k + 1; c < n; ++c) lu_(r, c) -= f * lu_(k, c);
        }
    }
}

double LuDecomposition::determinant() const {
    if (singular_) return 0.0;
    double det = sign_;
    for (std::size_t k = 0; k < lu_.rows(); ++k) det *= lu_(k, k);
    return det;
}

std::vector<double> LuDecomposition::solve(std::span<const double> b) const {
    const std::size_t n = lu_.rows();
    if (b.size() != n) fail(ErrorCode::LengthMismatch, "right-hand side length mismatch");
    if (singular_) fail(ErrorCode::ZeroDenominator, "matrix is singular");
    std::vector<double> x(n);
    for (std::size_t i = 0; i < n; ++i) {
        double s = b[perm_[i]];
        for (std::size_t j = 0; j < i; ++j) s -= lu_(i, j) * x[j];
        x[i] = s;
    }
    for (std::size_t i = n; i-- > 0;) {
        double s = x[i];
        for (std::size_t j = i + 1; j < n; ++j) s -= lu_(i, j) * x[j];
        x[i] = s / lu_(i, i);
    }
    return x;
}

namespace {

template <typename At>
double small_det(std::size_t k, At at) {
    switch (k) {
        case 1: return at(0, 0);
        case 2: return at(0, 0) * at(1, 1) - at(0, 1) * at(1, 0);
        default:
            return at(0, 0) * (at(1, 1) * at(2, 2) - at(1, 2) * at(2, 1)) -
                   at(0, 1) * (at(1, 0) * at(2, 2) - at(1, 2) * at(2, 0)) +
                   at(0, 2) * (at(1, 0) * at(2, 1) - at(1, 1) * at(2, 0));
    }
}

void check_index_list(std::span<const std::size_t> idx, std::size_t bound, const char* what) {
    for (std::size_t k = 0; k < idx.size(); ++k) {
        if (idx[k] >= bound) fail(ErrorCode::BadIndexSet, std::string(what) + " index out of bounds");
        if (k > 0 && idx[k] <= idx[k - 1]) fail(ErrorCode::BadIndexSet, std::string(what) + " indices not increasing");
    }
}

}  // namespace

double determinant(const DenseMatrix& m) {
    if (m.rows() != m.cols() || m.rows() == 0) fail(ErrorCode::BadIndexSet, "determinant needs a non-empty square matrix");
    if (m.rows() <= 3) return small_det(m.rows(), [&](std::size_t r, std::size_t c) { return m(r, c); });
    return LuDecomposition(m).determinant();
}

double minor_det(const DenseMatrix& m, std::span<const std::size_t> row_idx, std::span<const std::size_t> col_idx) {
    if (row_idx.empty() || row_idx.size() != col_idx.size()) {
        fail(ErrorCode::BadIndexSet, "row and column index lists must be non-empty and of equal length");
    }
    check_index_list(row_idx, m.rows(), "row");
    check_index_list(col_idx, m.cols(), "column");
    const std::size_t k = row_idx.size();
    if (k <= 3) return small_det(k, [&](std::size_t r, std::size_t c) { return m(row_idx[r], col_idx[c]); });
    DenseMatrix sub(k, k);
    for (std::size_t r = 0; r < k; ++r) {
        for (std::size_t c = 0; c < k; ++c) sub(r, c) = m(row_idx[r], col_idx[c]);
    }
    return LuDecomposition(std::move(sub)).determinant();
}

}  // namespace gtb
