#pragma once

#include <cstddef>
#include <span>
#include <vector>

namespace gtb {

// Row-major real matrix with finite entries.
class DenseMatrix {
public:
    DenseMatrix() = default;
    DenseMatrix(std::size_t rows, std::size_t cols, double fill = 0.0);
    // Throws LengthMismatch / NonFinite.
    DenseMatrix(std::size_t rows, std::size_t cols, std::vector<double> entries);
    DenseMatrix(std::initializer_list<std::initializer_list<double>> rows);

    static DenseMatrix identity(std::size_t n);

    std::size_t rows() const noexcept { return rows_; }
    std::size_t cols() const noexcept { return cols_; }
    bool empty() const noexcept { return entries_.empty(); }

    double& operator()(std::size_t r, std::size_t c) { return entries_[r * cols_ + c]; }
    double operator()(std::size_t r, std::size_t c) const { return entries_[r * cols_ + c]; }

    std::span<const double> row(std::size_t r) const { return {entries_.data() + r * cols_, cols_}; }
    std::span<double> row(std::size_t r) { return {entries_.data() + r * cols_, cols_}; }
    std::span<const double> entries() const noexcept { return entries_; }

    // Throws NonFinite naming the first offending entry.
    void require_finite() const;

    DenseMatrix scaled(std::span<const double> row_factors, std::span<const double> col_factors) const;

    friend bool operator==(const DenseMatrix&, const DenseMatrix&) = default;

private:
    std::size_t rows_ = 0;
    std::size_t cols_ = 0;
    std::vector<double> entries_;
};

DenseMatrix multiply(const DenseMatrix& a, const DenseMatrix& b);

// Determinant of a square matrix: closed form up to 3x3, otherwise LU with
// partial pivoting.
double determinant(const DenseMatrix& m);

// Determinant of the submatrix on the given strictly increasing row/column
// index lists (equal length >= 1). Throws BadIndexSet.
double minor_det(const DenseMatrix& m, std::span<const std::size_t> row_idx, std::span<const std::size_t> col_idx);

// In-place LU factorization with partial pivoting, used for determinants and
// for solving with a fixed matrix several times.
class LuDecomposition {
public:
    explicit LuDecomposition(DenseMatrix m);

    double determinant() const;
    bool singular() const noexcept { return singular_; }
    // Solves m x = b. Throws ZeroDenominator when singular.
    std::vector<double> solve(std::span<const double> b) const;

private:
    DenseMatrix lu_;
    std::vector<std::size_t> perm_;
    int sign_ = 1;
    bool singular_ = false;
};

}  // namespace gtb
