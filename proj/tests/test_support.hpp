#pragma once

// Independent oracles and random generators shared by the test suites.

#include <cmath>
#include <cstdint>
#include <numbers>
#include <random>
#include <vector>

#include <Eigen/Dense>

#include "gtb/dense_matrix.hpp"
#include "gtb/node_set.hpp"

namespace gtb::testing {

inline std::vector<double> circle_nodes() {
    using std::numbers::pi;
    return {0.0, pi / 4, pi / 2, pi * pi / 4, pi};
}

inline NodeSet circle_nodeset() { return NodeSet::validate(circle_nodes(), {1.0, 0.9, 0.8, 0.9, 1.0}, 4.5); }
inline WeightVector circle_weights() { return WeightVector::validate({0.5, 2.51, 5.5, 2.51, 0.22}); }

// Laplace expansion along the first row; exponential but exact in structure.
inline double cofactor_det(const DenseMatrix& m) {
    const std::size_t n = m.rows();
    if (n == 1) return m(0, 0);
    double det = 0.0;
    for (std::size_t c = 0; c < n; ++c) {
        DenseMatrix sub(n - 1, n - 1);
        for (std::size_t r = 1; r < n; ++r) {
            std::size_t cc = 0;
            for (std::size_t k = 0; k < n; ++k) {
                if (k == c) continue;
                sub(r - 1, cc++) = m(r, k);
            }
        }
        det += ((c % 2 == 0) ? 1.0 : -1.0) * m(0, c) * cofactor_det(sub);
    }
    return det;
}

inline double binom(int n, int k) {
    double r = 1.0;
    for (int j = 1; j <= k; ++j) r = r * (n - k + j) / j;
    return r;
}

// Direct Bernstein sum of control points at x in [0, 1], with optional weights.
inline Eigen::VectorXd bernstein_sum(const Eigen::MatrixXd& control, const std::vector<double>& w, double x) {
    const int n = static_cast<int>(control.rows()) - 1;
    Eigen::VectorXd num = Eigen::VectorXd::Zero(control.cols());
    double den = 0.0;
    for (int i = 0; i <= n; ++i) {
        const double b = binom(n, i) * std::pow(x, i) * std::pow(1 - x, n - i) * (w.empty() ? 1.0 : w[i]);
        num += b * control.row(i).transpose();
        den += b;
    }
    return num / den;
}

inline Eigen::VectorXd de_casteljau(Eigen::MatrixXd pts, double x) {
    for (Eigen::Index level = pts.rows() - 1; level > 0; --level) {
        for (Eigen::Index i = 0; i < level; ++i) pts.row(i) = (1 - x) * pts.row(i) + x * pts.row(i + 1);
    }
    return pts.row(0).transpose();
}

inline std::vector<double> sorted_uniform(std::mt19937_64& rng, std::size_t count, double lo, double hi) {
    std::uniform_real_distribution<double> d(lo, hi);
    std::vector<double> v;
    do {
        v.clear();
        for (std::size_t k = 0; k < count; ++k) v.push_back(d(rng));
        std::sort(v.begin(), v.end());
    } while (std::adjacent_find(v.begin(), v.end()) != v.end());
    return v;
}

// Random valid node set: distinct increasing nodes, positive coefficients.
inline NodeSet random_nodeset(std::mt19937_64& rng, std::size_t count, double max_scale = 3.0) {
    std::uniform_real_distribution<double> start(-2.0, 2.0), len(0.5, 4.0), coef(0.2, 3.0), scale(0.3, max_scale);
    const double a0 = start(rng);
    std::vector<double> nodes = sorted_uniform(rng, count - 2, 0.0, 1.0);
    const double L = len(rng);
    for (double& a : nodes) a = a0 + L * a;
    nodes.insert(nodes.begin(), a0);
    nodes.push_back(a0 + L);
    std::vector<double> c(count);
    for (double& x : c) x = coef(rng);
    return NodeSet::validate(nodes, c, scale(rng));
}

inline WeightVector random_weights(std::mt19937_64& rng, std::size_t count) {
    std::uniform_real_distribution<double> d(0.2, 5.0);
    std::vector<double> w(count);
    for (double& x : w) x = d(rng);
    return WeightVector::validate(w);
}

// Product of nonnegative elementary bidiagonal factors and a positive
// diagonal, which is TP by construction. Some multipliers are zero so the
// result usually has vanishing minors.
inline DenseMatrix random_tp_matrix(std::mt19937_64& rng, std::size_t n) {
    std::uniform_real_distribution<double> mult(0.0, 2.0), diag(0.5, 2.0), coin(0.0, 1.0);
    DenseMatrix m = DenseMatrix::identity(n);
    for (std::size_t i = 0; i < n; ++i) m(i, i) = diag(rng);
    for (std::size_t sweep = 0; sweep + 1 < n; ++sweep) {
        for (std::size_t k = n - 1; k > sweep; --k) {
            const double lower = coin(rng) < 0.25 ? 0.0 : mult(rng);
            const double upper = coin(rng) < 0.25 ? 0.0 : mult(rng);
            DenseMatrix lo = DenseMatrix::identity(n), up = DenseMatrix::identity(n);
            lo(k, k - 1) = lower;
            up(k - 1, k) = upper;
            m = multiply(lo, multiply(m, up));
        }
    }
    return m;
}

inline std::vector<double> positive_factors(std::mt19937_64& rng, std::size_t n) {
    std::uniform_real_distribution<double> e(-3.0, 3.0);
    std::vector<double> f(n);
    for (double& x : f) x = std::pow(10.0, e(rng));
    return f;
}

}  // namespace gtb::testing
