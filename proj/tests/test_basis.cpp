#include <doctest.h>

#include <cmath>
#include <numbers>
#include <numeric>
#include <random>

#include "gtb/basis.hpp"
#include "gtb/error.hpp"
#include "test_support.hpp"

using namespace gtb;
using gtb::testing::circle_nodeset;
using gtb::testing::circle_weights;

namespace {

ErrorCode code_of(auto&& f) {
    try {
        f();
    } catch (const Error& e) {
        return e.code();
    }
    FAIL("expected gtb::Error");
    return ErrorCode::ConfigError;
}

NodeSet unit_pair() { return NodeSet::validate({0, 1}, {1, 1}, 1); }

}  // namespace

TEST_CASE("validate_node_set accepts minimal and circle inputs") {
    const NodeSet ns = unit_pair();
    CHECK(ns.size() == 2);
    CHECK(ns.degree() == 1);
    const NodeSet circle = circle_nodeset();
    CHECK(circle.size() == 5);
    CHECK(circle.scale() == 4.5);
    CHECK(circle.back() == doctest::Approx(std::numbers::pi));
}

TEST_CASE("validate_node_set rejects bad inputs") {
    CHECK(code_of([] { NodeSet::validate({0}, {1}, 1); }) == ErrorCode::EmptyNodes);
    CHECK(code_of([] { NodeSet::validate({}, {}, 1); }) == ErrorCode::EmptyNodes);
    CHECK(code_of([] { NodeSet::validate({0, 0}, {1, 1}, 1); }) == ErrorCode::DegenerateRange);
    CHECK(code_of([] { NodeSet::validate({0, 2, 1}, {1, 1, 1}, 1); }) == ErrorCode::UnsortedNodes);
    CHECK(code_of([] { NodeSet::validate({0, 1}, {1, 0}, 1); }) == ErrorCode::NonPositiveCoefficient);
    CHECK(code_of([] { NodeSet::validate({0, 1}, {1, -2}, 1); }) == ErrorCode::NonPositiveCoefficient);
    CHECK(code_of([] { NodeSet::validate({0, 1}, {1, 1}, 0); }) == ErrorCode::NonPositiveScale);
    CHECK(code_of([] { NodeSet::validate({0, 1}, {1}, 1); }) == ErrorCode::LengthMismatch);
    CHECK(code_of([] { WeightVector::validate({1, 0}); }) == ErrorCode::NonPositiveWeight);
}

TEST_CASE("per-unit-domain scale divides by the domain length") {
    const NodeSet ns = NodeSet::validate({0, 1, 4}, {1, 1, 1}, 8.0, ScaleMode::PerUnitDomain);
    CHECK(ns.nominal_scale() == 8.0);
    CHECK(ns.scale() == 2.0);
}

TEST_CASE("repeated interior nodes are accepted") {
    const NodeSet ns = NodeSet::validate({0, 0.5, 0.5, 1}, {1, 1, 2, 1}, 1);
    CHECK(ns.has_repeated_nodes());
    // Identical up to the coefficient ratio.
    CHECK(eval_gt_basis(ns, 2, 0.3) == doctest::Approx(2 * eval_gt_basis(ns, 1, 0.3)));
}

TEST_CASE("eval_gt_basis hand values") {
    const NodeSet ns = unit_pair();
    CHECK(eval_gt_basis(ns, 0, 0.5) == doctest::Approx(0.5).epsilon(1e-15));
    CHECK(eval_gt_basis(ns, 1, 0.0) == 0.0);
    CHECK(eval_gt_basis(ns, 0, 0.0) == 1.0);
    CHECK(eval_gt_basis(ns, 1, 1.0) == 1.0);

    const NodeSet quad = NodeSet::validate({0, 1, 2}, {0.25, 0.5, 0.25}, 1);
    CHECK(std::abs(eval_gt_basis(quad, 1, 1.0) - 0.5) < 1e-15);
}

TEST_CASE("eval_gt_basis errors") {
    const NodeSet ns = unit_pair();
    CHECK(code_of([&] { eval_gt_basis(ns, 0, 1.5); }) == ErrorCode::OutOfDomain);
    CHECK(code_of([&] { eval_gt_basis(ns, 0, -1e-12); }) == ErrorCode::OutOfDomain);
    CHECK(code_of([&] { eval_gt_basis(ns, 2, 0.5); }) == ErrorCode::IndexOutOfRange);
}

TEST_CASE("eval_rational_basis hand values") {
    const NodeSet ns = unit_pair();
    const auto w = WeightVector::unit(2);
    const BasisValues mid = eval_rational_basis(ns, w, 0.5);
    CHECK(mid.normalized);
    CHECK(mid.values[0] == doctest::Approx(0.5));
    CHECK(mid.values[1] == doctest::Approx(0.5));
    const BasisValues left = eval_rational_basis(ns, w, 0.0);
    CHECK(left.values == std::vector<double>{1.0, 0.0});

    const NodeSet circle = circle_nodeset();
    const auto v = eval_rational_basis(circle, circle_weights(), (circle.front() + circle.back()) / 2);
    CHECK(std::abs(std::accumulate(v.values.begin(), v.values.end(), 0.0) - 1.0) < 1e-12);

    CHECK(code_of([&] { eval_rational_basis(ns, WeightVector::unit(3), 0.5); }) == ErrorCode::CountMismatch);
    CHECK(code_of([&] { eval_rational_basis(ns, w, 2.0); }) == ErrorCode::OutOfDomain);
}

TEST_CASE("rational basis stays finite where the raw basis overflows") {
    std::vector<double> nodes;
    for (int i = 0; i <= 30; ++i) nodes.push_back(i * 2 * std::numbers::pi / 30);
    const NodeSet ns = NodeSet::validate(nodes, std::vector<double>(31, 1.0 / 900), 31.1);
    const auto w = WeightVector::unit(31);
    CHECK(std::isinf(eval_gt_basis(ns, 15, 1.0)));
    CHECK(std::isfinite(log_gt_basis(ns, 15, 1.0)));
    for (double t : {0.0, 1e-9, 0.3, 3.1, 6.0, ns.back()}) {
        const auto v = eval_rational_basis(ns, w, t);
        double sum = 0.0;
        for (double x : v.values) {
            CHECK(std::isfinite(x));
            CHECK(x >= 0.0);
            sum += x;
        }
        CHECK(std::abs(sum - 1.0) < 1e-12);
    }
}

TEST_CASE("bernstein_reference values") {
    CHECK(bernstein_reference(2, 1, 0.5) == doctest::Approx(0.5));
    CHECK(bernstein_reference(3, 0, 0.0) == 1.0);
    CHECK(std::abs(bernstein_reference(5, 2, 0.3) - 0.3087) < 1e-15);
    CHECK(code_of([] { bernstein_reference(2, 3, 0.5); }) == ErrorCode::IndexOutOfRange);
    CHECK(code_of([] { bernstein_reference(2, 1, 1.5); }) == ErrorCode::OutOfDomain);
}

TEST_CASE("bernstein_equivalent_nodeset") {
    const NodeSet n1 = bernstein_equivalent_nodeset(1);
    CHECK(std::vector<double>(n1.nodes().begin(), n1.nodes().end()) == std::vector<double>{0, 1});
    CHECK(std::vector<double>(n1.coefficients().begin(), n1.coefficients().end()) == std::vector<double>{1, 1});
    const NodeSet n2 = bernstein_equivalent_nodeset(2);
    CHECK(std::vector<double>(n2.coefficients().begin(), n2.coefficients().end()) ==
          std::vector<double>{0.25, 0.5, 0.25});
    CHECK(n2.scale() == 1.0);

    for (std::size_t n = 1; n <= 8; ++n) {
        const NodeSet ns = bernstein_equivalent_nodeset(n);
        double worst = 0.0;
        for (int k = 0; k < 1000; ++k) {
            const double x = k / 999.0;
            for (std::size_t i = 0; i <= n; ++i) {
                worst = std::max(worst, std::abs(eval_gt_basis(ns, i, n * x) - bernstein_reference(n, i, x)));
            }
        }
        CHECK_MESSAGE(worst < 1e-12, "degree " << n << " deviation " << worst);
    }
}

TEST_CASE("property: non-negativity, partition of unity and endpoint rows") {
    std::mt19937_64 rng(7);
    std::uniform_real_distribution<double> unit(0.0, 1.0);
    for (int trial = 0; trial < 200; ++trial) {
        const std::size_t count = 2 + trial % 9;
        const NodeSet ns = testing::random_nodeset(rng, count, 20.0);
        const WeightVector w = testing::random_weights(rng, count);
        for (int k = 0; k < 20; ++k) {
            const double t = ns.front() + unit(rng) * ns.domain_length();
            for (std::size_t i = 0; i < count; ++i) CHECK(eval_gt_basis(ns, i, t) >= 0.0);
            const auto v = eval_rational_basis(ns, w, t);
            const double sum = std::accumulate(v.values.begin(), v.values.end(), 0.0);
            CHECK(std::abs(sum - 1.0) < 1e-12);
        }
        const auto left = eval_rational_basis(ns, w, ns.front());
        const auto right = eval_rational_basis(ns, w, ns.back());
        std::vector<double> e0(count, 0.0), en(count, 0.0);
        e0.front() = 1.0;
        en.back() = 1.0;
        CHECK(left.values == e0);
        CHECK(right.values == en);
    }
}

TEST_CASE("curve scale dependence for unit coefficients (reported, not asserted)") {
    // The curve depends on l through the exponents; measure how much.
    const NodeSet a = NodeSet::with_unit_coefficients(testing::circle_nodes(), 1.0);
    const NodeSet b = NodeSet::with_unit_coefficients(testing::circle_nodes(), 4.5);
    const auto w = WeightVector::unit(5);
    double worst = 0.0;
    for (int k = 0; k <= 100; ++k) {
        const double t = a.front() + a.domain_length() * k / 100.0;
        const auto va = eval_rational_basis(a, w, t);
        const auto vb = eval_rational_basis(b, w, t);
        for (std::size_t i = 0; i < 5; ++i) worst = std::max(worst, std::abs(va.values[i] - vb.values[i]));
    }
    MESSAGE("max |T(l=1) - T(l=4.5)| over the grid: " << worst);
    CHECK(std::isfinite(worst));
}
