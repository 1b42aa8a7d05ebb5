#include <doctest.h>

#include "gtb/error.hpp"
#include "gtb/ntp_suite.hpp"
#include "test_support.hpp"

using namespace gtb;

TEST_CASE("draw_ntp_params honours the boundary case") {
    const NodeSet ns = testing::circle_nodeset();
    for (std::size_t trial = 0; trial < 40; ++trial) {
        const auto boundary = static_cast<BoundaryCase>(trial % 4);
        const auto t = draw_ntp_params(ns, boundary, 99, trial, 1e-6);
        REQUIRE(t.size() == ns.size());
        for (std::size_t i = 1; i < t.size(); ++i) CHECK(t[i] > t[i - 1]);
        const bool left = boundary == BoundaryCase::LeftTouching || boundary == BoundaryCase::BothTouching;
        const bool right = boundary == BoundaryCase::RightTouching || boundary == BoundaryCase::BothTouching;
        CHECK((t.front() == ns.front()) == left);
        CHECK((t.back() == ns.back()) == right);
        if (!left) CHECK(t.front() >= ns.front() + 1e-6 * ns.domain_length());
        if (!right) CHECK(t.back() <= ns.back() - 1e-6 * ns.domain_length());
    }
    CHECK(draw_ntp_params(ns, BoundaryCase::Interior, 1, 3, 1e-6) == draw_ntp_params(ns, BoundaryCase::Interior, 1, 3, 1e-6));
    CHECK(draw_ntp_params(ns, BoundaryCase::Interior, 1, 3, 1e-6) != draw_ntp_params(ns, BoundaryCase::Interior, 2, 3, 1e-6));
}

TEST_CASE("verify_ntp_suite on the cubic Bernstein basis") {
    const NtpSuiteReport r = verify_ntp_suite(bernstein_equivalent_nodeset(3), WeightVector::unit(4), {100, 1});
    CHECK(r.passed());
    CHECK(r.trials == 100);
    for (const auto& tally : r.by_case) CHECK(tally.trials == 25);
    CHECK(r.method == TpMethod::Exhaustive);
}

TEST_CASE("verify_ntp_suite on the circle configuration") {
    const NtpSuiteReport r = verify_ntp_suite(testing::circle_nodeset(), testing::circle_weights(), {100, 42});
    CHECK(r.passed());
    CHECK(r.failed.empty());
    REQUIRE(r.worst);
    CHECK(r.worst_minor >= -kDefaultTpTolerance);
}

TEST_CASE("verify_ntp_suite with a single node pair touching both ends") {
    const NodeSet ns = NodeSet::validate({0, 1}, {1, 1}, 1);
    const NtpSuiteReport r = verify_ntp_suite(ns, WeightVector::unit(2), {4, 0});
    CHECK(r.passed());
    CHECK(r.by_case[static_cast<std::size_t>(BoundaryCase::BothTouching)].trials == 1);
}

TEST_CASE("verify_ntp_suite is deterministic and thread-count independent") {
    const NodeSet ns = testing::circle_nodeset();
    NtpSuiteOptions single{64, 7};
    NtpSuiteOptions multi{64, 7};
    multi.threads = 4;
    const auto a = verify_ntp_suite(ns, testing::circle_weights(), single);
    const auto b = verify_ntp_suite(ns, testing::circle_weights(), multi);
    CHECK(a.worst_minor == b.worst_minor);
    REQUIRE(a.worst);
    REQUIRE(b.worst);
    CHECK(a.worst->params == b.worst->params);
}

TEST_CASE("verify_ntp_suite falls back to the contiguous criterion for large bases") {
    const NtpSuiteReport r = verify_ntp_suite(bernstein_equivalent_nodeset(10), WeightVector::unit(11), {8, 3});
    CHECK(r.method == TpMethod::Contiguous);
    CHECK(r.passed());
}

TEST_CASE("verify_ntp_suite input errors") {
    CHECK_THROWS_AS(verify_ntp_suite(testing::circle_nodeset(), WeightVector::unit(3), {10, 0}), Error);
    CHECK_THROWS_AS(verify_ntp_suite(testing::circle_nodeset(), testing::circle_weights(), {0, 0}), Error);
}
