#include <doctest.h>

#include "gtb/config.hpp"
#include "gtb/commands.hpp"
#include "gtb/error.hpp"

using namespace gtb;

namespace {

ErrorCode parse_error(const std::string& text) {
    try {
        parse_config(text);
    } catch (const Error& e) {
        return e.code();
    }
    FAIL("config unexpectedly accepted: " << text);
    return ErrorCode::IoError;
}

}  // namespace

TEST_CASE("parse_config defaults") {
    const RunConfig c = parse_config(R"({"nodes": [0, 1, 3]})");
    CHECK(c.mode == RunMode::Eval);
    CHECK(c.scale == 1.0);
    const NodeSet ns = build_nodeset(c);
    CHECK(ns.coefficient(2) == 1.0);
    CHECK(build_weights(c).size() == 3);
    CHECK(build_weights(c)[1] == 1.0);
}

TEST_CASE("parse_config rejects invalid configs as ConfigError") {
    CHECK(parse_error("not json") == ErrorCode::ConfigError);
    CHECK(parse_error("[1,2]") == ErrorCode::ConfigError);
    CHECK(parse_error("{}") == ErrorCode::ConfigError);
    CHECK(parse_error(R"({"nodes": [0, 1], "weights": [1, -1]})") == ErrorCode::ConfigError);
    CHECK(parse_error(R"({"nodes": [1, 0]})") == ErrorCode::ConfigError);
    CHECK(parse_error(R"({"nodes": [0, 1], "scale": 0})") == ErrorCode::ConfigError);
    CHECK(parse_error(R"({"nodes": [0, 1], "mode": "solve"})") == ErrorCode::ConfigError);
    CHECK(parse_error(R"({"nodes": [0, 1], "weights": [1, 1, 1]})") == ErrorCode::ConfigError);
    CHECK(parse_error(R"({"nodes": [0, 1], "bernstein_degree": 2})") == ErrorCode::ConfigError);
    CHECK(parse_error(R"({"nodes": [0, 1], "mode": "fit"})") == ErrorCode::ConfigError);
    CHECK(parse_error(R"({"nodes": [0, 1], "mode": "fit", "points": [[0, 0], [1, 1]], "params": [0.5, 0.2]})") ==
          ErrorCode::ConfigError);
    CHECK(parse_error(R"({"nodes": [0, 1], "points": [[0, 0], [1, 1], [2, 2]]})") == ErrorCode::ConfigError);
    CHECK(parse_error(R"({"nodes": "abc"})") == ErrorCode::ConfigError);
}

TEST_CASE("bernstein_degree configs") {
    const RunConfig c = parse_config(R"({"mode": "tp-check", "bernstein_degree": 4})");
    const NodeSet ns = build_nodeset(c);
    CHECK(ns.size() == 5);
    CHECK(ns.coefficient(2) == doctest::Approx(6.0 / 256));
    CHECK(build_weights(c).size() == 5);
}

TEST_CASE("config round trip") {
    for (auto kind : {ExampleKind::Circle, ExampleKind::Helix}) {
        const RunConfig c = example_config(kind);
        const RunConfig back = parse_config(dump_config(c));
        CHECK(back == c);
        CHECK(dump_config(back) == dump_config(c));
    }
    const RunConfig tp = parse_config(R"({"mode": "tp-check", "bernstein_degree": 3, "trials": 7, "seed": 9})");
    CHECK(parse_config(dump_config(tp)) == tp);
}

TEST_CASE("example configs build valid fit problems") {
    const FitProblem circle = build_fit_problem(example_config(ExampleKind::Circle));
    CHECK(circle.size() == 5);
    CHECK(circle.nodeset().scale_mode() == ScaleMode::PerUnitDomain);
    const FitProblem helix = build_fit_problem(example_config(ExampleKind::Helix));
    CHECK(helix.size() == 31);
    CHECK(helix.weights()[30] == 31.0);
    CHECK(helix.weights()[0] == 1.0);
    CHECK(helix.params()[3] > helix.params()[2]);
    CHECK(helix.params()[3] < helix.params()[4]);
}
