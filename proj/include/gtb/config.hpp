#pragma once

#include <cstddef>
#include <cstdint>
#include <filesystem>
#include <optional>
#include <string>
#include <vector>

#include "gtb/curve.hpp"
#include "gtb/node_set.hpp"
#include "gtb/pia.hpp"

namespace gtb {

enum class RunMode { Fit, Eval, TpCheck };

// JSON run configuration. Either `nodes` or `bernstein_degree` selects the
// node set; missing coefficients and weights default to 1.
struct RunConfig {
    RunMode mode = RunMode::Eval;
    std::vector<double> nodes;
    std::optional<std::size_t> bernstein_degree;
    std::optional<std::vector<double>> coefficients;
    double scale = 1.0;
    ScaleMode scale_mode = ScaleMode::Absolute;
    std::optional<std::vector<double>> weights;
    // Data points for fit mode, control points for eval mode.
    std::optional<std::vector<std::vector<double>>> points;
    // Fit parameters; default to the nodes.
    std::optional<std::vector<double>> params;
    std::size_t max_iter = 20;
    double tol = 0.0;
    std::size_t trials = 100;
    std::uint64_t seed = 42;
    std::size_t grid = 101;
    std::string output_dir = "out";

    friend bool operator==(const RunConfig&, const RunConfig&) = default;
};

// Parse and validate against the node set / weight / fit-problem invariants.
// Every failure is reported as ConfigError.
RunConfig parse_config(const std::string& json_text);
RunConfig load_config(const std::filesystem::path& path);
std::string dump_config(const RunConfig& config);

NodeSet build_nodeset(const RunConfig& config);
WeightVector build_weights(const RunConfig& config);
ControlPolygon build_points(const RunConfig& config);
FitProblem build_fit_problem(const RunConfig& config);

}  // namespace gtb
