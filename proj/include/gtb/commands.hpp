#pragma once

#include <cstddef>
#include <cstdint>
#include <filesystem>
#include <iosfwd>
#include <optional>
#include <string>
#include <vector>

#include "gtb/config.hpp"
#include "gtb/error.hpp"
#include "gtb/pia.hpp"

namespace gtb {

enum ExitCode : int {
    kExitOk = 0,
    kExitVerificationFailed = 1,
    kExitConfigError = 2,
    kExitIoError = 3,
    kExitDiverged = 4,
};

int exit_code_for(ErrorCode code);

// Command-line overrides; unset fields fall back to the config.
struct CommandOptions {
    std::optional<std::size_t> trials;
    std::optional<std::uint64_t> seed;
    std::optional<std::size_t> iterations;
    std::optional<double> tol;
    std::optional<std::size_t> grid;
    std::optional<std::filesystem::path> out_dir;
    std::size_t threads = 1;
};

// Fit errors of several curves at fixed iteration checkpoints. The value for
// checkpoint j is error_history[j - 1], the error measured in the j-th step.
class ErrorTable {
public:
    // Throws InvalidSpec unless checkpoints are strictly increasing and >= 1.
    explicit ErrorTable(std::vector<std::size_t> checkpoints);

    // Throws BadCount when the history is shorter than the last checkpoint.
    void add(std::string label, const std::vector<double>& error_history);

    const std::vector<std::size_t>& checkpoints() const noexcept { return checkpoints_; }
    const std::vector<std::string>& labels() const noexcept { return labels_; }
    double value(std::size_t row, std::size_t col) const { return values_.at(row).at(col); }
    std::size_t rows() const noexcept { return labels_.size(); }

    std::string csv() const;
    std::string pretty() const;

private:
    std::vector<std::size_t> checkpoints_;
    std::vector<std::string> labels_;
    std::vector<std::vector<double>> values_;
};

// Evaluates the rational basis on a uniform grid of `grid` parameters over
// [a0, an] (grid = 1 gives just a0). Columns t, T_0, ..., T_n.
std::string basis_table_csv(const NodeSet& ns, const WeightVector& w, std::size_t grid);

int cmd_basis_eval(const RunConfig& config, const CommandOptions& options, std::ostream& out);
int cmd_tp_check(const RunConfig& config, const CommandOptions& options, std::ostream& out);
int cmd_pia_fit(const RunConfig& config, const CommandOptions& options, std::ostream& out);

enum class ExampleKind { Circle, Helix };

struct ExampleCurve {
    std::string label;
    std::string slug;
    FitProblem problem;
};

struct ExampleSetup {
    std::string name;
    std::vector<ExampleCurve> curves;  // GT-Bezier first, then the baselines
    std::vector<std::size_t> checkpoints;
};

// Sampled data and GT-Bezier configuration of the two reproduction runs.
RunConfig example_config(ExampleKind kind);
ExampleSetup make_example(ExampleKind kind);

int cmd_example(ExampleKind kind, const CommandOptions& options, std::ostream& out);

// Full command line (argv[0] is the program name). Errors are printed to err
// and mapped onto exit codes.
int run_cli(int argc, const char* const* argv, std::ostream& out, std::ostream& err);

}  // namespace gtb
