#include "gtb/commands.hpp"

#include <algorithm>
#include <cmath>
#include <iomanip>
#include <numbers>
#include <ostream>
#include <sstream>

#include <CLI11.hpp>

#include "gtb/basis.hpp"
#include "gtb/io.hpp"
#include "gtb/ntp_suite.hpp"

namespace gtb {

int exit_code_for(ErrorCode code) {
    switch (code) {
        case ErrorCode::IoError: return kExitIoError;
        case ErrorCode::Diverged: return kExitDiverged;
        default: return kExitConfigError;
    }
}

ErrorTable::ErrorTable(std::vector<std::size_t> checkpoints) : checkpoints_(std::move(checkpoints)) {
    for (std::size_t k = 0; k < checkpoints_.size(); ++k) {
        if (checkpoints_[k] < 1 || (k > 0 && checkpoints_[k] <= checkpoints_[k - 1])) {
            fail(ErrorCode::InvalidSpec, "checkpoints must be strictly increasing and >= 1");
        }
    }
}

void ErrorTable::add(std::string label, const std::vector<double>& error_history) {
    std::vector<double> row;
    for (std::size_t j : checkpoints_) {
        if (j > error_history.size()) fail(ErrorCode::BadCount, "error history too short for checkpoint " + std::to_string(j));
        const double e = error_history[j - 1];
        if (!(e >= 0.0)) fail(ErrorCode::NonFinite, "error values must be >= 0");
        row.push_back(e);
    }
    labels_.push_back(std::move(label));
    values_.push_back(std::move(row));
}

std::string ErrorTable::csv() const {
    std::vector<std::string> header{"curve"};
    for (std::size_t j : checkpoints_) header.push_back("iter_" + std::to_string(j));
    io::CsvWriter csv(std::move(header));
    for (std::size_t r = 0; r < rows(); ++r) csv.add_row(labels_[r], values_[r]);
    return csv.str();
}

std::string ErrorTable::pretty() const {
    std::ostringstream s;
    s << std::left << std::setw(26) << "Iterations";
    for (std::size_t j : checkpoints_) s << std::setw(12) << j;
    s << '\n';
    for (std::size_t r = 0; r < rows(); ++r) {
        s << std::setw(26) << labels_[r];
        for (double v : values_[r]) {
            std::ostringstream cell;
            cell << std::scientific << std::setprecision(3) << v;
            s << std::setw(12) << cell.str();
        }
        s << '\n';
    }
    return s.str();
}

std::string basis_table_csv(const NodeSet& ns, const WeightVector& w, std::size_t grid) {
    if (grid < 1) fail(ErrorCode::BadCount, "grid must be >= 1");
    std::vector<std::string> header{"t"};
    for (std::size_t i = 0; i < ns.size(); ++i) header.push_back("T" + std::to_string(i));
    io::CsvWriter csv(std::move(header));
    for (std::size_t k = 0; k < grid; ++k) {
        double t = ns.front();
        if (grid > 1) {
            t = k + 1 == grid ? ns.back()
                              : ns.front() + ns.domain_length() * static_cast<double>(k) / static_cast<double>(grid - 1);
        }
        const BasisValues b = eval_rational_basis(ns, w, t);
        std::vector<double> row{t};
        row.insert(row.end(), b.values.begin(), b.values.end());
        csv.add_row(row);
    }
    return csv.str();
}

namespace {

std::filesystem::path output_dir(const RunConfig& config, const CommandOptions& options) {
    std::filesystem::path dir = options.out_dir.value_or(std::filesystem::path(config.output_dir));
    io::ensure_directory(dir);
    return dir;
}

std::string join_indices(const std::vector<std::size_t>& idx) {
    std::string s;
    for (std::size_t k = 0; k < idx.size(); ++k) {
        if (k) s += ' ';
        s += std::to_string(idx[k]);
    }
    return s;
}

std::string errors_csv(const std::vector<double>& history) {
    io::CsvWriter csv({"iteration", "error"});
    for (std::size_t k = 0; k < history.size(); ++k) csv.add_row({static_cast<double>(k + 1), history[k]});
    return csv.str();
}

constexpr std::size_t kPolylineSamples = 201;

}  // namespace

int cmd_basis_eval(const RunConfig& config, const CommandOptions& options, std::ostream& out) {
    const NodeSet ns = build_nodeset(config);
    const WeightVector w = build_weights(config);
    const std::size_t grid = options.grid.value_or(config.grid);
    if (grid < 1) fail(ErrorCode::ConfigError, "grid must be >= 1");
    const auto path = output_dir(config, options) / "basis.csv";
    io::write_text(path, basis_table_csv(ns, w, grid));
    out << "wrote " << grid << " rows of " << ns.size() << " rational basis values to " << path.string() << '\n';
    return kExitOk;
}

int cmd_tp_check(const RunConfig& config, const CommandOptions& options, std::ostream& out) {
    const NodeSet ns = build_nodeset(config);
    const WeightVector w = build_weights(config);
    NtpSuiteOptions suite;
    suite.trials = options.trials.value_or(config.trials);
    suite.seed = options.seed.value_or(config.seed);
    suite.threads = options.threads;
    if (suite.trials < 1) fail(ErrorCode::ConfigError, "trials must be >= 1");
    const NtpSuiteReport report = verify_ntp_suite(ns, w, suite);

    const auto dir = output_dir(config, options);
    io::CsvWriter summary({"case", "trials", "failures", "worst_normalized_minor"});
    for (std::size_t c = 0; c < kBoundaryCaseCount; ++c) {
        const auto& tally = report.by_case[c];
        summary.add_row(std::string(to_string(static_cast<BoundaryCase>(c))),
                        {static_cast<double>(tally.trials), static_cast<double>(tally.failures), tally.worst_minor});
    }
    summary.add_row("all", {static_cast<double>(report.trials), static_cast<double>(report.failures), report.worst_minor});
    summary.save(dir / "tp_report.csv");

    std::string witnesses = "trial,case,rows,cols,minor,normalized_minor\n";
    auto add_witness = [&](const NtpFailure& f) {
        witnesses += std::to_string(f.trial) + ',' + std::string(to_string(f.boundary)) + ',' +
                     join_indices(f.witness.rows) + ',' + join_indices(f.witness.cols) + ',' +
                     io::format_double(f.witness.value) + ',' + io::format_double(f.witness.normalized) + '\n';
    };
    for (const auto& f : report.failed) add_witness(f);
    if (report.failed.empty() && report.worst) add_witness(*report.worst);
    io::write_text(dir / "tp_witnesses.csv", witnesses);

    out << "NTP check: " << ns.size() << " basis functions, " << report.trials << " trials, seed " << suite.seed
        << ", method " << (report.method == TpMethod::Exhaustive ? "exhaustive" : "contiguous") << '\n';
    for (std::size_t c = 0; c < kBoundaryCaseCount; ++c) {
        const auto& tally = report.by_case[c];
        out << "  " << std::left << std::setw(15) << to_string(static_cast<BoundaryCase>(c)) << tally.trials
            << " trials, " << tally.failures << " failures, worst normalized minor " << tally.worst_minor << '\n';
    }
    if (report.worst) {
        out << "  worst minor: trial " << report.worst->trial << ", rows {" << join_indices(report.worst->witness.rows)
            << "}, cols {" << join_indices(report.worst->witness.cols) << "}, value " << report.worst->witness.value
            << '\n';
    }
    out << (report.passed() ? "PASS" : "FAIL") << ": " << report.failures << " failing trials\n";
    return report.passed() ? kExitOk : kExitVerificationFailed;
}

int cmd_pia_fit(const RunConfig& config, const CommandOptions& options, std::ostream& out) {
    const FitProblem problem = build_fit_problem(config);
    const std::size_t iterations = options.iterations.value_or(config.max_iter);
    const double tol = options.tol.value_or(config.tol);
    if (!(tol >= 0.0)) fail(ErrorCode::ConfigError, "tol must be >= 0");

    PiaState state = pia_init(problem);
    if (iterations > 0) {
        state = pia_run(problem, iterations, tol);
    } else {
        state.residual = max_row_norm(adjustment_vectors(problem, state));
    }

    const auto dir = output_dir(config, options);
    const GTBezierCurve curve = problem.curve_with(state.control);
    const Eigen::MatrixXd polyline = sample_polyline(curve, kPolylineSamples);
    io::write_text(dir / "control.csv", io::points_csv(state.control.points()));
    io::write_text(dir / "errors.csv", errors_csv(state.error_history));
    io::write_text(dir / "curve.csv", io::points_csv(polyline));
    if (curve.dim() == 2) {
        io::write_text(dir / "curve.svg",
                       io::svg_document({{"data", problem.data().points(), "#000000", false, true},
                                         {"control polygon", state.control.points(), "#888888", true, true},
                                         {"GT-Bezier curve", polyline, "#d62728", false, false}},
                                        "PIA fit after " + std::to_string(state.iteration) + " iterations"));
    }
    out << "PIA fit: " << problem.size() << " points, " << state.iteration << " iterations, final error "
        << state.residual << (state.converged ? " (converged)" : "") << '\n';
    return kExitOk;
}

RunConfig example_config(ExampleKind kind) {
    using std::numbers::pi;
    RunConfig c;
    c.mode = RunMode::Fit;
    c.scale_mode = ScaleMode::PerUnitDomain;
    std::vector<std::vector<double>> points;
    if (kind == ExampleKind::Circle) {
        c.nodes = {0.0, pi / 4, pi / 2, pi * pi / 4, pi};
        for (double xi : c.nodes) points.push_back({std::cos(xi), std::sin(xi)});
        c.coefficients = std::vector<double>{1.0, 0.9, 0.8, 0.9, 1.0};
        c.scale = 4.5;
        c.weights = std::vector<double>{0.5, 2.51, 5.5, 2.51, 0.22};
        c.max_iter = 20;
        c.output_dir = "out/circle";
    } else {
        for (std::size_t i = 0; i <= 30; ++i) c.nodes.push_back(static_cast<double>(i) * 2 * pi / 30);
        c.nodes[3] = pi * 2 * pi / 30;
        for (double xi : c.nodes) points.push_back({std::cos(pi * xi), std::sin(pi * xi), xi / 6});
        c.coefficients = std::vector<double>(31, 1.0 / (30.0 * 30.0));
        c.scale = 31.1;
        std::vector<double> w;
        for (std::size_t i = 0; i <= 30; ++i) w.push_back(binomial(31, i));
        c.weights = std::move(w);
        c.max_iter = 30;
        c.output_dir = "out/helix";
    }
    c.points = std::move(points);
    c.params = c.nodes;
    return c;
}

ExampleSetup make_example(ExampleKind kind) {
    const RunConfig config = example_config(kind);
    const FitProblem gt = build_fit_problem(config);

    // Baselines live on [0, n]; keep the relative spacing of the GT parameters.
    const std::size_t n = gt.size() - 1;
    const double t0 = gt.params().front();
    const double span = gt.params().back() - t0;
    std::vector<double> bezier_params;
    for (double t : gt.params()) bezier_params.push_back(static_cast<double>(n) * (t - t0) / span);
    bezier_params.front() = 0.0;
    bezier_params.back() = static_cast<double>(n);

    ExampleSetup setup;
    setup.curves.push_back({"GT-Bezier curve", "gt_bezier", gt});
    setup.curves.push_back({"Bezier curve", "bezier",
                            FitProblem(gt.data(), bezier_params, bernstein_equivalent_nodeset(n), WeightVector::unit(n + 1))});
    if (kind == ExampleKind::Circle) {
        setup.name = "circle";
        setup.curves.push_back({"Rational Bezier curve", "rational_bezier",
                                FitProblem(gt.data(), bezier_params, bernstein_equivalent_nodeset(n), gt.weights())});
        setup.checkpoints = {1, 5, 10, 20};
    } else {
        setup.name = "helix";
        setup.checkpoints = {1, 10, 20, 30};
    }
    return setup;
}

int cmd_example(ExampleKind kind, const CommandOptions& options, std::ostream& out) {
    const ExampleSetup setup = make_example(kind);
    const std::size_t iterations = options.iterations.value_or(setup.checkpoints.back());
    const RunConfig config = example_config(kind);
    const auto dir = output_dir(config, options);
    io::write_text(dir / "config.json", dump_config(config));

    std::vector<std::size_t> checkpoints;
    for (std::size_t j : setup.checkpoints) {
        if (j <= iterations) checkpoints.push_back(j);
    }
    std::vector<std::size_t> snapshots{0};
    for (std::size_t j : checkpoints) {
        if (j > 1) snapshots.push_back(j);
    }
    if (snapshots.back() != iterations) snapshots.push_back(iterations);

    ErrorTable table(checkpoints);
    // figure frames: one polyline per curve per snapshot
    std::vector<std::vector<io::SvgPath>> frames(snapshots.size());
    static const char* colors[] = {"#d62728", "#1f77b4", "#2ca02c"};

    for (std::size_t ci = 0; ci < setup.curves.size(); ++ci) {
        const ExampleCurve& curve = setup.curves[ci];
        PiaState state = pia_init(curve.problem);
        std::size_t next_snapshot = 0;
        while (true) {
            if (next_snapshot < snapshots.size() && snapshots[next_snapshot] == state.iteration) {
                if (curve.problem.data().dim() == 2) {
                    frames[next_snapshot].push_back({curve.label, sample_polyline(curve.problem.curve_with(state.control), kPolylineSamples),
                                                     colors[ci % 3], ci != 0, false});
                }
                ++next_snapshot;
            }
            if (state.iteration == iterations) break;
            state = pia_step(curve.problem, state);
            const double e = state.error_history.back();
            if (!std::isfinite(e) || e > kDivergenceFactor * state.error_history.front()) {
                fail(ErrorCode::Diverged, curve.label + " diverged at iteration " + std::to_string(state.iteration));
            }
        }
        state.residual = max_row_norm(adjustment_vectors(curve.problem, state));
        table.add(curve.label, state.error_history);

        const GTBezierCurve final_curve = curve.problem.curve_with(state.control);
        io::write_text(dir / (curve.slug + "_control.csv"), io::points_csv(state.control.points()));
        io::write_text(dir / (curve.slug + "_errors.csv"), errors_csv(state.error_history));
        io::write_text(dir / (curve.slug + "_curve.csv"), io::points_csv(sample_polyline(final_curve, kPolylineSamples)));
    }
    io::write_text(dir / "error_table.csv", table.csv());

    const ControlPolygon& data = setup.curves.front().problem.data();
    io::write_text(dir / "data.csv", io::points_csv(data.points()));
    if (data.dim() == 2) {
        for (std::size_t s = 0; s < snapshots.size(); ++s) {
            auto paths = frames[s];
            paths.push_back({"data", data.points(), "#000000", false, true});
            io::write_text(dir / ("figure_iter" + std::to_string(snapshots[s]) + ".svg"),
                           io::svg_document(paths, setup.name + " after " + std::to_string(snapshots[s]) + " iterations"));
        }
    }

    out << setup.name << ": " << data.size() << " data points, " << iterations << " iterations\n";
    if (checkpoints.empty()) {
        out << "initial curves only\n";
    } else {
        out << table.pretty();
    }
    out << "outputs in " << dir.string() << '\n';
    return kExitOk;
}

int run_cli(int argc, const char* const* argv, std::ostream& out, std::ostream& err) {
    CLI::App app{"GT-Bezier bases: evaluation, total positivity checks and PIA fitting"};
    app.require_subcommand(1);

    CommandOptions options;
    std::string config_path;
    std::size_t trials = 0, iterations = 0, grid = 0;
    std::uint64_t seed = 0;
    double tol = 0.0;
    std::string out_dir;
    std::string which;

    auto add_common = [&](CLI::App* sub) { sub->add_option("--out", out_dir, "Output directory"); };

    auto* basis_eval = app.add_subcommand("basis-eval", "Tabulate the rational basis on a uniform grid");
    basis_eval->add_option("--config", config_path, "JSON config")->required();
    basis_eval->add_option("--grid", grid, "Number of grid points")->check(CLI::PositiveNumber);
    add_common(basis_eval);

    auto* tp_check = app.add_subcommand("tp-check", "Randomized total positivity check of the rational basis");
    tp_check->add_option("--config", config_path, "JSON config")->required();
    tp_check->add_option("--trials", trials, "Number of random trials")->check(CLI::PositiveNumber);
    tp_check->add_option("--seed", seed, "RNG seed");
    tp_check->add_option("--threads", options.threads, "Worker threads")->check(CLI::PositiveNumber);
    add_common(tp_check);

    auto* pia_fit = app.add_subcommand("pia-fit", "Progressive iterative approximation of data points");
    pia_fit->add_option("--config", config_path, "JSON config")->required();
    pia_fit->add_option("--iterations", iterations, "Maximum number of iterations");
    pia_fit->add_option("--tol", tol, "Stop once the fit error is <= tol")->check(CLI::NonNegativeNumber);
    add_common(pia_fit);

    auto* example = app.add_subcommand("example", "Reproduce the circle or helix fitting runs");
    example->add_option("which", which, "circle or helix")->required()->check(CLI::IsMember({"circle", "helix"}));
    example->add_option("--iterations", iterations, "Number of iterations (default: last checkpoint)");
    add_common(example);

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e, out, err);
        return code == 0 ? kExitOk : kExitConfigError;
    }

    auto set_if = [](auto* opt, auto& target, auto value) {
        if (opt && opt->count() > 0) target = value;
    };
    for (auto* sub : app.get_subcommands()) {
        set_if(sub->get_option_no_throw("--trials"), options.trials, trials);
        set_if(sub->get_option_no_throw("--seed"), options.seed, seed);
        set_if(sub->get_option_no_throw("--iterations"), options.iterations, iterations);
        set_if(sub->get_option_no_throw("--tol"), options.tol, tol);
        set_if(sub->get_option_no_throw("--grid"), options.grid, grid);
        set_if(sub->get_option_no_throw("--out"), options.out_dir, std::filesystem::path(out_dir));
    }

    try {
        if (example->parsed()) return cmd_example(which == "circle" ? ExampleKind::Circle : ExampleKind::Helix, options, out);
        const RunConfig config = load_config(config_path);
        if (basis_eval->parsed()) return cmd_basis_eval(config, options, out);
        if (tp_check->parsed()) return cmd_tp_check(config, options, out);
        return cmd_pia_fit(config, options, out);
    } catch (const Error& e) {
        err << "error: " << e.what() << '\n';
        return exit_code_for(e.code());
    }
}

}  // namespace gtb
