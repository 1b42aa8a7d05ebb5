#include "gtb/config.hpp"

#include <json.hpp>

#include "gtb/error.hpp"
#include "gtb/io.hpp"

namespace gtb {
namespace {

using nlohmann::json;

const char* mode_name(RunMode m) {
    switch (m) {
        case RunMode::Fit: return "fit";
        case RunMode::Eval: return "eval";
        case RunMode::TpCheck: return "tp-check";
    }
    return "eval";
}

RunMode parse_mode(const std::string& s) {
    if (s == "fit") return RunMode::Fit;
    if (s == "eval") return RunMode::Eval;
    if (s == "tp-check") return RunMode::TpCheck;
    fail(ErrorCode::ConfigError, "unknown mode '" + s + "' (expected fit, eval or tp-check)");
}

ScaleMode parse_scale_mode(const std::string& s) {
    if (s == "absolute") return ScaleMode::Absolute;
    if (s == "per-unit-domain") return ScaleMode::PerUnitDomain;
    fail(ErrorCode::ConfigError, "unknown scale_mode '" + s + "' (expected absolute or per-unit-domain)");
}

template <typename T>
void read_optional(const json& j, const char* key, std::optional<T>& out) {
    if (j.contains(key) && !j.at(key).is_null()) out = j.at(key).get<T>();
}

template <typename T>
void read_value(const json& j, const char* key, T& out) {
    if (j.contains(key) && !j.at(key).is_null()) out = j.at(key).get<T>();
}

// Re-raise anything thrown while building objects from the config as ConfigError.
template <typename F>
auto as_config_error(F&& f) -> decltype(f()) {
    try {
        return f();
    } catch (const Error& e) {
        if (e.code() == ErrorCode::ConfigError) throw;
        fail(ErrorCode::ConfigError, e.what());
    }
}

void check(const RunConfig& c) {
    build_nodeset(c);
    build_weights(c);
    if (c.points) build_points(c);
    if (c.mode == RunMode::Fit) build_fit_problem(c);
    if (c.mode == RunMode::Eval && c.points) {
        as_config_error([&] { return GTBezierCurve(build_nodeset(c), build_weights(c), build_points(c)); });
    }
    if (c.grid < 1) fail(ErrorCode::ConfigError, "grid must be >= 1");
    if (c.trials < 1) fail(ErrorCode::ConfigError, "trials must be >= 1");
    if (!(c.tol >= 0.0)) fail(ErrorCode::ConfigError, "tol must be >= 0");
}

}  // namespace

RunConfig parse_config(const std::string& json_text) {
    RunConfig c;
    try {
        const json j = json::parse(json_text);
        if (!j.is_object()) fail(ErrorCode::ConfigError, "config must be a JSON object");
        if (j.contains("mode")) c.mode = parse_mode(j.at("mode").get<std::string>());
        read_value(j, "nodes", c.nodes);
        read_optional(j, "bernstein_degree", c.bernstein_degree);
        read_optional(j, "coefficients", c.coefficients);
        read_value(j, "scale", c.scale);
        if (j.contains("scale_mode")) c.scale_mode = parse_scale_mode(j.at("scale_mode").get<std::string>());
        read_optional(j, "weights", c.weights);
        read_optional(j, "points", c.points);
        read_optional(j, "params", c.params);
        read_value(j, "max_iter", c.max_iter);
        read_value(j, "tol", c.tol);
        read_value(j, "trials", c.trials);
        read_value(j, "seed", c.seed);
        read_value(j, "grid", c.grid);
        read_value(j, "output_dir", c.output_dir);
    } catch (const json::exception& e) {
        fail(ErrorCode::ConfigError, e.what());
    }
    if (c.nodes.empty() && !c.bernstein_degree) fail(ErrorCode::ConfigError, "config needs 'nodes' or 'bernstein_degree'");
    if (!c.nodes.empty() && c.bernstein_degree) {
        fail(ErrorCode::ConfigError, "'nodes' and 'bernstein_degree' are mutually exclusive");
    }
    check(c);
    return c;
}

RunConfig load_config(const std::filesystem::path& path) { return parse_config(io::read_text(path)); }

std::string dump_config(const RunConfig& c) {
    json j;
    j["mode"] = mode_name(c.mode);
    if (c.bernstein_degree) {
        j["bernstein_degree"] = *c.bernstein_degree;
    } else {
        j["nodes"] = c.nodes;
    }
    if (c.coefficients) j["coefficients"] = *c.coefficients;
    j["scale"] = c.scale;
    j["scale_mode"] = c.scale_mode == ScaleMode::Absolute ? "absolute" : "per-unit-domain";
    if (c.weights) j["weights"] = *c.weights;
    if (c.points) j["points"] = *c.points;
    if (c.params) j["params"] = *c.params;
    j["max_iter"] = c.max_iter;
    j["tol"] = c.tol;
    j["trials"] = c.trials;
    j["seed"] = c.seed;
    j["grid"] = c.grid;
    j["output_dir"] = c.output_dir;
    return j.dump(2) + "\n";
}

NodeSet build_nodeset(const RunConfig& c) {
    return as_config_error([&] {
        if (c.bernstein_degree) {
            if (c.coefficients || c.scale != 1.0 || c.scale_mode != ScaleMode::Absolute) {
                fail(ErrorCode::ConfigError, "bernstein_degree fixes coefficients and scale");
            }
            return bernstein_equivalent_nodeset(*c.bernstein_degree);
        }
        std::vector<double> coeffs = c.coefficients.value_or(std::vector<double>(c.nodes.size(), 1.0));
        return NodeSet::validate(c.nodes, std::move(coeffs), c.scale, c.scale_mode);
    });
}

WeightVector build_weights(const RunConfig& c) {
    const std::size_t count = c.bernstein_degree ? *c.bernstein_degree + 1 : c.nodes.size();
    return as_config_error([&] {
        WeightVector w = c.weights ? WeightVector::validate(*c.weights) : WeightVector::unit(count);
        if (w.size() != count) fail(ErrorCode::CountMismatch, "weight count differs from node count");
        return w;
    });
}

ControlPolygon build_points(const RunConfig& c) {
    if (!c.points) fail(ErrorCode::ConfigError, "config has no 'points'");
    return as_config_error([&] { return ControlPolygon::from_points(*c.points); });
}

FitProblem build_fit_problem(const RunConfig& c) {
    return as_config_error([&] {
        NodeSet ns = build_nodeset(c);
        std::vector<double> params = c.params.value_or(std::vector<double>(ns.nodes().begin(), ns.nodes().end()));
        return FitProblem(build_points(c), std::move(params), std::move(ns), build_weights(c));
    });
}

}  // namespace gtb
