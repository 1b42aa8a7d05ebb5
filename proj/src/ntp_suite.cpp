#include "gtb/ntp_suite.hpp"

#include <algorithm>
#include <exception>
#include <random>
#include <thread>

#include "gtb/error.hpp"

namespace gtb {

std::string_view to_string(BoundaryCase c) {
    switch (c) {
        case BoundaryCase::Interior: return "interior";
        case BoundaryCase::LeftTouching: return "left-touching";
        case BoundaryCase::RightTouching: return "right-touching";
        case BoundaryCase::BothTouching: return "both-touching";
    }
    return "unknown";
}

std::vector<double> draw_ntp_params(const NodeSet& ns, BoundaryCase boundary, std::uint64_t seed,
                                    std::size_t trial, double epsilon_fraction) {
    std::seed_seq seq{static_cast<std::uint32_t>(seed), static_cast<std::uint32_t>(seed >> 32),
                      static_cast<std::uint32_t>(trial), static_cast<std::uint32_t>(std::uint64_t{trial} >> 32)};
    std::mt19937_64 rng(seq);

    const std::size_t count = ns.size();
    const bool left = boundary == BoundaryCase::LeftTouching || boundary == BoundaryCase::BothTouching;
    const bool right = boundary == BoundaryCase::RightTouching || boundary == BoundaryCase::BothTouching;
    const std::size_t fixed = static_cast<std::size_t>(left) + static_cast<std::size_t>(right);
    if (count < fixed) fail(ErrorCode::BadCount, "too few nodes for the requested boundary case");

    const double eps = epsilon_fraction * ns.domain_length();
    std::uniform_real_distribution<double> dist(ns.front() + eps, ns.back() - eps);
    std::vector<double> params;
    params.reserve(count);
    while (true) {
        params.clear();
        for (std::size_t k = fixed; k < count; ++k) params.push_back(dist(rng));
        std::sort(params.begin(), params.end());
        if (std::adjacent_find(params.begin(), params.end()) == params.end()) break;
    }
    if (left) params.insert(params.begin(), ns.front());
    if (right) params.push_back(ns.back());
    return params;
}

namespace {

struct TrialOutcome {
    BoundaryCase boundary;
    std::vector<double> params;
    TpReport report;
};

TrialOutcome run_trial(const NodeSet& ns, const WeightVector& w, const NtpSuiteOptions& options, TpMethod method,
                       std::size_t trial) {
    const auto boundary = static_cast<BoundaryCase>(trial % kBoundaryCaseCount);
    auto params = draw_ntp_params(ns, boundary, options.seed, trial, options.epsilon_fraction);
    const DenseMatrix c = rational_collocation_matrix(ns, w, params);
    return {boundary, std::move(params), is_totally_positive(c, options.tol, method)};
}

}  // namespace

NtpSuiteReport verify_ntp_suite(const NodeSet& ns, const WeightVector& w, const NtpSuiteOptions& options) {
    require_matching(ns, w);
    if (options.trials < 1) fail(ErrorCode::BadCount, "trials must be >= 1");

    NtpSuiteReport report;
    report.method = ns.size() <= kMaxExhaustiveDimension ? TpMethod::Exhaustive : TpMethod::Contiguous;

    std::vector<TrialOutcome> outcomes(options.trials);
    const std::size_t threads = std::clamp<std::size_t>(options.threads, 1, options.trials);
    if (threads == 1) {
        for (std::size_t t = 0; t < options.trials; ++t) outcomes[t] = run_trial(ns, w, options, report.method, t);
    } else {
        std::vector<std::exception_ptr> errors(threads);
        {
            std::vector<std::jthread> pool;
            for (std::size_t worker = 0; worker < threads; ++worker) {
                pool.emplace_back([&, worker] {
                    try {
                        for (std::size_t t = worker; t < options.trials; t += threads) {
                            outcomes[t] = run_trial(ns, w, options, report.method, t);
                        }
                    } catch (...) {
                        errors[worker] = std::current_exception();
                    }
                });
            }
        }
        for (const auto& e : errors) {
            if (e) std::rethrow_exception(e);
        }
    }

    bool first = true;
    for (std::size_t t = 0; t < outcomes.size(); ++t) {
        const TrialOutcome& o = outcomes[t];
        auto& tally = report.by_case[static_cast<std::size_t>(o.boundary)];
        const bool ok = o.report.is_tp;
        ++report.trials;
        ++tally.trials;
        if (tally.trials == 1 || o.report.min_minor < tally.worst_minor) tally.worst_minor = o.report.min_minor;

        NtpFailure record{t, o.boundary, o.params, o.report.witness.value_or(MinorWitness{})};
        if (first || o.report.min_minor < report.worst_minor) {
            report.worst_minor = o.report.min_minor;
            report.worst = record;
            first = false;
        }
        if (!ok) {
            ++report.failures;
            ++tally.failures;
            if (report.failed.size() < kMaxRecordedFailures) report.failed.push_back(std::move(record));
        }
    }
    return report;
}

}  // namespace gtb
