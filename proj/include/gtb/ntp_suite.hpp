#pragma once

#include <array>
#include <cstddef>
#include <cstdint>
#include <optional>
#include <string_view>
#include <vector>

#include "gtb/node_set.hpp"
#include "gtb/total_positivity.hpp"

namespace gtb {

// Where the parameter sequence sits relative to [a0, an].
enum class BoundaryCase : std::size_t {
    Interior = 0,    // a0 < t_0 < ... < t_n < an
    LeftTouching,    // a0 = t_0 < ... < t_n < an
    RightTouching,   // a0 < t_0 < ... < t_n = an
    BothTouching,    // a0 = t_0 < ... < t_n = an
};
inline constexpr std::size_t kBoundaryCaseCount = 4;
std::string_view to_string(BoundaryCase c);

struct NtpFailure {
    std::size_t trial = 0;
    BoundaryCase boundary = BoundaryCase::Interior;
    std::vector<double> params;
    MinorWitness witness;
};

struct NtpCaseTally {
    std::size_t trials = 0;
    std::size_t failures = 0;
    double worst_minor = 0.0;  // smallest normalized minor seen in this case
};

struct NtpSuiteReport {
    std::size_t trials = 0;
    std::size_t failures = 0;
    TpMethod method = TpMethod::Exhaustive;
    std::array<NtpCaseTally, kBoundaryCaseCount> by_case{};
    double worst_minor = 0.0;
    std::optional<NtpFailure> worst;  // trial holding the smallest minor overall
    std::vector<NtpFailure> failed;   // capped at kMaxRecordedFailures
    bool passed() const noexcept { return failures == 0; }
};

inline constexpr std::size_t kMaxRecordedFailures = 32;

struct NtpSuiteOptions {
    std::size_t trials = 100;
    std::uint64_t seed = 0;
    double tol = kDefaultTpTolerance;
    // Interior draws stay epsilon_fraction * (an - a0) away from the endpoints.
    double epsilon_fraction = 1e-6;
    std::size_t threads = 1;
};

// Random square rational collocation matrices, cycling trial t through
// BoundaryCase(t % 4), checked with exhaustive enumeration when the dimension
// allows it and with the contiguous criterion otherwise. Trial t draws from an
// RNG seeded by (seed, t), so the report does not depend on thread count.
NtpSuiteReport verify_ntp_suite(const NodeSet& ns, const WeightVector& w, const NtpSuiteOptions& options);

// Parameter sequence of n+1 values for one trial.
std::vector<double> draw_ntp_params(const NodeSet& ns, BoundaryCase boundary, std::uint64_t seed,
                                    std::size_t trial, double epsilon_fraction);

}  // namespace gtb
