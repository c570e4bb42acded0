#pragma once

#include <cstdint>
#include <map>
#include <optional>
#include <random>
#include <string>
#include <vector>

#include "vlab/checks.hpp"
#include "vlab/configuration.hpp"

namespace vlab {

struct FuzzOptions {
    std::size_t max_points = 12;
    std::size_t trials = 1000;
    std::uint64_t seed = 42;
    /// Probability that a step with an admissible satellite target takes one.
    double satellite_bias = 0.3;
    CheckOptions checks;
};

/// Independent generator for trial `trial`, derived from the run seed so that
/// trials can be evaluated in any order.
std::mt19937_64 trial_rng(std::uint64_t seed, std::uint64_t trial);

/// n uniform in 1..max_points; each step after p_2 is satellite with
/// probability `satellite_bias` (target uniform in the predecessor's
/// proximity set), free otherwise; tangent segment uniform among valid ones.
Configuration random_configuration(std::mt19937_64& rng, std::size_t max_points, double satellite_bias = 0.3);

/// The configurations a fuzz run with these parameters visits.
std::vector<Configuration> fuzz_corpus(std::size_t max_points, std::size_t trials, std::uint64_t seed,
                                       double satellite_bias = 0.3);

/// Admissible satellite tail of length 1..max_length; cfg must end in a free
/// point with n >= 2.
std::vector<std::size_t> random_satellite_tail(std::mt19937_64& rng, const Configuration& cfg,
                                               std::size_t max_length);

struct CheckTally {
    std::size_t passed = 0;
    std::size_t failed = 0;
};

struct Counterexample {
    std::size_t trial = 0;
    ProximityLists proximity;
    std::size_t tangent_count = 0;
    std::string check;
    std::string detail;
};

struct FuzzSummary {
    FuzzOptions options;
    std::size_t configurations_passed = 0;
    std::size_t configurations_failed = 0;
    std::map<std::string, CheckTally> tallies;
    std::optional<Counterexample> first_counterexample;

    bool all_passed() const { return configurations_failed == 0; }
};

FuzzSummary run_fuzz(const FuzzOptions& options);

}  // namespace vlab
