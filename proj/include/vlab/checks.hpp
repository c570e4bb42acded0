#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "vlab/bounds.hpp"
#include "vlab/configuration.hpp"

namespace vlab {

struct CheckResult {
    std::string name;
    bool passed = true;
    std::string detail;
};

struct CheckOptions {
    /// Every admissible satellite tail of length 1..max_tail_length is tried
    /// when the configuration ends in a free point.
    std::size_t max_tail_length = 5;
    std::vector<std::uint64_t> deltas{0, 1, 2, 3};
};

/// Runs every built-in identity on one configuration. Checks that do not
/// apply (e.g. the tail comparison on a configuration ending in a satellite)
/// pass with a "skipped" detail.
std::vector<CheckResult> run_checks(const Configuration& cfg, const CheckOptions& options = {});

/// Same as above for an already computed bundle.
std::vector<CheckResult> run_checks(const ValuationBundle& bundle, const CheckOptions& options = {});

bool all_passed(const std::vector<CheckResult>& results);

}  // namespace vlab
