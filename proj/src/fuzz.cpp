#include "vlab/fuzz.hpp"

#include <stdexcept>

namespace vlab {

std::mt19937_64 trial_rng(std::uint64_t seed, std::uint64_t trial) {
    std::seed_seq seq{static_cast<std::uint32_t>(seed), static_cast<std::uint32_t>(seed >> 32),
                      static_cast<std::uint32_t>(trial), static_cast<std::uint32_t>(trial >> 32)};
    return std::mt19937_64(seq);
}

Configuration random_configuration(std::mt19937_64& rng, std::size_t max_points, double satellite_bias) {
    if (max_points == 0) throw std::invalid_argument("max_points must be >= 1");
    const std::size_t n = std::uniform_int_distribution<std::size_t>(1, max_points)(rng);
    std::bernoulli_distribution take_satellite(satellite_bias);

    ProximityLists lists(n);
    for (std::size_t i = 2; i <= n; ++i) {
        const auto& options = lists[i - 2];
        // The predecessor's set holds i-2 (and possibly one more); any of
        // those is an admissible satellite target for p_i.
        std::vector<std::size_t> targets(options.begin(), options.end());
        if (!targets.empty() && take_satellite(rng)) {
            const std::size_t pick = std::uniform_int_distribution<std::size_t>(0, targets.size() - 1)(rng);
            lists[i - 1] = {i - 1, targets[pick]};
        } else {
            lists[i - 1] = {i - 1};
        }
    }
    const std::size_t low = std::min<std::size_t>(2, n);
    const std::size_t high = max_tangent_count(lists);
    const std::size_t k = std::uniform_int_distribution<std::size_t>(low, high)(rng);
    return build_configuration(lists, k);
}

std::vector<Configuration> fuzz_corpus(std::size_t max_points, std::size_t trials, std::uint64_t seed,
                                       double satellite_bias) {
    std::vector<Configuration> corpus;
    corpus.reserve(trials);
    for (std::size_t trial = 0; trial < trials; ++trial) {
        auto rng = trial_rng(seed, trial);
        corpus.push_back(random_configuration(rng, max_points, satellite_bias));
    }
    return corpus;
}

std::vector<std::size_t> random_satellite_tail(std::mt19937_64& rng, const Configuration& cfg,
                                               std::size_t max_length) {
    const std::size_t n = cfg.size();
    if (n < 2 || cfg.is_satellite(n) || max_length == 0)
        throw std::invalid_argument("random_satellite_tail: needs n >= 2 and a free last point");
    const std::size_t length = std::uniform_int_distribution<std::size_t>(1, max_length)(rng);
    std::vector<std::size_t> targets{n - 1};
    std::vector<std::size_t> previous{n, n - 1};
    while (targets.size() < length) {
        const std::size_t m = n + targets.size() + 1;
        const std::size_t pick = std::uniform_int_distribution<std::size_t>(0, previous.size() - 1)(rng);
        targets.push_back(previous[pick]);
        previous = {m - 1, previous[pick]};
    }
    return targets;
}

FuzzSummary run_fuzz(const FuzzOptions& options) {
    if (options.max_points == 0) throw std::invalid_argument("max_points must be >= 1");
    if (options.trials == 0) throw std::invalid_argument("trials must be >= 1");
    FuzzSummary summary;
    summary.options = options;
    for (std::size_t trial = 0; trial < options.trials; ++trial) {
        auto rng = trial_rng(options.seed, trial);
        const Configuration cfg = random_configuration(rng, options.max_points, options.satellite_bias);
        const auto results = run_checks(cfg, options.checks);
        bool ok = true;
        for (const auto& r : results) {
            auto& tally = summary.tallies[r.name];
            if (r.passed) {
                ++tally.passed;
                continue;
            }
            ++tally.failed;
            ok = false;
            if (!summary.first_counterexample)
                summary.first_counterexample =
                    Counterexample{trial, cfg.proximity_lists(), cfg.tangent_count(), r.name, r.detail};
        }
        ++(ok ? summary.configurations_passed : summary.configurations_failed);
    }
    return summary;
}

}  // namespace vlab
