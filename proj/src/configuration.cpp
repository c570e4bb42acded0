#include "vlab/configuration.hpp"

#include <algorithm>

namespace vlab {

namespace {

std::string point_label(std::size_t index) {
    return "p_" + std::to_string(index);
}

// Normalizes one proximity set to {i-1, j} order and checks the local rules.
std::vector<std::size_t> normalize_point(const std::vector<std::size_t>& raw, std::size_t index,
                                         const std::vector<PointRecord>& earlier) {
    std::vector<std::size_t> set = raw;
    std::sort(set.begin(), set.end(), std::greater<>());
    if (std::adjacent_find(set.begin(), set.end()) != set.end())
        throw ConfigurationError(point_label(index) + ": duplicate proximity target");

    if (index == 1) {
        if (!set.empty())
            throw ConfigurationError("p_1: must not be proximate to any point");
        return set;
    }
    if (std::find(set.begin(), set.end(), index - 1) == set.end())
        throw ConfigurationError(point_label(index) + " must be proximate to " +
                                 point_label(index - 1));
    for (std::size_t target : set) {
        if (target == 0 || target >= index)
            throw ConfigurationError(point_label(index) + ": proximity target " +
                                     std::to_string(target) + " must be in 1.." +
                                     std::to_string(index - 1));
    }
    if (set.size() > 2)
        throw ConfigurationError(point_label(index) + ": proximate to " +
                                 std::to_string(set.size()) + " points, at most 2 allowed");
    if (set.size() == 2) {
        const std::size_t target = set[1];
        const auto& previous = earlier[index - 2].proximate_to;
        if (std::find(previous.begin(), previous.end(), target) == previous.end())
            throw ConfigurationError(point_label(index) + ": inadmissible satellite target " +
                                     point_label(target) + " (" + point_label(index - 1) +
                                     " is not proximate to it)");
    }
    return set;
}

}  // namespace

std::size_t max_tangent_count(const ProximityLists& proximity) {
    const std::size_t n = proximity.size();
    if (n <= 2) return n;
    std::size_t k = 2;
    while (k < n && proximity[k].size() == 1) ++k;
    return k;
}

Configuration Configuration::from_proximity(const ProximityLists& proximity,
                                            std::optional<std::size_t> tangent_count,
                                            std::string name) {
    const std::size_t n = proximity.size();
    if (n == 0) throw ConfigurationError("configuration must contain at least one point");

    Configuration cfg;
    cfg.name_ = std::move(name);
    cfg.points_.reserve(n);
    for (std::size_t i = 1; i <= n; ++i) {
        PointRecord record;
        record.index = i;
        record.proximate_to = normalize_point(proximity[i - 1], i, cfg.points_);
        cfg.points_.push_back(std::move(record));
    }

    const std::size_t k = tangent_count.value_or(std::min<std::size_t>(2, n));
    if (k == 0 || k > n)
        throw ConfigurationError("tangent_count " + std::to_string(k) + " must be in 1.." +
                                 std::to_string(n));
    if (k < std::min<std::size_t>(2, n))
        throw ConfigurationError("tangent line passes through p_1 and p_2; tangent_count must be >= 2");
    for (std::size_t i = 3; i <= k; ++i) {
        if (cfg.points_[i - 1].is_satellite())
            throw ConfigurationError("tangent line cannot pass through satellite point " +
                                     point_label(i));
    }
    for (std::size_t i = 0; i < k; ++i) cfg.points_[i].on_tangent = true;
    cfg.tangent_count_ = k;
    return cfg;
}

bool Configuration::is_proximate(std::size_t later, std::size_t earlier) const {
    const auto& set = point(later).proximate_to;
    return std::find(set.begin(), set.end(), earlier) != set.end();
}

ProximityLists Configuration::proximity_lists() const {
    ProximityLists lists;
    lists.reserve(points_.size());
    for (const auto& p : points_) lists.push_back(p.proximate_to);
    return lists;
}

Configuration Configuration::with_name(std::string name) const {
    Configuration copy = *this;
    copy.name_ = std::move(name);
    return copy;
}

Configuration build_configuration(const ProximityLists& proximity,
                                  std::optional<std::size_t> tangent_count) {
    return Configuration::from_proximity(proximity, tangent_count);
}

std::vector<PointKind> classify_points(const Configuration& cfg) {
    std::vector<PointKind> kinds;
    kinds.reserve(cfg.size());
    for (const auto& p : cfg.points())
        kinds.push_back(p.is_satellite() ? PointKind::satellite : PointKind::free);
    return kinds;
}

BlockDecomposition block_decomposition(const Configuration& cfg) {
    const std::size_t n = cfg.size();
    BlockDecomposition blocks;
    blocks.boundaries.push_back(1);
    std::size_t i = 1;
    while (true) {
        while (i < n && !cfg.is_satellite(i + 1)) ++i;
        if (i == n) break;
        blocks.last_free.push_back(i);
        while (i < n && cfg.is_satellite(i + 1)) ++i;
        blocks.boundaries.push_back(i);
    }
    blocks.boundaries.push_back(n);
    blocks.genus_count = blocks.last_free.size();
    return blocks;
}

Configuration append_free_chain(const Configuration& cfg, std::size_t k) {
    if (k == 0) return cfg;
    ProximityLists lists = cfg.proximity_lists();
    lists.reserve(lists.size() + k);
    for (std::size_t step = 0; step < k; ++step) lists.push_back({lists.size()});
    const std::size_t tangent =
        std::max(cfg.tangent_count(), std::min<std::size_t>(2, lists.size()));
    return Configuration::from_proximity(lists, tangent, cfg.name());
}

std::vector<std::size_t> satellite_options(const Configuration& cfg) {
    return cfg.point(cfg.size()).proximate_to;
}

Configuration extend_with_satellite_tail(const Configuration& cfg,
                                         std::span<const std::size_t> targets) {
    const std::size_t n = cfg.size();
    if (n < 2) throw ConfigurationError("satellite tail needs a configuration with n >= 2");
    if (cfg.is_satellite(n))
        throw ConfigurationError("satellite tail needs a configuration ending in a free point");
    if (targets.empty()) throw ConfigurationError("satellite tail must have length >= 1");
    if (targets.front() != n - 1)
        throw ConfigurationError("first tail point is forced to be proximate to p_" +
                                 std::to_string(n) + " and p_" + std::to_string(n - 1));

    ProximityLists lists = cfg.proximity_lists();
    for (std::size_t target : targets) {
        const std::size_t m = lists.size() + 1;
        const auto& previous = lists.back();
        if (target + 1 >= m ||
            std::find(previous.begin(), previous.end(), target) == previous.end())
            throw ConfigurationError("tail point p_" + std::to_string(m) +
                                     ": inadmissible satellite target " + std::to_string(target));
        lists.push_back({m - 1, target});
    }
    return Configuration::from_proximity(lists, cfg.tangent_count(), cfg.name());
}

std::vector<std::vector<std::size_t>> enumerate_satellite_tails(const Configuration& cfg,
                                                                std::size_t length) {
    std::vector<std::vector<std::size_t>> result;
    if (length == 0 || cfg.size() < 2 || cfg.is_satellite(cfg.size())) return result;

    // Depth-first over the predecessor's proximity set, which is all a
    // satellite may choose from.
    struct Frame {
        std::vector<std::size_t> targets;
        std::vector<std::size_t> last_set;
    };
    const std::size_t n = cfg.size();
    std::vector<Frame> stack{{{n - 1}, {n, n - 1}}};
    while (!stack.empty()) {
        Frame frame = std::move(stack.back());
        stack.pop_back();
        if (frame.targets.size() == length) {
            result.push_back(std::move(frame.targets));
            continue;
        }
        const std::size_t m = n + frame.targets.size() + 1;
        for (auto it = frame.last_set.rbegin(); it != frame.last_set.rend(); ++it) {
            Frame next{frame.targets, {m - 1, *it}};
            next.targets.push_back(*it);
            stack.push_back(std::move(next));
        }
    }
    std::sort(result.begin(), result.end());
    return result;
}

}  // namespace vlab
