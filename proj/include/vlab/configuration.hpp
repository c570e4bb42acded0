#pragma once

#include <cstddef>
#include <optional>
#include <span>
#include <stdexcept>
#include <string>
#include <vector>

namespace vlab {

/// Thrown for any input that does not describe an admissible chain of
/// infinitely near points (or an admissible maximal contact sequence).
class ConfigurationError : public std::invalid_argument {
public:
    using std::invalid_argument::invalid_argument;
};

using ProximityLists = std::vector<std::vector<std::size_t>>;

enum class PointKind { free, satellite };

/// One center p_i of the blowup chain. Indices are 1-based.
struct PointRecord {
    std::size_t index = 1;
    /// Predecessor first (i-1), then the older satellite target if any.
    std::vector<std::size_t> proximate_to;
    bool on_tangent = false;

    bool is_satellite() const { return proximate_to.size() == 2; }
    std::optional<std::size_t> satellite_target() const {
        if (!is_satellite()) return std::nullopt;
        return proximate_to[1];
    }

    friend bool operator==(const PointRecord&, const PointRecord&) = default;
};

/// Validated, immutable chain p_1, ..., p_n of infinitely near points
/// together with the initial segment lying on the tangent line.
///
/// Invariants enforced on construction:
///  - p_i is proximate to p_{i-1} for i >= 2, and to at most one other point;
///  - a satellite p_i -> p_j (j < i-1) requires p_{i-1} -> p_j, i.e. the strict
///    transform of E_j still meets E_{i-1};
///  - the tangent segment is {1..k} with min(2, n) <= k <= n and every
///    tangent point of index >= 3 is free.
class Configuration {
public:
    static Configuration from_proximity(const ProximityLists& proximity,
                                        std::optional<std::size_t> tangent_count = std::nullopt,
                                        std::string name = {});

    std::size_t size() const { return points_.size(); }
    const std::string& name() const { return name_; }

    /// 1-based access.
    const PointRecord& point(std::size_t index) const { return points_.at(index - 1); }
    std::span<const PointRecord> points() const { return points_; }

    std::size_t tangent_count() const { return tangent_count_; }
    bool is_satellite(std::size_t index) const { return point(index).is_satellite(); }
    bool is_proximate(std::size_t later, std::size_t earlier) const;

    ProximityLists proximity_lists() const;

    Configuration with_name(std::string name) const;

    /// Equality ignores the name.
    friend bool operator==(const Configuration& lhs, const Configuration& rhs) {
        return lhs.points_ == rhs.points_;
    }

private:
    Configuration() = default;

    std::vector<PointRecord> points_;
    std::size_t tangent_count_ = 1;
    std::string name_;
};

struct BlockDecomposition {
    /// l_0, ..., l_g, followed by n (the end of the final free block C_{g+1}).
    std::vector<std::size_t> boundaries;
    /// r_1, ..., r_g: last free point of each block that contains satellites.
    std::vector<std::size_t> last_free;
    std::size_t genus_count = 0;

    std::size_t block_count() const { return genus_count + 1; }
    /// First and last index of C_j, 1 <= j <= g+1; consecutive blocks share
    /// their endpoint.
    std::pair<std::size_t, std::size_t> block(std::size_t j) const {
        return {boundaries.at(j - 1), boundaries.at(j)};
    }
};

Configuration build_configuration(const ProximityLists& proximity,
                                  std::optional<std::size_t> tangent_count = std::nullopt);

std::vector<PointKind> classify_points(const Configuration& cfg);

BlockDecomposition block_decomposition(const Configuration& cfg);

/// Appends k free points, each proximate only to its predecessor. A one-point
/// configuration gains p_2 on its tangent segment.
Configuration append_free_chain(const Configuration& cfg, std::size_t k);

/// Second proximity targets admissible for a satellite point appended after
/// the last point of cfg (the points the last point is proximate to).
std::vector<std::size_t> satellite_options(const Configuration& cfg);

/// Appends one satellite point per entry of `targets`; entry t makes the new
/// point p_m proximate to {m-1, t}. The first target is forced to n-1, where
/// n is the size of cfg, and cfg must end in a free point.
Configuration extend_with_satellite_tail(const Configuration& cfg,
                                         std::span<const std::size_t> targets);

/// All admissible target sequences of the given length for cfg.
std::vector<std::vector<std::size_t>> enumerate_satellite_tails(const Configuration& cfg,
                                                                std::size_t length);

/// Largest valid tangent segment length for these proximities.
std::size_t max_tangent_count(const ProximityLists& proximity);

}  // namespace vlab
