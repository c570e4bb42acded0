#pragma once

#include <cstdint>
#include <optional>
#include <stdexcept>
#include <string>
#include <string_view>
#include <variant>
#include <vector>

#include "vlab/configuration.hpp"
#include "vlab/numeric.hpp"

namespace vlab {

/// Schema or validation failure in a valuation file. The message starts with
/// the JSON path (or line and column for syntax errors).
class FileError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

struct ProximityEncoding {
    ProximityLists proximity;
    std::optional<std::size_t> tangent_count;
    friend bool operator==(const ProximityEncoding&, const ProximityEncoding&) = default;
};

struct MaximalContactEncoding {
    IntegerVector beta_bar;
    std::optional<std::size_t> trailing_free;
    friend bool operator==(const MaximalContactEncoding&, const MaximalContactEncoding&) = default;
};

struct TonoEncoding {
    std::int64_t a = 3;
    std::int64_t e = 0;
    friend bool operator==(const TonoEncoding&, const TonoEncoding&) = default;
};

using Encoding = std::variant<ProximityEncoding, MaximalContactEncoding, TonoEncoding>;

struct ValuationEntry {
    std::optional<std::string> name;
    Encoding encoding;
    friend bool operator==(const ValuationEntry&, const ValuationEntry&) = default;
};

/// {"valuations": [entry, ...], "aligned_mu": int?}; each entry carries
/// exactly one of "proximity" (+ "tangent_count"), "maximal_contact"
/// (+ "trailing_free") or "tono": {"a", "e"}, and an optional "name".
struct ValuationFile {
    std::vector<ValuationEntry> entries;
    std::optional<Integer> aligned_mu;
    /// Built from `entries` by parse(); one per entry.
    std::vector<Configuration> configurations;

    friend bool operator==(const ValuationFile& lhs, const ValuationFile& rhs) {
        return lhs.entries == rhs.entries && lhs.aligned_mu == rhs.aligned_mu;
    }
};

/// Builds the configuration an entry describes; the Tono encoding goes through
/// tono_family and its closed-form verification.
Configuration build_entry(const ValuationEntry& entry);

ValuationFile parse_valuation_file(std::string_view text);
ValuationFile load_valuation_file(const std::string& path);

/// Pretty-printed JSON; parse_valuation_file(serialize(f)) == f.
std::string serialize(const ValuationFile& file);

}  // namespace vlab
