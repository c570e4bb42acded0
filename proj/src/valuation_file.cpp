#include "vlab/valuation_file.hpp"

#include <fstream>
#include <limits>
#include <set>
#include <sstream>

#include "json.hpp"
#include "vlab/bounds.hpp"
#include "vlab/invariants.hpp"

namespace vlab {

namespace {

using nlohmann::json;
using nlohmann::ordered_json;

[[noreturn]] void fail(const std::string& path, const std::string& message) {
    throw FileError(path + ": " + message);
}

void reject_unknown_keys(const json& object, const std::string& path,
                         std::initializer_list<std::string_view> allowed) {
    for (const auto& [key, value] : object.items()) {
        bool known = false;
        for (auto name : allowed) known = known || key == name;
        if (!known) fail(path, "unknown key \"" + key + "\"");
    }
}

std::uint64_t read_unsigned(const json& value, const std::string& path) {
    if (value.is_number_unsigned()) return value.get<std::uint64_t>();
    if (value.is_number_integer()) {
        const auto signed_value = value.get<std::int64_t>();
        if (signed_value >= 0) return static_cast<std::uint64_t>(signed_value);
        fail(path, "must be non-negative");
    }
    fail(path, "expected an integer");
}

std::int64_t read_signed(const json& value, const std::string& path) {
    if (value.is_number_integer() && !value.is_number_unsigned()) return value.get<std::int64_t>();
    if (value.is_number_unsigned()) {
        const auto u = value.get<std::uint64_t>();
        if (u <= static_cast<std::uint64_t>(std::numeric_limits<std::int64_t>::max()))
            return static_cast<std::int64_t>(u);
        fail(path, "integer out of range");
    }
    fail(path, "expected an integer");
}

// Big values may be written as JSON integers or as decimal strings.
Integer read_big(const json& value, const std::string& path) {
    if (value.is_number_unsigned()) return value.get<std::uint64_t>();
    if (value.is_number_integer()) return value.get<std::int64_t>();
    if (value.is_string()) {
        const auto& text = value.get_ref<const std::string&>();
        if (text.empty() || text.find_first_not_of("0123456789") != std::string::npos)
            fail(path, "expected a decimal integer string");
        return Integer(text);
    }
    fail(path, "expected an integer");
}

ValuationEntry parse_entry(const json& node, const std::string& path) {
    if (!node.is_object()) fail(path, "expected an object");
    reject_unknown_keys(node, path,
                        {"name", "proximity", "tangent_count", "maximal_contact", "trailing_free", "tono"});
    ValuationEntry entry;
    if (node.contains("name")) {
        if (!node["name"].is_string()) fail(path + ".name", "expected a string");
        entry.name = node["name"].get<std::string>();
    }
    const int encodings = static_cast<int>(node.contains("proximity")) +
                          static_cast<int>(node.contains("maximal_contact")) +
                          static_cast<int>(node.contains("tono"));
    if (encodings != 1)
        fail(path, "exactly one of \"proximity\", \"maximal_contact\", \"tono\" is required");
    if (node.contains("tangent_count") && !node.contains("proximity"))
        fail(path + ".tangent_count", "only allowed with \"proximity\"");
    if (node.contains("trailing_free") && !node.contains("maximal_contact"))
        fail(path + ".trailing_free", "only allowed with \"maximal_contact\"");

    if (node.contains("proximity")) {
        const json& lists = node["proximity"];
        const std::string lists_path = path + ".proximity";
        if (!lists.is_array()) fail(lists_path, "expected an array of arrays");
        ProximityEncoding encoding;
        for (std::size_t i = 0; i < lists.size(); ++i) {
            const std::string point_path = lists_path + "[" + std::to_string(i) + "]";
            if (!lists[i].is_array()) fail(point_path, "expected an array of point indices");
            std::vector<std::size_t> set;
            for (std::size_t k = 0; k < lists[i].size(); ++k)
                set.push_back(read_unsigned(lists[i][k], point_path + "[" + std::to_string(k) + "]"));
            encoding.proximity.push_back(std::move(set));
        }
        if (node.contains("tangent_count"))
            encoding.tangent_count = read_unsigned(node["tangent_count"], path + ".tangent_count");
        entry.encoding = std::move(encoding);
    } else if (node.contains("maximal_contact")) {
        const json& values = node["maximal_contact"];
        const std::string values_path = path + ".maximal_contact";
        if (!values.is_array()) fail(values_path, "expected an array of integers");
        MaximalContactEncoding encoding;
        for (std::size_t i = 0; i < values.size(); ++i)
            encoding.beta_bar.push_back(read_big(values[i], values_path + "[" + std::to_string(i) + "]"));
        if (node.contains("trailing_free"))
            encoding.trailing_free = read_unsigned(node["trailing_free"], path + ".trailing_free");
        entry.encoding = std::move(encoding);
    } else {
        const json& tono = node["tono"];
        const std::string tono_path = path + ".tono";
        if (!tono.is_object()) fail(tono_path, "expected {\"a\": int, \"e\": int}");
        reject_unknown_keys(tono, tono_path, {"a", "e"});
        if (!tono.contains("a") || !tono.contains("e")) fail(tono_path, "both \"a\" and \"e\" are required");
        entry.encoding = TonoEncoding{read_signed(tono["a"], tono_path + ".a"),
                                      read_signed(tono["e"], tono_path + ".e")};
    }
    return entry;
}

std::string line_column(std::string_view text, std::size_t byte) {
    std::size_t line = 1, column = 1;
    for (std::size_t i = 0; i < byte && i < text.size(); ++i) {
        if (text[i] == '\n') {
            ++line;
            column = 1;
        } else {
            ++column;
        }
    }
    return "line " + std::to_string(line) + ", column " + std::to_string(column);
}

ordered_json big_to_json(const Integer& value) {
    if (value >= 0 && value <= std::numeric_limits<std::uint64_t>::max())
        return value.convert_to<std::uint64_t>();
    return value.str();
}

}  // namespace

Configuration build_entry(const ValuationEntry& entry) {
    const std::string name = entry.name.value_or("");
    return std::visit(
        [&](const auto& encoding) -> Configuration {
            using T = std::decay_t<decltype(encoding)>;
            if constexpr (std::is_same_v<T, ProximityEncoding>) {
                return Configuration::from_proximity(encoding.proximity, encoding.tangent_count, name);
            } else if constexpr (std::is_same_v<T, MaximalContactEncoding>) {
                return from_maximal_contact(encoding.beta_bar, encoding.trailing_free.value_or(0))
                    .with_name(name);
            } else {
                Configuration cfg = tono_family(encoding.a, encoding.e).bundle.cfg;
                return entry.name ? cfg.with_name(name) : cfg;
            }
        },
        entry.encoding);
}

ValuationFile parse_valuation_file(std::string_view text) {
    json root;
    try {
        root = json::parse(text.begin(), text.end());
    } catch (const json::parse_error& e) {
        throw FileError(line_column(text, e.byte == 0 ? 0 : e.byte - 1) + ": invalid JSON (" +
                        std::string(e.what()) + ")");
    }
    if (!root.is_object()) fail("$", "expected a JSON object");
    reject_unknown_keys(root, "$", {"valuations", "aligned_mu"});
    if (!root.contains("valuations") || !root["valuations"].is_array())
        fail("$.valuations", "required array is missing");
    const json& list = root["valuations"];
    if (list.empty()) fail("$.valuations", "at least one valuation is required");

    ValuationFile file;
    for (std::size_t i = 0; i < list.size(); ++i) {
        const std::string path = "$.valuations[" + std::to_string(i) + "]";
        ValuationEntry entry = parse_entry(list[i], path);
        try {
            file.configurations.push_back(build_entry(entry));
        } catch (const std::exception& e) {
            fail(path, e.what());
        }
        file.entries.push_back(std::move(entry));
    }
    if (root.contains("aligned_mu")) {
        const Integer mu = read_big(root["aligned_mu"], "$.aligned_mu");
        if (mu < 1) fail("$.aligned_mu", "must be a positive integer");
        file.aligned_mu = mu;
    }
    return file;
}

ValuationFile load_valuation_file(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw FileError(path + ": cannot open file");
    std::ostringstream buffer;
    buffer << in.rdbuf();
    try {
        return parse_valuation_file(buffer.str());
    } catch (const FileError& e) {
        throw FileError(path + ": " + e.what());
    }
}

std::string serialize(const ValuationFile& file) {
    ordered_json root;
    root["valuations"] = ordered_json::array();
    for (const auto& entry : file.entries) {
        ordered_json node = ordered_json::object();
        if (entry.name) node["name"] = *entry.name;
        std::visit(
            [&](const auto& encoding) {
                using T = std::decay_t<decltype(encoding)>;
                if constexpr (std::is_same_v<T, ProximityEncoding>) {
                    node["proximity"] = encoding.proximity;
                    if (encoding.tangent_count) node["tangent_count"] = *encoding.tangent_count;
                } else if constexpr (std::is_same_v<T, MaximalContactEncoding>) {
                    ordered_json values = ordered_json::array();
                    for (const auto& b : encoding.beta_bar) values.push_back(big_to_json(b));
                    node["maximal_contact"] = std::move(values);
                    if (encoding.trailing_free) node["trailing_free"] = *encoding.trailing_free;
                } else {
                    node["tono"] = {{"a", encoding.a}, {"e", encoding.e}};
                }
            },
            entry.encoding);
        root["valuations"].push_back(std::move(node));
    }
    if (file.aligned_mu) root["aligned_mu"] = big_to_json(*file.aligned_mu);
    return root.dump(2) + "\n";
}

}  // namespace vlab
