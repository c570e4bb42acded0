#include "vlab/report.hpp"

#include <algorithm>
#include <chrono>
#include <ctime>
#include <limits>
#include <sstream>

#include "json.hpp"
#include "vlab/bounds.hpp"
#include "vlab/invariants.hpp"
#include "vlab/surface.hpp"

namespace vlab {

namespace {

using nlohmann::ordered_json;

ordered_json integer_json(const Integer& value) {
    if (value >= std::numeric_limits<std::int64_t>::min() && value <= std::numeric_limits<std::int64_t>::max())
        return value.convert_to<std::int64_t>();
    return value.str();
}

ordered_json rational_json(const Rational& value) {
    return ordered_json{{"exact", to_string(value)}, {"approx", approx(value)}};
}

ordered_json integers_json(std::span<const Integer> values) {
    ordered_json out = ordered_json::array();
    for (const auto& v : values) out.push_back(integer_json(v));
    return out;
}

std::string display_name(const ValuationFile& file, std::size_t i) {
    if (i < file.entries.size() && file.entries[i].name) return *file.entries[i].name;
    if (i < file.configurations.size() && !file.configurations[i].name().empty())
        return file.configurations[i].name();
    return "valuation[" + std::to_string(i) + "]";
}

std::vector<ValuationBundle> bundles_of(const ValuationFile& file) {
    std::vector<ValuationBundle> bundles;
    bundles.reserve(file.configurations.size());
    for (const auto& cfg : file.configurations) bundles.push_back(make_bundle(cfg));
    return bundles;
}

ordered_json invariants_json(const std::string& name, const ValuationBundle& b) {
    const InvariantRecord& r = b.record;
    std::vector<std::size_t> satellites;
    for (std::size_t i = 1; i <= b.size(); ++i)
        if (b.cfg.is_satellite(i)) satellites.push_back(i);

    ordered_json puiseux = ordered_json::array();
    for (const auto& x : r.puiseux.beta_prime) puiseux.push_back(rational_json(x));

    ordered_json out;
    out["name"] = name;
    out["points"] = b.size();
    out["tangent_count"] = b.cfg.tangent_count();
    out["satellites"] = satellites;
    out["genus"] = r.beta_bar.genus();
    out["multiplicities"] = integers_json(r.multiplicities.values);
    out["maximal_contact"] = integers_json(r.beta_bar.beta_bar);
    out["gcd_chain"] = integers_json(r.beta_bar.gcd_chain);
    out["puiseux"] = std::move(puiseux);
    out["volume"] = rational_json(r.volume);
    out["normalized_volume"] = rational_json(r.normalized_volume);
    out["tangent_value"] = integer_json(r.tangent_value);
    out["delta0"] = integer_json(b.delta0);
    out["m_adic"] = r.is_m_adic;
    return out;
}

ordered_json bound_entries_json(const BoundReport& report) {
    ordered_json out = ordered_json::array();
    for (const auto& entry : report.entries)
        out.push_back({{"bound", entry.name}, {"value", rational_json(entry.value)}, {"source", entry.produced_by}});
    return out;
}

const char* const tangent_note =
    "ratio bounds apply to curves other than the tangent line of each valuation";

ordered_json bounds_json(const std::string& name, const ValuationBundle& b, const std::optional<Integer>& mu) {
    ordered_json out;
    out["name"] = name;
    out["delta0"] = integer_json(b.delta0);
    out["bounds"] = bound_entries_json(make_bound_report(b, mu));
    return out;
}

ordered_json checks_json(const std::vector<CheckResult>& results) {
    ordered_json out = ordered_json::array();
    for (const auto& r : results)
        out.push_back({{"check", r.name}, {"result", r.passed ? "pass" : "FAIL"}, {"detail", r.detail}});
    return out;
}

ordered_json document(const char* command, const RenderOptions& options) {
    ordered_json doc;
    doc["command"] = command;
    if (options.timestamp) {
        const std::time_t now = std::chrono::system_clock::to_time_t(std::chrono::system_clock::now());
        char buffer[32];
        std::strftime(buffer, sizeof buffer, "%Y-%m-%dT%H:%M:%SZ", std::gmtime(&now));
        doc["generated_at"] = buffer;
    }
    return doc;
}

// ---- table rendering -------------------------------------------------------

bool is_rational(const ordered_json& node) {
    return node.is_object() && node.size() == 2 && node.contains("exact") && node.contains("approx");
}

bool is_leaf(const ordered_json& node) {
    return node.is_primitive() || is_rational(node);
}

std::string leaf_text(const ordered_json& node) {
    if (is_rational(node)) {
        const std::string exact = node["exact"].get<std::string>();
        if (exact.find('/') == std::string::npos) return exact;
        return exact + " (~" + node["approx"].get<std::string>() + ")";
    }
    if (node.is_string()) return node.get<std::string>();
    if (node.is_null()) return "none";
    return node.dump();
}

// Runs of three or more equal entries collapse to "x (xk)".
std::string leaf_array_text(const ordered_json& node) {
    std::vector<std::string> tokens;
    for (std::size_t i = 0; i < node.size();) {
        std::size_t j = i;
        while (j < node.size() && node[j] == node[i]) ++j;
        const std::string text = leaf_text(node[i]);
        if (j - i >= 3) {
            tokens.push_back(text + " (x" + std::to_string(j - i) + ")");
        } else {
            for (std::size_t k = i; k < j; ++k) tokens.push_back(text);
        }
        i = j;
    }
    constexpr std::size_t head = 24, tail = 4;
    std::string out = "[";
    const bool elide = tokens.size() > head + tail + 1;
    for (std::size_t i = 0; i < tokens.size(); ++i) {
        if (elide && i == head) {
            out += ", ... " + std::to_string(tokens.size() - head - tail) + " more";
            i = tokens.size() - tail - 1;
            continue;
        }
        if (i > 0) out += ", ";
        out += tokens[i];
    }
    return out + "]";
}

bool is_row_array(const ordered_json& node) {
    if (!node.is_array() || node.empty()) return false;
    for (const auto& row : node) {
        if (!row.is_object() || row.size() != node[0].size()) return false;
        auto it = node[0].begin();
        for (const auto& [key, value] : row.items()) {
            if (key != it.key() || !is_leaf(value)) return false;
            ++it;
        }
    }
    return true;
}

void render_rows(const ordered_json& rows, const std::string& indent, std::ostringstream& out) {
    std::vector<std::string> keys;
    for (const auto& [key, value] : rows[0].items()) keys.push_back(key);
    std::vector<std::vector<std::string>> cells{keys};
    for (const auto& row : rows) {
        std::vector<std::string> line;
        for (const auto& key : keys) line.push_back(leaf_text(row[key]));
        cells.push_back(std::move(line));
    }
    std::vector<std::size_t> width(keys.size(), 0);
    for (const auto& line : cells)
        for (std::size_t c = 0; c < line.size(); ++c) width[c] = std::max(width[c], line[c].size());
    for (const auto& line : cells) {
        std::string text = indent;
        for (std::size_t c = 0; c < line.size(); ++c) {
            text += line[c];
            if (c + 1 < line.size()) text += std::string(width[c] - line[c].size() + 2, ' ');
        }
        while (!text.empty() && text.back() == ' ') text.pop_back();
        out << text << '\n';
    }
}

void render_node(const ordered_json& node, const std::string& indent, std::ostringstream& out);

void render_member(const std::string& key, const ordered_json& value, const std::string& indent,
                   std::ostringstream& out) {
    if (is_leaf(value)) {
        out << indent << key << ": " << leaf_text(value) << '\n';
    } else if (value.is_array() && std::all_of(value.begin(), value.end(), is_leaf)) {
        out << indent << key << ": " << leaf_array_text(value) << '\n';
    } else {
        out << indent << key << ":\n";
        render_node(value, indent + "  ", out);
    }
}

void render_node(const ordered_json& node, const std::string& indent, std::ostringstream& out) {
    if (is_row_array(node)) {
        render_rows(node, indent, out);
        return;
    }
    if (node.is_array()) {
        for (const auto& item : node) {
            if (is_leaf(item)) {
                out << indent << "- " << leaf_text(item) << '\n';
                continue;
            }
            std::ostringstream inner;
            render_node(item, indent + "  ", inner);
            std::string text = inner.str();
            text.replace(indent.size(), 2, "- ");
            out << text;
        }
        return;
    }
    for (const auto& [key, value] : node.items()) render_member(key, value, indent, out);
}

std::string render(const ordered_json& doc, const RenderOptions& options) {
    if (options.format == OutputFormat::json) return doc.dump(2) + "\n";
    std::ostringstream out;
    render_node(doc, "", out);
    return out.str();
}

}  // namespace

CommandOutput cmd_invariants(const ValuationFile& file, const RenderOptions& options) {
    ordered_json doc = document("invariants", options);
    doc["valuations"] = ordered_json::array();
    const auto bundles = bundles_of(file);
    for (std::size_t i = 0; i < bundles.size(); ++i)
        doc["valuations"].push_back(invariants_json(display_name(file, i), bundles[i]));
    return {render(doc, options), exit_code::success};
}

CommandOutput cmd_bounds(const ValuationFile& file, const RenderOptions& options) {
    ordered_json doc = document("bounds", options);
    auto bundles = bundles_of(file);
    // Validates aligned_mu against the whole union up front.
    MultiValuation mv = make_multi_valuation(bundles, file.aligned_mu);
    doc["aligned_mu"] = integer_json(mv.aligned_mu);
    doc["aligned_mu_source"] = file.aligned_mu ? "file" : "default (mutually general centers)";
    doc["note"] = tangent_note;
    doc["valuations"] = ordered_json::array();
    for (std::size_t i = 0; i < bundles.size(); ++i)
        doc["valuations"].push_back(bounds_json(display_name(file, i), bundles[i], mv.aligned_mu));
    if (bundles.size() > 1) {
        ordered_json multi;
        multi["valuation_count"] = bundles.size();
        multi["bounds"] = bound_entries_json(make_multi_bound_report(mv));
        doc["multi_valuation"] = std::move(multi);
    }
    return {render(doc, options), exit_code::success};
}

CommandOutput render_check_report(const std::vector<NamedCheckResults>& valuations, const RenderOptions& options) {
    ordered_json doc = document("check", options);
    doc["valuations"] = ordered_json::array();
    bool all_ok = true;
    for (const auto& [name, results] : valuations) {
        const bool ok = all_passed(results);
        all_ok = all_ok && ok;
        ordered_json entry;
        entry["name"] = name;
        entry["passed"] = ok;
        entry["checks"] = checks_json(results);
        doc["valuations"].push_back(std::move(entry));
    }
    doc["passed"] = all_ok;
    return {render(doc, options), all_ok ? exit_code::success : exit_code::check_failure};
}

CommandOutput cmd_check(const ValuationFile& file, const CheckOptions& checks, const RenderOptions& options) {
    std::vector<NamedCheckResults> valuations;
    const auto bundles = bundles_of(file);
    for (std::size_t i = 0; i < bundles.size(); ++i)
        valuations.push_back({display_name(file, i), run_checks(bundles[i], checks)});
    return render_check_report(valuations, options);
}

CommandOutput cmd_family_tono(std::int64_t a, std::int64_t e, const RenderOptions& options) {
    const TonoBundle tono = tono_family(a, e);
    const TonoExpected& x = tono.expected;
    ordered_json doc = document("family", options);
    doc["family"] = "tono";
    doc["a"] = a;
    doc["e"] = e;
    doc["points"] = tono.bundle.size();
    doc["trailing_free"] = integer_json(x.trailing_free);
    doc["verified"] = true;

    ordered_json expected;
    expected["maximal_contact"] = integers_json(x.beta_bar);
    expected["tangent_value"] = integer_json(x.tangent);
    expected["delta0"] = integer_json(x.delta0);
    expected["curve_degree"] = integer_json(x.curve_degree);
    expected["curve_value"] = integer_json(x.curve_value);
    expected["mu_hat_certificate"] = rational_json(x.mu_hat);
    expected["mu_hat_upper"] = integer_json(x.mu_hat_bound);
    expected["bound_over_certificate"] = rational_json(Rational(x.mu_hat_bound) / x.mu_hat);
    expected["curve_ratio"] = rational_json(x.curve_ratio);
    expected["ratio_bound"] = integer_json(ratio_bound(tono.bundle));
    doc["closed_forms"] = std::move(expected);
    doc["note"] = tangent_note;
    doc["bounds"] = bound_entries_json(make_bound_report(tono.bundle));
    return {render(doc, options), exit_code::success};
}

CommandOutput cmd_fuzz(const FuzzOptions& fuzz, const RenderOptions& options) {
    const FuzzSummary summary = run_fuzz(fuzz);
    ordered_json doc = document("fuzz", options);
    doc["max_points"] = fuzz.max_points;
    doc["trials"] = fuzz.trials;
    doc["seed"] = fuzz.seed;
    doc["satellite_bias"] = fuzz.satellite_bias;
    doc["max_tail_length"] = fuzz.checks.max_tail_length;
    doc["configurations_passed"] = summary.configurations_passed;
    doc["configurations_failed"] = summary.configurations_failed;
    ordered_json tallies = ordered_json::array();
    for (const auto& [name, tally] : summary.tallies)
        tallies.push_back({{"check", name}, {"passed", tally.passed}, {"failed", tally.failed}});
    doc["checks"] = std::move(tallies);
    if (summary.first_counterexample) {
        const Counterexample& c = *summary.first_counterexample;
        ordered_json proximity = ordered_json::array();
        for (const auto& set : c.proximity) proximity.push_back(set);
        doc["first_counterexample"] = {{"trial", c.trial},
                                       {"proximity", proximity},
                                       {"tangent_count", c.tangent_count},
                                       {"check", c.check},
                                       {"detail", c.detail}};
    } else {
        doc["first_counterexample"] = nullptr;
    }
    return {render(doc, options), summary.all_passed() ? exit_code::success : exit_code::check_failure};
}

std::string tono_valuation_file(std::int64_t a, std::int64_t e) {
    const TonoExpected x = tono_expected(a, e);
    ValuationFile file;
    file.entries.push_back({"tono(" + std::to_string(a) + "," + std::to_string(e) + ")",
                            MaximalContactEncoding{x.beta_bar, std::nullopt}});
    return serialize(file);
}

}  // namespace vlab
