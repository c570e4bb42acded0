#pragma once

#include <cstdint>
#include <string>

#include "vlab/fuzz.hpp"
#include "vlab/valuation_file.hpp"

namespace vlab {

enum class OutputFormat { table, json };

struct RenderOptions {
    OutputFormat format = OutputFormat::table;
    /// Adds a "generated_at" field; off by default so reports are reproducible.
    bool timestamp = false;
};

/// Rendered report plus the process exit status it implies.
struct CommandOutput {
    std::string text;
    int exit_code = 0;
};

namespace exit_code {
inline constexpr int success = 0;
inline constexpr int validation_error = 1;
inline constexpr int check_failure = 2;
}  // namespace exit_code

CommandOutput cmd_invariants(const ValuationFile& file, const RenderOptions& options = {});
CommandOutput cmd_bounds(const ValuationFile& file, const RenderOptions& options = {});
/// Exit code 2 iff some check fails.
CommandOutput cmd_check(const ValuationFile& file, const CheckOptions& checks = {},
                        const RenderOptions& options = {});
struct NamedCheckResults {
    std::string name;
    std::vector<CheckResult> results;
};

/// Rendering half of cmd_check: exit code 2 iff some result failed.
CommandOutput render_check_report(const std::vector<NamedCheckResults>& valuations,
                                  const RenderOptions& options = {});

CommandOutput cmd_family_tono(std::int64_t a, std::int64_t e, const RenderOptions& options = {});
/// Exit code 2 iff some trial produced a counterexample.
CommandOutput cmd_fuzz(const FuzzOptions& fuzz, const RenderOptions& options = {});

/// A valuation file holding Tono(a, e) as a maximal contact sequence.
std::string tono_valuation_file(std::int64_t a, std::int64_t e);

}  // namespace vlab
