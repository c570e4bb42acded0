#include <fstream>
#include <iostream>
#include <map>

#include "CLI11.hpp"
#include "vlab/report.hpp"

namespace {

int emit(const vlab::CommandOutput& output) {
    std::cout << output.text;
    return output.exit_code;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Exact invariants and bounds for divisorial plane valuations"};
    app.require_subcommand(1);

    vlab::RenderOptions render;
    const std::map<std::string, vlab::OutputFormat> formats{{"table", vlab::OutputFormat::table},
                                                            {"json", vlab::OutputFormat::json}};
    app.add_option("--format", render.format, "Output format")
        ->transform(CLI::CheckedTransformer(formats, CLI::ignore_case))
        ->default_str("table");
    app.add_flag("--timestamp", render.timestamp, "Add a generation timestamp to the report");

    std::string file_path;
    auto file_command = [&](const char* name, const char* description) {
        CLI::App* sub = app.add_subcommand(name, description);
        sub->add_option("file", file_path, "Valuation file (JSON)")->required();
        sub->fallthrough();
        return sub;
    };
    CLI::App* invariants = file_command("invariants", "Multiplicities, maximal contact values, Puiseux data");
    CLI::App* bounds = file_command("bounds", "Degree, Seshadri-type and negativity bounds");
    CLI::App* check = file_command("check", "Run every built-in identity; exit 2 on failure");

    CLI::App* family = app.add_subcommand("family", "Built-in example families");
    family->require_subcommand(1);
    family->fallthrough();
    CLI::App* tono = family->add_subcommand("tono", "Valuations defined by Tono's unicuspidal curves");
    std::int64_t a = 3;
    std::int64_t e = 0;
    std::string emit_path;
    tono->add_option("--a", a, "Curve parameter, a >= 3")->required();
    tono->add_option("--e", e, "Extra free-point parameter, e >= 0")->required();
    tono->add_option("--emit", emit_path, "Also write the valuation as a JSON file");
    tono->fallthrough();

    CLI::App* fuzz = app.add_subcommand("fuzz", "Random configurations through the full property suite");
    vlab::FuzzOptions fuzz_options;
    fuzz->add_option("--max-points", fuzz_options.max_points, "Largest configuration size")
        ->check(CLI::PositiveNumber)
        ->required();
    fuzz->add_option("--trials", fuzz_options.trials, "Number of configurations")
        ->check(CLI::PositiveNumber)
        ->required();
    fuzz->add_option("--seed", fuzz_options.seed, "Random seed")->required();
    fuzz->add_option("--max-tail", fuzz_options.checks.max_tail_length, "Longest satellite tail tried")
        ->capture_default_str();
    fuzz->fallthrough();

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int status = app.exit(e);
        return status == 0 ? vlab::exit_code::success : vlab::exit_code::validation_error;
    }

    try {
        if (*invariants) return emit(vlab::cmd_invariants(vlab::load_valuation_file(file_path), render));
        if (*bounds) return emit(vlab::cmd_bounds(vlab::load_valuation_file(file_path), render));
        if (*check) return emit(vlab::cmd_check(vlab::load_valuation_file(file_path), {}, render));
        if (*tono) {
            vlab::CommandOutput output = vlab::cmd_family_tono(a, e, render);
            if (!emit_path.empty()) {
                std::ofstream out(emit_path);
                out << vlab::tono_valuation_file(a, e);
                if (!out) throw std::runtime_error("cannot write " + emit_path);
            }
            return emit(output);
        }
        if (*fuzz) return emit(vlab::cmd_fuzz(fuzz_options, render));
    } catch (const std::exception& ex) {
        std::cerr << "error: " << ex.what() << '\n';
        return vlab::exit_code::validation_error;
    }
    return vlab::exit_code::validation_error;
}
