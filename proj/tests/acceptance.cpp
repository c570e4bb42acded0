// Acceptance suite: one PASS/FAIL line per criterion. All comparisons are
// exact (tolerance zero); the only floating point is in display strings.

#include <sys/wait.h>
#include <unistd.h>

#include <array>
#include <cstdio>
#include <filesystem>
#include <fstream>
#include <functional>
#include <iostream>
#include <random>
#include <sstream>
#include <string>
#include <vector>

#include "oracles.hpp"
#include "vlab/bounds.hpp"
#include "vlab/fuzz.hpp"
#include "vlab/invariants.hpp"
#include "vlab/report.hpp"
#include "vlab/surface.hpp"

using namespace vlab;

namespace {

constexpr std::size_t corpus_points = 12;
constexpr std::size_t corpus_size = 1000;
constexpr std::uint64_t corpus_seed = 42;

struct Outcome {
    bool passed = true;
    std::string detail;
};

// Collects the first few failures; later ones are only counted.
class Ledger {
public:
    void require(bool ok, const std::string& what) {
        ++checked_;
        if (ok) return;
        ++failed_;
        if (failed_ <= 3) first_ += (first_.empty() ? "" : "; ") + what;
    }
    Outcome outcome(const std::string& summary) const {
        std::ostringstream out;
        out << summary << " (" << checked_ << " comparisons";
        if (failed_ > 0) out << ", " << failed_ << " failed: " << first_;
        out << ")";
        return {failed_ == 0, out.str()};
    }

private:
    std::size_t checked_ = 0;
    std::size_t failed_ = 0;
    std::string first_;
};

const std::vector<ValuationBundle>& corpus() {
    static const std::vector<ValuationBundle> bundles = [] {
        std::vector<ValuationBundle> out;
        for (const auto& cfg : fuzz_corpus(corpus_points, corpus_size, corpus_seed)) out.push_back(make_bundle(cfg));
        return out;
    }();
    return bundles;
}

Outcome tono_reproduction() {
    Ledger ledger;
    for (auto [a_in, e_in] : {std::pair{3, 0}, std::pair{4, 1}, std::pair{5, 2}}) {
        const std::string tag = "(" + std::to_string(a_in) + "," + std::to_string(e_in) + ")";
        const TonoBundle tono = tono_family(a_in, e_in);
        const ValuationBundle& b = tono.bundle;
        const Integer a = a_in, e = e_in;
        const Integer a2 = a * a, a3 = a2 * a, a4 = a3 * a;
        const IntegerVector beta_bar{a2 - a, a2, a3 + 2 * a + 1, (e + 2) * a4 - 2 * a3};
        ledger.require(b.record.beta_bar.beta_bar == beta_bar, tag + " beta_bar");
        ledger.require(b.tangent() == a2, tag + " t");
        ledger.require(b.delta0 == e, tag + " delta_0");

        const Integer degree = a2 + 1;
        const auto certificate = supraminimal_certificate(b, b.last_beta_bar(), degree);
        ledger.require(certificate && *certificate == Rational((e + 2) * a4 - 2 * a3, degree), tag + " mu_hat");
        ledger.require(mu_hat_upper_bound(b) == (e + 2) * a2 - a, tag + " mu_hat bound");

        const PlaneClass curve = strict_transform_plane(b.cfg, degree, b.record.multiplicities.values, true);
        const Rational ratio(intersect_plane(curve, curve), degree * degree);
        ledger.require(ratio == Rational(degree * degree - (e + 2) * a4 + 2 * a3, degree * degree), tag + " ratio");

        if (a_in == 3) {
            ledger.require(beta_bar == IntegerVector{6, 9, 34, 108}, "(3,0) literal beta_bar");
            ledger.require(certificate && *certificate == Rational(54, 5), "(3,0) literal mu_hat");
            ledger.require(mu_hat_upper_bound(b) == 15, "(3,0) literal bound");
            ledger.require(ratio == Rational(-2, 25), "(3,0) literal ratio");
        }
    }
    return ledger.outcome("(3,0), (4,1), (5,2) match the closed forms; (3,0) gives (6,9,34,108), 54/5, 15, -2/25");
}

Outcome last_beta_bar_identity() {
    Ledger ledger;
    for (const auto& b : corpus()) {
        const Configuration& cfg = b.cfg;
        const auto lists = cfg.proximity_lists();
        const IntegerVector v = oracle::solve_proximity_system(lists, cfg.size());
        Integer direct = 0;
        for (const auto& x : v) direct += x * x;

        // Curvette route: pair v with the curvette through p_{l_g}, then add
        // one per trailing free point.
        const BlockDecomposition blocks = block_decomposition(cfg);
        const std::size_t l_g = blocks.boundaries[blocks.genus_count];
        const IntegerVector w = oracle::solve_proximity_system(lists, l_g);
        Integer curvette = 0;
        for (std::size_t i = 0; i < v.size(); ++i) curvette += v[i] * w[i];
        curvette += cfg.size() - l_g;

        ledger.require(direct == curvette, "curvette route, n = " + std::to_string(cfg.size()));
        ledger.require(b.last_beta_bar() == direct, "library value, n = " + std::to_string(cfg.size()));
    }
    return ledger.outcome("beta_bar_{g+1} = sum v_i^2 on the fuzz corpus");
}

Outcome delta0_oracle() {
    Ledger ledger;
    for (const auto& b : corpus()) {
        if (b.size() == 1) {
            ledger.require(b.delta0 == -1, "m-adic convention");
            continue;
        }
        const std::uint64_t searched = oracle::delta0_search(b.record.multiplicities.values, b.tangent());
        ledger.require(b.delta0 == Integer(searched), "linear search");
        ledger.require(npi_check(b.cfg, searched).non_positive, "npi at delta_0");
        if (searched > 0) ledger.require(!npi_check(b.cfg, searched - 1).non_positive, "npi at delta_0 - 1");
    }
    return ledger.outcome("delta_0 is the first delta with npi true, npi(delta_0 - 1) false");
}

Outcome nef_pairings() {
    Ledger ledger;
    for (const auto& b : corpus()) {
        for (std::uint64_t delta = 0; delta <= 3; ++delta) {
            const auto pairings = nef_on_generators(b.cfg, delta);
            for (std::size_t k = 0; k < pairings.size(); ++k) {
                const Integer expected = k + 1 == pairings.size() ? 1 : 0;
                ledger.require(pairings[k].pairing == expected,
                               pairings[k].generator.label() + " at delta " + std::to_string(delta));
            }
        }
    }
    return ledger.outcome("Lambda_n . F~1 = Lambda_n . M~0 = Lambda_n . E~i = 0 (i < n), Lambda_n . E~n = 1");
}

Outcome maximal_contact_round_trip() {
    Ledger ledger;
    for (const auto& b : corpus()) {
        try {
            const Configuration rebuilt = from_maximal_contact(b.record.beta_bar.beta_bar);
            ledger.require(multiplicity_sequence(rebuilt).values == b.record.multiplicities.values,
                           "multiplicities, n = " + std::to_string(b.size()));
        } catch (const std::exception& e) {
            ledger.require(false, e.what());
        }
    }
    return ledger.outcome("from_maximal_contact(maximal_contact_values(cfg)) keeps v");
}

Outcome bidegree_bounds() {
    Ledger ledger;
    std::mt19937_64 rng(corpus_seed);
    std::uniform_int_distribution<std::uint64_t> exponent(0, 10);
    std::uniform_int_distribution<std::size_t> terms(1, 10);
    std::size_t supports = 0;
    while (supports < 500) {
        AffinePolynomial f;
        const std::size_t count = terms(rng);
        for (std::size_t k = 0; k < count; ++k) {
            const std::uint64_t i = exponent(rng);
            const std::uint64_t j = std::uniform_int_distribution<std::uint64_t>(0, 10 - i)(rng);
            f.support.insert({i, j});
        }
        if (f.total_degree() == 0) continue;
        ++supports;
        for (std::uint64_t delta = 0; delta <= 4; ++delta) {
            const Bidegree c = hirzebruch_class_of_polynomial(f, delta);
            ledger.require(c.a <= Integer(f.degree_u()), "a <= deg_u");
            ledger.require(c.b <= Integer(f.degree_v()), "b <= deg_v");
        }
    }
    return ledger.outcome("500 supports of degree <= 10, delta 0..4: a <= deg_u, b <= deg_v");
}

Outcome satellite_tails() {
    Ledger ledger;
    std::size_t pairs = 0;
    for (std::uint64_t trial = 0; pairs < 200; ++trial) {
        auto rng = trial_rng(corpus_seed + 1, trial);
        const Configuration cfg = random_configuration(rng, corpus_points);
        if (cfg.size() < 2 || cfg.is_satellite(cfg.size())) continue;
        const auto tail = random_satellite_tail(rng, cfg, 5);
        const TailComparison cmp = satellite_tail_comparison(cfg, tail);
        ledger.require(cmp.delta0_non_increasing(), "delta_0 increased at trial " + std::to_string(trial));
        ledger.require(cmp.difference_in_open_unit_interval(),
                       "D = " + to_string(cmp.difference) + " at trial " + std::to_string(trial));
        ++pairs;
    }
    return ledger.outcome("200 (configuration, tail) pairs: delta_0 non-increasing, 0 < D < 1");
}

Outcome volume_bound_dominance() {
    Ledger ledger;
    for (const auto& b : corpus()) {
        if (b.size() < 2) continue;
        const Integer volume_term = 1 - ceil(Rational(b.last_beta_bar(), b.beta_bar_0() * b.beta_bar_0()));
        ledger.require(combinatorial_lambda_bound(b) >= volume_term, "combinatorial >= 1 - ceil(1/vol^N)");
        ledger.require(volume_term >= 1 - Integer(b.size()), "1 - ceil(1/vol^N) >= 1 - n");
    }
    return ledger.outcome("combinatorial bound >= 1 - ceil(1/vol^N) >= 1 - n");
}

Outcome asymptotics() {
    Ledger ledger;
    for (std::int64_t e = 0; e <= 3; ++e) {
        Rational previous_ratio = 0, previous_gap = 0;
        for (std::int64_t a = 3; a <= 12; ++a) {
            const std::string tag = "(" + std::to_string(a) + "," + std::to_string(e) + ")";
            const TonoBundle tono = tono_family(a, e);
            const ValuationBundle& b = tono.bundle;
            const Integer degree = Integer(a) * a + 1;
            const auto certificate = supraminimal_certificate(b, b.last_beta_bar(), degree);
            if (!certificate) {
                ledger.require(false, tag + " no certificate");
                continue;
            }
            const Rational ratio = Rational(mu_hat_upper_bound(b)) / *certificate;
            ledger.require(ratio > 1, tag + " bound/mu_hat > 1");
            if (a > 3) ledger.require(ratio < previous_ratio, tag + " bound/mu_hat decreasing");
            previous_ratio = ratio;

            const Integer lambda = lambda_lower_bound(make_multi_valuation({b}, Integer(2)));
            ledger.require(lambda == -(e + 1), tag + " lambda bound");
            const PlaneClass curve = strict_transform_plane(b.cfg, degree, b.record.multiplicities.values);
            const Rational curve_ratio(intersect_plane(curve, curve), degree * degree);
            const Rational gap = curve_ratio - Rational(lambda);
            ledger.require(gap >= 0, tag + " bound <= ratio");
            if (a > 3) ledger.require(gap < previous_gap, tag + " gap decreasing");
            previous_gap = gap;
        }
    }
    return ledger.outcome("a = 3..12, e = 0..3: bound/mu_hat > 1 and decreasing; -(e+1) <= ratio, gap decreasing");
}

struct Run {
    std::string output;
    int status = -1;
};

Run run(const std::string& command) {
    Run result;
    FILE* pipe = popen((command + " 2>/dev/null").c_str(), "r");
    if (!pipe) return result;
    std::array<char, 4096> buffer{};
    std::size_t count;
    while ((count = std::fread(buffer.data(), 1, buffer.size(), pipe)) > 0) result.output.append(buffer.data(), count);
    const int raw = pclose(pipe);
    result.status = WIFEXITED(raw) ? WEXITSTATUS(raw) : -1;
    return result;
}

Outcome cli_determinism(const std::string& lab) {
    Ledger ledger;
    if (lab.empty()) {
        ledger.require(false, "no valuation-lab path given");
        return ledger.outcome("CLI");
    }
    const auto dir = std::filesystem::temp_directory_path() / ("vlab-acceptance-" + std::to_string(::getpid()));
    std::filesystem::create_directories(dir);
    auto write = [&](const std::string& name, const std::string& text) {
        const auto path = dir / name;
        std::ofstream(path) << text;
        return path.string();
    };
    const std::string valid = write(
        "valid.json", R"({"valuations":[{"tono":{"a":4,"e":1}},{"name":"cusp","proximity":[[],[1],[2,1]]}]})");
    const std::string invalid = write("invalid.json", R"({"valuations":[{"proximity":[[],[2]]}]})");
    const std::string malformed = write("malformed.json", "{\"valuations\": [");

    const std::vector<std::string> commands{
        "invariants " + valid, "bounds " + valid, "check " + valid,
        "family tono --a 3 --e 0", "fuzz --max-points 12 --trials 100 --seed 42"};
    for (const std::string format : {"table", "json"}) {
        for (const auto& command : commands) {
            const std::string full = lab + " --format " + format + " " + command;
            const Run first = run(full), second = run(full);
            ledger.require(first.status == 0, full + " exit " + std::to_string(first.status));
            ledger.require(!first.output.empty() && first.output == second.output, full + " not byte-identical");
        }
    }
    const std::string emitted = (dir / "emitted.json").string();
    ledger.require(run(lab + " family tono --a 3 --e 0 --emit " + emitted).status == 0, "--emit");
    ledger.require(run(lab + " check " + emitted).status == 0, "check on emitted file");

    ledger.require(run(lab + " check " + invalid).status == exit_code::validation_error, "invalid file exit 1");
    ledger.require(run(lab + " invariants " + malformed).status == exit_code::validation_error, "malformed exit 1");
    ledger.require(run(lab + " bounds " + (dir / "missing.json").string()).status == exit_code::validation_error,
                   "missing file exit 1");
    ledger.require(run(lab + " family tono --a 2 --e 0").status == exit_code::validation_error, "a < 3 exit 1");
    ledger.require(run(lab + " fuzz --max-points 0 --trials 1 --seed 1").status == exit_code::validation_error,
                   "max-points 0 exit 1");
    ledger.require(run(lab).status == exit_code::validation_error, "no subcommand exit 1");

    // No valid input fails a built-in check, so exit 2 is exercised through
    // the report renderer the check command uses.
    const CommandOutput failing = render_check_report({{"synthetic", {{"identity", false, "forced"}}}});
    ledger.require(failing.exit_code == exit_code::check_failure, "failing check exit 2");

    const Run stamped = run(lab + " --format json --timestamp invariants " + valid);
    ledger.require(stamped.output.find("generated_at") != std::string::npos, "--timestamp adds a field");

    std::filesystem::remove_all(dir);
    return ledger.outcome("byte-identical reports (table and json); exit codes 0, 1 and 2");
}

}  // namespace

int main(int argc, char** argv) {
    const std::string lab = argc > 1 ? argv[1] : "";
    const std::vector<std::pair<std::string, std::function<Outcome()>>> criteria{
        {"Tono family reproduction", tono_reproduction},
        {"beta_bar_{g+1} = sum v_i^2", last_beta_bar_identity},
        {"delta_0 oracle equivalence", delta0_oracle},
        {"nef pairing identities", nef_pairings},
        {"maximal contact round trip", maximal_contact_round_trip},
        {"Hirzebruch bidegree bounds", bidegree_bounds},
        {"satellite tail comparison", satellite_tails},
        {"volume bound dominance", volume_bound_dominance},
        {"asymptotics", asymptotics},
        {"CLI determinism and exit codes", [&] { return cli_determinism(lab); }},
    };
    std::size_t failures = 0;
    for (std::size_t k = 0; k < criteria.size(); ++k) {
        Outcome outcome;
        try {
            outcome = criteria[k].second();
        } catch (const std::exception& e) {
            outcome = {false, std::string("exception: ") + e.what()};
        }
        failures += !outcome.passed;
        std::cout << (outcome.passed ? "PASS" : "FAIL") << "  criterion " << (k + 1) << ": " << criteria[k].first
                  << " -- " << outcome.detail << '\n';
    }
    std::cout << (criteria.size() - failures) << "/" << criteria.size() << " criteria passed\n";
    return failures == 0 ? 0 : 1;
}
