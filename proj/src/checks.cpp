#include "vlab/checks.hpp"

#include <algorithm>
#include <sstream>

#include "vlab/invariants.hpp"
#include "vlab/surface.hpp"

namespace vlab {

namespace {

class Recorder {
public:
    void pass(std::string name, std::string detail = {}) {
        results_.push_back({std::move(name), true, std::move(detail)});
    }
    void fail(std::string name, std::string detail) {
        results_.push_back({std::move(name), false, std::move(detail)});
    }
    void expect(bool ok, std::string name, std::string detail) {
        results_.push_back({std::move(name), ok, std::move(detail)});
    }
    std::vector<CheckResult> take() { return std::move(results_); }

private:
    std::vector<CheckResult> results_;
};

void check_proximity_equalities(const ValuationBundle& b, Recorder& out) {
    const Configuration& cfg = b.cfg;
    const auto& v = b.record.multiplicities.values;
    const std::size_t n = cfg.size();
    IntegerVector load(n, 0);
    for (std::size_t j = 1; j <= n; ++j)
        for (std::size_t target : cfg.point(j).proximate_to) load[target - 1] += v[j - 1];
    for (std::size_t i = 1; i < n; ++i) {
        if (v[i - 1] != load[i - 1]) {
            out.fail("proximity_equalities", "v_" + std::to_string(i) + " = " + v[i - 1].str() +
                                                 " but proximate points sum to " + load[i - 1].str());
            return;
        }
    }
    out.expect(v.back() == 1, "proximity_equalities", v.back() == 1 ? "" : "v_n != 1");
}

// beta_bar_{g+1} by direct summation against the curvette through p_{l_g}
// plus the trailing free points, and against e_{g-1} beta_bar_g.
void check_last_beta_bar(const ValuationBundle& b, Recorder& out) {
    const Configuration& cfg = b.cfg;
    const auto& v = b.record.multiplicities.values;
    const auto& beta_bar = b.record.beta_bar;
    const BlockDecomposition blocks = block_decomposition(cfg);
    const std::size_t l_g = blocks.boundaries[blocks.genus_count];
    const std::size_t trailing = cfg.size() - l_g;

    const Integer direct = sum_of_squares(v);
    const Integer curvette = noether_pairing(cfg, v, curvette_vector(cfg, l_g)) + trailing;
    Integer semigroup = trailing + 1;
    if (blocks.genus_count >= 1) {
        const std::size_t g = blocks.genus_count;
        semigroup = beta_bar.gcd_chain[g - 1] * beta_bar.beta_bar[g] + trailing;
    }
    std::ostringstream detail;
    detail << "sum v^2 = " << direct << ", curvette route = " << curvette
           << ", e_{g-1} beta_bar_g route = " << semigroup;
    out.expect(direct == beta_bar.last() && curvette == direct && semigroup == direct,
               "last_beta_bar_routes", detail.str());
}

void check_round_trips(const ValuationBundle& b, Recorder& out) {
    const Configuration& cfg = b.cfg;
    try {
        const Configuration rebuilt = build_configuration(cfg.proximity_lists(), cfg.tangent_count());
        out.expect(rebuilt == cfg, "proximity_round_trip", rebuilt == cfg ? "" : "rebuilt configuration differs");
    } catch (const std::exception& e) {
        out.fail("proximity_round_trip", e.what());
    }
    try {
        const Configuration rebuilt = from_maximal_contact(b.record.beta_bar.beta_bar);
        const bool same = rebuilt.proximity_lists() == cfg.proximity_lists() &&
                          multiplicity_sequence(rebuilt).values == b.record.multiplicities.values;
        out.expect(same, "maximal_contact_round_trip", same ? "" : "reconstruction has different proximities");
    } catch (const std::exception& e) {
        out.fail("maximal_contact_round_trip", e.what());
    }
}

void check_puiseux(const ValuationBundle& b, Recorder& out) {
    const auto& beta_prime = b.record.puiseux.beta_prime;
    const auto& beta_bar = b.record.beta_bar.beta_bar;
    const std::size_t g = b.record.beta_bar.genus();
    if (g == 0) {
        out.pass("first_puiseux_ratio", "skipped: g = 0");
    } else {
        const Rational expected(beta_bar[1], beta_bar[0]);
        out.expect(beta_prime[1] == expected, "first_puiseux_ratio",
                   "beta'_1 = " + to_string(beta_prime[1]) + ", beta_bar_1/beta_bar_0 = " + to_string(expected));
    }
    bool shape = beta_prime.size() == g + 2 && beta_prime[0] == 1 &&
                 boost::multiprecision::denominator(beta_prime[g + 1]) == 1 && beta_prime[g + 1] >= 1;
    for (std::size_t j = 1; j <= g && shape; ++j)
        shape = beta_prime[j] > 1 && boost::multiprecision::denominator(beta_prime[j]) != 1;
    out.expect(shape, "puiseux_shape", shape ? "" : "Puiseux exponents have the wrong shape");
}

void check_tangent(const ValuationBundle& b, Recorder& out) {
    const Integer& t = b.tangent();
    if (b.size() == 1) {
        out.expect(t == 1, "tangent_range", "m-adic tangent value " + t.str());
        return;
    }
    const bool ok = t > b.beta_bar_0() && t <= b.beta_bar_1();
    out.expect(ok, "tangent_range",
               "beta_bar_0 = " + b.beta_bar_0().str() + " < t = " + t.str() + " <= beta_bar_1 = " +
                   b.beta_bar_1().str());
}

void check_delta0(const ValuationBundle& b, Recorder& out) {
    if (b.size() == 1) {
        out.expect(b.delta0 == -1, "delta0_linear_search", "m-adic delta_0 = " + b.delta0.str());
        return;
    }
    auto npi = [&](std::uint64_t delta) {
        return npi_check(b.beta_bar_0(), b.tangent(), b.last_beta_bar(), delta).non_positive;
    };
    std::uint64_t smallest = 0;
    while (!npi(smallest)) ++smallest;
    bool ok = Integer(smallest) == b.delta0;
    for (std::uint64_t extra = 1; extra <= 3; ++extra) ok = ok && npi(smallest + extra);
    if (smallest > 0) ok = ok && !npi(smallest - 1);
    out.expect(ok, "delta0_linear_search",
               "formula " + b.delta0.str() + ", linear search " + std::to_string(smallest));
}

void check_lambda(const ValuationBundle& b, const CheckOptions& options, Recorder& out) {
    const Configuration& cfg = b.cfg;
    bool self_ok = true;
    bool nef_ok = true;
    std::string nef_detail;
    for (std::uint64_t delta : options.deltas) {
        HirzebruchClass lambda{b.beta_bar_0(), b.tangent(), b.record.multiplicities.values, delta};
        const Integer witness = npi_check(b.beta_bar_0(), b.tangent(), b.last_beta_bar(), delta).witness;
        self_ok = self_ok && witness == intersect_hirzebruch(lambda, lambda);

        auto expect_pairing = [&](const GeneratorClass& g, const Integer& expected) {
            const Integer value = pair_with_generator(lambda, g);
            if (value != expected && nef_ok) {
                nef_ok = false;
                nef_detail = "delta " + std::to_string(delta) + ": Lambda . " + g.label() + " = " +
                             value.str() + ", expected " + expected.str();
            }
        };
        expect_pairing(fiber_strict_transform(cfg), 0);
        expect_pairing(special_section_strict_transform(delta), 0);
        for (std::size_t i = 1; i <= cfg.size(); ++i)
            expect_pairing(exceptional_strict_transform(cfg, i), i == cfg.size() ? 1 : 0);
    }
    out.expect(self_ok, "lambda_self_pairing", self_ok ? "" : "npi witness differs from Lambda^2");
    out.expect(nef_ok, "nef_generator_pairings", nef_detail);
}

void check_bounds(const ValuationBundle& b, Recorder& out) {
    const Integer bound = mu_hat_upper_bound(b);
    out.expect(bound * bound >= b.last_beta_bar(), "mu_hat_bound_dominates",
               "bound^2 = " + Integer(bound * bound).str() + ", beta_bar_{g+1} = " + b.last_beta_bar().str());

    std::vector<ValuationBundle> single{b};
    const MultiValuation mv = make_multi_valuation(std::move(single));
    out.expect(multi_ratio_bound(mv) == ratio_bound(b), "multi_ratio_single",
               "multi " + multi_ratio_bound(mv).str() + ", single " + ratio_bound(b).str());

    if (b.size() < 2) {
        out.pass("volume_bound_dominance", "skipped: m-adic valuation");
        return;
    }
    const Integer combinatorial = combinatorial_lambda_bound(b);
    const Integer volume_term = 1 - ceil(Rational(b.last_beta_bar(), b.beta_bar_0() * b.beta_bar_0()));
    const Integer trivial = trivial_lambda_bound(b.cfg);
    out.expect(combinatorial >= volume_term && volume_term >= trivial, "volume_bound_dominance",
               combinatorial.str() + " >= " + volume_term.str() + " >= " + trivial.str());
}

void check_tails(const ValuationBundle& b, const CheckOptions& options, Recorder& out) {
    const Configuration& cfg = b.cfg;
    if (cfg.size() < 2 || cfg.is_satellite(cfg.size()) || options.max_tail_length == 0) {
        out.pass("satellite_tail", "skipped: configuration does not end in a free point");
        return;
    }
    const std::size_t genus = b.record.beta_bar.genus();
    std::size_t tried = 0;
    for (std::size_t length = 1; length <= options.max_tail_length; ++length) {
        for (const auto& targets : enumerate_satellite_tails(cfg, length)) {
            ++tried;
            const TailComparison cmp = satellite_tail_comparison(b, targets);
            const std::size_t new_genus = block_decomposition(cmp.extended).genus_count;
            if (!cmp.holds() || new_genus != genus + 1) {
                std::ostringstream detail;
                detail << "tail";
                for (auto t : targets) detail << ' ' << t;
                detail << ": delta0 " << cmp.delta0_before << " -> " << cmp.delta0_after
                       << ", D = " << to_string(cmp.difference) << ", g " << genus << " -> " << new_genus;
                out.fail("satellite_tail", detail.str());
                return;
            }
        }
    }
    out.pass("satellite_tail", std::to_string(tried) + " tails");
}

}  // namespace

std::vector<CheckResult> run_checks(const ValuationBundle& bundle, const CheckOptions& options) {
    Recorder out;
    check_proximity_equalities(bundle, out);
    check_last_beta_bar(bundle, out);
    check_round_trips(bundle, out);
    check_puiseux(bundle, out);
    check_tangent(bundle, out);
    check_delta0(bundle, out);
    check_lambda(bundle, options, out);
    check_bounds(bundle, out);
    check_tails(bundle, options, out);
    return out.take();
}

std::vector<CheckResult> run_checks(const Configuration& cfg, const CheckOptions& options) {
    return run_checks(make_bundle(cfg), options);
}

bool all_passed(const std::vector<CheckResult>& results) {
    return std::all_of(results.begin(), results.end(), [](const auto& r) { return r.passed; });
}

}  // namespace vlab
