#include "vlab/bounds.hpp"

#include <algorithm>
#include <stdexcept>

#include "vlab/surface.hpp"

namespace vlab {

ValuationBundle make_bundle(const Configuration& cfg) {
    InvariantRecord record = compute_invariants(cfg);
    Integer d0 = delta0(cfg.size(), record.beta_bar.beta_bar.front(), record.tangent_value,
                        record.beta_bar.last());
    return {cfg, std::move(record), std::move(d0)};
}

Integer default_aligned_mu(std::span<const ValuationBundle> bundles) {
    std::size_t mu = 1;
    std::size_t total = 0;
    for (const auto& b : bundles) {
        mu = std::max(mu, b.cfg.tangent_count());
        total += b.size();
    }
    if (total >= 2) mu = std::max<std::size_t>(mu, 2);
    return mu;
}

MultiValuation make_multi_valuation(std::vector<ValuationBundle> bundles,
                                    std::optional<Integer> aligned_mu) {
    if (bundles.empty()) throw std::invalid_argument("a multi-valuation needs at least one valuation");
    const Integer floor_mu = default_aligned_mu(bundles);
    Integer mu = aligned_mu.value_or(floor_mu);
    if (mu < floor_mu)
        throw std::invalid_argument("aligned_mu " + mu.str() + " is below " + floor_mu.str() +
                                    " (the tangent segments alone are aligned)");
    return {std::move(bundles), std::move(mu)};
}

Rational delta_excess(const Integer& beta_bar_0, const Integer& tangent, const Integer& last_beta_bar) {
    return Rational(last_beta_bar - 2 * beta_bar_0 * tangent, tangent * tangent);
}

Integer delta0(std::size_t n, const Integer& beta_bar_0, const Integer& tangent,
               const Integer& last_beta_bar) {
    if (n == 1) return -1;
    return ceil_plus(delta_excess(beta_bar_0, tangent, last_beta_bar));
}

Integer delta0(const Configuration& cfg) {
    return make_bundle(cfg).delta0;
}

Rational degree_lower_bound(const ValuationBundle& bundle, std::span<const Integer> m) {
    if (m.size() != bundle.size())
        throw std::invalid_argument("degree_lower_bound: expected " + std::to_string(bundle.size()) +
                                    " multiplicities, got " + std::to_string(m.size()));
    for (const auto& value : m)
        if (value < 0) throw std::invalid_argument("degree_lower_bound: negative multiplicity");
    return Rational(dot(bundle.record.multiplicities.values, m), mu_hat_upper_bound(bundle));
}

Rational degree_lower_bound(const Configuration& cfg, std::span<const Integer> m) {
    return degree_lower_bound(make_bundle(cfg), m);
}

Integer mu_hat_upper_bound(const ValuationBundle& bundle) {
    return bundle.beta_bar_0() + (1 + bundle.delta0) * bundle.tangent();
}

Integer mu_hat_upper_bound(const Configuration& cfg) {
    return mu_hat_upper_bound(make_bundle(cfg));
}

std::optional<Rational> supraminimal_certificate(const ValuationBundle& bundle,
                                                 const Integer& curve_value,
                                                 const Integer& curve_degree) {
    if (curve_value <= 0 || curve_degree <= 0)
        throw std::invalid_argument("supraminimal_certificate: value and degree must be positive");
    if (curve_value * curve_value > bundle.last_beta_bar() * curve_degree * curve_degree)
        return Rational(curve_value, curve_degree);
    return std::nullopt;
}

std::optional<Rational> supraminimal_certificate(const Configuration& cfg, const Integer& curve_value,
                                                 const Integer& curve_degree) {
    return supraminimal_certificate(make_bundle(cfg), curve_value, curve_degree);
}

Integer ratio_bound(const ValuationBundle& bundle) {
    return -(1 + bundle.delta0);
}

Integer ratio_bound(const Configuration& cfg) {
    return ratio_bound(make_bundle(cfg));
}

Integer multi_ratio_bound(const MultiValuation& mv) {
    Integer sum = 0;
    for (const auto& b : mv.bundles) sum += b.delta0;
    return -sum - 2 * Integer(mv.bundles.size()) + 1;
}

Integer lambda_lower_bound(const MultiValuation& mv) {
    return std::min(Integer(1 - mv.aligned_mu), multi_ratio_bound(mv));
}

Integer combinatorial_lambda_bound(const ValuationBundle& bundle) {
    if (bundle.size() < 2)
        throw std::invalid_argument("combinatorial_lambda_bound: the m-adic valuation has no tangent line");
    const Integer& b0 = bundle.beta_bar_0();
    const Integer& b1 = bundle.beta_bar_1();
    const Integer& last = bundle.last_beta_bar();
    const Rational inverse_normalized_volume(last, b0 * b0);
    const Rational ratio(b0, b1);
    if (bundle.size() >= 3 && bundle.cfg.is_satellite(3)) {
        // t = beta_bar_1 exactly in this case.
        return -1 - ceil_plus(ratio * ratio * inverse_normalized_volume - 2 * ratio);
    }
    const Integer line_term = 1 - ceil(Rational(b1, b0));
    const Integer excess_term = -1 - ceil_plus(inverse_normalized_volume / 4 - 2 * ratio);
    return std::min(line_term, excess_term);
}

Integer combinatorial_lambda_bound(const Configuration& cfg) {
    return combinatorial_lambda_bound(make_bundle(cfg));
}

Integer trivial_lambda_bound(const Configuration& cfg) {
    return 1 - Integer(cfg.size());
}

TailComparison satellite_tail_comparison(const Configuration& cfg, std::span<const std::size_t> targets) {
    return satellite_tail_comparison(make_bundle(cfg), targets);
}

TailComparison satellite_tail_comparison(const ValuationBundle& before, std::span<const std::size_t> targets) {
    Configuration extended = extend_with_satellite_tail(before.cfg, targets);
    const ValuationBundle after = make_bundle(extended);
    Rational difference =
        delta_excess(before.beta_bar_0(), before.tangent(), before.last_beta_bar()) -
        delta_excess(after.beta_bar_0(), after.tangent(), after.last_beta_bar());
    return {std::move(extended), before.delta0, after.delta0, std::move(difference)};
}

const BoundEntry* BoundReport::find(const std::string& name) const {
    for (const auto& entry : entries)
        if (entry.name == name) return &entry;
    return nullptr;
}

BoundReport make_bound_report(const ValuationBundle& bundle, std::optional<Integer> mu) {
    BoundReport report;
    auto add = [&](std::string name, Rational value, std::string source) {
        report.entries.push_back({std::move(name), std::move(value), std::move(source)});
    };
    add("degree_bound", degree_lower_bound(bundle, bundle.record.multiplicities.values),
        "degree lower bound via Lambda_n nef on F_delta0 (m = v)");
    add("mu_hat_upper", mu_hat_upper_bound(bundle), "Seshadri-type constant upper bound");
    add("ratio_bound", ratio_bound(bundle), "self-intersection ratio bound (curves other than the tangent line)");

    std::vector<ValuationBundle> single{bundle};
    const MultiValuation mv = make_multi_valuation(std::move(single), std::move(mu));
    add("multi_ratio_bound", multi_ratio_bound(mv), "fibred-product ratio bound");
    add("lambda_bound", lambda_lower_bound(mv), "lambda_L* bound from aligned points");
    if (bundle.size() >= 2)
        add("combinatorial_lambda_bound", combinatorial_lambda_bound(bundle),
            "lambda_L* bound from beta_bar_0, beta_bar_1, beta_bar_{g+1}");
    add("trivial_bound", trivial_lambda_bound(bundle.cfg), "trivial lambda_L* bound 1 - n");
    return report;
}

BoundReport make_multi_bound_report(const MultiValuation& mv) {
    BoundReport report;
    report.entries.push_back({"multi_ratio_bound", multi_ratio_bound(mv), "fibred-product ratio bound"});
    report.entries.push_back({"lambda_bound", lambda_lower_bound(mv), "lambda_L* bound from aligned points"});
    return report;
}

TonoExpected tono_expected(std::int64_t a_in, std::int64_t e_in) {
    if (a_in < 3) throw std::invalid_argument("tono_family: a must be >= 3");
    if (e_in < 0) throw std::invalid_argument("tono_family: e must be >= 0");
    const Integer a = a_in;
    const Integer e = e_in;
    const Integer a2 = a * a, a3 = a2 * a, a4 = a3 * a;
    TonoExpected x;
    x.a = a;
    x.e = e;
    x.beta_bar = {a2 - a, a2, a3 + 2 * a + 1, (e + 2) * a4 - 2 * a3};
    x.tangent = a2;
    x.delta0 = e;
    x.trailing_free = (e + 1) * a4 - 2 * a3 - 2 * a2 - a;
    x.curve_degree = a2 + 1;
    x.curve_value = x.beta_bar[3];
    x.mu_hat = Rational(x.curve_value, x.curve_degree);
    x.mu_hat_bound = (e + 2) * a2 - a;
    const Integer deg2 = x.curve_degree * x.curve_degree;
    x.curve_ratio = Rational(deg2 - x.beta_bar[3], deg2);
    return x;
}

TonoBundle tono_family(std::int64_t a, std::int64_t e) {
    TonoExpected expected = tono_expected(a, e);
    const IntegerVector branch(expected.beta_bar.begin(), expected.beta_bar.begin() + 3);
    Configuration cfg = from_maximal_contact(branch, to_size(expected.trailing_free));
    cfg = cfg.with_name("tono(" + std::to_string(a) + "," + std::to_string(e) + ")");
    ValuationBundle bundle = make_bundle(cfg);

    auto verify = [&](bool ok, const std::string& what) {
        if (!ok)
            throw std::logic_error("tono_family(" + std::to_string(a) + "," + std::to_string(e) +
                                   "): " + what + " does not match its closed form");
    };
    verify(bundle.record.beta_bar.beta_bar == expected.beta_bar, "maximal contact sequence");
    verify(bundle.tangent() == expected.tangent, "tangent value");
    verify(bundle.delta0 == expected.delta0, "delta_0");
    verify(mu_hat_upper_bound(bundle) == expected.mu_hat_bound, "mu_hat upper bound");

    const auto& v = bundle.record.multiplicities.values;
    const PlaneClass curve = strict_transform_plane(cfg, expected.curve_degree, v, true);
    verify(noether_pairing(cfg, v, curve.mults) == expected.curve_value, "curve value");
    const auto certificate = supraminimal_certificate(bundle, expected.curve_value, expected.curve_degree);
    verify(certificate.has_value() && *certificate == expected.mu_hat, "supraminimal certificate");
    verify(Rational(intersect_plane(curve, curve), curve.degree * curve.degree) == expected.curve_ratio,
           "self-intersection ratio");
    return {std::move(bundle), std::move(expected)};
}

}  // namespace vlab
