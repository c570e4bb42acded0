#pragma once

#include <optional>
#include <span>
#include <string>
#include <vector>

#include "vlab/configuration.hpp"
#include "vlab/invariants.hpp"
#include "vlab/numeric.hpp"

namespace vlab {

/// A configuration with its derived invariants and delta_0 computed once.
struct ValuationBundle {
    Configuration cfg;
    InvariantRecord record;
    /// -1 for the m-adic valuation.
    Integer delta0;

    std::size_t size() const { return cfg.size(); }
    const Integer& beta_bar_0() const { return record.beta_bar.beta_bar.front(); }
    const Integer& beta_bar_1() const { return record.beta_bar.beta_bar.at(1); }
    const Integer& last_beta_bar() const { return record.beta_bar.last(); }
    const Integer& tangent() const { return record.tangent_value; }
};

ValuationBundle make_bundle(const Configuration& cfg);

/// Valuations blown up together (fibred product over the plane).
struct MultiValuation {
    std::vector<ValuationBundle> bundles;
    /// Size of a maximal set of aligned points in the union of the configurations.
    Integer aligned_mu;
};

/// max over tangent counts, and at least 2 once the union has two points;
/// valid for valuations centered at mutually general points.
Integer default_aligned_mu(std::span<const ValuationBundle> bundles);

/// Throws std::invalid_argument if aligned_mu is below default_aligned_mu.
MultiValuation make_multi_valuation(std::vector<ValuationBundle> bundles,
                                    std::optional<Integer> aligned_mu = std::nullopt);

/// ceil+((beta_bar_{g+1} - 2 beta_bar_0 t) / t^2), or -1 for the m-adic valuation.
Integer delta0(const Configuration& cfg);
Integer delta0(std::size_t n, const Integer& beta_bar_0, const Integer& tangent,
               const Integer& last_beta_bar);

/// (beta_bar_{g+1} - 2 beta_bar_0 t) / t^2, the quantity rounded up by delta_0.
Rational delta_excess(const Integer& beta_bar_0, const Integer& tangent, const Integer& last_beta_bar);

/// (sum v_i m_i) / (beta_bar_0 + (1 + delta_0) t).
Rational degree_lower_bound(const ValuationBundle& bundle, std::span<const Integer> m);
Rational degree_lower_bound(const Configuration& cfg, std::span<const Integer> m);

/// beta_bar_0 + (1 + delta_0) t.
Integer mu_hat_upper_bound(const ValuationBundle& bundle);
Integer mu_hat_upper_bound(const Configuration& cfg);

/// value/degree when value^2 > beta_bar_{g+1} degree^2, otherwise nothing.
std::optional<Rational> supraminimal_certificate(const ValuationBundle& bundle,
                                                 const Integer& curve_value,
                                                 const Integer& curve_degree);
std::optional<Rational> supraminimal_certificate(const Configuration& cfg, const Integer& curve_value,
                                                 const Integer& curve_degree);

/// -(1 + delta_0); lower bound on C~^2 / deg(C)^2 for curves other than the
/// tangent line.
Integer ratio_bound(const ValuationBundle& bundle);
Integer ratio_bound(const Configuration& cfg);

/// -sum delta_0(nu_i) - 2N + 1.
Integer multi_ratio_bound(const MultiValuation& mv);

/// min(1 - mu, multi_ratio_bound).
Integer lambda_lower_bound(const MultiValuation& mv);

/// Bound on lambda_{L*}(X_nu) from beta_bar_0, beta_bar_1 and beta_bar_{g+1}
/// only. Throws std::invalid_argument for the m-adic valuation.
Integer combinatorial_lambda_bound(const ValuationBundle& bundle);
Integer combinatorial_lambda_bound(const Configuration& cfg);

/// 1 - n.
Integer trivial_lambda_bound(const Configuration& cfg);

struct TailComparison {
    Configuration extended;
    Integer delta0_before;
    Integer delta0_after;
    /// Drop of the delta_0 excess from nu to nu'.
    Rational difference;

    bool delta0_non_increasing() const { return delta0_after <= delta0_before; }
    bool difference_in_open_unit_interval() const { return difference > 0 && difference < 1; }
    bool holds() const { return delta0_non_increasing() && difference_in_open_unit_interval(); }
};

/// Extends cfg by a satellite tail, recomputes everything for the extension
/// and compares delta_0. Violations are reported through the flags, not thrown.
TailComparison satellite_tail_comparison(const Configuration& cfg, std::span<const std::size_t> targets);
TailComparison satellite_tail_comparison(const ValuationBundle& before, std::span<const std::size_t> targets);

struct BoundEntry {
    std::string name;
    Rational value;
    std::string produced_by;
};

struct BoundReport {
    std::vector<BoundEntry> entries;

    const BoundEntry* find(const std::string& name) const;
};

/// Every single-valuation bound; the degree bound is evaluated at m = v.
/// lambda_bound uses `mu` when given, otherwise default_aligned_mu.
BoundReport make_bound_report(const ValuationBundle& bundle, std::optional<Integer> mu = std::nullopt);

/// Fibred-product bounds for N valuations.
BoundReport make_multi_bound_report(const MultiValuation& mv);

/// Closed-form values the Tono construction must reproduce.
struct TonoExpected {
    Integer a;
    Integer e;
    IntegerVector beta_bar;  // 4 entries
    Integer tangent;
    Integer delta0;
    Integer trailing_free;   // s
    Integer curve_degree;    // a^2 + 1
    Integer curve_value;     // beta_bar_3
    Rational mu_hat;         // curve_value / curve_degree
    Integer mu_hat_bound;    // (e+2) a^2 - a
    Rational curve_ratio;    // C~^2 / deg(C)^2
};

struct TonoBundle {
    ValuationBundle bundle;
    TonoExpected expected;
};

TonoExpected tono_expected(std::int64_t a, std::int64_t e);

/// Builds nu_a for the unicuspidal Tono curve C_a followed by s free points,
/// and verifies every closed-form value; a mismatch throws std::logic_error.
TonoBundle tono_family(std::int64_t a, std::int64_t e);

}  // namespace vlab
