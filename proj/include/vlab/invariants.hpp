#pragma once

#include <cstdint>
#include <span>
#include <vector>

#include "vlab/configuration.hpp"
#include "vlab/numeric.hpp"

namespace vlab {

/// v_1, ..., v_n with v_i = nu(m_{i-1}); stored 0-based, so values[0] = v_1.
struct MultiplicityVector {
    IntegerVector values;

    std::size_t size() const { return values.size(); }
    /// 1-based.
    const Integer& operator()(std::size_t i) const { return values.at(i - 1); }
};

struct MaximalContactValues {
    /// beta_bar_0, ..., beta_bar_{g+1}.
    IntegerVector beta_bar;
    /// e_j = gcd(beta_bar_0, ..., beta_bar_j).
    IntegerVector gcd_chain;

    std::size_t genus() const { return beta_bar.size() - 2; }
    const Integer& last() const { return beta_bar.back(); }
};

struct PuiseuxExponents {
    /// beta'_0, ..., beta'_{g+1}.
    std::vector<Rational> beta_prime;
    /// Continued-fraction digits a_1^j, ..., a_{s_j}^j for each block C_j.
    std::vector<std::vector<std::size_t>> run_lengths;
};

struct InvariantRecord {
    MultiplicityVector multiplicities;
    MaximalContactValues beta_bar;
    PuiseuxExponents puiseux;
    Rational volume;
    Rational normalized_volume;
    Integer tangent_value;
    bool is_m_adic = false;
};

/// Backward recursion v_n = 1, v_i = sum of v_j over the points p_j -> p_i.
MultiplicityVector multiplicity_sequence(const Configuration& cfg);

/// Multiplicities of a curvette through p_1..p_k (zero beyond k).
IntegerVector curvette_vector(const Configuration& cfg, std::size_t k);

/// Sum m_i m'_i; both vectors must have the configuration's length.
Integer noether_pairing(const Configuration& cfg, std::span<const Integer> m,
                        std::span<const Integer> m_prime);

MaximalContactValues maximal_contact_values(const Configuration& cfg);
MaximalContactValues maximal_contact_values(const Configuration& cfg, const MultiplicityVector& v);

PuiseuxExponents puiseux_exponents(const Configuration& cfg);
PuiseuxExponents puiseux_exponents(const Configuration& cfg, const MultiplicityVector& v);

/// <a_1; a_2, ..., a_s> = a_1 + 1/(a_2 + 1/(...)).
Rational continued_fraction(std::span<const std::size_t> digits);

Rational volume(const Configuration& cfg);
Rational normalized_volume(const Configuration& cfg);

/// Value of the tangent line; 1 for the m-adic valuation.
Integer tangent_value(const Configuration& cfg);
Integer tangent_value(const Configuration& cfg, const MultiplicityVector& v);

InvariantRecord compute_invariants(const Configuration& cfg);

/// Rebuilds the configuration from its maximal contact values.
///
/// Accepts either the full sequence beta_bar_0..beta_bar_{g+1} or the branch
/// sequence beta_bar_0..beta_bar_g of a minimal resolution (the gcd chain
/// first reaches 1 at the second-to-last or last entry respectively).
/// `trailing_free` further free points are appended. The result is checked by
/// recomputing its maximal contact values; a mismatch throws
/// ConfigurationError.
Configuration from_maximal_contact(std::span<const Integer> beta_bar, std::size_t trailing_free = 0);

/// Rebuilds proximities from a multiplicity sequence via the proximity
/// equalities; throws ConfigurationError if none exists.
Configuration configuration_from_multiplicities(std::span<const Integer> v);

/// Elements <= limit of the semigroup generated by the maximal contact values.
std::vector<std::uint64_t> semigroup_values(const Configuration& cfg, std::uint64_t limit);

}  // namespace vlab
