#include "doctest.h"
#include "helpers.hpp"
#include "oracles.hpp"
#include "vlab/bounds.hpp"
#include "vlab/invariants.hpp"

using namespace vlab;
using testing::corpus;
using testing::ints;

namespace {

Configuration tono30() {
    return tono_family(3, 0).bundle.cfg;
}

}  // namespace

TEST_CASE("m-adic invariants") {
    const InvariantRecord r = compute_invariants(testing::m_adic());
    CHECK(r.multiplicities.values == ints({1}));
    CHECK(r.beta_bar.beta_bar == ints({1, 1}));
    CHECK(r.beta_bar.genus() == 0);
    CHECK(r.volume == 1);
    CHECK(r.normalized_volume == 1);
    CHECK(r.tangent_value == 1);
    CHECK(r.is_m_adic);
}

TEST_CASE("cusp invariants") {
    const Configuration cfg = testing::cusp();
    const InvariantRecord r = compute_invariants(cfg);
    CHECK(r.multiplicities.values == ints({2, 1, 1}));
    CHECK(curvette_vector(cfg, 1) == ints({1, 0, 0}));
    CHECK(curvette_vector(cfg, 2) == ints({1, 1, 0}));
    CHECK(curvette_vector(cfg, 3) == ints({2, 1, 1}));
    CHECK_THROWS(curvette_vector(cfg, 4));
    CHECK(noether_pairing(cfg, curvette_vector(cfg, 2), r.multiplicities.values) == 3);
    CHECK(noether_pairing(cfg, ints({0, 0, 0}), r.multiplicities.values) == 0);
    CHECK_THROWS(noether_pairing(cfg, ints({1, 1}), r.multiplicities.values));
    CHECK(r.beta_bar.beta_bar == ints({2, 3, 6}));
    CHECK(r.puiseux.beta_prime == std::vector<Rational>{1, Rational(3, 2), 1});
    CHECK(r.volume == Rational(1, 6));
    CHECK(r.normalized_volume == Rational(2, 3));
    CHECK(r.tangent_value == 3);
    CHECK_FALSE(r.is_m_adic);
}

TEST_CASE("two free points") {
    const InvariantRecord r = compute_invariants(testing::two_free());
    CHECK(r.multiplicities.values == ints({1, 1}));
    CHECK(r.puiseux.beta_prime == std::vector<Rational>{1, 2});
    CHECK(r.tangent_value == 2);
}

TEST_CASE("Tono(3,0) invariants") {
    const Configuration cfg = tono30();
    const InvariantRecord r = compute_invariants(cfg);
    CHECK(r.multiplicities.values == ints({6, 3, 3, 3, 3, 3, 3, 3, 1, 1, 1, 1, 1, 1, 1, 1, 1}));
    CHECK(r.beta_bar.beta_bar == ints({6, 9, 34, 108}));
    CHECK(noether_pairing(cfg, r.multiplicities.values, r.multiplicities.values) == 108);
    CHECK(r.tangent_value == 9);
    CHECK(r.puiseux.beta_prime.at(1) == Rational(3, 2));
    // p_9 is free: a satellite p_9 -> {8, 7} would force v_7 = v_8 + v_9 = 4.
    std::vector<std::size_t> satellites;
    for (std::size_t i = 1; i <= cfg.size(); ++i)
        if (cfg.is_satellite(i)) satellites.push_back(i);
    CHECK(satellites == std::vector<std::size_t>{3, 10, 11});
    const auto blocks = block_decomposition(cfg);
    CHECK(blocks.boundaries == std::vector<std::size_t>{1, 3, 11, 17});
    CHECK(blocks.last_free == std::vector<std::size_t>{2, 9});
}

TEST_CASE("Tono(4,1) volumes") {
    const InvariantRecord r = compute_invariants(tono_family(4, 1).bundle.cfg);
    CHECK(r.volume == Rational(1, 640));
    CHECK(r.normalized_volume == Rational(9, 40));
}

TEST_CASE("multiplicities and curvettes match a dense linear solve") {
    for (const auto& cfg : corpus()) {
        const auto lists = cfg.proximity_lists();
        CHECK(multiplicity_sequence(cfg).values == oracle::solve_proximity_system(lists, cfg.size()));
        for (std::size_t k = 1; k <= cfg.size(); ++k)
            CHECK(curvette_vector(cfg, k) == oracle::solve_proximity_system(lists, k));
    }
}

TEST_CASE("maximal contact values from curvettes through the last free points") {
    for (const auto& cfg : corpus()) {
        const auto lists = cfg.proximity_lists();
        const IntegerVector v = oracle::solve_proximity_system(lists, cfg.size());
        const MaximalContactValues mc = maximal_contact_values(cfg);
        const auto blocks = block_decomposition(cfg);
        REQUIRE(mc.beta_bar.size() == blocks.genus_count + 2);
        CHECK(mc.beta_bar.front() == v.front());
        for (std::size_t j = 1; j <= blocks.genus_count; ++j) {
            const IntegerVector w = oracle::solve_proximity_system(lists, blocks.last_free[j - 1]);
            Integer pairing = 0;
            for (std::size_t i = 0; i < v.size(); ++i) pairing += v[i] * w[i];
            CHECK(mc.beta_bar[j] == pairing);
        }
        Integer squares = 0;
        for (const auto& x : v) squares += x * x;
        CHECK(mc.last() == squares);
        // gcd chain is non-increasing and e_g divides the last value.
        for (std::size_t j = 1; j < mc.gcd_chain.size(); ++j) CHECK(mc.gcd_chain[j] <= mc.gcd_chain[j - 1]);
        CHECK(mc.last() % mc.gcd_chain[blocks.genus_count] == 0);
        // A final block reduced to one point makes the last value a curvette pairing.
        if (blocks.boundaries[blocks.genus_count] == cfg.size())
            CHECK(noether_pairing(cfg, v, curvette_vector(cfg, cfg.size())) == squares);
    }
}

TEST_CASE("multiplicities are positive and non-increasing along free runs") {
    for (const auto& cfg : corpus()) {
        const auto& v = multiplicity_sequence(cfg).values;
        for (std::size_t i = 1; i <= cfg.size(); ++i) {
            CHECK(v[i - 1] >= 1);
            if (i >= 2 && !cfg.is_satellite(i)) CHECK(v[i - 1] <= v[i - 2]);
        }
    }
}

TEST_CASE("Puiseux exponents") {
    CHECK(continued_fraction(std::vector<std::size_t>{1, 2}) == Rational(3, 2));
    CHECK(continued_fraction(std::vector<std::size_t>{4}) == 4);
    for (const auto& cfg : corpus()) {
        const InvariantRecord r = compute_invariants(cfg);
        const std::size_t g = r.beta_bar.genus();
        REQUIRE(r.puiseux.beta_prime.size() == g + 2);
        CHECK(r.puiseux.beta_prime.front() == 1);
        for (std::size_t j = 1; j <= g + 1; ++j)
            CHECK(r.puiseux.beta_prime[j] == oracle::continued_fraction(r.puiseux.run_lengths.at(j - 1)));
        for (std::size_t j = 1; j <= g; ++j) {
            CHECK(r.puiseux.beta_prime[j] > 1);
            CHECK(boost::multiprecision::denominator(r.puiseux.beta_prime[j]) != 1);
        }
        CHECK(boost::multiprecision::denominator(r.puiseux.beta_prime[g + 1]) == 1);
        if (g >= 1) CHECK(r.puiseux.beta_prime[1] * r.beta_bar.beta_bar[0] == r.beta_bar.beta_bar[1]);
    }
}

TEST_CASE("volumes and tangent value") {
    for (const auto& cfg : corpus()) {
        const InvariantRecord r = compute_invariants(cfg);
        CHECK(r.volume == Rational(1, r.beta_bar.last()));
        CHECK(r.normalized_volume == r.beta_bar.beta_bar[0] * r.beta_bar.beta_bar[0] * r.volume);
        if (cfg.size() == 1) {
            CHECK(r.tangent_value == 1);
            continue;
        }
        CHECK(r.tangent_value > r.beta_bar.beta_bar[0]);
        CHECK(r.tangent_value <= r.beta_bar.beta_bar[1]);
        IntegerVector indicator(cfg.size(), 0);
        for (std::size_t i = 0; i < cfg.tangent_count(); ++i) indicator[i] = 1;
        CHECK(r.tangent_value == noether_pairing(cfg, r.multiplicities.values, indicator));
        // Appending free points rescales v but leaves the tangent pattern fixed.
        const Configuration longer = append_free_chain(cfg, 2);
        const auto v_long = multiplicity_sequence(longer).values;
        Integer expected = 0;
        for (std::size_t i = 0; i < cfg.tangent_count(); ++i) expected += v_long[i];
        CHECK(tangent_value(longer) == expected);
    }
}

TEST_CASE("from_maximal_contact") {
    CHECK(from_maximal_contact(ints({1, 1})) == testing::m_adic());
    CHECK(from_maximal_contact(ints({2, 3, 6})) == testing::cusp());
    CHECK(from_maximal_contact(ints({2, 3})) == testing::cusp());
    CHECK(from_maximal_contact(ints({2, 3}), 2).size() == 5);

    const Configuration branch = from_maximal_contact(ints({6, 9, 34}));
    CHECK(branch.size() == 11);
    CHECK(append_free_chain(branch, 6).proximity_lists() == tono30().proximity_lists());
    CHECK(maximal_contact_values(append_free_chain(branch, 6)).last() == 108);

    CHECK_THROWS_AS(from_maximal_contact(ints({4, 6})), ConfigurationError);
    CHECK_THROWS_AS(from_maximal_contact(ints({2, 3, 5})), ConfigurationError);
    CHECK_THROWS_AS(from_maximal_contact(ints({})), ConfigurationError);
    CHECK_THROWS_AS(from_maximal_contact(ints({2, 2, 4})), ConfigurationError);
}

TEST_CASE("from_maximal_contact round trip") {
    for (const auto& cfg : corpus()) {
        const MaximalContactValues mc = maximal_contact_values(cfg);
        const Configuration rebuilt = from_maximal_contact(mc.beta_bar);
        CHECK(rebuilt.proximity_lists() == cfg.proximity_lists());
        CHECK(multiplicity_sequence(rebuilt).values == multiplicity_sequence(cfg).values);
    }
}

TEST_CASE("branch multiplicities agree with the Euclidean algorithm") {
    const IntegerVector branches[] = {ints({2, 3}), ints({4, 6, 13}), ints({6, 9, 34}), ints({12, 16, 73}),
                                      ints({3, 5}), ints({6, 8, 27}), ints({8, 12, 26, 53})};
    for (const auto& branch : branches) {
        const IntegerVector expected = oracle::euclid_multiplicities(branch);
        const Configuration cfg = from_maximal_contact(branch);
        CHECK(multiplicity_sequence(cfg).values == expected);
        for (std::size_t s : {0u, 1u, 5u}) {
            IntegerVector longer = expected;
            longer.insert(longer.end(), s, Integer(1));
            CHECK(multiplicity_sequence(from_maximal_contact(branch, s)).values == longer);
        }
    }
}

TEST_CASE("configuration_from_multiplicities") {
    for (const auto& cfg : corpus()) {
        const auto v = multiplicity_sequence(cfg).values;
        CHECK(configuration_from_multiplicities(v).proximity_lists() == cfg.proximity_lists());
    }
    CHECK_THROWS_AS(configuration_from_multiplicities(ints({2, 1})), ConfigurationError);
}

TEST_CASE("semigroup of values") {
    CHECK(semigroup_values(testing::m_adic(), 3) == std::vector<std::uint64_t>{0, 1, 2, 3});
    CHECK(semigroup_values(testing::cusp(), 7) == std::vector<std::uint64_t>{0, 2, 3, 4, 5, 6, 7});
    CHECK(semigroup_values(testing::cusp(), 0) == std::vector<std::uint64_t>{0});
    CHECK(semigroup_values(tono30(), 40) == oracle::semigroup_brute({6, 9, 34, 108}, 40));
    std::size_t checked = 0;
    for (const auto& cfg : corpus()) {
        const auto mc = maximal_contact_values(cfg);
        if (mc.last() > 500) continue;
        std::vector<std::uint64_t> generators;
        for (const auto& b : mc.beta_bar) generators.push_back(b.convert_to<std::uint64_t>());
        CHECK(semigroup_values(cfg, 120) == oracle::semigroup_brute(generators, 120));
        if (++checked == 60) break;
    }
}
