#include "vlab/invariants.hpp"

#include <algorithm>

namespace vlab {

namespace {

// Scatter form of v_i = sum_{j -> i} v_j: walking j downward, every v_j is
// final before it is pushed to the points it is proximate to.
IntegerVector proximity_recursion(const Configuration& cfg, std::size_t k) {
    IntegerVector w(cfg.size(), 0);
    w[k - 1] = 1;
    for (std::size_t j = k; j >= 1; --j) {
        if (w[j - 1] == 0) continue;
        for (std::size_t target : cfg.point(j).proximate_to) w[target - 1] += w[j - 1];
    }
    return w;
}

IntegerVector gcd_chain_of(std::span<const Integer> beta_bar) {
    IntegerVector chain;
    chain.reserve(beta_bar.size());
    Integer running = 0;
    for (const auto& b : beta_bar) {
        running = gcd(running, b);
        chain.push_back(running);
    }
    return chain;
}

std::string sequence_text(std::span<const Integer> values) {
    std::string text = "(";
    for (std::size_t i = 0; i < values.size(); ++i) {
        if (i) text += ", ";
        text += values[i].str();
    }
    return text + ")";
}

}  // namespace

MultiplicityVector multiplicity_sequence(const Configuration& cfg) {
    return {proximity_recursion(cfg, cfg.size())};
}

IntegerVector curvette_vector(const Configuration& cfg, std::size_t k) {
    if (k == 0 || k > cfg.size())
        throw std::out_of_range("curvette_vector: index " + std::to_string(k) + " outside 1.." +
                                std::to_string(cfg.size()));
    return proximity_recursion(cfg, k);
}

Integer noether_pairing(const Configuration& cfg, std::span<const Integer> m,
                        std::span<const Integer> m_prime) {
    if (m.size() != cfg.size() || m_prime.size() != cfg.size())
        throw std::invalid_argument("noether_pairing: vectors must have length " +
                                    std::to_string(cfg.size()));
    return dot(m, m_prime);
}

MaximalContactValues maximal_contact_values(const Configuration& cfg, const MultiplicityVector& v) {
    const BlockDecomposition blocks = block_decomposition(cfg);
    MaximalContactValues result;
    result.beta_bar.reserve(blocks.genus_count + 2);
    result.beta_bar.push_back(v(1));
    for (std::size_t r : blocks.last_free)
        result.beta_bar.push_back(noether_pairing(cfg, v.values, curvette_vector(cfg, r)));
    result.beta_bar.push_back(sum_of_squares(v.values));
    result.gcd_chain = gcd_chain_of(result.beta_bar);
    return result;
}

MaximalContactValues maximal_contact_values(const Configuration& cfg) {
    return maximal_contact_values(cfg, multiplicity_sequence(cfg));
}

Rational continued_fraction(std::span<const std::size_t> digits) {
    if (digits.empty()) throw std::invalid_argument("continued_fraction: no digits");
    Rational value = Integer(digits.back());
    for (auto it = digits.rbegin() + 1; it != digits.rend(); ++it)
        value = Rational(Integer(*it)) + 1 / value;
    return value;
}

PuiseuxExponents puiseux_exponents(const Configuration& cfg, const MultiplicityVector& v) {
    const BlockDecomposition blocks = block_decomposition(cfg);
    PuiseuxExponents result;
    result.beta_prime.push_back(1);
    for (std::size_t j = 1; j <= blocks.block_count(); ++j) {
        const auto [first, last] = blocks.block(j);
        std::vector<std::size_t> runs;
        for (std::size_t i = first; i <= last; ++i) {
            if (i == first || v(i) != v(i - 1))
                runs.push_back(1);
            else
                ++runs.back();
        }
        result.beta_prime.push_back(continued_fraction(runs));
        result.run_lengths.push_back(std::move(runs));
    }
    return result;
}

PuiseuxExponents puiseux_exponents(const Configuration& cfg) {
    return puiseux_exponents(cfg, multiplicity_sequence(cfg));
}

Rational volume(const Configuration& cfg) {
    return Rational(Integer(1), sum_of_squares(multiplicity_sequence(cfg).values));
}

Rational normalized_volume(const Configuration& cfg) {
    const auto v = multiplicity_sequence(cfg);
    return Rational(v(1) * v(1), sum_of_squares(v.values));
}

Integer tangent_value(const Configuration& cfg, const MultiplicityVector& v) {
    if (cfg.size() == 1) return 1;
    Integer t = 0;
    for (std::size_t i = 1; i <= cfg.tangent_count(); ++i) t += v(i);
    return t;
}

Integer tangent_value(const Configuration& cfg) {
    return tangent_value(cfg, multiplicity_sequence(cfg));
}

InvariantRecord compute_invariants(const Configuration& cfg) {
    InvariantRecord record;
    record.multiplicities = multiplicity_sequence(cfg);
    const auto& v = record.multiplicities;
    record.beta_bar = maximal_contact_values(cfg, v);
    record.puiseux = puiseux_exponents(cfg, v);
    const Integer& last = record.beta_bar.last();
    record.volume = Rational(Integer(1), last);
    record.normalized_volume = Rational(v(1) * v(1), last);
    record.tangent_value = tangent_value(cfg, v);
    record.is_m_adic = cfg.size() == 1;
    return record;
}

Configuration configuration_from_multiplicities(std::span<const Integer> v) {
    const std::size_t n = v.size();
    if (n == 0) throw ConfigurationError("empty multiplicity sequence");
    if (v.back() != 1) throw ConfigurationError("last multiplicity must be 1");

    ProximityLists lists(n);
    for (std::size_t i = 2; i <= n; ++i) lists[i - 1].push_back(i - 1);
    // The points proximate to p_i are p_{i+1}, ..., p_{i+k} for the unique k
    // whose multiplicities add up to v_i.
    for (std::size_t i = 1; i < n; ++i) {
        Integer sum = 0;
        std::size_t m = i;
        while (sum < v[i - 1] && m < n) {
            ++m;
            sum += v[m - 1];
            if (m >= i + 2) {
                if (lists[m - 1].size() == 2)
                    throw ConfigurationError("multiplicities force p_" + std::to_string(m) +
                                             " to be proximate to three points");
                lists[m - 1].push_back(i);
            }
        }
        if (sum != v[i - 1])
            throw ConfigurationError("multiplicities violate the proximity equality at p_" +
                                     std::to_string(i));
    }
    Configuration cfg = Configuration::from_proximity(lists);
    if (multiplicity_sequence(cfg).values != IntegerVector(v.begin(), v.end()))
        throw ConfigurationError("multiplicity sequence is not realized by any configuration");
    return cfg;
}

Configuration from_maximal_contact(std::span<const Integer> beta_bar, std::size_t trailing_free) {
    const std::string text = sequence_text(beta_bar);
    if (beta_bar.empty()) throw ConfigurationError("maximal contact sequence is empty");
    for (const auto& b : beta_bar)
        if (b < 1) throw ConfigurationError("maximal contact values must be positive: " + text);

    const IntegerVector e = gcd_chain_of(beta_bar);
    std::size_t g = 0;
    while (e[g] != 1) {
        ++g;
        if (g == beta_bar.size())
            throw ConfigurationError("gcd of maximal contact values is not 1: " + text);
        if (e[g] == e[g - 1])
            throw ConfigurationError("gcd chain must strictly decrease up to 1: " + text);
    }
    const bool branch_form = g + 1 == beta_bar.size();
    if (!branch_form && g + 2 != beta_bar.size())
        throw ConfigurationError("gcd chain reaches 1 too early for a valuation: " + text);

    // Characteristic exponents beta_0 < beta_1 < ... < beta_g.
    IntegerVector beta{beta_bar[0]};
    if (g >= 1) beta.push_back(beta_bar[1]);
    for (std::size_t j = 1; j < g; ++j) {
        const Integer n_j = e[j - 1] / e[j];
        beta.push_back(beta_bar[j + 1] - n_j * beta_bar[j] + beta[j]);
    }
    for (std::size_t j = 1; j <= g; ++j)
        if (beta[j] <= beta[j - 1])
            throw ConfigurationError("maximal contact values are not admissible (semigroup condition "
                                     "fails at index " + std::to_string(j) + "): " + text);

    // Euclid on (beta_j - beta_{j-1}, e_{j-1}) per block; a quotient q with
    // divisor b contributes q points of multiplicity b.
    IntegerVector v;
    if (g == 0) v.push_back(1);
    for (std::size_t j = 1; j <= g; ++j) {
        Integer a = j == 1 ? beta[1] : beta[j] - beta[j - 1];
        Integer b = e[j - 1];
        while (b != 0) {
            const std::size_t q = to_size(a / b);
            v.insert(v.end(), q, b);
            Integer r = a % b;
            a = std::move(b);
            b = std::move(r);
        }
    }

    Configuration cfg = configuration_from_multiplicities(v);
    const MaximalContactValues core = maximal_contact_values(cfg);
    std::size_t extra = trailing_free;
    if (!branch_form) {
        const Integer gap = beta_bar.back() - core.last();
        if (gap < 0)
            throw ConfigurationError("last maximal contact value " + beta_bar.back().str() +
                                     " is below the minimum " + core.last().str() + ": " + text);
        extra += to_size(gap);
    }
    cfg = append_free_chain(cfg, extra);

    IntegerVector expected(beta_bar.begin(), beta_bar.end());
    if (branch_form)
        expected.push_back(core.last() + trailing_free);
    else
        expected.back() += trailing_free;
    const MaximalContactValues actual = maximal_contact_values(cfg);
    if (actual.beta_bar != expected)
        throw ConfigurationError("no configuration reproduces " + text + " (reconstruction gives " +
                                 sequence_text(actual.beta_bar) + ")");
    return cfg;
}

std::vector<std::uint64_t> semigroup_values(const Configuration& cfg, std::uint64_t limit) {
    const MaximalContactValues mcv = maximal_contact_values(cfg);
    std::vector<std::uint64_t> generators;
    for (const auto& b : mcv.beta_bar)
        if (b <= limit) generators.push_back(b.convert_to<std::uint64_t>());
    std::sort(generators.begin(), generators.end());
    generators.erase(std::unique(generators.begin(), generators.end()), generators.end());

    std::vector<char> reachable(limit + 1, 0);
    reachable[0] = 1;
    for (std::uint64_t x = 1; x <= limit; ++x)
        for (std::uint64_t gen : generators) {
            if (gen > x) break;
            if (reachable[x - gen]) {
                reachable[x] = 1;
                break;
            }
        }
    std::vector<std::uint64_t> values;
    for (std::uint64_t x = 0; x <= limit; ++x)
        if (reachable[x]) values.push_back(x);
    return values;
}

}  // namespace vlab
