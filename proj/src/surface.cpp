#include "vlab/surface.hpp"

#include <algorithm>
#include <stdexcept>

#include "vlab/invariants.hpp"

namespace vlab {

std::uint64_t AffinePolynomial::degree_u() const {
    std::uint64_t d = 0;
    for (const auto& [i, j] : support) d = std::max(d, i);
    return d;
}

std::uint64_t AffinePolynomial::degree_v() const {
    std::uint64_t d = 0;
    for (const auto& [i, j] : support) d = std::max(d, j);
    return d;
}

std::uint64_t AffinePolynomial::total_degree() const {
    std::uint64_t d = 0;
    for (const auto& [i, j] : support) d = std::max(d, i + j);
    return d;
}

Integer intersect_plane(const PlaneClass& x, const PlaneClass& y) {
    if (x.mults.size() != y.mults.size())
        throw std::invalid_argument("intersect_plane: classes live on different surfaces");
    return x.degree * y.degree - dot(x.mults, y.mults);
}

Integer intersect_hirzebruch(const HirzebruchClass& x, const HirzebruchClass& y) {
    if (x.delta != y.delta)
        throw std::invalid_argument("intersect_hirzebruch: delta mismatch");
    if (x.mults.size() != y.mults.size())
        throw std::invalid_argument("intersect_hirzebruch: classes live on different surfaces");
    return x.a * y.b + y.a * x.b + Integer(x.delta) * x.b * y.b - dot(x.mults, y.mults);
}

HirzebruchClass lambda_divisor(const Configuration& cfg, std::uint64_t delta) {
    auto v = multiplicity_sequence(cfg);
    HirzebruchClass lambda;
    lambda.a = v(1);
    lambda.b = tangent_value(cfg, v);
    lambda.mults = std::move(v.values);
    lambda.delta = delta;
    return lambda;
}

NpiResult npi_check(const Integer& beta_bar_0, const Integer& tangent, const Integer& last_beta_bar,
                    std::uint64_t delta) {
    NpiResult result;
    result.witness = 2 * beta_bar_0 * tangent + tangent * tangent * delta - last_beta_bar;
    result.non_positive = result.witness >= 0;
    return result;
}

NpiResult npi_check(const Configuration& cfg, std::uint64_t delta) {
    const auto v = multiplicity_sequence(cfg);
    return npi_check(v(1), tangent_value(cfg, v), sum_of_squares(v.values), delta);
}

std::string GeneratorClass::label() const {
    switch (kind) {
        case GeneratorKind::fiber: return "F~1";
        case GeneratorKind::special_section: return "M~0";
        case GeneratorKind::exceptional: return "E~" + std::to_string(index);
    }
    return {};
}

HirzebruchClass GeneratorClass::dense(std::size_t n, std::uint64_t delta) const {
    HirzebruchClass cls{a, b, IntegerVector(n, 0), delta};
    for (const auto& [i, m] : mults) cls.mults.at(i - 1) = m;
    return cls;
}

GeneratorClass fiber_strict_transform(const Configuration& cfg) {
    // The tangent line is the fiber through the center, so F~_1 loses one
    // E_i* for every point on the tangent segment.
    GeneratorClass g{GeneratorKind::fiber, 0, 1, 0, {}};
    for (std::size_t i = 1; i <= cfg.tangent_count(); ++i) g.mults.emplace_back(i, 1);
    return g;
}

GeneratorClass special_section_strict_transform(std::uint64_t delta) {
    return {GeneratorKind::special_section, 0, -Integer(delta), 1, {{1, 1}}};
}

GeneratorClass exceptional_strict_transform(const Configuration& cfg, std::size_t i) {
    // E~_i = E_i* - sum_{j -> i} E_j*; the points proximate to p_i form a
    // consecutive run starting at p_{i+1}.
    GeneratorClass g{GeneratorKind::exceptional, i, 0, 0, {{i, -1}}};
    for (std::size_t j = i + 1; j <= cfg.size() && cfg.is_proximate(j, i); ++j)
        g.mults.emplace_back(j, 1);
    return g;
}

Integer pair_with_generator(const HirzebruchClass& x, const GeneratorClass& g) {
    Integer value = x.a * g.b + g.a * x.b + Integer(x.delta) * x.b * g.b;
    for (const auto& [i, m] : g.mults) value -= x.mults.at(i - 1) * m;
    return value;
}

std::vector<GeneratorPairing> nef_on_generators(const Configuration& cfg, std::uint64_t delta) {
    const HirzebruchClass lambda = lambda_divisor(cfg, delta);
    std::vector<GeneratorPairing> pairings;
    pairings.reserve(cfg.size() + 2);
    auto add = [&](GeneratorClass g) {
        Integer value = pair_with_generator(lambda, g);
        pairings.push_back({std::move(g), std::move(value)});
    };
    add(fiber_strict_transform(cfg));
    add(special_section_strict_transform(delta));
    for (std::size_t i = 1; i <= cfg.size(); ++i) add(exceptional_strict_transform(cfg, i));
    return pairings;
}

Bidegree hirzebruch_class_of_polynomial(const AffinePolynomial& f, std::uint64_t delta) {
    if (f.support.empty()) throw std::invalid_argument("polynomial support is empty");
    if (f.total_degree() == 0) throw std::invalid_argument("a constant polynomial defines no curve");
    Bidegree result{0, 0};
    bool first = true;
    for (const auto& [i, j] : f.support) {
        const Integer a = Integer(i) - Integer(delta) * Integer(j);
        if (first || a > result.a) result.a = a;
        if (first || j > result.b) result.b = j;
        first = false;
    }
    return result;
}

PlaneClass strict_transform_plane(const Configuration& cfg, Integer degree, IntegerVector mults,
                                  bool check_proximity) {
    if (degree < 0) throw std::invalid_argument("strict_transform_plane: negative degree");
    if (mults.size() != cfg.size())
        throw std::invalid_argument("strict_transform_plane: expected " + std::to_string(cfg.size()) +
                                    " multiplicities, got " + std::to_string(mults.size()));
    if (check_proximity) {
        IntegerVector load(cfg.size(), 0);
        for (std::size_t j = 1; j <= cfg.size(); ++j)
            for (std::size_t target : cfg.point(j).proximate_to) load[target - 1] += mults[j - 1];
        for (std::size_t i = 0; i < cfg.size(); ++i)
            if (mults[i] < load[i])
                throw std::invalid_argument("strict_transform_plane: proximity inequality fails at p_" +
                                            std::to_string(i + 1));
    }
    return {std::move(degree), std::move(mults)};
}

}  // namespace vlab
