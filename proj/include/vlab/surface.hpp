#pragma once

#include <cstdint>
#include <set>
#include <string>
#include <utility>
#include <vector>

#include "vlab/configuration.hpp"
#include "vlab/numeric.hpp"

namespace vlab {

// Classes are written d L* - sum m_i E_i* on the blown-up plane and
// a F* + b M* - sum m_i E_i* on the blown-up Hirzebruch surface F_delta.
// Pairing table: F*^2 = 0, M*^2 = delta, F*.M* = 1, E_i*.E_j* = -delta_ij,
// E_i* orthogonal to F* and M*.

struct PlaneClass {
    Integer degree = 0;
    IntegerVector mults;
};

struct HirzebruchClass {
    Integer a = 0;
    Integer b = 0;
    IntegerVector mults;
    std::uint64_t delta = 0;
};

/// Support of a polynomial in k[u, v]; coefficients do not affect the class.
struct AffinePolynomial {
    std::set<std::pair<std::uint64_t, std::uint64_t>> support;  // (deg_u, deg_v) of each monomial

    std::uint64_t degree_u() const;
    std::uint64_t degree_v() const;
    std::uint64_t total_degree() const;
};

struct Bidegree {
    Integer a;
    Integer b;
};

Integer intersect_plane(const PlaneClass& x, const PlaneClass& y);
Integer intersect_hirzebruch(const HirzebruchClass& x, const HirzebruchClass& y);

/// Lambda_n = beta_bar_0 F* + t M* - sum v_i E_i*.
HirzebruchClass lambda_divisor(const Configuration& cfg, std::uint64_t delta);

struct NpiResult {
    bool non_positive = false;
    /// Lambda_n^2 = 2 beta_bar_0 t + t^2 delta - beta_bar_{g+1}.
    Integer witness;
};

/// Non-positivity at infinity on F_delta, via the volume inequality.
NpiResult npi_check(const Configuration& cfg, std::uint64_t delta);
NpiResult npi_check(const Integer& beta_bar_0, const Integer& tangent, const Integer& last_beta_bar,
                    std::uint64_t delta);

enum class GeneratorKind { fiber, special_section, exceptional };

/// Sparse class a F* + b M* - sum m_i E_i*, holding only the nonzero m_i.
struct GeneratorClass {
    GeneratorKind kind = GeneratorKind::fiber;
    std::size_t index = 0;  // i for the exceptional strict transform E~_i
    Integer a = 0;
    Integer b = 0;
    std::vector<std::pair<std::size_t, Integer>> mults;

    std::string label() const;
    HirzebruchClass dense(std::size_t n, std::uint64_t delta) const;
};

struct GeneratorPairing {
    GeneratorClass generator;
    Integer pairing;
};

GeneratorClass fiber_strict_transform(const Configuration& cfg);
GeneratorClass special_section_strict_transform(std::uint64_t delta);
GeneratorClass exceptional_strict_transform(const Configuration& cfg, std::size_t i);

/// x . g, summing only over the generator's support.
Integer pair_with_generator(const HirzebruchClass& x, const GeneratorClass& g);

/// Lambda_n paired with F~_1, M~_0 and every E~_i, in that order.
std::vector<GeneratorPairing> nef_on_generators(const Configuration& cfg, std::uint64_t delta);

/// Class a F + b M of the closure in F_delta of the affine curve f = 0:
/// b = max deg_v over monomials, a = max (deg_u - delta deg_v).
Bidegree hirzebruch_class_of_polynomial(const AffinePolynomial& f, std::uint64_t delta);

/// d L* - sum m_i E_i*. With `check_proximity`, also requires
/// m_i >= sum_{j -> i} m_j.
PlaneClass strict_transform_plane(const Configuration& cfg, Integer degree, IntegerVector mults,
                                  bool check_proximity = false);

}  // namespace vlab
