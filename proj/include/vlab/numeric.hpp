#pragma once

#include <cstdint>
#include <span>
#include <string>
#include <vector>

#include <boost/multiprecision/cpp_int.hpp>

namespace vlab {

// Valuation values, maximal contact values and bounds are exact. Index
// arithmetic (point positions, counts) stays in std::size_t.
using Integer = boost::multiprecision::cpp_int;
using Rational = boost::multiprecision::cpp_rational;

using IntegerVector = std::vector<Integer>;

inline Rational make_rational(const Integer& num, const Integer& den) {
    return Rational(num, den);
}

/// Smallest integer >= x.
Integer ceil(const Rational& x);

/// ceil(x) when x >= 0, otherwise 0.
Integer ceil_plus(const Rational& x);

Integer dot(std::span<const Integer> x, std::span<const Integer> y);

Integer sum_of_squares(std::span<const Integer> x);

Integer gcd(const Integer& x, const Integer& y);

/// "p/q", or "p" when the denominator is one.
std::string to_string(const Rational& x);
std::string to_string(const Integer& x);

/// Six significant digits, display only.
std::string approx(const Rational& x);

/// Narrow to a machine index; throws std::overflow_error if it does not fit.
std::size_t to_size(const Integer& x);

IntegerVector to_integers(std::span<const std::int64_t> values);

}  // namespace vlab
