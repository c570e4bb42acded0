#include "vlab/numeric.hpp"

#include <cstdio>
#include <limits>
#include <stdexcept>

namespace vlab {

Integer ceil(const Rational& x) {
    const Integer num = boost::multiprecision::numerator(x);
    const Integer den = boost::multiprecision::denominator(x);  // always > 0
    // cpp_int division truncates toward zero.
    Integer q = num / den;
    if (num > 0 && q * den != num) ++q;
    return q;
}

Integer ceil_plus(const Rational& x) {
    if (x < 0) return 0;
    return ceil(x);
}

Integer dot(std::span<const Integer> x, std::span<const Integer> y) {
    if (x.size() != y.size())
        throw std::invalid_argument("dot: length mismatch (" + std::to_string(x.size()) + " vs " +
                                    std::to_string(y.size()) + ")");
    Integer acc = 0;
    for (std::size_t i = 0; i < x.size(); ++i) {
        if (x[i] == 0 || y[i] == 0) continue;
        acc += x[i] * y[i];
    }
    return acc;
}

Integer sum_of_squares(std::span<const Integer> x) {
    Integer acc = 0;
    for (const auto& value : x) acc += value * value;
    return acc;
}

Integer gcd(const Integer& x, const Integer& y) {
    return boost::multiprecision::gcd(x, y);
}

std::string to_string(const Integer& x) {
    return x.str();
}

std::string to_string(const Rational& x) {
    const Integer den = boost::multiprecision::denominator(x);
    if (den == 1) return boost::multiprecision::numerator(x).str();
    return boost::multiprecision::numerator(x).str() + "/" + den.str();
}

std::string approx(const Rational& x) {
    char buffer[64];
    std::snprintf(buffer, sizeof buffer, "%.6g", x.convert_to<double>());
    return buffer;
}

std::size_t to_size(const Integer& x) {
    if (x < 0 || x > std::numeric_limits<std::size_t>::max())
        throw std::overflow_error("value " + x.str() + " does not fit a machine index");
    return x.convert_to<std::size_t>();
}

IntegerVector to_integers(std::span<const std::int64_t> values) {
    return IntegerVector(values.begin(), values.end());
}

}  // namespace vlab
