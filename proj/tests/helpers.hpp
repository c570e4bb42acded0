#pragma once

#include <vector>

#include "vlab/bounds.hpp"
#include "vlab/configuration.hpp"
#include "vlab/fuzz.hpp"

namespace testing {

inline vlab::Configuration cusp() {
    return vlab::build_configuration({{}, {1}, {2, 1}});
}

inline vlab::Configuration two_free() {
    return vlab::build_configuration({{}, {1}});
}

inline vlab::Configuration m_adic() {
    return vlab::build_configuration({{}});
}

inline vlab::IntegerVector ints(std::initializer_list<long long> values) {
    return {values.begin(), values.end()};
}

/// Shared corpus for the property tests.
inline const std::vector<vlab::Configuration>& corpus() {
    static const auto configurations = vlab::fuzz_corpus(12, 400, 7);
    return configurations;
}

}  // namespace testing
