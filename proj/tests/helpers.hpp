#pragma once

#include <cmath>
#include <complex>
#include <numbers>
#include <random>
#include <string>
#include <vector>

#include <gtest/gtest.h>

#include "oracle.hpp"
#include "wlab/statevec.hpp"

namespace testing_util {

// Library state versus oracle ket over the same label set (the oracle ket may
// list its labels in a different order).
inline double max_abs_diff(const wlab::PureState& s, const oracle::Ket& o) {
    const oracle::Ket u = oracle::normalized(o);
    double worst = 0.0;
    for (std::size_t idx = 0; idx < s.dim(); ++idx) {
        std::string lib_bits;
        for (std::size_t q = 0; q < s.num_qubits(); ++q)
            lib_bits += ((idx >> (s.num_qubits() - 1 - q)) & 1U) ? '1' : '0';
        std::string obits;
        for (const auto& l : u.labels) obits += lib_bits[s.position(l)];
        worst = std::max(worst, std::abs(s[idx] - oracle::amp(u, obits)));
    }
    return worst;
}

inline void expect_amplitudes(const wlab::PureState& s, const std::vector<wlab::cplx>& want, double tol) {
    ASSERT_EQ(s.dim(), want.size());
    for (std::size_t i = 0; i < want.size(); ++i) {
        EXPECT_NEAR(s[i].real(), want[i].real(), tol) << "index " << i;
        EXPECT_NEAR(s[i].imag(), want[i].imag(), tol) << "index " << i;
    }
}

inline wlab::PureState random_state(std::size_t n, std::mt19937_64& rng, std::vector<std::string> labels = {}) {
    std::normal_distribution<double> g;
    std::vector<wlab::cplx> amps(std::size_t{1} << n);
    for (auto& a : amps) a = {g(rng), g(rng)};
    return wlab::PureState(n, std::move(amps), std::move(labels));
}

inline wlab::Gate2 random_unitary(std::mt19937_64& rng) {
    std::uniform_real_distribution<double> u(0.0, 2.0 * std::numbers::pi);
    const double t = u(rng) / 4.0, a = u(rng), b = u(rng), c = u(rng);
    const wlab::cplx ph = std::polar(1.0, a);
    return wlab::Gate2(ph * std::polar(std::cos(t), b), ph * std::polar(std::sin(t), c),
                       -ph * std::polar(std::sin(t), -c), ph * std::polar(std::cos(t), -b));
}

inline double max_identity_gap(const wlab::ComplexMatrix& m) { return wlab::distance_from_identity(m); }

}  // namespace testing_util
