#include "wlab/densecode.hpp"

#include <algorithm>
#include <cmath>

#include "wlab/errors.hpp"

namespace wlab::densecode {

namespace {

constexpr double kAmbiguityTol = 1e-10;

}  // namespace

const Gate2& encoding_gate(int message) {
    switch (message) {
        case 0: return gates::I;
        case 1: return gates::X;
        case 2: return gates::Z;
        case 3: return gates::iY;
        default: throw BadParams("message must lie in 0..3");
    }
}

PureState resource(int n, double k) {
    return teleport_basis(WParams::phase_free(n, k), BasisVariant::Corrected, resource_labels(n)).eta_plus;
}

std::array<PureState, 4> decoding_basis(int n, double k) {
    const auto b = teleport_basis(WParams::phase_free(n, k), BasisVariant::Corrected, resource_labels(n));
    return {b.eta_plus, b.xi_plus, b.eta_minus, b.xi_minus};
}

PureState encode(int message, int n, double k) {
    const Gate2& g = encoding_gate(message);
    return apply_single(resource(n, k), "1", g);
}

ComplexMatrix gram_check(int n, double k) {
    std::array<PureState, 4> encoded = {encode(0, n, k), encode(1, n, k), encode(2, n, k), encode(3, n, k)};
    return gram(encoded);
}

Decoded decode(const PureState& encoded, int n, double k) {
    const auto basis = decoding_basis(n, k);
    if (encoded.num_qubits() != basis[0].num_qubits()) {
        throw DimensionMismatch("decode: encoded state has the wrong number of qubits");
    }
    std::array<double, 4> p{};
    for (std::size_t m = 0; m < basis.size(); ++m) p[m] = std::norm(inner(basis[m], encoded));
    const auto best = static_cast<std::size_t>(std::max_element(p.begin(), p.end()) - p.begin());
    for (std::size_t m = 0; m < p.size(); ++m) {
        if (m != best && std::abs(p[m] - p[best]) <= kAmbiguityTol) {
            throw Ambiguous("decode: outcomes " + std::to_string(best) + " and " + std::to_string(m) +
                            " are equally likely");
        }
    }
    return Decoded{static_cast<int>(best), p[best]};
}

Report run(int n, double k) {
    Report report;
    report.n = n;
    report.k = k;
    report.gram = gram_check(n, k);
    int perfect = 0;
    for (int m = 0; m < 4; ++m) {
        const Decoded d = decode(encode(m, n, k), n, k);
        report.decode_table[static_cast<std::size_t>(m)] = DecodeEntry{m, d.message, d.probability};
        if (d.message == m && std::abs(d.probability - 1.0) <= tol::kDefault) ++perfect;
    }
    report.bits_per_transmitted_qubit = perfect > 0 ? std::log2(static_cast<double>(perfect)) : 0.0;
    return report;
}

}  // namespace wlab::densecode
