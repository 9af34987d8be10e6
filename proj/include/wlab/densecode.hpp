#pragma once

// Superdense coding over the n-qubit state eta+ (corrected basis member) with
// qubit 1 held by the sender.
//
// Messages: 0 -> I, 1 -> sigma_x, 2 -> sigma_z, 3 -> i*sigma_y, which map eta+
// to eta+, xi+, eta-, -xi- respectively.

#include <array>

#include "wlab/states.hpp"
#include "wlab/statevec.hpp"

namespace wlab::densecode {

const Gate2& encoding_gate(int message);

// eta+ on labels "1".."n".
PureState resource(int n, double k);

// Decoding basis in message order: eta+, xi+, eta-, xi-.
std::array<PureState, 4> decoding_basis(int n, double k);

// Throws BadParams for message outside 0..3 or invalid (n, k).
PureState encode(int message, int n, double k);

ComplexMatrix gram_check(int n, double k);

struct Decoded {
    int message = 0;
    double probability = 0.0;
};

// Projects onto the decoding basis and returns the most likely message. Throws
// Ambiguous when two maximal outcome probabilities agree within 1e-10,
// DimensionMismatch when `encoded` has the wrong size.
Decoded decode(const PureState& encoded, int n, double k);

struct DecodeEntry {
    int sent = 0;
    int recovered = 0;
    double probability = 0.0;
};

struct Report {
    int n = 0;
    double k = 0.0;
    ComplexMatrix gram;
    std::array<DecodeEntry, 4> decode_table;
    double bits_per_transmitted_qubit = 0.0;
};

Report run(int n, double k);

}  // namespace wlab::densecode
