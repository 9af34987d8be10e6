#pragma once

// Named states: the k-weighted W-type family, its teleportation / dense-coding
// measurement basis, Bell states and protocol inputs.

#include <array>
#include <string>
#include <string_view>
#include <vector>

#include "wlab/statevec.hpp"

namespace wlab {

// One member of the n-qubit W-type family. `phases` holds n-1 angles (radians)
// for terms 2..n; term 1 always carries phase 0. An empty `phases` means all zero.
struct WParams {
    int n = 4;
    double k = 1.0;
    std::vector<double> phases;

    static WParams phase_free(int n, double k) { return WParams{n, k, {}}; }
};

enum class BasisVariant { Corrected, AsPrinted };

enum class BellLabel { PhiPlus, PhiMinus, PsiPlus, PsiMinus };

inline constexpr std::array<BellLabel, 4> kBellLabels = {
    BellLabel::PhiPlus, BellLabel::PhiMinus, BellLabel::PsiPlus, BellLabel::PsiMinus};

std::string_view to_string(BellLabel label);
BellLabel parse_bell_label(std::string_view text);  // "phi+", "phi-", "psi+", "psi-"

std::string_view to_string(BasisVariant variant);
BasisVariant parse_basis_variant(std::string_view text);  // "corrected", "as-printed"

// Throws BadParams when n < 3, k < 0 (or non-finite), or the phase list has
// the wrong length.
void validate(const WParams& p);

// (n-2)(2k+n-3)+2: the squared norm of the unnormalized family.
double w_norm_squared(int n, double k);

// Squared magnitudes of the unnormalized terms 1..n:
// 1, k, k+1, ..., k+(n-3), (n-2)k + (n-2)(n-3)/2 + 1.
std::vector<double> w_weights(int n, double k);

// Complex term coefficients c_1..c_n (phases applied, unnormalized).
std::vector<cplx> w_coefficients(const WParams& p);

// Labels "1".."n".
std::vector<std::string> resource_labels(int n);

// The n-qubit W-type state on labels "1".."n": weight-one strings with qubit j
// excited carry c_j / sqrt(w_norm_squared).
PureState w_state(const WParams& p);

struct TeleportBasis {
    PureState eta_plus;
    PureState eta_minus;
    PureState xi_plus;
    PureState xi_minus;

    // Order: eta+, eta-, xi+, xi-.
    std::array<PureState, 4> as_array() const { return {eta_plus, eta_minus, xi_plus, xi_minus}; }
};

inline constexpr std::array<std::string_view, 4> kTeleportBasisNames = {"eta+", "eta-", "xi+", "xi-"};

// The four n-qubit measurement states. `labels` defaults to ("a","1",..,"n-1").
//
// eta: sum_{j<n} c_j |0, e_j>  +/- c_n |1, 0...0>
// xi:  sum_{j<n} c_j |1, e_j>  +/- c_n |0, 0...0>
//
// Corrected flips only the c_n term between the +/- members, which makes the
// set orthonormal. AsPrinted also flips the c_{n-1} term (the sqrt(k+n-3)
// term), reproducing the double-sign form of the four-qubit basis.
TeleportBasis teleport_basis(const WParams& p, BasisVariant variant,
                             std::vector<std::string> labels = {});

// Labels default to ("x","y").
PureState bell(BellLabel label, std::vector<std::string> labels = {});

// alpha|0> + sqrt(1-alpha^2)|1> on label "a". Throws BadParams outside [0,1].
PureState input_single(double alpha);

// alpha|00> + sqrt(1-alpha^2)|11> on labels ("a","b").
PureState input_pair(double alpha);

}  // namespace wlab
