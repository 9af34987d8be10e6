#pragma once

// Single-qubit teleportation through an n-qubit W-type resource: Alice holds
// the input qubit "a" and resource qubits 1..n-1, Bob holds qubit n.

#include <array>
#include <optional>
#include <string>
#include <string_view>

#include "wlab/states.hpp"
#include "wlab/statevec.hpp"

namespace wlab::teleport {

enum class Correction { I, Z, X, iY };

std::string_view to_string(Correction c);
const Gate2& gate(Correction c);

// eta+ -> I, eta- -> Z, xi+ -> X, xi- -> iY.
inline constexpr std::array<Correction, 4> kCorrectionMap = {
    Correction::I, Correction::Z, Correction::X, Correction::iY};

struct Outcome {
    std::string basis_label;
    double probability = 0.0;
    Correction correction = Correction::I;
    std::optional<PureState> bob_state;       // absent for a null branch
    std::optional<double> fidelity_after;     // against the input, after correction
};

struct Report {
    WParams params;
    double alpha = 0.0;
    BasisVariant variant = BasisVariant::Corrected;
    std::array<Outcome, 4> outcomes;
    double completeness_residual = 0.0;  // |1 - sum of probabilities|
};

// Joint state input(a) (x) resource(1..n).
PureState joint_state(const WParams& p, double alpha);

Report run(const WParams& p, double alpha, BasisVariant variant = BasisVariant::Corrected);

struct BasisAudit {
    ComplexMatrix gram;
    // || joint - 1/2 sum_i basis_i (x) U_i |phi> || at the reference alpha.
    double decomposition_residual = 0.0;
};

inline constexpr double kAuditReferenceAlpha = 0.6;

BasisAudit audit_basis(const WParams& p, BasisVariant variant,
                       double reference_alpha = kAuditReferenceAlpha);

}  // namespace wlab::teleport
