#include "wlab/teleport.hpp"

#include <cmath>
#include <vector>

#include "wlab/errors.hpp"

namespace wlab::teleport {

namespace {

std::vector<std::string> alice_labels(int n) {
    std::vector<std::string> labels{"a"};
    for (int i = 1; i <= n - 1; ++i) labels.push_back(std::to_string(i));
    return labels;
}

}  // namespace

std::string_view to_string(Correction c) {
    switch (c) {
        case Correction::I: return "I";
        case Correction::Z: return "sigma_z";
        case Correction::X: return "sigma_x";
        case Correction::iY: return "i*sigma_y";
    }
    return "?";
}

const Gate2& gate(Correction c) {
    switch (c) {
        case Correction::I: return gates::I;
        case Correction::Z: return gates::Z;
        case Correction::X: return gates::X;
        case Correction::iY: return gates::iY;
    }
    return gates::I;
}

PureState joint_state(const WParams& p, double alpha) {
    return tensor(input_single(alpha), w_state(p));
}

Report run(const WParams& p, double alpha, BasisVariant variant) {
    validate(p);
    const PureState input = input_single(alpha);
    const PureState joint = tensor(input, w_state(p));
    const auto basis = teleport_basis(p, variant).as_array();
    const auto subset = alice_labels(p.n);
    const std::string bob = std::to_string(p.n);

    Report report{p, alpha, variant, {}, 0.0};
    double total = 0.0;
    for (std::size_t i = 0; i < basis.size(); ++i) {
        Outcome& out = report.outcomes[i];
        out.basis_label = std::string(kTeleportBasisNames[i]);
        out.correction = kCorrectionMap[i];
        try {
            auto [prob, residual] = project(joint, subset, basis[i]);
            out.probability = prob;
            const PureState corrected = apply_single(residual, bob, gate(out.correction));
            out.fidelity_after = fidelity(corrected.relabeled({"a"}), input);
            out.bob_state = std::move(residual);
        } catch (const NullOutcome&) {
            out.probability = 0.0;
        }
        total += out.probability;
    }
    report.completeness_residual = std::abs(1.0 - total);
    return report;
}

BasisAudit audit_basis(const WParams& p, BasisVariant variant, double reference_alpha) {
    validate(p);
    const auto basis = teleport_basis(p, variant).as_array();
    BasisAudit audit{gram(basis), 0.0};

    const PureState input = input_single(reference_alpha);
    const PureState joint = tensor(input, w_state(p));
    std::vector<cplx> recombined(joint.dim());
    for (std::size_t i = 0; i < basis.size(); ++i) {
        const PureState bob = apply_single(input, "a", gate(kCorrectionMap[i]));
        const PureState term = tensor(basis[i], bob.relabeled({std::to_string(p.n)}));
        for (std::size_t x = 0; x < term.dim(); ++x) recombined[x] += 0.5 * term[x];
    }
    double sq = 0.0;
    for (std::size_t x = 0; x < joint.dim(); ++x) sq += std::norm(joint[x] - recombined[x]);
    audit.decomposition_residual = std::sqrt(sq);
    return audit;
}

}  // namespace wlab::teleport
