#include <cmath>
#include <random>
#include <vector>

#include <gtest/gtest.h>

#include "helpers.hpp"
#include "oracle.hpp"
#include "wlab/errors.hpp"
#include "wlab/teleport.hpp"

using namespace wlab;

namespace {

std::vector<double> random_phases(int n, std::mt19937_64& rng) {
    std::uniform_real_distribution<double> u(0.0, 6.283185307179586);
    std::vector<double> ph(static_cast<std::size_t>(n - 1));
    for (auto& x : ph) x = u(rng);
    return ph;
}

void expect_deterministic(const teleport::Report& r, const char* where) {
    for (const auto& o : r.outcomes) {
        EXPECT_NEAR(o.probability, 0.25, 1e-10) << where << " " << o.basis_label;
        ASSERT_TRUE(o.fidelity_after) << where;
        EXPECT_NEAR(*o.fidelity_after, 1.0, 1e-10) << where << " " << o.basis_label;
    }
    EXPECT_LT(r.completeness_residual, 1e-10) << where;
}

}  // namespace

TEST(Teleport, FourQubitExample) {
    const teleport::Report r = teleport::run(WParams::phase_free(4, 1.0), 0.6);
    expect_deterministic(r, "n=4 k=1");
    const char* names[] = {"eta+", "eta-", "xi+", "xi-"};
    const teleport::Correction corr[] = {teleport::Correction::I, teleport::Correction::Z, teleport::Correction::X,
                                         teleport::Correction::iY};
    for (std::size_t i = 0; i < 4; ++i) {
        EXPECT_EQ(r.outcomes[i].basis_label, names[i]);
        EXPECT_EQ(r.outcomes[i].correction, corr[i]);
    }
    ASSERT_TRUE(r.outcomes[0].bob_state);
    testing_util::expect_amplitudes(*r.outcomes[0].bob_state, {0.6, 0.8}, 1e-12);
    EXPECT_EQ(r.outcomes[0].bob_state->labels(), (std::vector<std::string>{"4"}));
}

// Pre-correction Bob states from the oracle: U_i|phi> up to phase.
TEST(Teleport, BobStatesMatchOracle) {
    const double alpha = 0.6, beta = 0.8;
    const oracle::Ket joint = oracle::product(oracle::single("a", alpha), oracle::w_ket(4, 1.0));
    const std::vector<std::vector<cplx>> expect = {{alpha, beta}, {alpha, -beta}, {beta, alpha}, {beta, -alpha}};
    const oracle::Ket basis[] = {oracle::teleport_state(4, 1.0, false, 1.0), oracle::teleport_state(4, 1.0, false, -1.0),
                                 oracle::teleport_state(4, 1.0, true, 1.0), oracle::teleport_state(4, 1.0, true, -1.0)};
    const teleport::Report r = teleport::run(WParams::phase_free(4, 1.0), alpha);
    for (std::size_t i = 0; i < 4; ++i) {
        const oracle::Ket bob = oracle::contract(joint, basis[i]);
        EXPECT_NEAR(oracle::norm2(bob), 0.25, 1e-12);
        const oracle::Ket u = oracle::normalized(bob);
        const double f = std::norm(std::conj(expect[i][0]) * oracle::amp(u, "0") + std::conj(expect[i][1]) * oracle::amp(u, "1"));
        EXPECT_NEAR(f, 1.0, 1e-12);
        const PureState want(1, expect[i]);
        EXPECT_NEAR(fidelity(*r.outcomes[i].bob_state, want.relabeled({"4"})), 1.0, 1e-10);
    }
}

TEST(Teleport, AsPrintedBreaksEtaMinus) {
    const teleport::Report r = teleport::run(WParams::phase_free(4, 1.0), 0.6, BasisVariant::AsPrinted);
    const teleport::Outcome& em = r.outcomes[1];
    ASSERT_TRUE(em.bob_state);
    EXPECT_NEAR(std::abs((*em.bob_state)[1]), 1.0, 1e-12);
    ASSERT_TRUE(em.fidelity_after);
    EXPECT_NEAR(*em.fidelity_after, 0.64, 1e-10);

    // Same branch from the oracle.
    const oracle::Ket joint = oracle::product(oracle::single("a", 0.6), oracle::w_ket(4, 1.0));
    const oracle::Ket bob = oracle::normalized(oracle::contract(joint, oracle::teleport_state(4, 1.0, false, -1.0, -1.0)));
    EXPECT_NEAR(std::abs(oracle::amp(bob, "1")), 1.0, 1e-12);
}

TEST(Teleport, SevenQubitRandomPhases) {
    std::mt19937_64 rng(7);
    const teleport::Report r = teleport::run(WParams{7, 2.5, random_phases(7, rng)}, 1.0 / std::sqrt(3.0));
    expect_deterministic(r, "n=7 k=2.5");
}

TEST(Teleport, DeterministicAcrossGrid) {
    std::mt19937_64 rng(31);
    for (int n = 4; n <= 8; ++n)
        for (double k : {0.0, 0.3, 1.0, 7.0, 50.0}) {
            for (int i = 0; i <= 49; ++i) {
                const double alpha = i / 49.0;
                expect_deterministic(teleport::run(WParams::phase_free(n, k), alpha), "grid");
            }
            for (int t = 0; t < 10; ++t) {
                const double alpha = std::uniform_real_distribution<double>(0.0, 1.0)(rng);
                expect_deterministic(teleport::run(WParams{n, k, random_phases(n, rng)}, alpha), "phases");
            }
        }
}

TEST(Teleport, ThreeQubitResource) {
    expect_deterministic(teleport::run(WParams::phase_free(3, 1.3), 0.2), "n=3");
}

TEST(Teleport, BadParams) {
    EXPECT_THROW(teleport::run(WParams::phase_free(4, 1.0), 1.2), BadParams);
    EXPECT_THROW(teleport::run(WParams::phase_free(2, 1.0), 0.5), BadParams);
    EXPECT_THROW(teleport::run(WParams::phase_free(4, -2.0), 0.5), BadParams);
}

TEST(Audit, CorrectedIsExact) {
    const teleport::BasisAudit a = teleport::audit_basis(WParams::phase_free(4, 1.0), BasisVariant::Corrected);
    EXPECT_LE(distance_from_identity(a.gram), 1e-12);
    EXPECT_LT(a.decomposition_residual, 1e-10);
    const teleport::BasisAudit five = teleport::audit_basis(WParams::phase_free(5, 0.0), BasisVariant::Corrected);
    EXPECT_LE(distance_from_identity(five.gram), 1e-12);
}

TEST(Audit, AsPrintedDefect) {
    const teleport::BasisAudit a = teleport::audit_basis(WParams::phase_free(4, 1.0), BasisVariant::AsPrinted);
    EXPECT_NEAR(a.gram(0, 1).real(), -0.5, 1e-12);
    EXPECT_NEAR(a.gram(1, 0).real(), -0.5, 1e-12);
    EXPECT_NEAR(a.gram(2, 3).real(), -0.5, 1e-12);
    EXPECT_NEAR(std::abs(a.gram(0, 2)), 0.0, 1e-15);
    EXPECT_GT(a.decomposition_residual, 0.1);
}

TEST(Audit, ResidualFromOracle) {
    // ||joint - 1/2 sum basis_i (x) U_i phi|| for the printed signs, computed
    // by hand on sparse kets.
    const double alpha = teleport::kAuditReferenceAlpha, beta = std::sqrt(1.0 - alpha * alpha);
    const oracle::Ket joint = oracle::product(oracle::single("a", alpha), oracle::w_ket(4, 1.0));
    const std::vector<std::vector<cplx>> u = {{alpha, beta}, {alpha, -beta}, {beta, alpha}, {beta, -alpha}};
    const oracle::Ket basis[] = {oracle::teleport_state(4, 1.0, false, 1.0, 1.0), oracle::teleport_state(4, 1.0, false, -1.0, -1.0),
                                 oracle::teleport_state(4, 1.0, true, 1.0, 1.0), oracle::teleport_state(4, 1.0, true, -1.0, -1.0)};
    oracle::Ket diff = joint;
    for (std::size_t i = 0; i < 4; ++i) {
        const oracle::Ket bob{{"4"}, {{"0", u[i][0]}, {"1", u[i][1]}}};
        const oracle::Ket term = oracle::product(basis[i], bob);
        for (const auto& [bits, a] : term.amp) diff.amp[bits] -= 0.5 * a;
    }
    const double ref = std::sqrt(oracle::norm2(diff));
    const teleport::BasisAudit a = teleport::audit_basis(WParams::phase_free(4, 1.0), BasisVariant::AsPrinted);
    EXPECT_NEAR(a.decomposition_residual, ref, 1e-12);
}

TEST(Audit, CorrectionMapExactOnGrid) {
    for (int n = 4; n <= 8; ++n)
        for (double k : {0.0, 0.5, 1.0, 2.0, 10.0, 100.0}) {
            const teleport::BasisAudit a = teleport::audit_basis(WParams::phase_free(n, k), BasisVariant::Corrected);
            EXPECT_LE(distance_from_identity(a.gram), 1e-12);
            EXPECT_LT(a.decomposition_residual, 1e-10);
        }
}

TEST(Correction, GatesAndNames) {
    EXPECT_EQ(teleport::to_string(teleport::Correction::iY), "i*sigma_y");
    const Gate2& g = teleport::gate(teleport::Correction::iY);
    EXPECT_EQ(g(0, 1), cplx(1.0));
    EXPECT_EQ(g(1, 0), cplx(-1.0));
}
