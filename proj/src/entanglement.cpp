#include "wlab/entanglement.hpp"

#include <algorithm>
#include <array>
#include <cmath>
#include <functional>

#include "wlab/errors.hpp"

namespace wlab {

namespace {

void check_k_alpha(double k, double alpha) {
    if (!(k >= 0.0) || !std::isfinite(k)) throw BadParams("k must be finite and >= 0");
    if (!(alpha >= 0.0 && alpha <= 1.0)) throw BadParams("alpha must lie in [0, 1]");
}

// num / den, with 0/0 (a product-state endpoint) read as 0.
double ratio(double num, double den) {
    if (den == 0.0) return 0.0;
    // Concurrence never exceeds 1; rounding at unit points can.
    return std::min(num / den, 1.0);
}

}  // namespace

double concurrence_pure2(const PureState& s) {
    if (s.num_qubits() != 2) throw DimensionMismatch("concurrence_pure2 needs a two-qubit state");
    return std::min(1.0, 2.0 * std::abs(s[0] * s[3] - s[1] * s[2]));
}

double concurrence_wootters(const DensityMatrix& rho) {
    if (rho.dim() != 4) throw BadDensity("concurrence_wootters needs a two-qubit density matrix");
    Eigen::Matrix4cd yy = Eigen::Matrix4cd::Zero();
    // sigma_y (x) sigma_y is real: anti-diagonal (-1, 1, 1, -1).
    yy(0, 3) = -1.0;
    yy(1, 2) = 1.0;
    yy(2, 1) = 1.0;
    yy(3, 0) = -1.0;
    // lambda_i are the singular values of tau = W^T (yy) W with rho = W W^dagger.
    // Stable for rank-deficient rho, unlike sqrt(eig(rho * rho_tilde)).
    Eigen::SelfAdjointEigenSolver<Eigen::Matrix4cd> eig(rho.matrix());
    const Eigen::Vector4d p = eig.eigenvalues().cwiseMax(0.0).cwiseSqrt();
    const Eigen::Matrix4cd w = eig.eigenvectors() * p.cast<cplx>().asDiagonal();
    const Eigen::Matrix4cd tau = w.transpose() * yy * w;
    const Eigen::Vector4d sv = Eigen::JacobiSVD<Eigen::Matrix4cd>(tau).singularValues();
    std::array<double, 4> lambda{};
    for (int i = 0; i < 4; ++i) lambda[static_cast<std::size_t>(i)] = sv(i);
    std::sort(lambda.begin(), lambda.end(), std::greater<>());
    return std::clamp(lambda[0] - lambda[1] - lambda[2] - lambda[3], 0.0, 1.0);
}

std::string_view to_string(CaseId id) {
    switch (id) {
        case CaseId::C4_1: return "C4_1";
        case CaseId::C4_2: return "C4_2";
        case CaseId::C4_3: return "C4_3";
        case CaseId::C4_4: return "C4_4";
        case CaseId::C3_1: return "C3_1";
        case CaseId::C3_2: return "C3_2";
        case CaseId::C3_3: return "C3_3";
        case CaseId::CN_dep: return "CN_dep";
        case CaseId::CN_indep: return "CN_indep";
    }
    return "?";
}

double analytic_c4(int case_no, double k, double alpha) {
    check_k_alpha(k, alpha);
    const double a2 = alpha * alpha;
    const double ab = alpha * std::sqrt(1.0 - a2);
    switch (case_no) {
        case 1: return ratio(2.0 * ab * std::sqrt(2.0 * k + 2.0), (2.0 * k + 1.0) * a2 + 1.0);
        case 2: return ratio(2.0 * ab * std::sqrt(2.0 * k + 2.0) * std::sqrt(k), (k + 2.0) * a2 + k);
        case 3: return ratio(2.0 * std::sqrt(2.0) * ab, a2 + 1.0);
        case 4: return 2.0 * std::sqrt(2.0) / 3.0;
        default: throw BadParams("four-qubit case must be 1..4");
    }
}

double analytic_c3(int case_no, double k, double alpha) {
    check_k_alpha(k, alpha);
    const double a2 = alpha * alpha;
    const double ab = alpha * std::sqrt(1.0 - a2);
    switch (case_no) {
        case 1: return ratio(2.0 * ab * std::sqrt(k + 1.0), k * a2 + 1.0);
        case 2: return ratio(2.0 * alpha * std::sqrt(k * (k + 1.0) * (1.0 - a2)), a2 + k);
        case 3: return 2.0 * std::sqrt(k + 1.0) / (k + 2.0);
        default: throw BadParams("three-qubit case must be 1..3");
    }
}

double analytic_cN_weight(int n, double k, double weight, std::optional<double> alpha) {
    if (n < 3) throw BadParams("analytic_cN needs n >= 3");
    if (!(weight >= 0.0)) throw BadParams("analytic_cN needs a nonnegative pairing weight");
    check_k_alpha(k, alpha.value_or(0.0));
    const double m = (n - 2) * k + (n - 2) * (n - 3) / 2.0 + 1.0;
    if (alpha) {
        const double a2 = *alpha * *alpha;
        const double b2 = 1.0 - a2;
        return ratio(2.0 * *alpha * std::sqrt(b2) * std::sqrt(weight) * std::sqrt(m), m * a2 + weight * b2);
    }
    return ratio(2.0 * std::sqrt(weight) * std::sqrt(m), m + weight);
}

double analytic_cN(int n, double k, int r, std::optional<double> alpha) {
    if (n < 3) throw BadParams("analytic_cN needs n >= 3");
    if (r < 0 || r > n - 3) throw BadParams("analytic_cN needs 0 <= r <= n-3");
    if (!alpha) {
        // Written exactly as ((n-1)k + (n-2)(n-3)/2 + 1 + r) in the denominator.
        if (!(k >= 0.0) || !std::isfinite(k)) throw BadParams("k must be finite and >= 0");
        const double m = (n - 2) * k + (n - 2) * (n - 3) / 2.0 + 1.0;
        const double den = (n - 1) * k + (n - 2) * (n - 3) / 2.0 + 1.0 + r;
        return ratio(2.0 * std::sqrt(k + r) * std::sqrt(m), den);
    }
    return analytic_cN_weight(n, k, k + r, alpha);
}

double limit_cN(int n, std::optional<double> alpha) {
    if (n < 3) throw BadParams("limit_cN needs n >= 3");
    if (alpha) {
        check_k_alpha(0.0, *alpha);
        const double a2 = *alpha * *alpha;
        return ratio(2.0 * *alpha * std::sqrt(1.0 - a2) * std::sqrt(n - 2.0), (n - 3.0) * a2 + 1.0);
    }
    return 2.0 * std::sqrt(n - 2.0) / (n - 1.0);
}

}  // namespace wlab
