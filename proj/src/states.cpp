#include "wlab/states.hpp"

#include <cmath>

#include "wlab/errors.hpp"

namespace wlab {

namespace {

void check_alpha(double alpha) {
    if (!(alpha >= 0.0 && alpha <= 1.0)) throw BadParams("alpha must lie in [0, 1]");
}

std::size_t one_hot(int position, int n) {
    return std::size_t{1} << (n - 1 - position);
}

}  // namespace

std::string_view to_string(BellLabel label) {
    switch (label) {
        case BellLabel::PhiPlus: return "phi+";
        case BellLabel::PhiMinus: return "phi-";
        case BellLabel::PsiPlus: return "psi+";
        case BellLabel::PsiMinus: return "psi-";
    }
    return "?";
}

BellLabel parse_bell_label(std::string_view text) {
    for (BellLabel l : kBellLabels) {
        if (to_string(l) == text) return l;
    }
    throw BadParams("unknown Bell label '" + std::string(text) + "'");
}

std::string_view to_string(BasisVariant variant) {
    return variant == BasisVariant::Corrected ? "corrected" : "as-printed";
}

BasisVariant parse_basis_variant(std::string_view text) {
    if (text == "corrected") return BasisVariant::Corrected;
    if (text == "as-printed") return BasisVariant::AsPrinted;
    throw BadParams("unknown basis variant '" + std::string(text) + "'");
}

void validate(const WParams& p) {
    if (p.n < 3) throw BadParams("W-type state needs n >= 3");
    if (p.n > 20) throw BadParams("W-type state limited to n <= 20");
    if (!(p.k >= 0.0) || !std::isfinite(p.k)) throw BadParams("W-type state needs finite k >= 0");
    if (!p.phases.empty() && p.phases.size() != static_cast<std::size_t>(p.n - 1)) {
        throw BadParams("W-type state needs n-1 phases");
    }
    for (double ph : p.phases) {
        if (!std::isfinite(ph)) throw BadParams("phases must be finite");
    }
}

double w_norm_squared(int n, double k) {
    return (n - 2) * (2.0 * k + n - 3) + 2.0;
}

std::vector<double> w_weights(int n, double k) {
    std::vector<double> w;
    w.reserve(static_cast<std::size_t>(n));
    w.push_back(1.0);
    for (int j = 2; j <= n - 1; ++j) w.push_back(k + (j - 2));
    w.push_back((n - 2) * k + (n - 2) * (n - 3) / 2.0 + 1.0);
    return w;
}

std::vector<cplx> w_coefficients(const WParams& p) {
    validate(p);
    const auto weights = w_weights(p.n, p.k);
    std::vector<cplx> c;
    c.reserve(weights.size());
    for (std::size_t j = 0; j < weights.size(); ++j) {
        const double phase = (j == 0 || p.phases.empty()) ? 0.0 : p.phases[j - 1];
        c.push_back(std::polar(std::sqrt(weights[j]), phase));
    }
    return c;
}

std::vector<std::string> resource_labels(int n) {
    std::vector<std::string> labels;
    for (int i = 1; i <= n; ++i) labels.push_back(std::to_string(i));
    return labels;
}

PureState w_state(const WParams& p) {
    const auto c = w_coefficients(p);
    std::vector<cplx> amps(std::size_t{1} << p.n);
    for (int j = 0; j < p.n; ++j) amps[one_hot(j, p.n)] = c[static_cast<std::size_t>(j)];
    return PureState(static_cast<std::size_t>(p.n), std::move(amps), resource_labels(p.n));
}

TeleportBasis teleport_basis(const WParams& p, BasisVariant variant, std::vector<std::string> labels) {
    const auto c = w_coefficients(p);
    const int n = p.n;
    if (labels.empty()) {
        labels.push_back("a");
        for (int i = 1; i <= n - 1; ++i) labels.push_back(std::to_string(i));
    }
    const std::size_t dim = std::size_t{1} << n;
    const std::size_t a_bit = one_hot(0, n);

    // sign < 0 selects the "minus" member; flip_penultimate reproduces the
    // printed double sign.
    auto build = [&](bool xi, double sign) {
        std::vector<cplx> amps(dim);
        const std::size_t base = xi ? a_bit : 0;
        for (int j = 0; j < n - 1; ++j) {
            double s = 1.0;
            if (variant == BasisVariant::AsPrinted && j == n - 2) s = sign;
            amps[base | one_hot(j + 1, n)] = s * c[static_cast<std::size_t>(j)];
        }
        amps[xi ? 0 : a_bit] = sign * c[static_cast<std::size_t>(n - 1)];
        return PureState(static_cast<std::size_t>(n), std::move(amps), labels);
    };
    return TeleportBasis{build(false, 1.0), build(false, -1.0), build(true, 1.0), build(true, -1.0)};
}

PureState bell(BellLabel label, std::vector<std::string> labels) {
    if (labels.empty()) labels = {"x", "y"};
    std::vector<cplx> amps(4);
    switch (label) {
        case BellLabel::PhiPlus: amps = {1.0, 0.0, 0.0, 1.0}; break;
        case BellLabel::PhiMinus: amps = {1.0, 0.0, 0.0, -1.0}; break;
        case BellLabel::PsiPlus: amps = {0.0, 1.0, 1.0, 0.0}; break;
        case BellLabel::PsiMinus: amps = {0.0, 1.0, -1.0, 0.0}; break;
    }
    return PureState(2, std::move(amps), std::move(labels));
}

PureState input_single(double alpha) {
    check_alpha(alpha);
    return PureState(1, {alpha, std::sqrt(1.0 - alpha * alpha)}, {"a"});
}

PureState input_pair(double alpha) {
    check_alpha(alpha);
    return PureState(2, {alpha, 0.0, 0.0, std::sqrt(1.0 - alpha * alpha)}, {"a", "b"});
}

}  // namespace wlab
