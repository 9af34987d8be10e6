#include "wlab/concentrate.hpp"

#include <algorithm>
#include <cmath>
#include <set>

#include "wlab/entanglement.hpp"
#include "wlab/errors.hpp"

namespace wlab::concentrate {

namespace {

void check_params(int n, double k, double alpha) {
    validate(WParams::phase_free(n, k));
    if (n > 8) throw BadParams("concentration supports n <= 8");
    if (!(alpha >= 0.0 && alpha <= 1.0)) throw BadParams("alpha must lie in [0, 1]");
}

const PureState& z_state(int bit) {
    static const PureState zero = PureState::basis("0", {"z"});
    static const PureState one = PureState::basis("1", {"z"});
    return bit == 0 ? zero : one;
}

// One measurement step: a Bell pair or a single computational-basis qubit.
struct Step {
    std::vector<std::string> qubits;
    bool bell;
};

std::vector<Step> steps_of(const Pairing& pairing) {
    std::vector<Step> steps;
    for (const auto& [x, y] : pairing.bell_pairs) steps.push_back({{x, y}, true});
    for (const auto& s : pairing.z_singles) steps.push_back({{s}, false});
    return steps;
}

BranchResult finish(const Pairing& pairing, Outcomes outcomes, double probability,
                    std::optional<PureState> residual) {
    BranchResult out{pairing, std::move(outcomes), 0.0, std::nullopt, std::nullopt};
    if (residual && probability >= tol::kNullBranch) {
        out.probability = probability;
        out.concurrence = concurrence_pure2(*residual);
        out.residual = std::move(residual);
    }
    return out;
}

// Depth-first walk over every outcome of steps[depth..].
void walk(const Pairing& pairing, const std::vector<Step>& steps, std::size_t depth,
          const std::optional<PureState>& state, double probability, Outcomes& outcomes,
          const std::function<void(const BranchResult&)>& visit) {
    if (depth == steps.size()) {
        visit(finish(pairing, outcomes, state ? probability : 0.0, state));
        return;
    }
    const Step& step = steps[depth];
    const int choices = step.bell ? 4 : 2;
    for (int c = 0; c < choices; ++c) {
        std::optional<PureState> next;
        double p = 0.0;
        if (state) {
            const PureState onto = step.bell ? bell(kBellLabels[static_cast<std::size_t>(c)], step.qubits)
                                             : z_state(c).relabeled(step.qubits);
            if (auto proj = try_project(*state, step.qubits, onto)) {
                p = probability * proj->probability;
                next = std::move(proj->residual);
            }
        }
        if (step.bell) {
            outcomes.bell.push_back(kBellLabels[static_cast<std::size_t>(c)]);
        } else {
            outcomes.z_bits.push_back(c);
        }
        walk(pairing, steps, depth + 1, next, p, outcomes, visit);
        if (step.bell) {
            outcomes.bell.pop_back();
        } else {
            outcomes.z_bits.pop_back();
        }
    }
}

bool near(double a, double b, double tolerance) { return std::abs(a - b) <= tolerance; }

}  // namespace

std::vector<std::string> alice_register(int n) {
    std::vector<std::string> labels{"a", "b"};
    for (int i = 1; i <= n - 1; ++i) labels.push_back(std::to_string(i));
    return labels;
}

int bell_pair_count(int n) { return n >= 4 ? 2 : 1; }

Pairing make_pairing(LabelPair p1, LabelPair p2, std::string remaining) {
    return Pairing{{std::move(p1), std::move(p2)}, {}, std::move(remaining)};
}

void validate(const Pairing& pairing, int n) {
    if (n < 3 || n > 8) throw BadPairing("pairing: n must lie in 3..8");
    const auto reg = alice_register(n);
    const std::set<std::string> allowed(reg.begin(), reg.end());
    std::set<std::string> used;
    auto take = [&](const std::string& label) {
        if (!allowed.count(label)) throw BadPairing("pairing: '" + label + "' is not one of Alice's qubits");
        if (!used.insert(label).second) throw BadPairing("pairing: '" + label + "' used twice");
    };
    if (static_cast<int>(pairing.bell_pairs.size()) != bell_pair_count(n)) {
        throw BadPairing("pairing: expected " + std::to_string(bell_pair_count(n)) + " Bell pairs");
    }
    for (const auto& [x, y] : pairing.bell_pairs) {
        take(x);
        take(y);
    }
    for (const auto& s : pairing.z_singles) take(s);
    take(pairing.remaining);
    if (used.size() != reg.size()) throw BadPairing("pairing: every Alice qubit but one must be measured");
}

Outcomes phi_plus_outcomes(const Pairing& pairing) {
    return Outcomes{std::vector<BellLabel>(pairing.bell_pairs.size(), BellLabel::PhiPlus),
                    std::vector<int>(pairing.z_singles.size(), 0)};
}

PureState joint_state(int n, double k, double alpha) {
    check_params(n, k, alpha);
    return tensor(input_pair(alpha), w_state(WParams::phase_free(n, k)));
}

BranchResult run(int n, double k, double alpha, const Pairing& pairing, const Outcomes& outcomes) {
    check_params(n, k, alpha);
    validate(pairing, n);
    if (outcomes.bell.size() != pairing.bell_pairs.size() || outcomes.z_bits.size() != pairing.z_singles.size()) {
        throw BadPairing("run: outcome list does not match the pairing");
    }
    for (int bit : outcomes.z_bits) {
        if (bit != 0 && bit != 1) throw BadPairing("run: computational outcomes must be 0 or 1");
    }

    std::optional<PureState> state = joint_state(n, k, alpha);
    double probability = 1.0;
    const auto steps = steps_of(pairing);
    std::size_t bell_i = 0;
    std::size_t z_i = 0;
    for (const Step& step : steps) {
        const PureState onto = step.bell ? bell(outcomes.bell[bell_i++], step.qubits)
                                         : z_state(outcomes.z_bits[z_i++]).relabeled(step.qubits);
        auto proj = try_project(*state, step.qubits, onto);
        if (!proj) return finish(pairing, outcomes, 0.0, std::nullopt);
        probability *= proj->probability;
        state = std::move(proj->residual);
    }
    return finish(pairing, outcomes, probability, std::move(state));
}

Pairing case_pairing(int case_no) {
    switch (case_no) {
        case 1: return make_pairing({"b", "1"}, {"2", "3"}, "a");
        case 2: return make_pairing({"b", "2"}, {"1", "3"}, "a");
        case 3: return make_pairing({"b", "3"}, {"1", "2"}, "a");
        case 4: return make_pairing({"a", "1"}, {"b", "2"}, "3");
        default: throw BadParams("four-qubit case must be 1..4");
    }
}

BranchResult case_run(int case_no, double k, double alpha) {
    const Pairing pairing = case_pairing(case_no);
    return run(4, k, alpha, pairing, phi_plus_outcomes(pairing));
}

Pairing case_pairing3(int case_no) {
    switch (case_no) {
        case 1: return Pairing{{{"b", "1"}}, {"2"}, "a"};
        case 2: return Pairing{{{"b", "2"}}, {"1"}, "a"};
        case 3: return Pairing{{{"a", "2"}}, {"b"}, "1"};
        default: throw BadParams("three-qubit case must be 1..3");
    }
}

BranchResult case_run3(int case_no, double k, double alpha) {
    const Pairing pairing = case_pairing3(case_no);
    return run(3, k, alpha, pairing, phi_plus_outcomes(pairing));
}

std::vector<Pairing> pairings(int n) {
    if (n < 3 || n > 8) throw BadParams("pairings: n must lie in 3..8");
    const auto reg = alice_register(n);
    const std::size_t m = reg.size();
    std::vector<std::pair<std::size_t, std::size_t>> pairs;
    for (std::size_t i = 0; i < m; ++i) {
        for (std::size_t j = i + 1; j < m; ++j) pairs.emplace_back(i, j);
    }

    std::vector<Pairing> out;
    auto emit = [&](const std::vector<std::pair<std::size_t, std::size_t>>& chosen) {
        std::vector<bool> used(m, false);
        Pairing base;
        for (auto [i, j] : chosen) {
            used[i] = used[j] = true;
            base.bell_pairs.emplace_back(reg[i], reg[j]);
        }
        for (std::size_t keep = 0; keep < m; ++keep) {
            if (used[keep]) continue;
            Pairing p = base;
            p.remaining = reg[keep];
            for (std::size_t s = 0; s < m; ++s) {
                if (!used[s] && s != keep) p.z_singles.push_back(reg[s]);
            }
            out.push_back(std::move(p));
        }
    };

    if (bell_pair_count(n) == 1) {
        for (const auto& p : pairs) emit({p});
    } else {
        for (std::size_t x = 0; x < pairs.size(); ++x) {
            for (std::size_t y = x + 1; y < pairs.size(); ++y) {
                const auto [i, j] = pairs[x];
                const auto [u, v] = pairs[y];
                if (i == u || i == v || j == u || j == v) continue;
                emit({pairs[x], pairs[y]});
            }
        }
    }
    return out;
}

void for_each_branch(int n, double k, double alpha, const std::function<void(const BranchResult&)>& visit) {
    check_params(n, k, alpha);
    const PureState joint = joint_state(n, k, alpha);
    for (const Pairing& pairing : pairings(n)) {
        Outcomes outcomes;
        walk(pairing, steps_of(pairing), 0, joint, 1.0, outcomes, visit);
    }
}

std::vector<BranchResult> enumerate(int n, double k, double alpha) {
    std::vector<BranchResult> out;
    for_each_branch(n, k, alpha, [&](const BranchResult& b) { out.push_back(b); });
    return out;
}

const BranchResult* optimal(std::span<const BranchResult> branches) {
    const BranchResult* best = nullptr;
    for (const auto& b : branches) {
        if (!b.concurrence) continue;
        if (!best || *b.concurrence > *best->concurrence) best = &b;
    }
    return best;
}

OptimalAlpha optimal_alpha(int case_no, double k) {
    if (!(k >= 0.0) || !std::isfinite(k)) throw BadParams("k must be finite and >= 0");
    switch (case_no) {
        case 1: return {1.0 / (2.0 * k + 3.0), false};
        case 2: return {k / (3.0 * k + 2.0), k == 0.0};
        case 3: return {1.0 / 3.0, false};
        case 4: throw BadParams("case 4 concurrence is constant; no optimal alpha");
        default: throw BadParams("four-qubit case must be 1..3");
    }
}

std::string_view to_string(BranchClass c) {
    switch (c) {
        case BranchClass::Null: return "null";
        case BranchClass::Product: return "product";
        case BranchClass::InputDependent: return "input-dependent";
        case BranchClass::InputDependentUnit: return "input-dependent-unit";
        case BranchClass::InputDependentMirrored: return "input-dependent-mirrored";
        case BranchClass::InputIndependent: return "input-independent";
        case BranchClass::InputIndependentUnit: return "input-independent-unit";
        case BranchClass::Other: return "other";
    }
    return "?";
}

Classification classify_branch(int n, double k, double alpha, const BranchResult& branch, double tolerance) {
    if (!branch.concurrence) return {BranchClass::Null, std::nullopt};
    const double c = *branch.concurrence;
    if (c <= tolerance) return {BranchClass::Product, std::nullopt};
    const double beta = std::sqrt(std::max(0.0, 1.0 - alpha * alpha));

    for (int r = 0; r <= n - 3; ++r) {
        if (near(c, analytic_cN(n, k, r, alpha), tolerance)) return {BranchClass::InputDependent, r};
    }
    if (near(c, analytic_cN_weight(n, k, 1.0, alpha), tolerance)) return {BranchClass::InputDependentUnit, std::nullopt};
    for (int r = 0; r <= n - 3; ++r) {
        if (near(c, analytic_cN(n, k, r, std::nullopt), tolerance)) return {BranchClass::InputIndependent, r};
    }
    if (near(c, analytic_cN_weight(n, k, 1.0, std::nullopt), tolerance)) {
        return {BranchClass::InputIndependentUnit, std::nullopt};
    }
    for (int r = 0; r <= n - 3; ++r) {
        if (near(c, analytic_cN(n, k, r, beta), tolerance)) return {BranchClass::InputDependentMirrored, r};
    }
    if (near(c, analytic_cN_weight(n, k, 1.0, beta), tolerance)) {
        return {BranchClass::InputDependentMirrored, std::nullopt};
    }
    return {BranchClass::Other, std::nullopt};
}

}  // namespace wlab::concentrate
