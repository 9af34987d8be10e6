#pragma once

// Entanglement concentration with an n-qubit W-type resource.
//
// Alice holds the input pair a,b (alpha|00> + beta|11>) and resource qubits
// 1..n-1; Bob holds resource qubit n. Alice Bell-measures disjoint pairs of her
// qubits, measures any leftover qubits in the computational basis, and keeps
// one qubit unmeasured. The branch leaves a two-qubit state on (kept, n).
//
// For n = 4 a pairing is exactly two Bell pairs plus the kept qubit. For
// n >= 5 the n-4 leftover qubits are measured in the computational basis; for
// n = 3 there is one Bell pair and one computational-basis qubit.

#include <functional>
#include <optional>
#include <span>
#include <string>
#include <utility>
#include <vector>

#include "wlab/states.hpp"
#include "wlab/statevec.hpp"

namespace wlab::concentrate {

using LabelPair = std::pair<std::string, std::string>;

struct Pairing {
    std::vector<LabelPair> bell_pairs;
    std::vector<std::string> z_singles;
    std::string remaining;

    bool operator==(const Pairing&) const = default;
};

struct Outcomes {
    std::vector<BellLabel> bell;
    std::vector<int> z_bits;

    bool operator==(const Outcomes&) const = default;
};

struct BranchResult {
    Pairing pairing;
    Outcomes outcomes;
    double probability = 0.0;
    std::optional<PureState> residual;   // on (remaining, n); absent for a null branch
    std::optional<double> concurrence;
};

// ("a", "b", "1", ..., "n-1").
std::vector<std::string> alice_register(int n);

// Number of Bell pairs in every pairing for resource size n.
int bell_pair_count(int n);

Pairing make_pairing(LabelPair p1, LabelPair p2, std::string remaining);

// Throws BadPairing unless the pairing partitions alice_register(n) with the
// expected number of Bell pairs and exactly one kept label.
void validate(const Pairing& pairing, int n);

// All outcomes Phi+ and every computational-basis bit 0.
Outcomes phi_plus_outcomes(const Pairing& pairing);

// The input pair (x) phase-free resource, labels (a, b, 1, ..., n).
PureState joint_state(int n, double k, double alpha);

// Projects the Bell pairs in order, then the single qubits. Throws BadParams
// for invalid (n, k, alpha), BadPairing for an invalid pairing or a mismatched
// outcome list. A null branch yields probability 0 and no residual.
BranchResult run(int n, double k, double alpha, const Pairing& pairing, const Outcomes& outcomes);

// Four-qubit named cases 1..4 with (Phi+, Phi+) outcomes:
//   1: (b,1)(2,3) keep a    2: (b,2)(1,3) keep a
//   3: (b,3)(1,2) keep a    4: (a,1)(b,2) keep 3
Pairing case_pairing(int case_no);
BranchResult case_run(int case_no, double k, double alpha);

// Three-qubit named cases 1..3 (Phi+ outcome, computational bit 0):
//   1: (b,1) z{2} keep a    2: (b,2) z{1} keep a    3: (a,2) z{b} keep 1
Pairing case_pairing3(int case_no);
BranchResult case_run3(int case_no, double k, double alpha);

// Every valid pairing for resource size n, in lexicographic register order.
std::vector<Pairing> pairings(int n);

// Visits every pairing x outcome combination. n must lie in 3..8.
void for_each_branch(int n, double k, double alpha,
                     const std::function<void(const BranchResult&)>& visit);

std::vector<BranchResult> enumerate(int n, double k, double alpha);

// Maximum concurrence, ties broken by enumeration order. nullptr if no
// branch carries a residual.
const BranchResult* optimal(std::span<const BranchResult> branches);

struct OptimalAlpha {
    double alpha_sq;
    bool degenerate;  // no interior unit-concurrence point
};

// alpha^2 at which four-qubit case 1..3 reaches concurrence 1. Case 4 has no
// such point and is rejected with BadParams.
OptimalAlpha optimal_alpha(int case_no, double k);

enum class BranchClass {
    Null,
    Product,
    InputDependent,          // analytic_cN(n, k, r, alpha)
    InputDependentUnit,      // same family with pairing weight 1
    InputDependentMirrored,  // alpha and beta exchanged
    InputIndependent,        // analytic_cN(n, k, r)
    InputIndependentUnit,
    Other,
};

std::string_view to_string(BranchClass c);

struct Classification {
    BranchClass cls = BranchClass::Other;
    std::optional<int> r;
};

// Matches the branch concurrence against the closed-form catalog.
Classification classify_branch(int n, double k, double alpha, const BranchResult& branch,
                               double tolerance = tol::kDefault);

}  // namespace wlab::concentrate
