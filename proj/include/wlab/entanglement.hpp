#pragma once

// Two-qubit concurrence: a numeric oracle (pure-state and Wootters forms) and
// the closed-form catalog for the concentration protocol.

#include <optional>
#include <string_view>

#include "wlab/statevec.hpp"

namespace wlab {

// 2|a00 a11 - a01 a10|. Throws DimensionMismatch unless s has two qubits.
double concurrence_pure2(const PureState& s);

// max(0, l1 - l2 - l3 - l4), l_i the descending square roots of the
// eigenvalues of rho (Y(x)Y) rho* (Y(x)Y). Throws BadDensity unless dim 4.
double concurrence_wootters(const DensityMatrix& rho);

enum class CaseId { C4_1, C4_2, C4_3, C4_4, C3_1, C3_2, C3_3, CN_dep, CN_indep };

std::string_view to_string(CaseId id);

struct ConcurrenceReport {
    CaseId case_id;
    double k;
    std::optional<double> alpha_sq;  // absent for input-independent cases
    double analytic;
    double numeric;
    double abs_diff;
};

// Four-qubit resource, cases 1..4. `alpha` is ignored by case 4.
// Throws BadParams for an unknown case, k < 0 or alpha outside [0,1].
double analytic_c4(int case_no, double k, double alpha);

// Three-qubit resource, cases 1..3. `alpha` is ignored by case 3.
double analytic_c3(int case_no, double k, double alpha);

// General n, 0 <= r <= n-3. With alpha: the input-dependent family; without:
// the input-independent family.
double analytic_cN(int n, double k, int r, std::optional<double> alpha);

// Same two families with the paired excitation weight k+r replaced by an
// arbitrary `weight` > 0. weight = 1 is the first-qubit pairing (the formal
// substitution r = 1 - k).
double analytic_cN_weight(int n, double k, double weight, std::optional<double> alpha);

// k -> infinity limits of analytic_cN.
double limit_cN(int n, std::optional<double> alpha);

}  // namespace wlab
