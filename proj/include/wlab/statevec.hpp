#pragma once

// Dense pure-state linear algebra over labelled qubits.
//
// Basis convention: the ket |q1 q2 ... qn> sits at index sum_i q_i * 2^(n-i),
// i.e. the leftmost label is the most significant bit. Every library routine
// and every serialized amplitude follows this convention.

#include <array>
#include <complex>
#include <cstddef>
#include <initializer_list>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include <Eigen/Dense>

namespace wlab {

using cplx = std::complex<double>;
using ComplexMatrix = Eigen::MatrixXcd;

namespace tol {
inline constexpr double kDefault = 1e-10;
inline constexpr double kUnitary = 1e-12;
inline constexpr double kNullBranch = 1e-14;
inline constexpr double kZeroNorm = 1e-12;
}  // namespace tol

class PureState {
public:
    // Normalizes `amplitudes`. Labels default to "q0".."q{n-1}".
    // Throws LengthMismatch, ZeroVector, or BadParams (duplicate labels).
    PureState(std::size_t num_qubits, std::vector<cplx> amplitudes,
              std::vector<std::string> labels = {});

    // Computational basis state |bits>, bits given most-significant first.
    static PureState basis(std::string_view bits, std::vector<std::string> labels = {});

    std::size_t num_qubits() const { return num_qubits_; }
    std::size_t dim() const { return amplitudes_.size(); }
    std::span<const cplx> amplitudes() const { return amplitudes_; }
    cplx operator[](std::size_t index) const { return amplitudes_[index]; }
    const std::vector<std::string>& labels() const { return labels_; }

    // Tensor slot of `label`; throws UnknownQubit.
    std::size_t position(std::string_view label) const;
    bool has_label(std::string_view label) const;

    PureState relabeled(std::vector<std::string> labels) const;

    // Amplitude of the basis string written in label order, e.g. "0110".
    cplx amplitude(std::string_view bits) const;

    double norm() const;

private:
    std::size_t num_qubits_;
    std::vector<cplx> amplitudes_;
    std::vector<std::string> labels_;
};

std::vector<std::string> default_labels(std::size_t n);

// Single-qubit unitary.
class Gate2 {
public:
    // Throws BadParams unless U U^dagger = I within tol::kUnitary.
    Gate2(cplx m00, cplx m01, cplx m10, cplx m11);

    cplx operator()(std::size_t row, std::size_t col) const { return m_[2 * row + col]; }
    Gate2 adjoint() const;
    Gate2 operator*(const Gate2& rhs) const;

private:
    std::array<cplx, 4> m_;
};

namespace gates {
extern const Gate2 I;
extern const Gate2 X;
extern const Gate2 Y;   // [[0,-i],[i,0]]
extern const Gate2 Z;
extern const Gate2 iY;  // i*Y = [[0,1],[-1,0]]
}  // namespace gates

class DensityMatrix {
public:
    // Throws BadDensity unless Hermitian, unit trace (1e-10), and PSD
    // (eigenvalues >= -1e-9), with dimension a power of two.
    explicit DensityMatrix(ComplexMatrix entries);

    static DensityMatrix from_pure(const PureState& s);

    std::size_t dim() const { return static_cast<std::size_t>(rho_.rows()); }
    const ComplexMatrix& matrix() const { return rho_; }
    cplx operator()(std::size_t r, std::size_t c) const { return rho_(r, c); }
    double trace() const { return rho_.trace().real(); }
    double purity() const { return (rho_ * rho_).trace().real(); }

private:
    ComplexMatrix rho_;
};

struct Projection {
    double probability;
    PureState residual;
};

PureState make_state(std::size_t n, std::vector<cplx> amps);

// Result labels are a's followed by b's; if they collide the result falls
// back to default_labels().
PureState tensor(const PureState& a, const PureState& b);

PureState apply_single(const PureState& s, std::string_view qubit, const Gate2& g);

// Projects the qubits `subset` (in that order) onto `onto`. The residual lives
// on the complement, in the original label order. Throws NullOutcome when the
// branch weight is below tol::kNullBranch, BadParams when `subset` would leave
// no qubits behind or repeats a label, DimensionMismatch when `onto` has the
// wrong size.
Projection project(const PureState& s, std::span<const std::string> subset, const PureState& onto);
Projection project(const PureState& s, std::initializer_list<std::string> subset, const PureState& onto);

// As project(), but a null branch yields std::nullopt instead of throwing.
std::optional<Projection> try_project(const PureState& s, std::span<const std::string> subset,
                                      const PureState& onto);

// |<onto (x) I | s>|^2 without forming a residual. `subset` may cover every qubit.
double outcome_probability(const PureState& s, std::span<const std::string> subset,
                           const PureState& onto);

// Unnormalized <onto|_subset |s>, the complement amplitudes in label order.
std::vector<cplx> partial_inner(const PureState& s, std::span<const std::string> subset,
                                const PureState& onto);

cplx inner(const PureState& a, const PureState& b);

DensityMatrix reduced_density(const PureState& s, std::span<const std::string> keep);
DensityMatrix reduced_density(const PureState& s, std::initializer_list<std::string> keep);

double fidelity(const PureState& a, const PureState& b);

ComplexMatrix gram(std::span<const PureState> states);

// max |G - I| entrywise.
double distance_from_identity(const ComplexMatrix& m);

}  // namespace wlab
