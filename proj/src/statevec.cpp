#include "wlab/statevec.hpp"

#include <algorithm>
#include <cmath>
#include <set>

#include "wlab/errors.hpp"

namespace wlab {

namespace {

std::size_t bit_of(std::size_t index, std::size_t position, std::size_t n) {
    return (index >> (n - 1 - position)) & 1U;
}

bool all_unique(const std::vector<std::string>& labels) {
    std::set<std::string_view> seen;
    for (const auto& l : labels) {
        if (!seen.insert(l).second) return false;
    }
    return true;
}

// Splits the tensor slots of `s` into `subset` (in the given order) and the
// complement (in label order).
struct Split {
    std::vector<std::size_t> sub;
    std::vector<std::size_t> rest;
};

Split split_positions(const PureState& s, std::span<const std::string> subset) {
    Split out;
    std::vector<bool> taken(s.num_qubits(), false);
    for (const auto& label : subset) {
        const std::size_t p = s.position(label);
        if (taken[p]) throw BadParams("project: repeated qubit '" + label + "'");
        taken[p] = true;
        out.sub.push_back(p);
    }
    for (std::size_t p = 0; p < s.num_qubits(); ++p) {
        if (!taken[p]) out.rest.push_back(p);
    }
    return out;
}

std::size_t gather(std::size_t index, const std::vector<std::size_t>& positions, std::size_t n) {
    std::size_t out = 0;
    for (std::size_t p : positions) out = (out << 1) | bit_of(index, p, n);
    return out;
}

}  // namespace

std::vector<std::string> default_labels(std::size_t n) {
    std::vector<std::string> labels;
    labels.reserve(n);
    for (std::size_t i = 0; i < n; ++i) labels.push_back("q" + std::to_string(i));
    return labels;
}

PureState::PureState(std::size_t num_qubits, std::vector<cplx> amplitudes,
                     std::vector<std::string> labels)
    : num_qubits_(num_qubits), amplitudes_(std::move(amplitudes)), labels_(std::move(labels)) {
    if (num_qubits_ == 0 || num_qubits_ > 30 || amplitudes_.size() != (std::size_t{1} << num_qubits_)) {
        throw LengthMismatch("PureState: expected 2^" + std::to_string(num_qubits_) +
                             " amplitudes, got " + std::to_string(amplitudes_.size()));
    }
    if (labels_.empty()) labels_ = default_labels(num_qubits_);
    if (labels_.size() != num_qubits_) {
        throw LengthMismatch("PureState: label count does not match qubit count");
    }
    if (!all_unique(labels_)) throw BadParams("PureState: duplicate qubit labels");
    const double n = norm();
    if (!(n > tol::kZeroNorm)) throw ZeroVector("PureState: amplitude vector has zero norm");
    for (auto& a : amplitudes_) a /= n;
}

PureState PureState::basis(std::string_view bits, std::vector<std::string> labels) {
    std::vector<cplx> amps(std::size_t{1} << bits.size());
    std::size_t index = 0;
    for (char c : bits) {
        if (c != '0' && c != '1') throw BadParams("PureState::basis: bits must be 0/1");
        index = (index << 1) | static_cast<std::size_t>(c - '0');
    }
    amps[index] = 1.0;
    return PureState(bits.size(), std::move(amps), std::move(labels));
}

std::size_t PureState::position(std::string_view label) const {
    const auto it = std::find(labels_.begin(), labels_.end(), label);
    if (it == labels_.end()) throw UnknownQubit("unknown qubit '" + std::string(label) + "'");
    return static_cast<std::size_t>(it - labels_.begin());
}

bool PureState::has_label(std::string_view label) const {
    return std::find(labels_.begin(), labels_.end(), label) != labels_.end();
}

PureState PureState::relabeled(std::vector<std::string> labels) const {
    return PureState(num_qubits_, amplitudes_, std::move(labels));
}

cplx PureState::amplitude(std::string_view bits) const {
    if (bits.size() != num_qubits_) throw DimensionMismatch("amplitude: bit string length");
    std::size_t index = 0;
    for (char c : bits) index = (index << 1) | static_cast<std::size_t>(c == '1');
    return amplitudes_[index];
}

double PureState::norm() const {
    double sum = 0.0;
    for (const auto& a : amplitudes_) sum += std::norm(a);
    return std::sqrt(sum);
}

Gate2::Gate2(cplx m00, cplx m01, cplx m10, cplx m11) : m_{m00, m01, m10, m11} {
    // U U^dagger
    for (std::size_t r = 0; r < 2; ++r) {
        for (std::size_t c = 0; c < 2; ++c) {
            const cplx v = m_[2 * r] * std::conj(m_[2 * c]) + m_[2 * r + 1] * std::conj(m_[2 * c + 1]);
            const cplx expect = r == c ? 1.0 : 0.0;
            if (std::abs(v - expect) > tol::kUnitary) throw BadParams("Gate2: matrix is not unitary");
        }
    }
}

Gate2 Gate2::adjoint() const {
    return Gate2(std::conj(m_[0]), std::conj(m_[2]), std::conj(m_[1]), std::conj(m_[3]));
}

Gate2 Gate2::operator*(const Gate2& rhs) const {
    const auto& a = m_;
    const auto& b = rhs.m_;
    return Gate2(a[0] * b[0] + a[1] * b[2], a[0] * b[1] + a[1] * b[3],
                 a[2] * b[0] + a[3] * b[2], a[2] * b[1] + a[3] * b[3]);
}

namespace gates {
const Gate2 I(1.0, 0.0, 0.0, 1.0);
const Gate2 X(0.0, 1.0, 1.0, 0.0);
const Gate2 Y(0.0, cplx(0.0, -1.0), cplx(0.0, 1.0), 0.0);
const Gate2 Z(1.0, 0.0, 0.0, -1.0);
const Gate2 iY(0.0, 1.0, -1.0, 0.0);
}  // namespace gates

DensityMatrix::DensityMatrix(ComplexMatrix entries) : rho_(std::move(entries)) {
    const auto d = static_cast<std::size_t>(rho_.rows());
    if (d == 0 || rho_.rows() != rho_.cols() || (d & (d - 1)) != 0) {
        throw BadDensity("DensityMatrix: dimension must be a power of two");
    }
    if ((rho_ - rho_.adjoint()).cwiseAbs().maxCoeff() > tol::kDefault) {
        throw BadDensity("DensityMatrix: not Hermitian");
    }
    if (std::abs(rho_.trace() - cplx(1.0)) > tol::kDefault) {
        throw BadDensity("DensityMatrix: trace is not 1");
    }
    const ComplexMatrix herm = 0.5 * (rho_ + rho_.adjoint());
    Eigen::SelfAdjointEigenSolver<ComplexMatrix> eig(herm, Eigen::EigenvaluesOnly);
    if (eig.eigenvalues().minCoeff() < -1e-9) throw BadDensity("DensityMatrix: not positive semidefinite");
}

DensityMatrix DensityMatrix::from_pure(const PureState& s) {
    Eigen::VectorXcd v(static_cast<Eigen::Index>(s.dim()));
    for (std::size_t i = 0; i < s.dim(); ++i) v(static_cast<Eigen::Index>(i)) = s[i];
    return DensityMatrix(v * v.adjoint());
}

PureState make_state(std::size_t n, std::vector<cplx> amps) {
    return PureState(n, std::move(amps));
}

PureState tensor(const PureState& a, const PureState& b) {
    std::vector<cplx> amps(a.dim() * b.dim());
    for (std::size_t i = 0; i < a.dim(); ++i) {
        for (std::size_t j = 0; j < b.dim(); ++j) amps[i * b.dim() + j] = a[i] * b[j];
    }
    std::vector<std::string> labels = a.labels();
    labels.insert(labels.end(), b.labels().begin(), b.labels().end());
    if (!all_unique(labels)) labels.clear();
    return PureState(a.num_qubits() + b.num_qubits(), std::move(amps), std::move(labels));
}

PureState apply_single(const PureState& s, std::string_view qubit, const Gate2& g) {
    const std::size_t n = s.num_qubits();
    const std::size_t stride = std::size_t{1} << (n - 1 - s.position(qubit));
    std::vector<cplx> out(s.amplitudes().begin(), s.amplitudes().end());
    for (std::size_t i = 0; i < s.dim(); ++i) {
        if (i & stride) continue;
        const cplx a0 = s[i];
        const cplx a1 = s[i | stride];
        out[i] = g(0, 0) * a0 + g(0, 1) * a1;
        out[i | stride] = g(1, 0) * a0 + g(1, 1) * a1;
    }
    return PureState(n, std::move(out), s.labels());
}

std::vector<cplx> partial_inner(const PureState& s, std::span<const std::string> subset,
                                const PureState& onto) {
    if (onto.num_qubits() != subset.size()) {
        throw DimensionMismatch("project: target state size does not match subset");
    }
    const Split split = split_positions(s, subset);
    const std::size_t n = s.num_qubits();
    std::vector<cplx> out(std::size_t{1} << split.rest.size());
    for (std::size_t x = 0; x < s.dim(); ++x) {
        if (s[x] == cplx{}) continue;
        const std::size_t j = gather(x, split.sub, n);
        out[gather(x, split.rest, n)] += std::conj(onto[j]) * s[x];
    }
    return out;
}

double outcome_probability(const PureState& s, std::span<const std::string> subset,
                           const PureState& onto) {
    double p = 0.0;
    for (const auto& a : partial_inner(s, subset, onto)) p += std::norm(a);
    return p;
}

std::optional<Projection> try_project(const PureState& s, std::span<const std::string> subset,
                                      const PureState& onto) {
    if (subset.size() >= s.num_qubits()) {
        throw BadParams("project: subset leaves no residual qubits");
    }
    std::vector<cplx> branch = partial_inner(s, subset, onto);
    double p = 0.0;
    for (const auto& a : branch) p += std::norm(a);
    if (p < tol::kNullBranch) return std::nullopt;

    const Split split = split_positions(s, subset);
    std::vector<std::string> labels;
    for (std::size_t pos : split.rest) labels.push_back(s.labels()[pos]);
    return Projection{p, PureState(split.rest.size(), std::move(branch), std::move(labels))};
}

Projection project(const PureState& s, std::span<const std::string> subset, const PureState& onto) {
    auto result = try_project(s, subset, onto);
    if (!result) throw NullOutcome("project: outcome has zero probability");
    return std::move(*result);
}

Projection project(const PureState& s, std::initializer_list<std::string> subset, const PureState& onto) {
    return project(s, std::span<const std::string>(subset.begin(), subset.size()), onto);
}

cplx inner(const PureState& a, const PureState& b) {
    if (a.num_qubits() != b.num_qubits()) throw DimensionMismatch("inner: qubit counts differ");
    cplx sum{};
    for (std::size_t i = 0; i < a.dim(); ++i) sum += std::conj(a[i]) * b[i];
    return sum;
}

DensityMatrix reduced_density(const PureState& s, std::span<const std::string> keep) {
    const std::size_t n = s.num_qubits();
    std::vector<std::size_t> kept;
    std::vector<bool> taken(n, false);
    for (const auto& label : keep) {
        const std::size_t p = s.position(label);
        if (taken[p]) throw BadParams("reduced_density: repeated qubit '" + label + "'");
        taken[p] = true;
        kept.push_back(p);
    }
    std::vector<std::size_t> traced;
    for (std::size_t p = 0; p < n; ++p) {
        if (!taken[p]) traced.push_back(p);
    }

    // Reshape into a (kept x traced) matrix M; then rho = M M^dagger.
    const auto rows = static_cast<Eigen::Index>(std::size_t{1} << kept.size());
    const auto cols = static_cast<Eigen::Index>(std::size_t{1} << traced.size());
    ComplexMatrix m = ComplexMatrix::Zero(rows, cols);
    for (std::size_t x = 0; x < s.dim(); ++x) {
        m(static_cast<Eigen::Index>(gather(x, kept, n)), static_cast<Eigen::Index>(gather(x, traced, n))) = s[x];
    }
    ComplexMatrix rho = m * m.adjoint();
    return DensityMatrix(0.5 * (rho + rho.adjoint()));
}

DensityMatrix reduced_density(const PureState& s, std::initializer_list<std::string> keep) {
    return reduced_density(s, std::span<const std::string>(keep.begin(), keep.size()));
}

double fidelity(const PureState& a, const PureState& b) {
    return std::min(1.0, std::norm(inner(a, b)));
}

ComplexMatrix gram(std::span<const PureState> states) {
    const auto m = static_cast<Eigen::Index>(states.size());
    ComplexMatrix g(m, m);
    for (Eigen::Index i = 0; i < m; ++i) {
        for (Eigen::Index j = 0; j < m; ++j) {
            g(i, j) = inner(states[static_cast<std::size_t>(i)], states[static_cast<std::size_t>(j)]);
        }
    }
    return g;
}

double distance_from_identity(const ComplexMatrix& m) {
    return (m - ComplexMatrix::Identity(m.rows(), m.cols())).cwiseAbs().maxCoeff();
}

}  // namespace wlab
