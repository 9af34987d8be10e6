// Acceptance gate: one PASS/FAIL line per criterion, nonzero exit on any FAIL.

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <filesystem>
#include <fstream>
#include <functional>
#include <iostream>
#include <numbers>
#include <optional>
#include <random>
#include <sstream>
#include <string>
#include <vector>

#include "wlab/cli.hpp"
#include "wlab/compare.hpp"
#include "wlab/concentrate.hpp"
#include "wlab/densecode.hpp"
#include "wlab/entanglement.hpp"
#include "wlab/report.hpp"
#include "wlab/teleport.hpp"

using namespace wlab;

namespace {

const double kTwoRootTwoOverThree = 2.0 * std::numbers::sqrt2 / 3.0;

// Collects the first few failures of a criterion; later ones are only counted.
class Check {
public:
    void expect(bool ok, const std::string& what) {
        ++total_;
        if (ok) return;
        ++failed_;
        if (notes_.size() < 3) notes_.push_back(what);
    }
    void near(double got, double want, double tol, const std::string& what) {
        std::ostringstream ss;
        ss.precision(15);
        ss << what << ": got " << got << " want " << want;
        expect(std::abs(got - want) <= tol, ss.str());
    }
    bool ok() const { return failed_ == 0 && total_ > 0; }
    std::string summary() const {
        std::ostringstream ss;
        ss << total_ - failed_ << "/" << total_ << " checks";
        for (const auto& n : notes_) ss << "; " << n;
        return ss.str();
    }

private:
    int total_ = 0;
    int failed_ = 0;
    std::vector<std::string> notes_;
};

std::vector<double> random_phases(int n, std::mt19937_64& rng) {
    std::uniform_real_distribution<double> u(0.0, 2.0 * std::numbers::pi);
    std::vector<double> ph(static_cast<std::size_t>(n - 1));
    for (auto& x : ph) x = u(rng);
    return ph;
}

// Phase-free plus five random phase sets per (n, k).
std::vector<WParams> teleport_grid() {
    std::mt19937_64 rng(20261016);
    std::vector<WParams> out;
    for (int n = 4; n <= 8; ++n)
        for (double k : {0.0, 0.5, 1.0, 2.0, 10.0}) {
            out.push_back(WParams::phase_free(n, k));
            for (int t = 0; t < 5; ++t) out.push_back(WParams{n, k, random_phases(n, rng)});
        }
    return out;
}

std::string label(const WParams& p) {
    std::ostringstream ss;
    ss << "n=" << p.n << " k=" << p.k << (p.phases.empty() ? "" : " phased");
    return ss.str();
}

void criterion_1(Check& c) {
    for (const WParams& p : teleport_grid())
        for (int i = 0; i < 25; ++i) {
            const double alpha = i / 24.0;
            const teleport::Report r = teleport::run(p, alpha);
            for (const auto& o : r.outcomes) {
                c.near(o.probability, 0.25, 1e-10, label(p) + " " + o.basis_label + " probability");
                c.expect(o.fidelity_after.has_value(), label(p) + " missing fidelity");
                if (o.fidelity_after) c.near(*o.fidelity_after, 1.0, 1e-10, label(p) + " " + o.basis_label + " fidelity");
            }
        }
}

void criterion_2(Check& c) {
    for (const WParams& p : teleport_grid()) {
        const teleport::BasisAudit a = teleport::audit_basis(p, BasisVariant::Corrected);
        c.near(distance_from_identity(a.gram), 0.0, 1e-12, label(p) + " gram");
    }
    const teleport::BasisAudit printed = teleport::audit_basis(WParams::phase_free(4, 1.0), BasisVariant::AsPrinted);
    c.near(printed.gram(0, 1).real(), -0.5, 1e-12, "as-printed <eta+|eta->");
    c.near(printed.gram(0, 1).imag(), 0.0, 1e-12, "as-printed <eta+|eta-> imag");
    c.expect(printed.decomposition_residual > 0.1, "as-printed residual not above 0.1");
}

std::vector<double> grid_k() {
    std::vector<double> ks;
    for (int i = 0; i < 20; ++i) ks.push_back(0.05 + 0.5 * i);
    return ks;
}

std::vector<double> grid_alpha() {
    std::vector<double> as;
    for (int i = 1; i <= 20; ++i) as.push_back(i / 21.0);
    return as;
}

double run_concurrence(const concentrate::BranchResult& b) { return b.concurrence.value_or(-1.0); }

void criterion_3(Check& c) {
    for (double k : grid_k())
        for (double alpha : grid_alpha())
            for (int cs = 1; cs <= 4; ++cs)
                c.near(run_concurrence(concentrate::case_run(cs, k, alpha)), analytic_c4(cs, k, alpha), 1e-10,
                       "case " + std::to_string(cs));
    for (double k : grid_k()) {
        c.near(run_concurrence(concentrate::case_run(1, k, std::sqrt(1.0 / (2.0 * k + 3.0)))), 1.0, 1e-10, "case 1 unit");
        c.near(run_concurrence(concentrate::case_run(2, k, std::sqrt(k / (3.0 * k + 2.0)))), 1.0, 1e-10, "case 2 unit");
        c.near(run_concurrence(concentrate::case_run(3, k, std::sqrt(1.0 / 3.0))), 1.0, 1e-10, "case 3 unit");
        for (double alpha : {0.1, 0.3, 0.8})
            c.near(run_concurrence(concentrate::case_run(4, k, alpha)), kTwoRootTwoOverThree, 1e-10, "case 4 constant");
    }
}

void criterion_4(Check& c) {
    for (double k : grid_k())
        for (double alpha : grid_alpha())
            for (int cs = 1; cs <= 3; ++cs)
                c.near(run_concurrence(concentrate::case_run3(cs, k, alpha)), analytic_c3(cs, k, alpha), 1e-10,
                       "three-qubit case " + std::to_string(cs));
    for (double k : {0.0, 1.0, 4.0, 100.0}) {
        const double want = 2.0 * std::sqrt(k + 1.0) / (k + 2.0);
        c.near(analytic_c3(3, k, 0.5), want, 1e-10, "three-qubit case 3 formula");
        for (double alpha : {0.1, 0.6})
            c.near(run_concurrence(concentrate::case_run3(3, k, alpha)), want, 1e-10, "three-qubit case 3 run");
    }
}

void criterion_5(Check& c) {
    for (int n = 3; n <= 6; ++n)
        for (double k : {0.5, 1.0, 2.0, 7.3})
            for (double alpha : {0.43, 0.8}) {
                std::vector<double> realized;
                concentrate::for_each_branch(n, k, alpha, [&](const concentrate::BranchResult& b) {
                    if (b.concurrence) realized.push_back(*b.concurrence);
                });
                for (int r = 0; r <= n - 3; ++r)
                    for (std::optional<double> a : {std::optional<double>(alpha), std::optional<double>()}) {
                        const double want = analytic_cN(n, k, r, a);
                        double best = 1e300;
                        for (double v : realized) best = std::min(best, std::abs(v - want));
                        std::ostringstream ss;
                        ss << "n=" << n << " k=" << k << " alpha=" << alpha << " r=" << r << (a ? " dependent" : " independent")
                           << " value " << want << " not realized (nearest gap " << best << ")";
                        c.expect(best <= 1e-10, ss.str());
                    }
            }
    for (int n = 3; n <= 8; ++n)
        for (int r = 0; r <= n - 3; ++r) {
            for (double alpha : {0.2, 0.43, 0.9})
                c.near(analytic_cN(n, 1e8, r, alpha), limit_cN(n, alpha), 1e-4, "dependent limit n=" + std::to_string(n));
            c.near(analytic_cN(n, 1e8, r, std::nullopt), limit_cN(n, std::nullopt), 1e-4, "independent limit n=" + std::to_string(n));
        }
    c.near(limit_cN(3, std::nullopt), 1.0, 1e-12, "independent limit n=3");
    for (int n = 4; n <= 6; ++n)
        c.expect(limit_cN(n + 1, std::nullopt) < limit_cN(n, std::nullopt),
                 "independent limit not decreasing at N=" + std::to_string(n));
}

double nearest(const std::vector<double>& xs, double want) {
    double best = 1e300;
    for (double x : xs)
        if (std::abs(x - want) < std::abs(best - want)) best = x;
    return best;
}

void criterion_6(Check& c) {
    using compare::Series;
    for (double k : {1.0, 2.0, 5.0}) {
        const double first = (std::numbers::sqrt2 - 1.0) / ((2.0 - std::numbers::sqrt2) * k + 1.0);
        const double second = k * (std::numbers::sqrt2 - 1.0) / ((k + 2.0) - std::numbers::sqrt2);
        const std::string ks = " k=" + std::to_string(k);
        c.near(nearest(compare::crossing(Series::C4_1, Series::C3_1, k), first), first, 1e-9, "C4_1/C3_1" + ks);
        c.near(nearest(compare::crossing(Series::C4_2, Series::C3_2, k), second), second, 1e-9, "C4_2/C3_2" + ks);
    }
    bool found = false;
    for (const auto& t : compare::printed_thresholds(3, 3.0))
        if (t.expr_id == "range2.upper") {
            found = true;
            c.expect(t.value < 0.0, "case-3 range-2 boundary not negative");
            c.expect(!t.valid, "case-3 range-2 boundary not flagged invalid");
        }
    c.expect(found, "case-3 range-2 boundary missing");
}

void criterion_7(Check& c) {
    for (int n = 4; n <= 8; ++n)
        for (double k : {0.0, 1.0, 10.0}) {
            const std::string where = "n=" + std::to_string(n) + " k=" + std::to_string(k);
            c.near(distance_from_identity(densecode::gram_check(n, k)), 0.0, 1e-12, where + " gram");
            for (int m = 0; m < 4; ++m) {
                const densecode::Decoded d = densecode::decode(densecode::encode(m, n, k), n, k);
                c.expect(d.message == m, where + " message " + std::to_string(m) + " misdecoded");
                c.near(d.probability, 1.0, 1e-10, where + " decode probability");
            }
        }
}

std::string slurp(const std::filesystem::path& p) {
    std::ifstream in(p);
    std::stringstream ss;
    ss << in.rdbuf();
    return ss.str();
}

const compare::CurveTable* table_for(const std::vector<compare::CurveTable>& tables, double k) {
    for (const auto& t : tables)
        if (t.k == k) return &t;
    return nullptr;
}

double max_gap(const std::vector<double>& a, const std::vector<double>& b) {
    double m = 0.0;
    for (std::size_t i = 0; i < a.size(); ++i) m = std::max(m, std::abs(a[i] - b[i]));
    return m;
}

void criterion_8(Check& c) {
    using compare::Series;
    const auto dir = std::filesystem::temp_directory_path() / "wlab_acceptance_figures";
    std::filesystem::remove_all(dir);
    std::filesystem::create_directories(dir);
    std::ostringstream out, err;
    const int code = cli::run({"figures", "--ks", "1,1000000", "--out", dir.string()}, out, err);
    c.expect(code == cli::kExitOk, "figures exited " + std::to_string(code) + ": " + err.str());
    if (code != cli::kExitOk) return;

    const auto fig1 = report::parse_curves_csv(slurp(dir / "fig1.csv"));
    const auto fig2 = report::parse_curves_csv(slurp(dir / "fig2.csv"));
    std::filesystem::remove_all(dir);

    const compare::CurveTable* one = table_for(fig1, 1.0);
    c.expect(one != nullptr && !one->grid.empty(), "fig1 has no k=1 rows");
    if (one) {
        c.expect(max_gap(one->columns.at(Series::C4_1), one->columns.at(Series::C4_2)) < 1e-12, "fig1 k=1: C4_1 differs from C4_2");
        for (double v : one->columns.at(Series::C4_4)) c.near(v, kTwoRootTwoOverThree, 1e-11, "fig1 k=1 C4_4");
    }
    const compare::CurveTable* big = table_for(fig2, 1e6);
    c.expect(big != nullptr && !big->grid.empty(), "fig2 has no k=1e6 rows");
    if (big) c.expect(max_gap(big->columns.at(Series::C4_2), big->columns.at(Series::C4_3)) <= 1e-4, "fig2 k=1e6: C4_2 far from C4_3");
}

}  // namespace

int main() {
    struct Criterion {
        const char* name;
        std::function<void(Check&)> body;
    };
    const std::vector<Criterion> criteria = {
        {"deterministic teleportation", criterion_1},
        {"measurement basis audit", criterion_2},
        {"four-qubit concentration catalog", criterion_3},
        {"three-qubit concentration catalog", criterion_4},
        {"general-n catalog and limits", criterion_5},
        {"crossing identities", criterion_6},
        {"dense coding", criterion_7},
        {"figure regeneration", criterion_8},
    };
    int failures = 0;
    for (std::size_t i = 0; i < criteria.size(); ++i) {
        Check c;
        try {
            criteria[i].body(c);
        } catch (const std::exception& e) {
            c.expect(false, std::string("threw: ") + e.what());
        }
        if (!c.ok()) ++failures;
        std::printf("%s criterion %zu: %s (%s)\n", c.ok() ? "PASS" : "FAIL", i + 1, criteria[i].name, c.summary().c_str());
    }
    return failures == 0 ? 0 : 1;
}
