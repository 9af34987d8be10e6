#include "wlab/compare.hpp"

#include <algorithm>
#include <cmath>

#include "wlab/entanglement.hpp"
#include "wlab/errors.hpp"
#include "wlab/roots.hpp"

namespace wlab::compare {

namespace {

void check_k(double k) {
    if (!(k >= 0.0) || !std::isfinite(k)) throw BadParams("k must be finite and >= 0");
}

template <std::size_t N>
std::pair<double, Series> envelope(const std::array<Series, N>& series, double k, double alpha_sq) {
    std::pair<double, Series> best{-1.0, series[0]};
    for (Series s : series) {
        const double v = evaluate(s, k, alpha_sq);
        if (v > best.first) best = {v, s};
    }
    return best;
}

PrintedThreshold printed(std::string id, std::string expr, double value) {
    return PrintedThreshold{std::move(id), std::move(expr), value, value > 0.0 && value < 1.0};
}

}  // namespace

std::string_view to_string(Series s) {
    switch (s) {
        case Series::C4_1: return "C4_1";
        case Series::C4_2: return "C4_2";
        case Series::C4_3: return "C4_3";
        case Series::C4_4: return "C4_4";
        case Series::C3_1: return "C3_1";
        case Series::C3_2: return "C3_2";
        case Series::C3_3: return "C3_3";
    }
    return "?";
}

Series parse_series(std::string_view name) {
    for (Series s : kAllSeries) {
        if (to_string(s) == name) return s;
    }
    throw BadParams("unknown series '" + std::string(name) + "'");
}

double evaluate(Series s, double k, double alpha_sq) {
    if (!(alpha_sq >= 0.0 && alpha_sq <= 1.0)) throw BadParams("alpha^2 must lie in [0, 1]");
    const double alpha = std::sqrt(alpha_sq);
    switch (s) {
        case Series::C4_1: return analytic_c4(1, k, alpha);
        case Series::C4_2: return analytic_c4(2, k, alpha);
        case Series::C4_3: return analytic_c4(3, k, alpha);
        case Series::C4_4: return analytic_c4(4, k, alpha);
        case Series::C3_1: return analytic_c3(1, k, alpha);
        case Series::C3_2: return analytic_c3(2, k, alpha);
        case Series::C3_3: return analytic_c3(3, k, alpha);
    }
    return 0.0;
}

CurveTable curves(double k, std::size_t grid_size) {
    check_k(k);
    if (grid_size < 2) throw BadParams("curves: grid_size must be >= 2");
    CurveTable table;
    table.k = k;
    for (std::size_t i = 1; i <= grid_size; ++i) {
        table.grid.push_back(static_cast<double>(i) / static_cast<double>(grid_size + 1));
    }
    for (Series s : kAllSeries) {
        auto& col = table.columns[s];
        col.reserve(grid_size);
        for (double x : table.grid) col.push_back(evaluate(s, k, x));
    }
    return table;
}

std::vector<double> crossing(Series a, Series b, double k) {
    check_k(k);
    if (a == b) return {};
    return roots::scan_roots([&](double x) { return evaluate(a, k, x) - evaluate(b, k, x); }, 0.0, 1.0,
                             kScanSamples, kRootTol, 1e-13);
}

std::vector<PrintedThreshold> printed_thresholds(int case_no, double k) {
    check_k(k);
    const double r2 = std::sqrt(2.0);
    const double sk = std::sqrt(k);
    const double sk1 = std::sqrt(k + 1.0);
    auto lower = [&] {
        return printed("range1.upper", "(sqrt2-1)/((2-sqrt2)k+1)", (r2 - 1.0) / ((2.0 - r2) * k + 1.0));
    };
    auto last = [&] {
        return printed("last.lower", "(sqrt2 k - sqrt(k)sqrt(k+1))/(sqrt(k)sqrt(k+1)-sqrt2)",
                       (r2 * k - sk * sk1) / (sk * sk1 - r2));
    };
    switch (case_no) {
        case 1:
            if (std::abs(k - 1.0) > 1e-12) throw BadParams("printed case 1 is scoped to k = 1");
            return {printed("range1.upper", "k(sqrt2-1)/((k+2)-sqrt2)", k * (r2 - 1.0) / ((k + 2.0) - r2))};
        case 2:
            if (std::abs(k - 2.0) > 1e-12) throw BadParams("printed case 2 is scoped to k = 2");
            return {lower(),
                    printed("range2.upper", "(sqrt(k+1)-sqrt2)/(k sqrt2-sqrt(k+1))", (sk1 - r2) / (k * r2 - sk1)),
                    last()};
        case 3:
            if (!(k > 2.0)) throw BadParams("printed case 3 is scoped to k > 2");
            return {lower(),
                    printed("range2.upper", "(k-sqrt(2k))/(sqrt(2k)-(k+2))",
                            (k - std::sqrt(2.0 * k)) / (std::sqrt(2.0 * k) - (k + 2.0))),
                    printed("range3.upper", "(k-sqrt(k)sqrt(k+1))/(sqrt(k)sqrt(k+1)-(k+2))",
                            (k - sk * sk1) / (sk * sk1 - (k + 2.0))),
                    last()};
        case 4:
            if (!(k > 2.0)) throw BadParams("printed case 4 is scoped to large k");
            return {lower(),
                    printed("range2.upper", "(k-sqrt(2k))/(sqrt(2k)-(k+2))",
                            (k - std::sqrt(2.0 * k)) / (std::sqrt(2.0 * k) - (k + 2.0))),
                    last()};
        default:
            throw BadParams("printed case must be 1..4");
    }
}

std::string_view to_string(Winner w) {
    switch (w) {
        case Winner::ThreeQubit: return "3q";
        case Winner::FourQubit: return "4q";
        case Winner::Tie: return "tie";
    }
    return "?";
}

std::string_view to_string(Method m) {
    return m == Method::Bisection ? "bisection" : "formula";
}

Winner classify(double k, double alpha_sq) {
    check_k(k);
    if (!(alpha_sq > 0.0 && alpha_sq < 1.0)) throw BadParams("classify: alpha^2 must lie in (0, 1)");
    const double four = envelope(kFourQubitSeries, k, alpha_sq).first;
    const double three = envelope(kThreeQubitSeries, k, alpha_sq).first;
    if (std::abs(four - three) <= kTieTol) return Winner::Tie;
    return four > three ? Winner::FourQubit : Winner::ThreeQubit;
}

std::vector<int> printed_cases_for(double k) {
    std::vector<int> cases;
    if (std::abs(k - 1.0) <= 1e-12) cases.push_back(1);
    if (std::abs(k - 2.0) <= 1e-12) cases.push_back(2);
    if (k > 2.0) cases.push_back(3);
    if (k >= kLargeK) cases.push_back(4);
    return cases;
}

RegionReport region_report(double k) {
    check_k(k);
    RegionReport report;
    report.k = k;

    // Envelope winner changes.
    double prev_x = 0.0;
    Winner prev = classify(k, 1.0 / (kScanSamples + 1.0));
    double interval_lo = 0.0;
    for (int i = 1; i <= kScanSamples; ++i) {
        const double x = i / (kScanSamples + 1.0);
        const Winner w = classify(k, x);
        if (i > 1 && w != prev) {
            const Winner left = prev;
            const double t = roots::bisect_predicate([&](double s) { return classify(k, s) == left; }, prev_x, x,
                                                     kRootTol);
            report.thresholds.push_back(Threshold{t, std::string(to_string(envelope(kFourQubitSeries, k, t).second)),
                                                  std::string(to_string(envelope(kThreeQubitSeries, k, t).second)),
                                                  Method::Bisection});
            report.intervals.push_back(Interval{interval_lo, t, left});
            interval_lo = t;
        }
        prev = w;
        prev_x = x;
    }
    report.intervals.push_back(Interval{interval_lo, 1.0, prev});

    for (std::size_t i = 0; i < kThreeQubitSeries.size(); ++i) {
        const Series four = kFourQubitSeries[i];
        const Series three = kThreeQubitSeries[i];
        report.pairwise.push_back(PairwiseComparison{four, three, crossing(four, three, k)});
    }

    std::vector<double> numeric;
    for (const auto& t : report.thresholds) numeric.push_back(t.value);
    for (const auto& p : report.pairwise) numeric.insert(numeric.end(), p.crossings.begin(), p.crossings.end());

    for (int c : printed_cases_for(k)) {
        for (auto& pt : printed_thresholds(c, k)) {
            PrintedAnnotation a;
            a.printed_case = c;
            a.printed = std::move(pt);
            for (double v : numeric) {
                if (!a.nearest_numeric || std::abs(v - a.printed.value) < std::abs(*a.nearest_numeric - a.printed.value)) {
                    a.nearest_numeric = v;
                }
            }
            a.match = a.printed.valid && a.nearest_numeric &&
                      std::abs(*a.nearest_numeric - a.printed.value) <= kAnnotationTol;
            report.printed.push_back(std::move(a));
        }
    }
    return report;
}

}  // namespace wlab::compare
