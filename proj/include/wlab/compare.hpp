#pragma once

// Three- versus four-qubit resource comparison over alpha^2 in (0, 1).

#include <array>
#include <map>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

namespace wlab::compare {

enum class Series { C4_1, C4_2, C4_3, C4_4, C3_1, C3_2, C3_3 };

inline constexpr std::array<Series, 7> kAllSeries = {Series::C4_1, Series::C4_2, Series::C4_3, Series::C4_4,
                                                     Series::C3_1, Series::C3_2, Series::C3_3};
inline constexpr std::array<Series, 4> kFourQubitSeries = {Series::C4_1, Series::C4_2, Series::C4_3,
                                                           Series::C4_4};
inline constexpr std::array<Series, 3> kThreeQubitSeries = {Series::C3_1, Series::C3_2, Series::C3_3};

std::string_view to_string(Series s);
Series parse_series(std::string_view name);  // throws BadParams

// Concurrence of `s` at the given alpha^2.
double evaluate(Series s, double k, double alpha_sq);

struct CurveTable {
    double k = 0.0;
    std::vector<double> grid;                     // alpha^2 samples
    std::map<Series, std::vector<double>> columns;
};

// Uniform interior grid alpha^2_i = i / (grid_size + 1), i = 1..grid_size.
// Throws BadParams for grid_size < 2 or k < 0.
CurveTable curves(double k, std::size_t grid_size);

inline constexpr int kScanSamples = 20000;
inline constexpr double kRootTol = 1e-12;
inline constexpr double kTieTol = 1e-12;

// Every alpha^2 in (0, 1) where the two curves cross (sign scan + bisection).
std::vector<double> crossing(Series a, Series b, double k);

struct PrintedThreshold {
    std::string expr_id;
    std::string expression;
    double value = 0.0;
    bool valid = false;  // strictly inside (0, 1)
};

// Boundary expressions of the printed range lists. The case scopes k:
// 1 -> k = 1, 2 -> k = 2, 3 -> k > 2, 4 -> k > 2 (large k). Throws BadParams
// outside those scopes.
std::vector<PrintedThreshold> printed_thresholds(int case_no, double k);

enum class Winner { ThreeQubit, FourQubit, Tie };
std::string_view to_string(Winner w);

// Compares the per-resource envelopes max C4_i and max C3_i.
Winner classify(double k, double alpha_sq);

enum class Method { Bisection, Formula };
std::string_view to_string(Method m);

struct Threshold {
    double value = 0.0;
    std::string source_a;
    std::string source_b;
    Method method = Method::Bisection;
};

struct Interval {
    double lo = 0.0;
    double hi = 1.0;
    Winner winner = Winner::Tie;
};

struct PairwiseComparison {
    Series four;
    Series three;
    std::vector<double> crossings;
};

struct PrintedAnnotation {
    int printed_case = 0;
    PrintedThreshold printed;
    std::optional<double> nearest_numeric;
    bool match = false;  // valid and within kAnnotationTol of a numeric crossing
};

inline constexpr double kAnnotationTol = 1e-6;
inline constexpr double kLargeK = 1e4;

struct RegionReport {
    double k = 0.0;
    std::vector<Threshold> thresholds;  // envelope winner changes, ascending
    std::vector<Interval> intervals;
    std::vector<PairwiseComparison> pairwise;
    std::vector<PrintedAnnotation> printed;
};

// Printed range-list cases that apply at k (possibly none).
std::vector<int> printed_cases_for(double k);

RegionReport region_report(double k);

}  // namespace wlab::compare
