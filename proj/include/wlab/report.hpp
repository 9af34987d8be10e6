#pragma once

// JSON and CSV serialization of protocol reports.
//
// Floats are written with 12 significant digits in both formats, so output is
// byte-stable for identical inputs.

#include <filesystem>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include <json.hpp>

#include "wlab/compare.hpp"
#include "wlab/concentrate.hpp"
#include "wlab/densecode.hpp"
#include "wlab/teleport.hpp"

namespace wlab::report {

using Json = nlohmann::ordered_json;

std::string format_number(double x);   // "%.12g"
double round12(double x);              // value of format_number(x)

Json to_json(const PureState& s);
Json to_json(const ComplexMatrix& m);  // {"re": [[..]], "im": [[..]]}
Json to_json(const teleport::Report& r, double tolerance);
Json to_json(const WParams& p, const teleport::BasisAudit& audit, BasisVariant variant, double tolerance);
Json to_json(int n, double k, double alpha, const concentrate::BranchResult& b);
Json to_json(const compare::RegionReport& r);
Json to_json(const densecode::Report& r, double tolerance);

// fig1 columns: alpha_sq,k,C4_1,C4_2,C4_3,C4_4; with_three_qubit adds C3_1..C3_3.
std::string curves_csv(std::span<const compare::CurveTable> tables, bool with_three_qubit);

// Inverse of curves_csv; rows are grouped into tables by k in file order.
// Throws BadParams on a malformed header or row.
std::vector<compare::CurveTable> parse_curves_csv(std::string_view text);

// n,k,alpha,pairs,singles,remaining,bell_outcomes,z_bits,probability,
// concurrence,class,r,re00,im00,re01,im01,re10,im10,re11,im11
std::string branch_csv_header();
std::string branch_csv_row(int n, double k, double alpha, const concentrate::BranchResult& b);

struct ParsedBranch {
    int n = 0;
    double k = 0.0;
    double alpha = 0.0;
    concentrate::BranchResult branch;
};

ParsedBranch parse_branch_csv_row(std::string_view line);

// Writes through a temporary sibling file and renames it into place.
void write_atomically(const std::filesystem::path& path, std::string_view content);

}  // namespace wlab::report
