#include "wlab/report.hpp"

#include <cmath>
#include <cstdio>
#include <fstream>
#include <random>
#include <sstream>

#include "wlab/errors.hpp"

namespace wlab::report {

namespace {

Json number(double x) {
    if (!std::isfinite(x)) return nullptr;
    return round12(x);
}

std::vector<std::string> split(std::string_view text, char sep) {
    std::vector<std::string> out;
    std::string cur;
    for (char c : text) {
        if (c == sep) {
            out.push_back(std::move(cur));
            cur.clear();
        } else {
            cur.push_back(c);
        }
    }
    out.push_back(std::move(cur));
    return out;
}

double parse_double(const std::string& s) {
    try {
        std::size_t used = 0;
        const double v = std::stod(s, &used);
        if (used != s.size()) throw BadParams("trailing characters in number '" + s + "'");
        return v;
    } catch (const std::logic_error&) {
        throw BadParams("malformed number '" + s + "'");
    }
}

std::string join(const std::vector<std::string>& parts, char sep) {
    std::string out;
    for (std::size_t i = 0; i < parts.size(); ++i) {
        if (i) out.push_back(sep);
        out += parts[i];
    }
    return out;
}

Json pairing_json(const concentrate::Pairing& p) {
    Json pairs = Json::array();
    for (const auto& [x, y] : p.bell_pairs) pairs.push_back({x, y});
    return Json{{"bell_pairs", pairs}, {"z_singles", p.z_singles}, {"remaining", p.remaining}};
}

}  // namespace

std::string format_number(double x) {
    char buf[64];
    std::snprintf(buf, sizeof buf, "%.12g", x);
    return buf;
}

double round12(double x) { return std::stod(format_number(x)); }

Json to_json(const PureState& s) {
    Json amps = Json::array();
    for (const auto& a : s.amplitudes()) amps.push_back({number(a.real()), number(a.imag())});
    return Json{{"labels", s.labels()}, {"amplitudes", amps}};
}

Json to_json(const ComplexMatrix& m) {
    Json re = Json::array();
    Json im = Json::array();
    for (Eigen::Index r = 0; r < m.rows(); ++r) {
        Json rr = Json::array();
        Json ii = Json::array();
        for (Eigen::Index c = 0; c < m.cols(); ++c) {
            rr.push_back(number(m(r, c).real()));
            ii.push_back(number(m(r, c).imag()));
        }
        re.push_back(rr);
        im.push_back(ii);
    }
    return Json{{"re", re}, {"im", im}};
}

Json to_json(const teleport::Report& r, double tolerance) {
    Json outcomes = Json::array();
    bool deterministic = true;
    bool unit_fidelity = true;
    for (const auto& o : r.outcomes) {
        Json j{{"basis_label", o.basis_label},
               {"probability", number(o.probability)},
               {"correction", std::string(teleport::to_string(o.correction))},
               {"fidelity_after", o.fidelity_after ? number(*o.fidelity_after) : Json(nullptr)}};
        j["bob_state"] = o.bob_state ? to_json(*o.bob_state) : Json(nullptr);
        outcomes.push_back(std::move(j));
        deterministic = deterministic && std::abs(o.probability - 0.25) <= tolerance;
        unit_fidelity = unit_fidelity && o.fidelity_after && std::abs(*o.fidelity_after - 1.0) <= tolerance;
    }
    Json phases = Json::array();
    for (double p : r.params.phases) phases.push_back(number(p));
    return Json{{"command", "teleport"},
                {"n", r.params.n},
                {"k", number(r.params.k)},
                {"phases", phases},
                {"alpha", number(r.alpha)},
                {"variant", std::string(to_string(r.variant))},
                {"outcomes", outcomes},
                {"completeness_residual", number(r.completeness_residual)},
                {"checks", {{"tolerance", tolerance}, {"equal_probabilities", deterministic}, {"unit_fidelity", unit_fidelity}}},
                {"formula_refs",
                 {{"outcomes.probability", "four-outcome decomposition of input (x) W-type resource; 1/4 each"},
                  {"outcomes.correction", "eta+ -> I, eta- -> sigma_z, xi+ -> sigma_x, xi- -> i*sigma_y"},
                  {"outcomes.fidelity_after", "|<phi| U bob>|^2 after the mapped Pauli correction"}}}};
}

Json to_json(const WParams& p, const teleport::BasisAudit& audit, BasisVariant variant, double tolerance) {
    Json phases = Json::array();
    for (double ph : p.phases) phases.push_back(number(ph));
    return Json{{"command", "audit"},
                {"n", p.n},
                {"k", number(p.k)},
                {"phases", phases},
                {"variant", std::string(to_string(variant))},
                {"reference_alpha", teleport::kAuditReferenceAlpha},
                {"basis_order", {"eta+", "eta-", "xi+", "xi-"}},
                {"gram", to_json(audit.gram)},
                {"decomposition_residual", number(audit.decomposition_residual)},
                {"checks",
                 {{"tolerance", tolerance},
                  {"orthonormal", distance_from_identity(audit.gram) <= tolerance},
                  {"decomposition_exact", audit.decomposition_residual <= tolerance}}},
                {"formula_refs",
                 {{"gram", "pairwise inner products of the teleportation measurement basis"},
                  {"decomposition_residual", "|| joint - 1/2 sum_i basis_i (x) U_i phi ||"}}}};
}

Json to_json(int n, double k, double alpha, const concentrate::BranchResult& b) {
    Json outcomes = Json::array();
    for (BellLabel l : b.outcomes.bell) outcomes.push_back(std::string(to_string(l)));
    const auto cls = concentrate::classify_branch(n, k, alpha, b);
    return Json{{"command", "concentrate"},
                {"n", n},
                {"k", number(k)},
                {"alpha", number(alpha)},
                {"pairing", pairing_json(b.pairing)},
                {"bell_outcomes", outcomes},
                {"z_bits", b.outcomes.z_bits},
                {"probability", number(b.probability)},
                {"residual", b.residual ? to_json(*b.residual) : Json(nullptr)},
                {"concurrence", b.concurrence ? number(*b.concurrence) : Json(nullptr)},
                {"class", std::string(concentrate::to_string(cls.cls))},
                {"r", cls.r ? Json(*cls.r) : Json(nullptr)},
                {"formula_refs",
                 {{"concurrence", "2|a00 a11 - a01 a10| of the normalized residual"},
                  {"class", "match against the general-n input-dependent / input-independent catalog"}}}};
}

Json to_json(const compare::RegionReport& r) {
    Json thresholds = Json::array();
    for (const auto& t : r.thresholds) {
        thresholds.push_back({{"value", number(t.value)},
                              {"source", {t.source_a, t.source_b}},
                              {"method", std::string(compare::to_string(t.method))}});
    }
    Json intervals = Json::array();
    for (const auto& i : r.intervals) {
        intervals.push_back({{"lo", number(i.lo)}, {"hi", number(i.hi)}, {"winner", std::string(compare::to_string(i.winner))}});
    }
    Json pairwise = Json::array();
    for (const auto& p : r.pairwise) {
        Json xs = Json::array();
        for (double x : p.crossings) xs.push_back(number(x));
        pairwise.push_back({{"four", std::string(compare::to_string(p.four))},
                            {"three", std::string(compare::to_string(p.three))},
                            {"crossings", xs}});
    }
    Json printed = Json::array();
    for (const auto& a : r.printed) {
        printed.push_back({{"case", a.printed_case},
                           {"expr_id", a.printed.expr_id},
                           {"expression", a.printed.expression},
                           {"value", number(a.printed.value)},
                           {"valid", a.printed.valid},
                           {"method", "formula"},
                           {"nearest_numeric", a.nearest_numeric ? number(*a.nearest_numeric) : Json(nullptr)},
                           {"match", a.match}});
    }
    return Json{{"command", "compare"},
                {"k", number(r.k)},
                {"thresholds", thresholds},
                {"intervals", intervals},
                {"pairwise", pairwise},
                {"printed", printed},
                {"formula_refs",
                 {{"intervals", "winner of max(C4_1..C4_4) versus max(C3_1..C3_3)"},
                  {"printed", "printed range-list boundaries, annotated against numeric crossings"}}}};
}

Json to_json(const densecode::Report& r, double tolerance) {
    Json table = Json::array();
    bool all_decoded = true;
    for (const auto& e : r.decode_table) {
        table.push_back({{"sent", e.sent}, {"recovered", e.recovered}, {"probability", number(e.probability)}});
        all_decoded = all_decoded && e.sent == e.recovered && std::abs(e.probability - 1.0) <= tolerance;
    }
    return Json{{"command", "densecode"},
                {"n", r.n},
                {"k", number(r.k)},
                {"messages", {"I", "sigma_x", "sigma_z", "i*sigma_y"}},
                {"gram", to_json(r.gram)},
                {"decode_table", table},
                {"bits_per_transmitted_qubit", number(r.bits_per_transmitted_qubit)},
                {"checks",
                 {{"tolerance", tolerance},
                  {"orthonormal", distance_from_identity(r.gram) <= tolerance},
                  {"all_decoded", all_decoded}}},
                {"formula_refs",
                 {{"gram", "inner products of the four Pauli-encoded eta+ states"},
                  {"decode_table", "projection onto eta+, xi+, eta-, xi-"}}}};
}

std::string curves_csv(std::span<const compare::CurveTable> tables, bool with_three_qubit) {
    std::vector<compare::Series> cols(compare::kFourQubitSeries.begin(), compare::kFourQubitSeries.end());
    if (with_three_qubit) cols.insert(cols.end(), compare::kThreeQubitSeries.begin(), compare::kThreeQubitSeries.end());

    std::ostringstream out;
    out << "alpha_sq,k";
    for (auto s : cols) out << ',' << compare::to_string(s);
    out << '\n';
    for (const auto& t : tables) {
        for (std::size_t i = 0; i < t.grid.size(); ++i) {
            out << format_number(t.grid[i]) << ',' << format_number(t.k);
            for (auto s : cols) out << ',' << format_number(t.columns.at(s)[i]);
            out << '\n';
        }
    }
    return out.str();
}

std::vector<compare::CurveTable> parse_curves_csv(std::string_view text) {
    std::istringstream in{std::string(text)};
    std::string line;
    if (!std::getline(in, line)) throw BadParams("curves csv: missing header");
    const auto header = split(line, ',');
    if (header.size() < 3 || header[0] != "alpha_sq" || header[1] != "k") {
        throw BadParams("curves csv: header must start with alpha_sq,k");
    }
    std::vector<compare::Series> cols;
    for (std::size_t i = 2; i < header.size(); ++i) cols.push_back(compare::parse_series(header[i]));

    std::vector<compare::CurveTable> tables;
    while (std::getline(in, line)) {
        if (line.empty()) continue;
        const auto fields = split(line, ',');
        if (fields.size() != header.size()) throw BadParams("curves csv: wrong field count");
        const double k = parse_double(fields[1]);
        if (tables.empty() || tables.back().k != k) {
            tables.emplace_back();
            tables.back().k = k;
        }
        auto& t = tables.back();
        t.grid.push_back(parse_double(fields[0]));
        for (std::size_t c = 0; c < cols.size(); ++c) t.columns[cols[c]].push_back(parse_double(fields[c + 2]));
    }
    return tables;
}

std::string branch_csv_header() {
    return "n,k,alpha,pairs,singles,remaining,bell_outcomes,z_bits,probability,concurrence,class,r,"
           "re00,im00,re01,im01,re10,im10,re11,im11";
}

std::string branch_csv_row(int n, double k, double alpha, const concentrate::BranchResult& b) {
    std::vector<std::string> pairs;
    for (const auto& [x, y] : b.pairing.bell_pairs) pairs.push_back(x + "-" + y);
    std::vector<std::string> outcomes;
    for (BellLabel l : b.outcomes.bell) outcomes.emplace_back(to_string(l));
    std::vector<std::string> bits;
    for (int z : b.outcomes.z_bits) bits.push_back(std::to_string(z));
    const auto cls = concentrate::classify_branch(n, k, alpha, b);

    std::ostringstream row;
    row << n << ',' << format_number(k) << ',' << format_number(alpha) << ',' << join(pairs, ';') << ','
        << join(b.pairing.z_singles, ';') << ',' << b.pairing.remaining << ',' << join(outcomes, ';') << ','
        << join(bits, ';') << ',' << format_number(b.probability) << ','
        << (b.concurrence ? format_number(*b.concurrence) : "") << ',' << concentrate::to_string(cls.cls) << ','
        << (cls.r ? std::to_string(*cls.r) : "");
    for (std::size_t i = 0; i < 4; ++i) {
        if (b.residual) {
            row << ',' << format_number((*b.residual)[i].real()) << ',' << format_number((*b.residual)[i].imag());
        } else {
            row << ",,";
        }
    }
    return row.str();
}

ParsedBranch parse_branch_csv_row(std::string_view line) {
    const auto f = split(line, ',');
    if (f.size() != 20) throw BadParams("branch csv: expected 20 fields");
    ParsedBranch out;
    out.n = static_cast<int>(parse_double(f[0]));
    out.k = parse_double(f[1]);
    out.alpha = parse_double(f[2]);
    auto& b = out.branch;
    if (!f[3].empty()) {
        for (const auto& p : split(f[3], ';')) {
            const auto xy = split(p, '-');
            if (xy.size() != 2) throw BadParams("branch csv: malformed pair '" + p + "'");
            b.pairing.bell_pairs.emplace_back(xy[0], xy[1]);
        }
    }
    if (!f[4].empty()) b.pairing.z_singles = split(f[4], ';');
    b.pairing.remaining = f[5];
    if (!f[6].empty()) {
        for (const auto& l : split(f[6], ';')) b.outcomes.bell.push_back(parse_bell_label(l));
    }
    if (!f[7].empty()) {
        for (const auto& z : split(f[7], ';')) b.outcomes.z_bits.push_back(static_cast<int>(parse_double(z)));
    }
    b.probability = parse_double(f[8]);
    if (!f[9].empty()) b.concurrence = parse_double(f[9]);
    if (!f[12].empty()) {
        std::vector<cplx> amps;
        for (std::size_t i = 0; i < 4; ++i) amps.emplace_back(parse_double(f[12 + 2 * i]), parse_double(f[13 + 2 * i]));
        b.residual = PureState(2, std::move(amps), {b.pairing.remaining, std::to_string(out.n)});
    }
    return out;
}

void write_atomically(const std::filesystem::path& path, std::string_view content) {
    std::filesystem::path tmp = path;
    tmp += ".tmp" + std::to_string(std::random_device{}());
    {
        std::ofstream out(tmp, std::ios::binary | std::ios::trunc);
        if (!out) throw std::runtime_error("cannot open '" + tmp.string() + "' for writing");
        out.write(content.data(), static_cast<std::streamsize>(content.size()));
        if (!out) throw std::runtime_error("failed writing '" + tmp.string() + "'");
    }
    std::filesystem::rename(tmp, path);
}

}  // namespace wlab::report
