#include "wlab/cli.hpp"

#include <cmath>
#include <cstdlib>
#include <filesystem>
#include <iostream>
#include <numbers>
#include <optional>
#include <random>
#include <sstream>

#include <CLI11.hpp>

#include "wlab/compare.hpp"
#include "wlab/concentrate.hpp"
#include "wlab/densecode.hpp"
#include "wlab/errors.hpp"
#include "wlab/report.hpp"
#include "wlab/teleport.hpp"

namespace wlab::cli {

namespace {

// Everything a subcommand may consume; unused fields keep their defaults.
struct RunConfig {
    int n = 4;
    double k = 1.0;
    double alpha = 0.6;
    std::vector<double> phases;
    bool random_phases = false;
    std::uint64_t seed = 0;
    std::string variant = "corrected";
    int case_no = 0;
    std::string pairs;
    std::string singles;
    std::string remaining;
    std::string outcomes;
    std::string z_bits;
    std::size_t grid = 1000;
    std::vector<double> ks = {0.5, 1.0, 2.0, 10.0};
    std::string out;
    std::string format = "json";
};

std::vector<std::string> split_list(const std::string& text, char sep) {
    std::vector<std::string> out;
    if (text.empty()) return out;
    std::stringstream ss(text);
    std::string item;
    while (std::getline(ss, item, sep)) out.push_back(item);
    return out;
}

WParams w_params(const RunConfig& cfg) {
    WParams p{cfg.n, cfg.k, cfg.phases};
    if (cfg.random_phases) {
        std::mt19937_64 rng(cfg.seed);
        std::uniform_real_distribution<double> angle(0.0, 2.0 * std::numbers::pi);
        p.phases.clear();
        for (int i = 0; i < cfg.n - 1; ++i) p.phases.push_back(angle(rng));
    }
    validate(p);
    return p;
}

void emit(const RunConfig& cfg, const std::string& content, std::ostream& out) {
    if (cfg.out.empty()) {
        out << content;
    } else {
        report::write_atomically(cfg.out, content);
    }
}

std::string dump(const report::Json& j) { return j.dump(2) + "\n"; }

void require_format(const RunConfig& cfg, std::initializer_list<std::string_view> allowed) {
    for (auto f : allowed) {
        if (cfg.format == f) return;
    }
    throw BadParams("unsupported --format '" + cfg.format + "' for this command");
}

concentrate::Pairing pairing_from(const RunConfig& cfg) {
    concentrate::Pairing p;
    for (const auto& item : split_list(cfg.pairs, ',')) {
        const auto xy = split_list(item, '-');
        if (xy.size() != 2) throw BadPairing("--pairs entries look like b-1");
        p.bell_pairs.emplace_back(xy[0], xy[1]);
    }
    p.z_singles = split_list(cfg.singles, ',');
    p.remaining = cfg.remaining;
    return p;
}

void cmd_teleport(const RunConfig& cfg, double tolerance, std::ostream& out) {
    require_format(cfg, {"json"});
    const auto r = teleport::run(w_params(cfg), cfg.alpha, parse_basis_variant(cfg.variant));
    emit(cfg, dump(report::to_json(r, tolerance)), out);
}

void cmd_audit(const RunConfig& cfg, double tolerance, std::ostream& out) {
    require_format(cfg, {"json"});
    const WParams p = w_params(cfg);
    const BasisVariant v = parse_basis_variant(cfg.variant);
    emit(cfg, dump(report::to_json(p, teleport::audit_basis(p, v), v, tolerance)), out);
}

void cmd_concentrate(const RunConfig& cfg, std::ostream& out) {
    require_format(cfg, {"json", "csv"});
    concentrate::BranchResult b;
    if (cfg.case_no != 0) {
        if (cfg.n == 4) {
            b = concentrate::case_run(cfg.case_no, cfg.k, cfg.alpha);
        } else if (cfg.n == 3) {
            b = concentrate::case_run3(cfg.case_no, cfg.k, cfg.alpha);
        } else {
            throw BadParams("--case applies to n = 3 or n = 4");
        }
    } else {
        const auto pairing = pairing_from(cfg);
        concentrate::Outcomes outcomes;
        if (cfg.outcomes.empty() && cfg.z_bits.empty()) {
            outcomes = concentrate::phi_plus_outcomes(pairing);
        } else {
            for (const auto& l : split_list(cfg.outcomes, ',')) outcomes.bell.push_back(parse_bell_label(l));
            for (const auto& z : split_list(cfg.z_bits, ',')) {
                if (z != "0" && z != "1") throw BadPairing("--zbits entries must be 0 or 1");
                outcomes.z_bits.push_back(z == "1" ? 1 : 0);
            }
        }
        b = concentrate::run(cfg.n, cfg.k, cfg.alpha, pairing, outcomes);
    }
    if (cfg.format == "csv") {
        emit(cfg, report::branch_csv_header() + "\n" + report::branch_csv_row(cfg.n, cfg.k, cfg.alpha, b) + "\n", out);
    } else {
        emit(cfg, dump(report::to_json(cfg.n, cfg.k, cfg.alpha, b)), out);
    }
}

void cmd_enumerate(const RunConfig& cfg, std::ostream& out) {
    require_format(cfg, {"csv", "json"});
    if (cfg.format == "csv") {
        std::ostringstream csv;
        csv << report::branch_csv_header() << '\n';
        concentrate::for_each_branch(cfg.n, cfg.k, cfg.alpha, [&](const concentrate::BranchResult& b) {
            csv << report::branch_csv_row(cfg.n, cfg.k, cfg.alpha, b) << '\n';
        });
        emit(cfg, csv.str(), out);
        return;
    }
    report::Json branches = report::Json::array();
    concentrate::for_each_branch(cfg.n, cfg.k, cfg.alpha, [&](const concentrate::BranchResult& b) {
        auto j = report::to_json(cfg.n, cfg.k, cfg.alpha, b);
        j.erase("command");
        j.erase("formula_refs");
        branches.push_back(std::move(j));
    });
    emit(cfg, dump(report::Json{{"command", "enumerate"}, {"n", cfg.n}, {"branches", branches}}), out);
}

void cmd_compare(const RunConfig& cfg, std::ostream& out) {
    require_format(cfg, {"json", "csv"});
    if (cfg.format == "csv") {
        const compare::CurveTable t = compare::curves(cfg.k, cfg.grid);
        emit(cfg, report::curves_csv(std::span(&t, 1), true), out);
    } else {
        emit(cfg, dump(report::to_json(compare::region_report(cfg.k))), out);
    }
}

void cmd_densecode(const RunConfig& cfg, double tolerance, std::ostream& out) {
    require_format(cfg, {"json"});
    emit(cfg, dump(report::to_json(densecode::run(cfg.n, cfg.k), tolerance)), out);
}

void cmd_figures(const RunConfig& cfg, std::ostream& out) {
    require_format(cfg, {"json", "csv"});
    const std::filesystem::path dir = cfg.out.empty() ? std::filesystem::path(".") : std::filesystem::path(cfg.out);
    std::filesystem::create_directories(dir);
    std::vector<compare::CurveTable> tables;
    for (double k : cfg.ks) tables.push_back(compare::curves(k, cfg.grid));
    report::write_atomically(dir / "fig1.csv", report::curves_csv(tables, false));
    report::write_atomically(dir / "fig2.csv", report::curves_csv(tables, true));
    out << (dir / "fig1.csv").string() << '\n' << (dir / "fig2.csv").string() << '\n';
}

}  // namespace

double report_tolerance() {
    const char* env = std::getenv("WLAB_TOL");
    if (env == nullptr || *env == '\0') return tol::kDefault;
    char* end = nullptr;
    const double v = std::strtod(env, &end);
    if (end == env || *end != '\0' || !(v > 0.0) || !std::isfinite(v)) {
        throw BadParams(std::string("WLAB_TOL must be a positive number, got '") + env + "'");
    }
    return v;
}

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
    CLI::App app{"W-type state protocol simulator", "wlab"};
    app.require_subcommand(1, 1);
    RunConfig cfg;

    auto add_common = [&](CLI::App* sub) {
        sub->add_option("--out", cfg.out, "Output file (directory for figures); stdout when omitted");
        sub->add_option("--format", cfg.format, "json or csv")->check(CLI::IsMember({"json", "csv"}));
    };
    auto add_resource = [&](CLI::App* sub) {
        sub->add_option("--n", cfg.n, "Resource size (qubits)");
        sub->add_option("--k", cfg.k, "Family parameter k >= 0");
    };
    auto add_phases = [&](CLI::App* sub) {
        sub->add_option("--phases", cfg.phases, "n-1 phases (radians) for terms 2..n")->delimiter(',');
        sub->add_flag("--random-phases", cfg.random_phases, "Draw phases uniformly from [0, 2pi)");
        sub->add_option("--seed", cfg.seed, "Seed for --random-phases");
        sub->add_option("--variant", cfg.variant, "corrected or as-printed")
            ->check(CLI::IsMember({"corrected", "as-printed"}));
    };

    auto* teleport_cmd = app.add_subcommand("teleport", "Run single-qubit teleportation");
    add_resource(teleport_cmd);
    add_phases(teleport_cmd);
    teleport_cmd->add_option("--alpha", cfg.alpha, "Input amplitude alpha in [0,1]");
    add_common(teleport_cmd);

    auto* audit_cmd = app.add_subcommand("audit", "Gram matrix and decomposition audit of the measurement basis");
    add_resource(audit_cmd);
    add_phases(audit_cmd);
    add_common(audit_cmd);

    auto* conc_cmd = app.add_subcommand("concentrate", "Run one concentration branch");
    add_resource(conc_cmd);
    conc_cmd->add_option("--alpha", cfg.alpha, "Input-pair amplitude alpha in [0,1]");
    conc_cmd->add_option("--case", cfg.case_no, "Named case (1..4 for n=4, 1..3 for n=3)");
    conc_cmd->add_option("--pairs", cfg.pairs, "Bell pairs, e.g. b-1,2-3");
    conc_cmd->add_option("--singles", cfg.singles, "Computational-basis qubits, e.g. 4,5");
    conc_cmd->add_option("--remaining", cfg.remaining, "Unmeasured Alice qubit");
    conc_cmd->add_option("--outcomes", cfg.outcomes, "Bell outcomes, e.g. phi+,psi-");
    conc_cmd->add_option("--zbits", cfg.z_bits, "Computational outcomes, e.g. 0,1");
    add_common(conc_cmd);

    auto* enum_cmd = app.add_subcommand("enumerate", "Every concentration branch for (n, k, alpha)");
    add_resource(enum_cmd);
    enum_cmd->add_option("--alpha", cfg.alpha, "Input-pair amplitude alpha in [0,1]");
    add_common(enum_cmd);

    auto* cmp_cmd = app.add_subcommand("compare", "Three- vs four-qubit resource regions");
    cmp_cmd->add_option("--k", cfg.k, "Family parameter k >= 0");
    cmp_cmd->add_option("--grid", cfg.grid, "alpha^2 grid size for csv output");
    add_common(cmp_cmd);

    auto* dc_cmd = app.add_subcommand("densecode", "Superdense coding report");
    add_resource(dc_cmd);
    add_common(dc_cmd);

    auto* fig_cmd = app.add_subcommand("figures", "Write fig1.csv and fig2.csv");
    fig_cmd->add_option("--grid", cfg.grid, "alpha^2 grid size");
    fig_cmd->add_option("--ks", cfg.ks, "k values, e.g. 0.5,1,2,10")->delimiter(',');
    add_common(fig_cmd);

    std::vector<std::string> reversed(args.rbegin(), args.rend());
    try {
        app.parse(reversed);
    } catch (const CLI::CallForHelp&) {
        out << app.help();
        return kExitOk;
    } catch (const CLI::ParseError& e) {
        err << "wlab: " << e.what() << '\n';
        return kExitUsage;
    }

    // Branch tables default to csv.
    if (enum_cmd->parsed() && enum_cmd->count("--format") == 0) cfg.format = "csv";

    try {
        const double tolerance = report_tolerance();
        if (teleport_cmd->parsed()) cmd_teleport(cfg, tolerance, out);
        if (audit_cmd->parsed()) cmd_audit(cfg, tolerance, out);
        if (conc_cmd->parsed()) cmd_concentrate(cfg, out);
        if (enum_cmd->parsed()) cmd_enumerate(cfg, out);
        if (cmp_cmd->parsed()) cmd_compare(cfg, out);
        if (dc_cmd->parsed()) cmd_densecode(cfg, tolerance, out);
        if (fig_cmd->parsed()) cmd_figures(cfg, out);
    } catch (const Error& e) {
        err << "wlab: " << e.what() << '\n';
        return kExitUsage;
    } catch (const std::exception& e) {
        err << "wlab: " << e.what() << '\n';
        return kExitFailure;
    }
    return kExitOk;
}

}  // namespace wlab::cli
