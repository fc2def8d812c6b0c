// Command-line front end: graph construction, resolving profiles, exact
// LFMD/FMD with certificates, family validation sweeps, table reproduction,
// and the full verification suite.
//
// Exit codes: 0 success, 1 validation/verification failure, 2 usage error,
// 3 capacity exceeded.

#include <exception>
#include <iostream>
#include <optional>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "lfmd/acceptance.hpp"
#include "lfmd/export.hpp"
#include "lfmd/families.hpp"
#include "lfmd/lfmd.hpp"
#include "lfmd/resolving.hpp"
#include "lfmd/tables.hpp"

namespace {

struct GraphFlags {
    std::string family;  // toeplitz | zd | zdstar
    int n = 0;
    std::string s;  // comma-separated difference set (toeplitz only)
};

void add_graph_flags(CLI::App* cmd, GraphFlags& f) {
    cmd->add_option("--family", f.family, "graph family: toeplitz, zd, zdstar")->required();
    cmd->add_option("--n", f.n, "order (toeplitz) or modulus (zd, zdstar)")->required();
    cmd->add_option("--s", f.s, "comma-separated difference set, e.g. 1,4,8 (toeplitz)");
}

std::set<int> parse_diffs(const std::string& s) {
    std::set<int> out;
    std::string cur;
    for (char c : s + ",") {
        if (c == ',') {
            if (!cur.empty()) out.insert(std::stoi(cur));
            cur.clear();
        } else {
            cur += c;
        }
    }
    return out;
}

lfmd::Graph build_from_flags(const GraphFlags& f) {
    if (f.family == "toeplitz") {
        if (f.s.empty()) throw lfmd::invalid_family_error("toeplitz requires --s");
        return lfmd::build_toeplitz(f.n, parse_diffs(f.s));
    }
    if (f.family == "zd") return lfmd::build_zero_divisor(f.n);
    if (f.family == "zdstar") return lfmd::build_zero_divisor_star(f.n);
    throw lfmd::invalid_family_error("unknown family: " + f.family);
}

std::pair<int, int> parse_range(const std::string& s) {
    auto pos = s.find("..");
    if (pos == std::string::npos) throw lfmd::invalid_input_error("range must be a..b");
    return {std::stoi(s.substr(0, pos)), std::stoi(s.substr(pos + 2))};
}

std::string approx(const lfmd::Rational& r) { return lfmd::to_decimal_string(r, 5); }

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Toeplitz / zero-divisor graph LFMD toolkit"};
    app.require_subcommand(1);
    lfmd::Caps caps = lfmd::Caps::from_env();

    GraphFlags gf_build, gf_resolve, gf_lfmd;
    std::string export_fmt = "json";
    std::string resolve_fmt = "json";
    bool with_ldim = false;
    bool with_fmd = false;
    std::string tag, range = "", table_id, table_fmt = "markdown";

    CLI::App* cmd_graph = app.add_subcommand("graph", "graph construction");
    CLI::App* cmd_build = cmd_graph->add_subcommand("build", "build and export a graph");
    add_graph_flags(cmd_build, gf_build);
    cmd_build->add_option("--export", export_fmt, "output format: json, dot, csv");

    CLI::App* cmd_resolve = app.add_subcommand("resolve", "per-edge resolving profile");
    add_graph_flags(cmd_resolve, gf_resolve);
    cmd_resolve->add_option("--export", resolve_fmt, "output format: json, csv");

    CLI::App* cmd_lfmd = app.add_subcommand("lfmd", "exact LFMD with bounds and certificate");
    add_graph_flags(cmd_lfmd, gf_lfmd);
    cmd_lfmd->add_flag("--with-integer-ldim", with_ldim, "include the n/(n-ldim+1) left bound");
    cmd_lfmd->add_flag("--with-fmd", with_fmd, "also solve the global FMD");

    CLI::App* cmd_family = app.add_subcommand("family", "closed-form family operations");
    CLI::App* cmd_validate = cmd_family->add_subcommand("validate", "claimed vs computed sweep");
    cmd_validate->add_option("--tag", tag, "family tag, e.g. TOEPLITZ_POW2")->required();
    cmd_validate->add_option("--range", range, "parameter range a..b")->required();

    CLI::App* cmd_tables = app.add_subcommand("tables", "reproduce a comparison table");
    cmd_tables->add_option("--id", table_id, "table id: T1, T2, TT2, T3, T4")->required();
    cmd_tables->add_option("--format", table_fmt, "markdown or csv");

    CLI::App* cmd_verify = app.add_subcommand("verify", "run the full verification suite");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        if (e.get_exit_code() == 0) return app.exit(e);  // --help
        app.exit(e);
        return 2;
    }

    try {
        if (cmd_build->parsed()) {
            lfmd::Graph g = build_from_flags(gf_build);
            std::cout << lfmd::export_graph(g, export_fmt);
            if (export_fmt == "json") std::cout << "\n";
            return 0;
        }
        if (cmd_resolve->parsed()) {
            lfmd::Graph g = build_from_flags(gf_resolve);
            lfmd::ResolvingProfile p = lfmd::edge_resolving_profile(g);
            if (resolve_fmt == "csv") {
                std::cout << lfmd::profile_to_csv(p);
            } else if (resolve_fmt == "json") {
                std::cout << lfmd::profile_to_json(p).dump(2) << "\n";
            } else {
                throw lfmd::unsupported_format_error("unsupported profile format: " + resolve_fmt);
            }
            return 0;
        }
        if (cmd_lfmd->parsed()) {
            lfmd::Graph g = build_from_flags(gf_lfmd);
            lfmd::check_order(g, caps);
            lfmd::DistanceMatrix d = lfmd::all_pairs_distances(g);
            lfmd::CoveringLp lp = lfmd::assemble_local_lp(g, d);
            lfmd::check_caps(g, lp, caps);
            lfmd::LpSolution sol = lfmd::solve_covering_lp(lp);
            bool cert = lfmd::verify_certificate(lp, sol);
            nlohmann::json out = lfmd::solution_to_json(g, lp, sol);
            out["certificate_verified"] = cert;
            if (g.edge_count() > 0) {
                lfmd::BoundReport b = lfmd::generic_bounds(g, with_ldim, caps);
                out["bounds"] = {{"upper_ell", lfmd::to_fraction_string(b.upper_ell)}};
                if (b.lower_nt) {
                    std::cout << "lower_nt  = " << lfmd::to_fraction_string(*b.lower_nt) << " (~"
                              << approx(*b.lower_nt) << ")\n";
                    out["bounds"]["lower_nt"] = lfmd::to_fraction_string(*b.lower_nt);
                }
                std::cout << "upper_ell = " << lfmd::to_fraction_string(b.upper_ell) << " (~"
                          << approx(b.upper_ell) << ")\n";
                if (b.lower_lemma) {
                    std::cout << "lower_lemma = " << lfmd::to_fraction_string(*b.lower_lemma)
                              << " (~" << approx(*b.lower_lemma) << ")\n";
                    out["bounds"]["lower_lemma"] = lfmd::to_fraction_string(*b.lower_lemma);
                }
            }
            std::cout << "lfmd = " << lfmd::to_fraction_string(sol.value) << " (~"
                      << approx(sol.value) << ")"
                      << (cert ? " [certified]" : " [CERTIFICATE FAILED]") << "\n";
            if (with_fmd) {
                lfmd::CoveringLp glp = lfmd::assemble_global_lp(g, d);
                lfmd::check_caps(g, glp, caps);
                lfmd::LpSolution gsol = lfmd::solve_covering_lp(glp);
                std::cout << "fmd  = " << lfmd::to_fraction_string(gsol.value) << " (~"
                          << approx(gsol.value) << ")\n";
                out["fmd"] = lfmd::to_fraction_string(gsol.value);
            }
            std::cout << out.dump(2) << "\n";
            return cert ? 0 : 1;
        }
        if (cmd_validate->parsed()) {
            auto [lo, hi] = parse_range(range);
            auto recs = lfmd::validate_family(lfmd::family_from_name(tag), lo, hi, caps);
            std::cout << lfmd::records_to_json(recs).dump(2) << "\n";
            return lfmd::has_blocking_violation(recs) ? 1 : 0;
        }
        if (cmd_tables->parsed()) {
            lfmd::Table t = lfmd::reproduce_table(lfmd::table_from_name(table_id));
            std::cout << (table_fmt == "csv" ? lfmd::table_to_csv(t) : lfmd::table_to_markdown(t));
            return 0;
        }
        if (cmd_verify->parsed()) {
            auto results = lfmd::run_acceptance();
            int failures = 0;
            for (const auto& r : results) {
                std::cout << (r.passed ? "[PASS] " : "[FAIL] ") << r.id << ". " << r.name << " — "
                          << r.details << "\n";
                if (!r.passed) ++failures;
            }
            std::cout << (failures == 0 ? "all criteria passed"
                                        : std::to_string(failures) + " criterion(s) failed")
                      << "\n";
            return failures == 0 ? 0 : 1;
        }
        std::cerr << "no subcommand\n";
        return 2;
    } catch (const lfmd::capacity_error& e) {
        std::cerr << "capacity error: " << e.what() << "\n";
        return 3;
    } catch (const std::invalid_argument& e) {
        std::cerr << "usage error: " << e.what() << "\n";
        return 2;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 1;
    }
}
