// Command-line front end: parse cochain/codifferential/automorphism
// expressions, dispatch engine operations, emit text or JSON reports.
//
// Exit codes: 0 success (all rows match for replicate), 1 a check or
// replication reported a mismatch, 2 usage or input errors.

#include "CLI11.hpp"
#include "json.hpp"

#include "coda/classification.hpp"
#include "coda/expr.hpp"
#include "coda/families.hpp"
#include "coda/reduction.hpp"
#include "coda/replicate.hpp"

#include <iostream>

namespace {

using namespace coda;

struct Options {
    int depth = 12;
    std::string field = "qc";
    bool json = false;
};

bool uses_parameter(const Coderivation& d) {
    for (const auto& [w, f] : d.components())
        for (const auto& [b, c] : f.terms())
            if (!c.is_rational())
                return true;
    return false;
}

Coderivation parse_d(const std::string& text, const Options& opt) {
    Coderivation d = parse_coderivation(text, opt.depth);
    if (opt.field == "q" && uses_parameter(d))
        throw SyntaxError("expression uses the parameter c but --field q was given",
                          0);
    return d;
}

void print_cohomology(const CohomologyReport& h, const Options& opt) {
    if (opt.json) {
        std::cout << to_json(h) << "\n";
        return;
    }
    std::cout << "H^" << h.weight << ": dims " << h.even_dim << "|" << h.odd_dim
              << " (even|odd), certified to depth " << h.certified_to << "\n";
    for (const auto& rep : h.representatives)
        std::cout << "  class: " << render(rep) << "\n";
}

int print_table(const TableReport& t, const Options& opt, bool verbose) {
    if (opt.json) {
        std::cout << to_json(t) << "\n";
    } else {
        std::cout << t.table_id << ": " << t.rows.size() << " rows, "
                  << t.mismatches() << " mismatches\n";
        for (const auto& r : t.rows) {
            if (r.match && !verbose)
                continue;
            std::cout << "  [" << (r.match ? "ok" : "MISMATCH") << "] " << r.input
                      << "\n    expected: " << r.expected
                      << "\n    computed: " << r.computed << "\n    (" << r.citation
                      << ")\n";
        }
    }
    return t.ok() ? 0 : 1;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"exact engine for L-infinity structures on the 2|1 space"};
    app.require_subcommand(1);
    app.fallthrough();
    Options opt;
    app.add_option("--depth", opt.depth, "truncation / certification depth")
        ->capture_default_str();
    app.add_option("--field", opt.field, "coefficient field: q or qc")
        ->check(CLI::IsMember({"q", "qc"}))
        ->capture_default_str();
    app.add_flag("--json", opt.json, "emit machine-readable JSON");

    std::string expr_a, expr_b, table_id, mode = "leading";
    int weight = 2, level = 0;
    bool verbose = false;
    std::vector<std::string> linear_candidates;

    auto* cmd_bracket = app.add_subcommand("bracket", "bracket of two expressions");
    cmd_bracket->add_option("f", expr_a)->required();
    cmd_bracket->add_option("g", expr_b)->required();

    auto* cmd_check = app.add_subcommand("check", "codifferential check");
    cmd_check->add_option("d", expr_a)->required();

    auto* cmd_cohomology =
        app.add_subcommand("cohomology", "graded cohomology of a pure-degree d");
    cmd_cohomology->add_option("d", expr_a)->required();
    cmd_cohomology->add_option("--n", weight, "cochain weight")->required();

    auto* cmd_filtered =
        app.add_subcommand("filtered", "filtered cohomology of a codifferential");
    cmd_filtered->add_option("d", expr_a)->required();
    cmd_filtered->add_option("--n", weight, "cochain weight")->required();

    auto* cmd_act = app.add_subcommand("act", "apply an automorphism to d");
    cmd_act->add_option("g", expr_a)->required();
    cmd_act->add_option("d", expr_b)->required();

    auto* cmd_reduce =
        app.add_subcommand("reduce", "normal form modulo leading coboundary terms");
    cmd_reduce->add_option("f", expr_a)->required();
    cmd_reduce->add_option("--d", expr_b, "codifferential")->required();
    cmd_reduce->add_option("--mode", mode,
                           "leading | series | series2 (oracle conversions)");

    auto* cmd_obstruct = app.add_subcommand("obstruct", "extension obstruction");
    cmd_obstruct->add_option("d", expr_a)->required();
    cmd_obstruct->add_option("--n", level, "extension level")->required();

    auto* cmd_eliminate = app.add_subcommand("eliminate", "remove a removable term");
    cmd_eliminate->add_option("d", expr_a)->required();
    cmd_eliminate->add_option("--k", weight, "weight of the term")->required();

    auto* cmd_replicate = app.add_subcommand("replicate", "replication tables");
    cmd_replicate->add_option("id", table_id, "table id or 'all'")->required();
    cmd_replicate->add_flag("--verbose", verbose, "print matching rows too");

    auto* cmd_search = app.add_subcommand("search", "formal equivalence search");
    cmd_search->add_option("d", expr_a)->required();
    cmd_search->add_option("dprime", expr_b)->required();
    cmd_search->add_option("--lin", linear_candidates,
                           "candidate linear parts, lin(q; r,s,t,u)");

    CLI11_PARSE(app, argc, argv);

    try {
        if (*cmd_bracket) {
            Coderivation a = parse_d(expr_a, opt);
            Coderivation b = parse_d(expr_b, opt);
            Coderivation result = bracket(a, b, opt.depth);
            std::cout << render(result) << "\n";
        } else if (*cmd_check) {
            Coderivation d = parse_d(expr_a, opt);
            Certified c = is_codifferential(d);
            if (opt.json) {
                nlohmann::json j{{"codifferential", c.value},
                                 {"certified_to", c.depth}};
                std::cout << j.dump(2) << "\n";
            } else {
                std::cout << "codifferential: " << (c.value ? "true" : "false")
                          << " (certified up to truncation " << c.depth << ")\n";
            }
            return c.value ? 0 : 1;
        } else if (*cmd_cohomology) {
            print_cohomology(graded_cohomology(parse_d(expr_a, opt), weight), opt);
        } else if (*cmd_filtered) {
            print_cohomology(
                filtered_cohomology(parse_d(expr_a, opt), weight, opt.depth), opt);
        } else if (*cmd_act) {
            FormalAutomorphism g = parse_automorphism(expr_a, opt.depth);
            Coderivation d = parse_d(expr_b, opt);
            std::cout << render(pullback_formal(g, d, opt.depth)) << "\n";
        } else if (*cmd_reduce) {
            Coderivation d = parse_d(expr_b, opt);
            if (mode == "leading") {
                Cochain f = parse_cochain(expr_a);
                std::cout << render(reduce_mod_leading_coboundaries(d, f, opt.depth))
                          << "\n";
            } else {
                Coderivation x = parse_d(expr_a, opt);
                Conversion conv = mode == "series2" ? Conversion::to_second
                                                    : Conversion::to_third;
                ReducedSeries red = reduce_to_normal_series(d, x, opt.depth, conv);
                std::cout << render(red.residue) << "\n";
            }
        } else if (*cmd_obstruct) {
            Coderivation d = parse_d(expr_a, opt);
            ObstructionReport rep = obstruction(d, level);
            if (opt.json) {
                nlohmann::json j{{"weight", rep.weight},
                                 {"rhs", render(rep.rhs)},
                                 {"rhs_is_cocycle", rep.rhs_is_cocycle},
                                 {"solvable", rep.solvable}};
                if (rep.solution)
                    j["solution"] = render(*rep.solution);
                std::cout << j.dump(2) << "\n";
            } else {
                std::cout << "rhs (weight " << rep.weight << "): " << render(rep.rhs)
                          << "\n  cocycle: " << (rep.rhs_is_cocycle ? "yes" : "no")
                          << ", solvable: " << (rep.solvable ? "yes" : "no") << "\n";
                if (rep.solution)
                    std::cout << "  next component: " << render(*rep.solution)
                              << "\n";
            }
        } else if (*cmd_eliminate) {
            Coderivation d = parse_d(expr_a, opt);
            EliminationResult res = eliminate_term(d, weight, opt.depth);
            std::cout << (res.removed ? "removed" : "not removable") << "\n"
                      << render(res.result) << "\n";
            if (res.removed)
                std::cout << "generators: " << render(res.generators) << "\n";
        } else if (*cmd_replicate) {
            if (table_id == "all") {
                int status = 0;
                for (const auto& t : replicate_all(opt.depth))
                    status |= print_table(t, opt, verbose);
                return status;
            }
            return print_table(replicate(table_id, opt.depth), opt, verbose);
        } else if (*cmd_search) {
            Coderivation d = parse_d(expr_a, opt);
            Coderivation dp = parse_d(expr_b, opt);
            std::vector<LinearAutomorphism> lins;
            for (const auto& text : linear_candidates)
                lins.push_back(parse_automorphism(text, opt.depth).linear);
            SearchResult res = equivalence_search(d, dp, opt.depth, lins);
            if (res.found) {
                std::cout << "equivalent: found a formal automorphism ("
                          << res.moves.size() << " exp factors, linear part "
                          << res.linear_part.str() << ")\n";
            } else if (res.leading_terms_differ) {
                std::cout << "inequivalent: leading terms differ\n";
            } else {
                std::cout << "exhausted to depth " << res.certified_depth
                          << ": the weight-" << res.stuck_weight << " discrepancy "
                          << render(res.discrepancy)
                          << " is not the leading term of a coboundary\n";
            }
        }
    } catch (const UnknownTableError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    } catch (const SyntaxError& e) {
        std::cerr << "parse error: " << e.what() << "\n";
        return 2;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    }
    return 0;
}
