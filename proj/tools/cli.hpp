#pragma once

// Command-line front end. run() takes the argument vector (program name
// first) and returns the process exit code:
//   0 success, 2 bad parameters or format/graph mismatch,
//   3 solver budget exhausted, 4 classification mismatch in `verify`.

#include "torchroma/torchroma.hpp"

#include <CLI11.hpp>
#include <json.hpp>

#include <cstdint>
#include <cstdlib>
#include <fstream>
#include <iomanip>
#include <iostream>
#include <optional>
#include <ostream>
#include <sstream>
#include <string>
#include <vector>

namespace torchroma::cli {

inline constexpr int exit_ok = 0;
inline constexpr int exit_bad_input = 2;
inline constexpr int exit_budget = 3;
inline constexpr int exit_mismatch = 4;

inline constexpr const char* budget_env = "TORCHROMA_BUDGET_NODES";

struct Triple {
    std::int64_t r = 0;
    std::int64_t s = 0;
    std::int64_t t = 0;

    TorusParams params() const { return {r, s, t}; }
};

struct BudgetFlags {
    std::optional<std::uint64_t> nodes;
    double seconds = SolveBudget{}.time_limit_seconds;

    SolveBudget resolve() const
    {
        SolveBudget b;
        b.time_limit_seconds = seconds;
        if (nodes) {
            b.node_limit = *nodes;
        } else if (const char* env = std::getenv(budget_env)) {
            b.node_limit = std::stoull(env);
        }
        return b;
    }
};

inline void add_triple(CLI::App* cmd, Triple& triple)
{
    cmd->add_option("-r", triple.r, "columns (r >= 1)")->required();
    cmd->add_option("-s", triple.s, "rows (s >= 1)")->required();
    cmd->add_option("-t", triple.t, "seam shift (0 <= t < s)")->required();
}

inline void add_budget(CLI::App* cmd, BudgetFlags& budget)
{
    cmd->add_option("--budget", budget.nodes, std::string("solver node limit (default from ") + budget_env + ")");
    cmd->add_option("--time-limit", budget.seconds, "solver wall-clock limit in seconds");
}

inline std::string dump(const nlohmann::json& j, bool pretty)
{
    return pretty ? j.dump(2) : j.dump();
}

inline nlohmann::json params_json(const TorusParams& p)
{
    return {{"r", p.r}, {"s", p.s}, {"t", p.t}};
}

inline int cmd_info(const TorusParams& p, bool pretty, std::ostream& out)
{
    const auto g = build_graph(p);
    const auto report = classify_edges(g);
    const auto len = normal_circuit_lengths(p);
    nlohmann::json j = params_json(p);
    j["n"] = p.order();
    j["simple"] = report.is_simple;
    j["loops"] = report.has_loops;
    j["parallel_edges"] = report.has_parallel_edges;
    auto loops = nlohmann::json::array();
    for (auto v : report.loop_vertices) {
        loops.push_back(v + 1);
    }
    auto pairs = nlohmann::json::array();
    for (const auto& [u, v] : report.parallel_pairs) {
        pairs.push_back({u + 1, v + 1});
    }
    j["loop_vertices"] = std::move(loops);
    j["parallel_pairs"] = std::move(pairs);
    j["circuits"] = {len.a, len.b, len.c};
    j["canonical"] = params_json(canonical_form(p));
    out << dump(j, pretty) << "\n";
    return exit_ok;
}

inline int cmd_classify(const TorusParams& p, bool pretty, std::ostream& out)
{
    out << dump(verdict_json(p, classify(p)), pretty) << "\n";
    return exit_ok;
}

inline Coloring color_with(const TorusParams& p, const std::string& strategy, const SolveBudget& budget)
{
    if (strategy == "auto") {
        return best_coloring(p, budget);
    }
    if (strategy == "three-pattern") {
        return color_three_pattern(p);
    }
    if (strategy == "two-columns") {
        return color_two_columns(p);
    }
    if (strategy == "t1s2-pattern") {
        if (p.r != 1 || p.t != 2) {
            throw precondition_error("t1s2-pattern needs r = 1 and t = 2");
        }
        return color_t1s2(p.s);
    }
    if (strategy == "vertical-tiling") {
        return color_by_vertical_tiling(p, budget);
    }
    if (strategy == "reparam-tiling") {
        return color_by_reparam_tiling(p, budget);
    }
    if (strategy == "column-shifts") {
        return color_by_column_shifts(p, budget);
    }
    // exact
    const auto verdict = classify(p);
    if (verdict.has_loops()) {
        throw std::domain_error(to_string(p) + " has loops and cannot be colored");
    }
    const auto solved = solve_exact(build_graph(p), verdict.chi, budget);
    if (solved.status == SolveStatus::budget_exceeded) {
        throw budget_exceeded("solver budget exhausted while coloring " + to_string(p));
    }
    if (solved.status == SolveStatus::proven_none) {
        throw std::logic_error(to_string(p) + " has no " + std::to_string(verdict.chi) + "-coloring");
    }
    return *solved.coloring;
}

inline int cmd_color(const TorusParams& p, const std::string& strategy, const std::string& format, bool check,
                     const SolveBudget& budget, bool pretty, std::ostream& out, std::ostream& err)
{
    const auto c = color_with(p, strategy, budget);
    if (check && !verify_coloring(build_graph(p), c)) {
        err << "error: coloring of " << to_string(p) << " failed re-verification\n";
        return 1;
    }
    if (format == "grid") {
        out << to_string(p) << " k=" << c.k << " strategy=" << c.strategy << "\n" << render_grid(c);
    } else {
        out << dump(coloring_json(c), pretty) << "\n";
    }
    return exit_ok;
}

inline int cmd_enumerate(std::int64_t n, bool pretty, std::ostream& out)
{
    out << dump(enumeration_json(enumerate_order(n)), pretty) << "\n";
    return exit_ok;
}

inline int cmd_verify(std::int64_t max_n, const SolveBudget& budget, unsigned jobs, std::ostream& out)
{
    if (max_n < 1) {
        throw std::invalid_argument("--max-n must be at least 1");
    }
    const auto report = verify_sweep(max_n, budget, jobs);
    out << std::setw(4) << "n" << std::setw(9) << "classes" << std::setw(7) << "loops";
    for (int k = 3; k <= 7; ++k) {
        out << std::setw(6) << ("chi" + std::to_string(k));
    }
    out << "\n";
    for (const auto& row : report.rows) {
        out << std::setw(4) << row.n << std::setw(9) << row.classes << std::setw(7) << row.loops;
        for (std::size_t k = 3; k <= 7; ++k) {
            out << std::setw(6) << row.by_chi[k];
        }
        out << "\n";
    }
    for (const auto& e : report.entries) {
        if (e.mismatch()) {
            out << "MISMATCH " << to_string(e.params) << " oracle=" << e.oracle.chi << " (" << e.oracle.rule
                << ") exact=" << e.exact << "\n";
        }
        if (e.budget_exhausted) {
            out << "BUDGET " << to_string(e.params) << " oracle=" << e.oracle.chi << "\n";
        }
    }
    out << "classes=" << report.entries.size() << " mismatches=" << report.mismatches()
        << " budget_exhausted=" << report.budget_failures() << "\n";
    if (report.mismatches() > 0) {
        return exit_mismatch;
    }
    if (report.budget_failures() > 0) {
        return exit_budget;
    }
    return exit_ok;
}

inline int cmd_export(const TorusParams& p, const std::string& format, bool simplify, const std::string& output,
                      bool pretty, std::ostream& out)
{
    const auto g = build_graph(p);
    std::string text;
    if (format == "dimacs") {
        text = simplify ? to_dimacs(underlying_simple_graph(g)) : to_dimacs(g);
    } else if (format == "dot") {
        text = simplify ? to_dot(underlying_simple_graph(g)) : to_dot(g);
    } else {
        text = dump(simplify ? to_json(underlying_simple_graph(g)) : to_json(g), pretty) + "\n";
    }
    if (output.empty() || output == "-") {
        out << text;
    } else {
        std::ofstream file(output, std::ios::binary);
        if (!file) {
            throw std::invalid_argument("cannot open " + output + " for writing");
        }
        file << text;
    }
    return exit_ok;
}

inline int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err)
{
    CLI::App app{"Six-regular toroidal triangulations T(r,s,t): construction, chromatic number, colorings",
                 "torchroma"};
    app.require_subcommand(1);
    bool pretty = false;
    app.add_flag("--pretty", pretty, "indent JSON output");

    Triple triple;
    BudgetFlags budget;

    auto* info = app.add_subcommand("info", "order, edge report, normal circuits and canonical form");
    add_triple(info, triple);

    auto* classify_cmd = app.add_subcommand("classify", "chromatic number from the classification");
    add_triple(classify_cmd, triple);

    auto* color = app.add_subcommand("color", "verified coloring with the minimum number of colors");
    add_triple(color, triple);
    add_budget(color, budget);
    bool check = false;
    std::string strategy = "auto";
    std::string color_format = "json";
    color->add_flag("--check", check, "re-verify the coloring before printing");
    color->add_option("--strategy", strategy, "auto or one specific construction")
        ->check(CLI::IsMember({"auto", "three-pattern", "two-columns", "t1s2-pattern", "vertical-tiling",
                               "reparam-tiling", "column-shifts", "exact"}));
    color->add_option("--format", color_format, "json or grid")->check(CLI::IsMember({"json", "grid"}));

    auto* enumerate = app.add_subcommand("enumerate", "canonical classes of a given order");
    std::int64_t order = 0;
    enumerate->add_option("-n,--order", order, "number of vertices")->required()->check(CLI::PositiveNumber);

    auto* verify = app.add_subcommand("verify", "compare the classification with the exact solver");
    std::int64_t max_n = 0;
    unsigned jobs = 1;
    verify->add_option("--max-n", max_n, "largest order to sweep")->required();
    verify->add_option("--jobs", jobs, "worker threads")->check(CLI::PositiveNumber);
    add_budget(verify, budget);

    auto* exporter = app.add_subcommand("export", "write the graph as DOT, DIMACS or JSON");
    add_triple(exporter, triple);
    std::string export_format = "json";
    bool simplify = false;
    std::string output;
    exporter->add_option("--format", export_format, "dot, dimacs or json")
        ->check(CLI::IsMember({"dot", "dimacs", "json"}));
    exporter->add_flag("--simplify", simplify, "collapse parallel edges first");
    exporter->add_option("-o,--output", output, "output file (default stdout)");

    std::vector<std::string> reversed(args.rbegin(), args.rend());
    if (!reversed.empty()) {
        reversed.pop_back(); // program name
    }
    try {
        app.parse(reversed);
    } catch (const CLI::CallForHelp&) {
        out << app.help();
        return exit_ok;
    } catch (const CLI::CallForAllHelp&) {
        out << app.help("", CLI::AppFormatMode::All);
        return exit_ok;
    } catch (const CLI::ParseError& e) {
        err << "error: " << e.what() << "\n";
        return exit_bad_input;
    }

    try {
        const auto p = triple.params();
        if (*info || *classify_cmd || *color || *exporter) {
            validate(p);
        }
        if (*info) {
            return cmd_info(p, pretty, out);
        }
        if (*classify_cmd) {
            return cmd_classify(p, pretty, out);
        }
        if (*color) {
            return cmd_color(p, strategy, color_format, check, budget.resolve(), pretty, out, err);
        }
        if (*enumerate) {
            return cmd_enumerate(order, pretty, out);
        }
        if (*verify) {
            return cmd_verify(max_n, budget.resolve(), jobs, out);
        }
        return cmd_export(p, export_format, simplify, output, pretty, out);
    } catch (const budget_exceeded& e) {
        err << "error: " << e.what() << "\n";
        return exit_budget;
    } catch (const std::invalid_argument& e) {
        err << "error: " << e.what() << "\n";
        return exit_bad_input;
    } catch (const std::domain_error& e) {
        err << "error: " << e.what() << "\n";
        return exit_bad_input;
    } catch (const std::exception& e) {
        err << "internal error: " << e.what() << "\n";
        return 1;
    }
}

} // namespace torchroma::cli
