// chroma: contraction heuristic for chromatic number estimation, exact
// oracle, graph generators, and a random-sweep counterexample miner.
//
// Exit codes: 0 ok, 1 usage error, 2 input parse error, 3 budget exhausted,
// 4 heuristic/exact disagreement under --strict, 5 soundness violation
// (heuristic below exact; indicates a bug, never expected).

#include <chrono>
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <json.hpp>

#include "chroma/corpus.hpp"
#include "chroma/io.hpp"
#include "chroma/log.hpp"
#include "chroma/mine.hpp"
#include "chroma/oracle.hpp"
#include "chroma/solver.hpp"

namespace {

using namespace chroma;

// Failure with a decided exit code; main only prints and forwards it.
struct CliError : std::runtime_error {
    int code;
    CliError(int code_, const std::string& msg) : std::runtime_error(msg), code(code_) {}
};

struct LoadedInput {
    Graph graph;
    std::string name;
};

LoadedInput load_input(const std::string& input, const std::string& format) {
    if (looks_like_family_spec(input)) {
        try {
            return {generate(parse_family_spec(input)), input};
        } catch (const SpecError& e) {
            throw CliError(1, std::string("bad family spec: ") + e.what());
        }
    }
    std::ifstream in(input, std::ios::binary);
    if (!in) throw CliError(2, "cannot read input file: " + input);
    std::ostringstream buf;
    buf << in.rdbuf();
    try {
        if (format == "edgelist") return {parse_edge_list(buf.str()), input};
        ParsedGraph parsed = parse_dimacs(buf.str());
        for (const auto& w : parsed.warnings) log::warn(input + ": " + w);
        return {std::move(parsed.graph), input};
    } catch (const ParseError& e) {
        throw CliError(2, input + ": " + e.what());
    }
}

TiePolicy policy_or_die(const std::string& text) {
    const auto p = parse_tie_policy(text);
    if (!p) throw CliError(1, "unknown tie policy: " + text + " (expected lexmin, lexmax, or random:<seed>)");
    return *p;
}

long long elapsed_ms(std::chrono::steady_clock::time_point t0) {
    return std::chrono::duration_cast<std::chrono::milliseconds>(
               std::chrono::steady_clock::now() - t0)
        .count();
}

void emit_report(RunReport& r) {
    validate_report(r);
    std::cout << write_report(r);
}

void emit_coloring(const Coloring& c) {
    for (const auto& [v, color] : c.assignment) std::cout << v << " " << color << "\n";
}

struct CommonOpts {
    std::string input;
    std::string format = "dimacs";
    std::string policy = "lexmin";
    bool trace = false;
    bool coloring = false;
    bool strict = false;
    long long max_nodes = Budget{}.max_nodes;
    long long max_partitions = Budget{}.max_partitions;

    Budget budget() const { return {max_nodes, max_partitions}; }
};

int cmd_solve(const CommonOpts& o) {
    auto [g, name] = load_input(o.input, o.format);
    if (g.vertex_count() > 1 && !g.is_connected())
        log::warn(name + ": graph is disconnected; components are colored independently");
    const TiePolicy policy = policy_or_die(o.policy);

    const auto t0 = std::chrono::steady_clock::now();
    const SolveResult res = run_operation1(g, policy);
    const long long ms = elapsed_ms(t0);

    RunReport r;
    r.input_name = name;
    r.n = g.vertex_count();
    r.m = g.edge_count();
    r.tie_policy = to_string(policy);
    r.heuristic_clique_order = res.clique_order;
    r.heuristic_steps = res.steps;
    if (o.trace) {
        r.trace_included = true;
        r.trace = res.trace;
    }
    r.wall_times_ms = {{"heuristic", ms}};
    emit_report(r);
    if (o.coloring) emit_coloring(res.coloring);
    return 0;
}

int cmd_exact(const CommonOpts& o) {
    auto [g, name] = load_input(o.input, o.format);

    const auto t0 = std::chrono::steady_clock::now();
    const ChiResult res = exact_chromatic_number(g, o.budget());
    const long long ms = elapsed_ms(t0);

    RunReport r;
    r.input_name = name;
    r.n = g.vertex_count();
    r.m = g.edge_count();
    r.exact_chi = res.chi;
    r.exact_status = res.status == SearchStatus::Exact ? "exact" : "exhausted";
    r.wall_times_ms = {{"exact", ms}};
    emit_report(r);
    if (o.coloring && res.witness) emit_coloring(*res.witness);
    if (res.status != SearchStatus::Exact) {
        log::warn(name + ": search budget exhausted before an exact answer");
        return 3;
    }
    return 0;
}

int cmd_compare(const CommonOpts& o) {
    auto [g, name] = load_input(o.input, o.format);
    const TiePolicy policy = policy_or_die(o.policy);

    const auto th = std::chrono::steady_clock::now();
    const SolveResult heur = run_operation1(g, policy);
    const long long hms = elapsed_ms(th);
    const auto te = std::chrono::steady_clock::now();
    const ChiResult exact = exact_chromatic_number(g, o.budget());
    const long long ems = elapsed_ms(te);

    RunReport r;
    r.input_name = name;
    r.n = g.vertex_count();
    r.m = g.edge_count();
    r.tie_policy = to_string(policy);
    r.heuristic_clique_order = heur.clique_order;
    r.heuristic_steps = heur.steps;
    r.exact_chi = exact.chi;
    r.exact_status = exact.status == SearchStatus::Exact ? "exact" : "exhausted";
    if (exact.chi) r.agreement = heur.clique_order == *exact.chi;
    if (o.trace) {
        r.trace_included = true;
        r.trace = heur.trace;
    }
    r.wall_times_ms = {{"heuristic", hms}, {"exact", ems}};
    emit_report(r);

    if (exact.status != SearchStatus::Exact) {
        log::warn(name + ": search budget exhausted before an exact answer");
        return 3;
    }
    if (heur.clique_order < *exact.chi) {
        std::cerr << "chroma: SOUNDNESS VIOLATION: heuristic " << heur.clique_order
                  << " below exact " << *exact.chi << " on " << name << "\n";
        return 5;
    }
    if (o.strict && heur.clique_order != *exact.chi) return 4;
    return 0;
}

int cmd_gen(const std::string& spec, const std::string& out_path) {
    Graph g;
    try {
        g = generate(parse_family_spec(spec));
    } catch (const SpecError& e) {
        throw CliError(1, std::string("bad family spec: ") + e.what());
    }
    std::ofstream out(out_path, std::ios::binary);
    if (!out) throw CliError(1, "cannot open output file: " + out_path);
    out << write_dimacs(g);
    if (!out) throw CliError(1, "failed writing output file: " + out_path);
    log::info("wrote " + out_path + ": " + std::to_string(g.vertex_count()) + " vertices, " +
              std::to_string(g.edge_count()) + " edges");
    return 0;
}

int cmd_mine(const MineConfig& cfg) {
    const auto t0 = std::chrono::steady_clock::now();
    MineResult res;
    try {
        res = run_mine(cfg);
    } catch (const SpecError& e) {
        throw CliError(1, e.what());
    }
    const auto written = persist_counterexamples(cfg, res);
    std::cout << mine_summary_json(cfg, res, elapsed_ms(t0));

    for (const auto& base : written) log::info("persisted counterexample " + base);
    if (res.soundness_violation) {
        std::cerr << "chroma: SOUNDNESS VIOLATION: " << res.soundness_message << "\n";
        return 5;
    }
    if (res.exhausted > 0) {
        log::warn(std::to_string(res.exhausted) + " instance(s) exhausted the oracle budget");
        return 3;
    }
    return 0;
}

int cmd_check_condition1(const CommonOpts& o) {
    auto [g, name] = load_input(o.input, o.format);
    Condition1Report rep;
    try {
        rep = check_condition1(g, o.budget());
    } catch (const GraphError& e) {
        throw CliError(1, name + ": " + e.what());
    }

    nlohmann::ordered_json j;
    j["report_version"] = 1;
    j["input_name"] = name;
    j["pair"] = {rep.pair.u, rep.pair.v};
    j["g0_chi"] = rep.g0_chi;
    j["holds_for_some_partition"] = rep.holds_for_some_partition;
    j["holds_for_all_partitions"] = rep.holds_for_all_partitions;
    j["partitions_checked"] = rep.partitions_checked;
    if (rep.witness_partition)
        j["witness_partition"] = rep.witness_partition->classes;
    else
        j["witness_partition"] = nullptr;
    j["exhausted"] = rep.exhausted;
    std::cout << j.dump(2) << "\n";

    if (rep.exhausted) {
        log::warn(name + ": partition enumeration budget exhausted");
        return 3;
    }
    return 0;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Chromatic number estimation by max-common-neighborhood contraction"};
    app.require_subcommand(1);

    CommonOpts opts;
    std::string gen_spec, gen_out;
    MineConfig mine_cfg;
    std::vector<std::string> mine_policies;
    std::uint64_t mine_seed = 1;

    auto add_input = [&](CLI::App* sub) {
        sub->add_option("input", opts.input, "graph file or family spec (complete:n, cycle:n, path:n, kbipartite:a,b, star:n, petersen, mycielski:<spec>:iters, random:n,p,seed)")
            ->required();
        sub->add_option("--format", opts.format, "input file format")
            ->check(CLI::IsMember({"dimacs", "edgelist"}))
            ->capture_default_str();
    };
    auto add_budget = [&](CLI::App* sub) {
        sub->add_option("--max-nodes", opts.max_nodes, "search node budget for the exact oracle")
            ->capture_default_str();
        sub->add_option("--max-partitions", opts.max_partitions, "partition enumeration budget")
            ->capture_default_str();
    };

    CLI::App* solve = app.add_subcommand("solve", "run the contraction heuristic");
    add_input(solve);
    solve->add_option("--policy", opts.policy, "tie policy: lexmin, lexmax, random:<seed>")
        ->capture_default_str();
    solve->add_flag("--trace", opts.trace, "include per-step contraction trace in the report");
    solve->add_flag("--coloring", opts.coloring, "print '<vertex> <color>' lines after the report");

    CLI::App* exact = app.add_subcommand("exact", "run the exact chromatic-number oracle");
    add_input(exact);
    exact->add_flag("--coloring", opts.coloring, "print an optimal coloring after the report");
    add_budget(exact);

    CLI::App* compare = app.add_subcommand("compare", "run heuristic and oracle, report agreement");
    add_input(compare);
    compare->add_option("--policy", opts.policy, "tie policy: lexmin, lexmax, random:<seed>")
        ->capture_default_str();
    compare->add_flag("--trace", opts.trace, "include per-step contraction trace in the report");
    compare->add_flag("--strict", opts.strict, "exit 4 when heuristic and exact disagree");
    add_budget(compare);

    CLI::App* gen = app.add_subcommand("gen", "generate a family graph as a DIMACS file");
    gen->add_option("spec", gen_spec, "family spec")->required();
    gen->add_option("output", gen_out, "output .col path")->required();

    CLI::App* mine = app.add_subcommand("mine", "sweep random graphs for heuristic/exact disagreements");
    mine->add_option("--n-min", mine_cfg.n_min, "smallest vertex count")->capture_default_str();
    mine->add_option("--n-max", mine_cfg.n_max, "largest vertex count")->capture_default_str();
    mine->add_option("--p", mine_cfg.p_list, "edge probabilities")
        ->delimiter(',')
        ->capture_default_str();
    mine->add_option("--count", mine_cfg.count, "instances per (n, p) cell")->capture_default_str();
    mine->add_option("--seed", mine_seed, "master seed")->capture_default_str();
    mine->add_option("--policy", mine_policies,
                     "tie policies to compare (default lexmin,lexmax,random:1)")
        ->delimiter(',');
    mine->add_option("--out", mine_cfg.out_dir, "directory for persisted counterexamples");
    mine->add_option("--max-nodes", mine_cfg.budget.max_nodes, "oracle node budget per instance")
        ->capture_default_str();
    mine->add_option("--max-partitions", mine_cfg.budget.max_partitions,
                     "partition budget per instance")
        ->capture_default_str();

    CLI::App* cond1 = app.add_subcommand("check-condition1",
                                         "enumerate optimal partitions of G minus the selected "
                                         "pair and test the neighborhood-disjointness condition");
    add_input(cond1);
    add_budget(cond1);

    int rc = 0;
    try {
        solve->callback([&] { rc = cmd_solve(opts); });
        exact->callback([&] { rc = cmd_exact(opts); });
        compare->callback([&] { rc = cmd_compare(opts); });
        gen->callback([&] { rc = cmd_gen(gen_spec, gen_out); });
        mine->callback([&] {
            mine_cfg.seed = mine_seed;
            if (mine_policies.empty()) mine_policies = {"lexmin", "lexmax", "random:1"};
            for (const auto& p : mine_policies) mine_cfg.policies.push_back(policy_or_die(p));
            rc = cmd_mine(mine_cfg);
        });
        cond1->callback([&] { rc = cmd_check_condition1(opts); });

        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::CallForAllHelp& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        return 1;
    } catch (const CliError& e) {
        std::cerr << "chroma: " << e.what() << "\n";
        return e.code;
    } catch (const ParseError& e) {
        std::cerr << "chroma: " << e.what() << "\n";
        return 2;
    } catch (const SpecError& e) {
        std::cerr << "chroma: " << e.what() << "\n";
        return 1;
    } catch (const GraphError& e) {
        std::cerr << "chroma: " << e.what() << "\n";
        return 1;
    } catch (const std::exception& e) {
        std::cerr << "chroma: internal error: " << e.what() << "\n";
        return 1;
    }
    return rc;
}
