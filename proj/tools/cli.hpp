#pragma once
#ifndef PATHREACH_TOOLS_CLI_HPP
#define PATHREACH_TOOLS_CLI_HPP

#include "pathreach/pathreach.hpp"
#include "pathreach/testkit.hpp"

#include <CLI11.hpp>

#include <algorithm>
#include <chrono>
#include <cstdint>
#include <fstream>
#include <iostream>
#include <sstream>
#include <stdexcept>
#include <string>
#include <vector>

namespace pathreach::cli {

// 0: affirmative answer or success. 1: negative answer (unreachable, invalid
// decomposition). 2: usage or input error.
enum class ExitStatus : int { Success = 0, Negative = 1, InputError = 2 };

namespace detail {

class InputError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

// "-" reads from `in`; anything else is a file path.
inline std::string slurp(const std::string& path, std::istream& in) {
    std::ostringstream buf;
    if (path == "-") {
        buf << in.rdbuf();
        return buf.str();
    }
    std::ifstream file(path, std::ios::binary);
    if (!file) {
        throw InputError("cannot open '" + path + "'");
    }
    buf << file.rdbuf();
    return buf.str();
}

struct Inputs {
    std::string graph_path;
    std::string decomp_path;
};

inline void check_one_stdin(const Inputs& paths) {
    if (paths.graph_path == "-" && paths.decomp_path == "-") {
        throw InputError("only one input may be read from stdin");
    }
}

inline void write_reach_line(std::ostream& out, const ReachResult& r) {
    if (r.reachable) {
        out << "REACHABLE switches=" << *r.min_switches << " iterations=" << r.iterations
            << " peak_words=" << r.peak_words << '\n';
    } else {
        out << "UNREACHABLE iterations=" << r.iterations << " peak_words=" << r.peak_words
            << '\n';
    }
}

inline void check_query(std::size_t n, VertexId s, VertexId t) {
    if (s >= n || t >= n) {
        throw InputError("query vertex outside [0, " + std::to_string(n) + ")");
    }
}

// Loads the decomposition and fixes the vertex range. With a graph, the
// decomposition must be a walk decomposition of it.
inline std::pair<WalkDecomposition, std::size_t> load_for_query(const Inputs& paths,
                                                                std::istream& in) {
    check_one_stdin(paths);
    WalkDecomposition w = parse_decomposition(slurp(paths.decomp_path, in));
    if (paths.graph_path.empty()) {
        const std::size_t n = w.vertex_bound();
        return {std::move(w), n};
    }
    const Digraph g = parse_graph(slurp(paths.graph_path, in));
    const ValidationReport report = validate_walk_decomposition(g, w);
    if (!report.ok()) {
        throw InputError("decomposition does not match graph: " +
                         std::string(to_string(report.violations.front().kind)) + " " +
                         report.violations.front().detail);
    }
    return {std::move(w), g.vertex_count()};
}

}  // namespace detail

// Parses `args` (without the program name) and runs one subcommand.
inline ExitStatus run(const std::vector<std::string>& args, std::istream& in, std::ostream& out,
                      std::ostream& err) {
    CLI::App app{"Reachability from walk decompositions and minimal DAG path decompositions",
                 "pathreach"};
    app.require_subcommand(1);

    detail::Inputs paths;
    VertexId from = 0;
    VertexId to = 0;
    ExitStatus status = ExitStatus::Success;

    auto* validate = app.add_subcommand("validate", "Check a decomposition against a graph");
    validate->add_option("--graph", paths.graph_path, "Graph file ('-' for stdin)")->required();
    validate->add_option("--decomp", paths.decomp_path, "Decomposition file ('-' for stdin)")
        ->required();
    bool as_walks = false;
    auto* paths_flag = validate->add_flag("--paths", "Require an edge-disjoint simple path "
                                                     "decomposition (default)");
    validate->add_flag("--walks", as_walks, "Only require the union of walks to equal the graph")
        ->excludes(paths_flag);

    auto add_query = [&](CLI::App* sub) {
        sub->add_option("--decomp", paths.decomp_path, "Decomposition file ('-' for stdin)")
            ->required();
        sub->add_option("--graph", paths.graph_path,
                        "Graph file; defaults to the union graph of the decomposition");
        sub->add_option("--from", from, "Source vertex")->required();
        sub->add_option("--to", to, "Target vertex")->required();
    };
    auto* reach = app.add_subcommand("reach", "Decide reachability using the decomposition");
    add_query(reach);
    auto* min_switches = app.add_subcommand("min-switches", "Print only the minimum switch count");
    add_query(min_switches);

    auto* decompose = app.add_subcommand("decompose", "Minimal path decomposition of a DAG");
    decompose->add_option("--graph", paths.graph_path, "Graph file ('-' for stdin)")->required();

    auto* lower_bound = app.add_subcommand("pathnum-lb", "Degree-imbalance lower bound on the "
                                                         "path number");
    lower_bound->add_option("--graph", paths.graph_path, "Graph file ('-' for stdin)")->required();

    testkit::InstanceSeed seed_spec;
    double edge_p = 0.0;
    auto* gen = app.add_subcommand("gen", "Generate seeded instances");
    gen->require_subcommand(1);
    auto* gen_walks = gen->add_subcommand("walks", "Random walk decomposition");
    gen_walks->add_option("--n", seed_spec.n, "Vertex count")->required();
    gen_walks->add_option("--k", seed_spec.k, "Walk count")->required();
    gen_walks->add_option("--max-len", seed_spec.max_len, "Maximum walk length in vertices")
        ->required();
    gen_walks->add_option("--seed", seed_spec.seed, "64-bit seed");
    auto* gen_dag = gen->add_subcommand("dag", "Random DAG with edges i<j");
    gen_dag->add_option("--n", seed_spec.n, "Vertex count")->required();
    gen_dag->add_option("--p", edge_p, "Edge probability")->required();
    gen_dag->add_option("--seed", seed_spec.seed, "64-bit seed");

    auto* oracle = app.add_subcommand("oracle", "Answer a query by brute force");
    oracle->add_option("--graph", paths.graph_path, "Graph file; BFS answer only");
    oracle->add_option("--decomp", paths.decomp_path, "Decomposition file; adds switch count");
    oracle->add_option("--from", from, "Source vertex")->required();
    oracle->add_option("--to", to, "Target vertex")->required();

    std::size_t queries = 100;
    std::uint64_t query_seed = 1;
    auto* bench = app.add_subcommand("bench", "Time random queries; CSV on stdout");
    auto* bench_decomp =
        bench->add_option("--decomp", paths.decomp_path, "Decomposition file ('-' for stdin)");
    bench->add_option("--n", seed_spec.n, "Generated instance: vertex count")
        ->excludes(bench_decomp);
    bench->add_option("--k", seed_spec.k, "Generated instance: walk count")
        ->excludes(bench_decomp);
    bench->add_option("--max-len", seed_spec.max_len, "Generated instance: maximum walk length")
        ->excludes(bench_decomp);
    bench->add_option("--seed", seed_spec.seed, "Generated instance: seed")
        ->excludes(bench_decomp);
    bench->add_option("--queries", queries, "Number of random (s, t) queries");
    bench->add_option("--query-seed", query_seed, "Seed for query selection");

    try {
        std::vector<std::string> reversed(args.rbegin(), args.rend());
        app.parse(reversed);
    } catch (const CLI::CallForHelp& e) {
        app.exit(e, out, err);
        return ExitStatus::Success;
    } catch (const CLI::CallForAllHelp& e) {
        app.exit(e, out, err);
        return ExitStatus::Success;
    } catch (const CLI::ParseError& e) {
        err << "error: " << e.what() << '\n';
        return ExitStatus::InputError;
    }

    try {
        if (validate->parsed()) {
            detail::check_one_stdin(paths);
            const Digraph g = parse_graph(detail::slurp(paths.graph_path, in));
            const WalkDecomposition w = parse_decomposition(detail::slurp(paths.decomp_path, in));
            const ValidationReport report =
                as_walks ? validate_walk_decomposition(g, w) : validate_path_decomposition(g, w);
            if (report.ok()) {
                out << "OK\n";
            } else {
                out << "INVALID violations=" << report.violations.size() << '\n';
                for (const Violation& v : report.violations) {
                    out << to_string(v.kind) << ' ' << v.detail << '\n';
                }
                status = ExitStatus::Negative;
            }
        } else if (reach->parsed() || min_switches->parsed()) {
            const auto [w, n] = detail::load_for_query(paths, in);
            detail::check_query(n, from, to);
            const ReachResult r = decide_reachability(w, n, from, to);
            if (reach->parsed()) {
                detail::write_reach_line(out, r);
            } else if (r.reachable) {
                out << *r.min_switches << '\n';
            } else {
                out << "UNREACHABLE\n";
            }
            status = r.reachable ? ExitStatus::Success : ExitStatus::Negative;
        } else if (decompose->parsed()) {
            const Digraph g = parse_graph(detail::slurp(paths.graph_path, in));
            write_decomposition(out, minimal_path_decomposition(g));
        } else if (lower_bound->parsed()) {
            const Digraph g = parse_graph(detail::slurp(paths.graph_path, in));
            out << path_number_lower_bound(g) << '\n';
        } else if (gen_walks->parsed()) {
            write_decomposition(out, testkit::gen_decomposed_instance(seed_spec));
        } else if (gen_dag->parsed()) {
            write_graph(out, testkit::gen_random_dag(seed_spec.n, edge_p, seed_spec.seed));
        } else if (oracle->parsed()) {
            if (paths.decomp_path.empty() && paths.graph_path.empty()) {
                throw detail::InputError("oracle needs --graph or --decomp");
            }
            bool reachable = false;
            if (!paths.decomp_path.empty()) {
                const auto [w, n] = detail::load_for_query(paths, in);
                detail::check_query(n, from, to);
                const auto switches = testkit::oracle_min_switches(w, n, from, to);
                reachable = switches.has_value();
                if (reachable) {
                    out << "REACHABLE switches=" << *switches << '\n';
                } else {
                    out << "UNREACHABLE\n";
                }
            } else {
                const Digraph g = parse_graph(detail::slurp(paths.graph_path, in));
                detail::check_query(g.vertex_count(), from, to);
                reachable = testkit::oracle_reachable(g, from, to);
                out << (reachable ? "REACHABLE" : "UNREACHABLE") << '\n';
            }
            status = reachable ? ExitStatus::Success : ExitStatus::Negative;
        } else if (bench->parsed()) {
            const WalkDecomposition w =
                paths.decomp_path.empty()
                    ? testkit::gen_decomposed_instance(seed_spec)
                    : parse_decomposition(detail::slurp(paths.decomp_path, in));
            const std::size_t n =
                paths.decomp_path.empty() ? seed_spec.n : w.vertex_bound();
            if (n == 0) {
                throw detail::InputError("bench needs a nonempty vertex range");
            }
            testkit::SeededRng rng(query_seed);
            out << "n,k,total_len,query,reachable,switches,iterations,peak_words,nanos\n";
            for (std::size_t q = 0; q < queries; ++q) {
                const auto s = static_cast<VertexId>(rng.below(n));
                const auto t = static_cast<VertexId>(rng.below(n));
                const auto start = std::chrono::steady_clock::now();
                const ReachResult r = decide_reachability(w, n, s, t);
                const auto nanos = std::chrono::duration_cast<std::chrono::nanoseconds>(
                                       std::chrono::steady_clock::now() - start)
                                       .count();
                out << n << ',' << w.size() << ',' << w.total_length() << ',' << s << ':' << t
                    << ',' << (r.reachable ? 1 : 0) << ',';
                if (r.min_switches) {
                    out << *r.min_switches;
                }
                out << ',' << r.iterations << ',' << r.peak_words << ',' << nanos << '\n';
            }
        }
    } catch (const std::exception& e) {
        err << "error: " << e.what() << '\n';
        return ExitStatus::InputError;
    }
    return status;
}

}  // namespace pathreach::cli

#endif  // PATHREACH_TOOLS_CLI_HPP
