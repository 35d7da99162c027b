#include "levgraph/cli.hpp"

#include <algorithm>
#include <fstream>
#include <iostream>
#include <sstream>

#include <CLI11.hpp>
#include <json.hpp>

#include "levgraph/bench.hpp"
#include "levgraph/cypher.hpp"
#include "levgraph/error.hpp"
#include "levgraph/graph.hpp"
#include "levgraph/levels.hpp"
#include "levgraph/oracle.hpp"
#include "levgraph/reachability.hpp"

namespace levgraph::cli {

namespace {

using nlohmann::ordered_json;

struct UsageError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

struct Globals {
    std::string format;
    bool quiet = false;
    bool json_output = false;
};

GraphFormat resolve_format(const Globals& globals, const std::string& path) {
    if (!globals.format.empty()) {
        auto f = format_from_name(globals.format);
        if (!f) throw UsageError("unknown format \"" + globals.format + "\"");
        return *f;
    }
    return std::filesystem::path(path).extension() == ".tsv" ? GraphFormat::tsv : GraphFormat::json;
}

std::string read_file(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw Error("cannot read " + path);
    std::ostringstream ss;
    ss << in.rdbuf();
    return ss.str();
}

void write_text(const std::string& path, const std::string& text) {
    const auto parent = std::filesystem::path(path).parent_path();
    if (!parent.empty()) std::filesystem::create_directories(parent);
    std::ofstream out(path, std::ios::binary);
    out << text;
    if (!out) throw Error("cannot write " + path);
}

PropertyGraph load_graph(const Globals& globals, const std::string& path) {
    auto g = parse_graph(read_file(path), resolve_format(globals, path));
    auto diags = validate(g);
    if (!diags.empty()) throw InvalidGraphError(path + ": " + diags.front().message);
    return g;
}

ordered_json step_json(const PathStep& s) {
    return {{"id", s.edge}, {"src", s.src}, {"tgt", s.tgt}, {"val", s.val}};
}

ordered_json size_json(const SizeStats& s) {
    return {{"n_prime", s.n_prime}, {"e_prime", s.e_prime}, {"bound_n", s.bound_n}, {"bound_e", s.bound_e}};
}

std::string size_line(const SizeStats& s) {
    return "n_prime=" + std::to_string(s.n_prime) + " bound_n=" + std::to_string(s.bound_n) +
           " e_prime=" + std::to_string(s.e_prime) + " bound_e=" + std::to_string(s.bound_e);
}

void emit_ok(std::ostream& out, const ordered_json& result) {
    ordered_json env;
    env["ok"] = true;
    env["result"] = result;
    out << env.dump() << '\n';
}

}  // namespace

int dispatch(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
    CLI::App app{"Strictly increasing path queries through leveled-graph compilation", "levgraph"};
    app.require_subcommand(1);
    app.fallthrough();

    Globals globals;
    app.add_option("--format", globals.format, "Graph input format (json|tsv); default from file extension")
        ->check(CLI::IsMember({"json", "tsv"}));
    app.add_flag("--quiet", globals.quiet, "Suppress informational messages");
    app.add_flag("--json-output", globals.json_output, "Wrap results in {\"ok\":...,\"result\":...}");

    std::string graph_path, source, target, out_path;
    bool witness = false, pruned = false, parallel = false;
    long long timeout_ms = 10000;
    std::size_t nodes = 100, runs = 10;
    std::string edges_spec = "20:300:20";
    std::uint64_t seed = 0;
    std::int64_t val_min = 1, val_max = 1000;

    auto* parse_cmd = app.add_subcommand("parse", "Parse and validate a graph");
    parse_cmd->add_option("--graph", graph_path, "Graph file")->required();
    parse_cmd->add_option("--out", out_path, "Write the normalized graph here (format from extension)");

    auto* compile_cmd = app.add_subcommand("compile", "Build the leveled graph and report its size");
    compile_cmd->add_option("--graph", graph_path, "Graph file")->required();
    compile_cmd->add_option("--out", out_path, "Leveled graph JSON output file (default: stdout)");

    auto add_endpoints = [&](CLI::App* cmd) {
        cmd->add_option("--graph", graph_path, "Graph file")->required();
        cmd->add_option("--source", source, "Source node id")->required();
        cmd->add_option("--target", target, "Target node id")->required();
    };
    auto* query_cmd = app.add_subcommand("query", "Answer a strictly increasing path query via the leveled graph");
    add_endpoints(query_cmd);
    query_cmd->add_flag("--witness", witness, "Print a witness path as TSV");

    auto* oracle_cmd = app.add_subcommand("oracle", "Answer by exhaustive enumeration");
    add_endpoints(oracle_cmd);

    auto* baseline_cmd = app.add_subcommand("baseline", "Answer by trail enumeration with a post-filter");
    add_endpoints(baseline_cmd);
    baseline_cmd->add_option("--timeout-ms", timeout_ms, "Time budget in milliseconds")
        ->check(CLI::PositiveNumber);
    baseline_cmd->add_flag("--pruned", pruned, "Only extend trails with larger values");

    auto* gen_cmd = app.add_subcommand("gen", "Generate a seeded random graph");
    gen_cmd->add_option("--nodes", nodes, "Node count")->required()->check(CLI::PositiveNumber);
    std::size_t edge_count = 0;
    gen_cmd->add_option("--edges", edge_count, "Edge count")->required();
    gen_cmd->add_option("--seed", seed, "Random seed")->required();
    gen_cmd->add_option("--out", out_path, "Output graph file (.json or .tsv)")->required();
    gen_cmd->add_option("--val-min", val_min, "Smallest edge value");
    gen_cmd->add_option("--val-max", val_max, "Largest edge value");

    auto* bench_cmd = app.add_subcommand("bench", "Time baseline against leveled queries");
    bench_cmd->add_option("--nodes", nodes, "Node count")->check(CLI::Range(2, 1 << 30));
    bench_cmd->add_option("--edges", edges_spec, "Edge counts, start:stop:step");
    bench_cmd->add_option("--runs", runs, "Runs per edge count")->check(CLI::PositiveNumber);
    bench_cmd->add_option("--timeout-ms", timeout_ms, "Per-run baseline budget")->check(CLI::PositiveNumber);
    bench_cmd->add_option("--seed", seed, "Random seed");
    bench_cmd->add_option("--out", out_path, "Report directory")->required();
    bench_cmd->add_option("--val-min", val_min, "Smallest edge value");
    bench_cmd->add_option("--val-max", val_max, "Largest edge value");
    bench_cmd->add_option("--source", source, "Fixed source node (requires --target)");
    bench_cmd->add_option("--target", target, "Fixed target node (requires --source)");
    bench_cmd->add_flag("--pruned", pruned, "Use the pruned baseline");
    bench_cmd->add_flag("--parallel", parallel, "Run edge counts concurrently");

    auto* export_cmd = app.add_subcommand("export-cypher", "Write Cypher DDL and queries for Neo4j replication");
    export_cmd->add_option("--graph", graph_path, "Graph file")->required();
    export_cmd->add_option("--out", out_path, "Output directory")->required();

    std::vector<std::string> reversed(args.rbegin(), args.rend());
    try {
        app.parse(reversed);
    } catch (const CLI::CallForHelp&) {
        out << app.help();
        return kExitOk;
    } catch (const CLI::CallForAllHelp&) {
        out << app.help("", CLI::AppFormatMode::All);
        return kExitOk;
    } catch (const CLI::ParseError& e) {
        err << "error: " << e.what() << '\n' << app.help();
        return kExitUsage;
    }

    auto info = [&](const std::string& msg) {
        if (!globals.quiet) err << msg << '\n';
    };

    try {
        if (parse_cmd->parsed()) {
            auto g = parse_graph(read_file(graph_path), resolve_format(globals, graph_path));
            auto diags = validate(g);
            if (!out_path.empty()) write_text(out_path, serialize_graph(g, resolve_format({}, out_path)));
            if (globals.json_output) {
                ordered_json d = ordered_json::array();
                for (const auto& x : diags) d.push_back({{"message", x.message}, {"id", x.offending_id}});
                ordered_json env{{"ok", diags.empty()},
                                 {"result", {{"nodes", g.nodes.size()}, {"edges", g.edges.size()}, {"diagnostics", d}}}};
                out << env.dump() << '\n';
            } else {
                out << g.nodes.size() << " nodes, " << g.edges.size() << " edges, " << diags.size()
                    << " diagnostics\n";
            }
            for (const auto& d : diags) err << "error: " << d.message << '\n';
            return diags.empty() ? kExitOk : kExitDomainError;
        }

        if (compile_cmd->parsed()) {
            const auto g = load_graph(globals, graph_path);
            const auto lev = build_leveled(g);
            const auto stats = size_report(lev);
            const auto text = serialize_leveled(lev);
            if (globals.json_output) {
                emit_ok(out, {{"leveled", ordered_json::parse(text)}, {"size", size_json(stats)}});
                if (!out_path.empty()) write_text(out_path, text);
            } else if (out_path.empty()) {
                out << text;
                info(size_line(stats));
            } else {
                write_text(out_path, text);
                out << size_line(stats) << '\n';
            }
            return kExitOk;
        }

        if (query_cmd->parsed()) {
            const auto g = load_graph(globals, graph_path);
            const auto lev = build_leveled(g);
            if (!witness) {
                const bool exists = increasing_path_exists(lev, source, target);
                if (globals.json_output) {
                    emit_ok(out, {{"exists", exists}});
                } else {
                    out << (exists ? "true" : "false") << '\n';
                }
                return kExitOk;
            }
            const auto answer = increasing_path_witness(lev, source, target);
            if (globals.json_output) {
                ordered_json r{{"exists", answer.exists}};
                if (answer.witness) {
                    r["witness"] = ordered_json::array();
                    for (const auto& s : answer.witness->steps) r["witness"].push_back(step_json(s));
                }
                emit_ok(out, r);
            } else {
                out << (answer.exists ? "true" : "false") << '\n';
                if (answer.witness) {
                    for (const auto& s : answer.witness->steps) {
                        out << s.edge << '\t' << s.src << '\t' << s.tgt << '\t' << format_value(s.val) << '\n';
                    }
                }
            }
            return kExitOk;
        }

        if (oracle_cmd->parsed()) {
            const auto g = load_graph(globals, graph_path);
            const auto r = oracle_exists(g, source, target);
            if (globals.json_output) {
                ordered_json j{{"exists", r.exists}, {"paths_explored", r.paths_explored}};
                j["min_witness_len"] = r.min_witness_len ? ordered_json(*r.min_witness_len) : ordered_json(nullptr);
                emit_ok(out, j);
            } else {
                out << (r.exists ? "true" : "false") << '\n';
                info("paths_explored=" + std::to_string(r.paths_explored));
            }
            return kExitOk;
        }

        if (baseline_cmd->parsed()) {
            const auto g = load_graph(globals, graph_path);
            const auto r = baseline_trail_search(g, source, target, std::chrono::milliseconds(timeout_ms),
                                                 pruned ? BaselineMode::pruned : BaselineMode::post_filter);
            if (globals.json_output) {
                emit_ok(out, {{"outcome", to_string(r.outcome)},
                              {"elapsed_ms", r.elapsed_ms},
                              {"trails_enumerated", r.trails_enumerated}});
            } else {
                out << to_string(r.outcome) << '\n';
                info("trails_enumerated=" + std::to_string(r.trails_enumerated));
            }
            return kExitOk;
        }

        if (gen_cmd->parsed()) {
            if (val_min > val_max) throw UsageError("--val-min exceeds --val-max");
            if (nodes < 2 && edge_count > 0) throw UsageError("edges need at least two nodes");
            const auto g = generate_graph(nodes, edge_count, {val_min, val_max}, seed);
            write_text(out_path, serialize_graph(g, resolve_format(globals, out_path)));
            if (globals.json_output) emit_ok(out, {{"nodes", g.nodes.size()}, {"edges", g.edges.size()}, {"out", out_path}});
            return kExitOk;
        }

        if (bench_cmd->parsed()) {
            BenchConfig cfg;
            cfg.n_nodes = nodes;
            try {
                cfg.edge_counts = parse_edge_counts(edges_spec);
            } catch (const std::invalid_argument& e) {
                throw UsageError(e.what());
            }
            cfg.val_range = {val_min, val_max};
            cfg.runs_per_size = runs;
            cfg.timeout = std::chrono::milliseconds(timeout_ms);
            cfg.seed = seed;
            cfg.baseline_mode = pruned ? BaselineMode::pruned : BaselineMode::post_filter;
            cfg.parallel = parallel;
            if (source.empty() != target.empty()) throw UsageError("--source and --target must be given together");
            if (!source.empty()) cfg.endpoints = std::pair{source, target};
            try {
                cfg.check();
            } catch (const std::invalid_argument& e) {
                throw UsageError(e.what());
            }
            const auto table = run_benchmark(cfg, [&](const BenchRow& r) {
                info("|E|=" + std::to_string(r.e_count) + " build=" + std::to_string(r.leveled_build_ms) +
                     "ms leveled=" + std::to_string(r.leveled_query_ms) + "ms baseline=" +
                     (r.baseline_query_ms ? std::to_string(*r.baseline_query_ms) + "ms" : std::string("TIMEOUT")));
            });
            emit_report(table, out_path);
            std::size_t disagreements = 0;
            for (const auto& r : table.rows) disagreements += r.disagreements;
            if (globals.json_output) {
                emit_ok(out, {{"csv", (std::filesystem::path(out_path) / "bench.csv").string()},
                              {"svg", (std::filesystem::path(out_path) / "latency.svg").string()},
                              {"rows", table.rows.size()},
                              {"disagreements", disagreements}});
            } else {
                out << bench_csv(table);
            }
            if (disagreements > 0) {
                err << "error: baseline and leveled answers disagree on " << disagreements << " run(s)\n";
                return kExitDomainError;
            }
            return kExitOk;
        }

        if (export_cmd->parsed()) {
            const auto g = load_graph(globals, graph_path);
            const auto lev = build_leveled(g);
            write_bundle(export_bundle(g, lev), out_path);
            if (globals.json_output) emit_ok(out, {{"out", out_path}});
            return kExitOk;
        }
    } catch (const UsageError& e) {
        err << "error: " << e.what() << '\n';
        return kExitUsage;
    } catch (const std::exception& e) {
        if (globals.json_output) out << ordered_json{{"ok", false}, {"error", e.what()}}.dump() << '\n';
        err << "error: " << e.what() << '\n';
        return kExitDomainError;
    }
    err << app.help();
    return kExitUsage;
}

}  // namespace levgraph::cli
