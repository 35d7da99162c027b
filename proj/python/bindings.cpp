#include <pybind11/chrono.h>
#include <pybind11/functional.h>
#include <pybind11/pybind11.h>
#include <pybind11/stl.h>
#include <pybind11/stl/filesystem.h>

#include "levgraph/bench.hpp"
#include "levgraph/cypher.hpp"
#include "levgraph/error.hpp"
#include "levgraph/graph.hpp"
#include "levgraph/levels.hpp"
#include "levgraph/oracle.hpp"
#include "levgraph/reachability.hpp"

#define STRINGIFY(x) #x
#define MACRO_STRINGIFY(x) STRINGIFY(x)

namespace py = pybind11;
using namespace pybind11::literals;
using namespace levgraph;

namespace {

GraphFormat to_format(const std::string& name) {
    auto f = format_from_name(name);
    if (!f) throw py::value_error("format must be 'json' or 'tsv'");
    return *f;
}

}  // namespace

PYBIND11_MODULE(_core, m) {
    m.doc() = "Strictly increasing path existence via leveled-graph compilation";

    auto error = py::register_exception<Error>(m, "LevgraphError");
    py::register_exception<ParseError>(m, "ParseError", error.ptr());
    py::register_exception<UnknownNodeError>(m, "UnknownNodeError", error.ptr());
    py::register_exception<InvalidGraphError>(m, "InvalidGraphError", error.ptr());
    py::register_exception<ProvenanceMismatchError>(m, "ProvenanceMismatchError", error.ptr());

    py::class_<EdgeRecord>(m, "EdgeRecord")
        .def(py::init([](std::string id, std::string src, std::string tgt, double val, std::string label) {
                 return EdgeRecord{std::move(id), std::move(src), std::move(tgt), std::move(label), val};
             }),
             "id"_a, "src"_a, "tgt"_a, "val"_a, "label"_a = std::string(kDefaultEdgeLabel))
        .def_readwrite("id", &EdgeRecord::id)
        .def_readwrite("src", &EdgeRecord::src)
        .def_readwrite("tgt", &EdgeRecord::tgt)
        .def_readwrite("label", &EdgeRecord::label)
        .def_readwrite("val", &EdgeRecord::val)
        .def("__eq__", [](const EdgeRecord& a, const EdgeRecord& b) { return a == b; })
        .def("__repr__", [](const EdgeRecord& e) {
            return "EdgeRecord(" + e.id + ": " + e.src + " -> " + e.tgt + ", val=" + format_value(e.val) + ")";
        });

    py::class_<PropertyGraph>(m, "PropertyGraph")
        .def(py::init<>())
        .def(py::init([](std::vector<NodeId> nodes, std::vector<EdgeRecord> edges) {
                 return PropertyGraph{std::move(nodes), std::move(edges)};
             }),
             "nodes"_a, "edges"_a)
        .def_readwrite("nodes", &PropertyGraph::nodes)
        .def_readwrite("edges", &PropertyGraph::edges)
        .def("__eq__", [](const PropertyGraph& a, const PropertyGraph& b) { return a == b; });

    py::class_<Diagnostic>(m, "Diagnostic")
        .def_readonly("message", &Diagnostic::message)
        .def_readonly("offending_id", &Diagnostic::offending_id)
        .def("__repr__", [](const Diagnostic& d) { return "Diagnostic(" + d.message + ")"; });

    m.def(
        "parse_graph",
        [](const std::string& text, const std::string& format, std::optional<bool> implicit_nodes) {
            return parse_graph(text, to_format(format), ParseOptions{implicit_nodes});
        },
        "text"_a, "format"_a = "json", "implicit_nodes"_a = py::none());
    m.def(
        "serialize_graph", [](const PropertyGraph& g, const std::string& format) { return serialize_graph(g, to_format(format)); },
        "graph"_a, "format"_a = "json");
    m.def("validate", &validate, "graph"_a);

    py::class_<Level>(m, "Level")
        .def_static("bottom", &Level::bottom)
        .def_static("of", &Level::of, "value"_a)
        .def_property_readonly("is_bottom", &Level::is_bottom)
        .def_property_readonly("value", [](const Level& l) -> std::optional<double> {
            if (l.is_bottom()) return std::nullopt;
            return l.value();
        })
        .def("__str__", &Level::render)
        .def("__repr__", [](const Level& l) { return "Level(" + l.render() + ")"; })
        .def("__eq__", [](const Level& a, const Level& b) { return a == b; })
        .def("__lt__", [](const Level& a, const Level& b) { return a < b; });

    m.def(
        "compute_levels",
        [](const PropertyGraph& g) {
            auto levels = compute_levels(g);
            py::dict out;
            for (std::size_t i = 0; i < levels.size(); ++i) {
                auto span = levels.levels_at(i);
                out[py::str(levels.nodes()[i])] = std::vector<Level>(span.begin(), span.end());
            }
            return out;
        },
        "graph"_a, "Map node id -> sorted list of levels (bottom first).");

    py::class_<SizeStats>(m, "SizeStats")
        .def_readonly("n_prime", &SizeStats::n_prime)
        .def_readonly("e_prime", &SizeStats::e_prime)
        .def_readonly("bound_n", &SizeStats::bound_n)
        .def_readonly("bound_e", &SizeStats::bound_e);

    py::class_<LeveledGraph>(m, "LeveledGraph")
        .def_property_readonly("node_labels",
                               [](const LeveledGraph& lev) {
                                   std::vector<std::string> out;
                                   for (std::size_t i = 0; i < lev.nodes().size(); ++i) out.push_back(lev.node_label(i));
                                   return out;
                               })
        .def_property_readonly("edges",
                               [](const LeveledGraph& lev) {
                                   std::vector<std::tuple<std::string, std::string, std::string>> out;
                                   for (const auto& e : lev.edges()) {
                                       out.emplace_back(lev.node_label(e.from), lev.node_label(e.to), e.provenance);
                                   }
                                   return out;
                               })
        .def("to_json", &serialize_leveled);

    m.def("build_leveled", &build_leveled, "graph"_a);
    m.def("size_report", &size_report, "leveled"_a);

    py::class_<PathStep>(m, "PathStep")
        .def_readonly("edge", &PathStep::edge)
        .def_readonly("src", &PathStep::src)
        .def_readonly("tgt", &PathStep::tgt)
        .def_readonly("val", &PathStep::val);
    py::class_<QueryAnswer>(m, "QueryAnswer")
        .def_readonly("exists", &QueryAnswer::exists)
        .def_property_readonly("witness", [](const QueryAnswer& a) -> std::optional<std::vector<PathStep>> {
            if (!a.witness) return std::nullopt;
            return a.witness->steps;
        });
    m.def(
        "increasing_path_exists",
        [](const LeveledGraph& lev, const std::string& s, const std::string& t) { return increasing_path_exists(lev, s, t); },
        "leveled"_a, "source"_a, "target"_a, py::call_guard<py::gil_scoped_release>());
    m.def(
        "increasing_path_witness",
        [](const LeveledGraph& lev, const std::string& s, const std::string& t) { return increasing_path_witness(lev, s, t); },
        "leveled"_a, "source"_a, "target"_a);

    py::class_<OracleResult>(m, "OracleResult")
        .def_readonly("exists", &OracleResult::exists)
        .def_readonly("paths_explored", &OracleResult::paths_explored)
        .def_readonly("min_witness_len", &OracleResult::min_witness_len);
    m.def(
        "oracle_exists",
        [](const PropertyGraph& g, const std::string& s, const std::string& t) { return oracle_exists(g, s, t); },
        "graph"_a, "source"_a, "target"_a);

    py::class_<BaselineResult>(m, "BaselineResult")
        .def_property_readonly("outcome", [](const BaselineResult& r) { return std::string(to_string(r.outcome)); })
        .def_readonly("elapsed_ms", &BaselineResult::elapsed_ms)
        .def_readonly("trails_enumerated", &BaselineResult::trails_enumerated);
    m.def(
        "baseline_trail_search",
        [](const PropertyGraph& g, const std::string& s, const std::string& t, std::optional<long long> budget_ms,
           bool pruned) {
            std::optional<std::chrono::milliseconds> budget;
            if (budget_ms) budget = std::chrono::milliseconds(*budget_ms);
            return baseline_trail_search(g, s, t, budget, pruned ? BaselineMode::pruned : BaselineMode::post_filter);
        },
        "graph"_a, "source"_a, "target"_a, "budget_ms"_a = py::none(), "pruned"_a = false,
        py::call_guard<py::gil_scoped_release>());

    m.def(
        "generate_graph",
        [](std::size_t n, std::size_t m_edges, std::int64_t lo, std::int64_t hi, std::uint64_t seed) {
            return generate_graph(n, m_edges, {lo, hi}, seed);
        },
        "nodes"_a, "edges"_a, "val_min"_a = 1, "val_max"_a = 1000, "seed"_a = 0);
    m.def("compute_speedup", &compute_speedup, "baseline_avg_ms"_a, "build_ms"_a, "leveled_avg_ms"_a);

    py::class_<BenchRow>(m, "BenchRow")
        .def_readonly("e_count", &BenchRow::e_count)
        .def_readonly("leveled_build_ms", &BenchRow::leveled_build_ms)
        .def_readonly("leveled_query_ms", &BenchRow::leveled_query_ms)
        .def_readonly("baseline_query_ms", &BenchRow::baseline_query_ms)
        .def_readonly("speedup", &BenchRow::speedup)
        .def_readonly("source", &BenchRow::source)
        .def_readonly("target", &BenchRow::target)
        .def_readonly("leveled_exists", &BenchRow::leveled_exists)
        .def_readonly("baseline_timeouts", &BenchRow::baseline_timeouts)
        .def_readonly("disagreements", &BenchRow::disagreements);
    py::class_<BenchTable>(m, "BenchTable")
        .def_readonly("rows", &BenchTable::rows)
        .def("to_csv", &bench_csv)
        .def("to_svg", &latency_svg)
        .def("emit_report", &emit_report, "out_dir"_a);
    m.def(
        "run_benchmark",
        [](std::size_t nodes, std::vector<std::size_t> edge_counts, std::size_t runs, long long timeout_ms,
           std::uint64_t seed, std::int64_t val_min, std::int64_t val_max) {
            BenchConfig cfg;
            cfg.n_nodes = nodes;
            cfg.edge_counts = std::move(edge_counts);
            cfg.runs_per_size = runs;
            cfg.timeout = std::chrono::milliseconds(timeout_ms);
            cfg.seed = seed;
            cfg.val_range = {val_min, val_max};
            py::gil_scoped_release release;
            return run_benchmark(cfg);
        },
        "nodes"_a = 100, "edge_counts"_a = BenchConfig::default_edge_counts(), "runs"_a = 10,
        "timeout_ms"_a = 10000, "seed"_a = 0, "val_min"_a = 1, "val_max"_a = 1000);

    py::class_<CypherBundle>(m, "CypherBundle")
        .def_readonly("base_ddl", &CypherBundle::base_ddl)
        .def_readonly("leveled_ddl", &CypherBundle::leveled_ddl)
        .def_readonly("baseline_query", &CypherBundle::baseline_query)
        .def_readonly("leveled_query", &CypherBundle::leveled_query)
        .def("write", &write_bundle, "out_dir"_a);
    m.def("export_bundle", &export_bundle, "graph"_a, "leveled"_a);

#ifdef VERSION_INFO
    m.attr("__version__") = MACRO_STRINGIFY(VERSION_INFO);
#else
    m.attr("__version__") = "dev";
#endif
}
