#pragma once

#include <chrono>
#include <cstdint>
#include <filesystem>
#include <functional>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "levgraph/graph.hpp"
#include "levgraph/oracle.hpp"

namespace levgraph {

/// Closed integer interval.
struct ValueRange {
    std::int64_t lo = 1;
    std::int64_t hi = 1000;
};

/// `n` nodes "0".."n-1" and `m` edges with uniformly drawn endpoints
/// (src != tgt, parallel edges allowed) and integer vals in `range`.
/// Fully determined by the arguments. Throws std::invalid_argument for
/// n == 0, an empty range, or m > 0 with n == 1.
PropertyGraph generate_graph(std::size_t n, std::size_t m, ValueRange range, std::uint64_t seed);

/// baseline / (build + leveled query), rounded to 2 decimals.
/// Throws std::invalid_argument when the denominator is not positive.
double compute_speedup(double baseline_avg_ms, double build_ms, double leveled_avg_ms);

struct BenchConfig {
    std::size_t n_nodes = 100;
    std::vector<std::size_t> edge_counts = default_edge_counts();
    ValueRange val_range{1, 1000};
    std::size_t runs_per_size = 10;
    std::chrono::milliseconds timeout{10000};
    std::uint64_t seed = 0;
    /// Fixed query endpoints; unset draws one s != t pair per graph from the seeded stream.
    std::optional<std::pair<NodeId, NodeId>> endpoints;
    BaselineMode baseline_mode = BaselineMode::post_filter;
    /// Run edge counts concurrently. Timed regions are never shared.
    bool parallel = false;

    static std::vector<std::size_t> default_edge_counts();
    /// Throws std::invalid_argument.
    void check() const;
};

struct BenchRow {
    std::size_t e_count = 0;
    double leveled_build_ms = 0.0;
    double leveled_query_ms = 0.0;
    std::optional<double> baseline_query_ms;  ///< nullopt when every baseline run timed out
    std::optional<double> speedup;

    NodeId source;
    NodeId target;
    bool leveled_exists = false;
    std::size_t baseline_timeouts = 0;
    std::size_t disagreements = 0;  ///< completed baseline runs whose answer differs from leveled
    std::uint64_t n_prime = 0;
    std::uint64_t e_prime = 0;
};

struct BenchTable {
    BenchConfig config;
    std::vector<BenchRow> rows;
};

/// Parses "start:stop:step" (inclusive) or a single count.
std::vector<std::size_t> parse_edge_counts(const std::string& spec);

BenchTable run_benchmark(const BenchConfig& cfg, const std::function<void(const BenchRow&)>& on_row = {});

std::string bench_csv(const BenchTable& table);
std::string latency_svg(const BenchTable& table);

/// Writes bench.csv and latency.svg into `out_dir` (created if missing).
/// Throws std::filesystem::filesystem_error or Error on I/O failure.
void emit_report(const BenchTable& table, const std::filesystem::path& out_dir);

}  // namespace levgraph
