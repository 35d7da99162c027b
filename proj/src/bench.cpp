#include "levgraph/bench.hpp"

#include <cmath>
#include <future>
#include <random>
#include <stdexcept>

#include "levgraph/levels.hpp"
#include "levgraph/reachability.hpp"

namespace levgraph {

namespace {

std::uint64_t splitmix64(std::uint64_t x) {
    x += 0x9E3779B97F4A7C15ull;
    x = (x ^ (x >> 30)) * 0xBF58476D1CE4E5B9ull;
    x = (x ^ (x >> 27)) * 0x94D049BB133111EBull;
    return x ^ (x >> 31);
}

double ms_since(std::chrono::steady_clock::time_point start) {
    return std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - start).count();
}

BenchRow run_size(const BenchConfig& cfg, std::size_t e_count) {
    using Clock = std::chrono::steady_clock;
    const std::uint64_t size_seed = splitmix64(cfg.seed ^ splitmix64(e_count));
    const auto g = generate_graph(cfg.n_nodes, e_count, cfg.val_range, size_seed);

    BenchRow row;
    row.e_count = e_count;
    if (cfg.endpoints) {
        row.source = cfg.endpoints->first;
        row.target = cfg.endpoints->second;
    } else {
        std::mt19937_64 rng(splitmix64(size_seed));
        std::uniform_int_distribution<std::size_t> pick_s(0, cfg.n_nodes - 1);
        std::uniform_int_distribution<std::size_t> pick_t(0, cfg.n_nodes - 2);
        const std::size_t s = pick_s(rng);
        std::size_t t = pick_t(rng);
        if (t >= s) ++t;
        row.source = g.nodes[s];
        row.target = g.nodes[t];
    }

    auto start = Clock::now();
    const auto lev = build_leveled(g);
    row.leveled_build_ms = ms_since(start);
    const auto stats = size_report(lev);
    row.n_prime = stats.n_prime;
    row.e_prime = stats.e_prime;

    double leveled_total = 0.0;
    double baseline_total = 0.0;
    std::size_t baseline_done = 0;
    for (std::size_t r = 0; r < cfg.runs_per_size; ++r) {
        start = Clock::now();
        row.leveled_exists = increasing_path_exists(lev, row.source, row.target);
        leveled_total += ms_since(start);

        start = Clock::now();
        const auto base = baseline_trail_search(g, row.source, row.target, cfg.timeout, cfg.baseline_mode);
        const double wall = ms_since(start);
        if (base.outcome == BaselineOutcome::timeout) {
            ++row.baseline_timeouts;
            continue;
        }
        baseline_total += wall;
        ++baseline_done;
        if ((base.outcome == BaselineOutcome::found) != row.leveled_exists) ++row.disagreements;
    }
    row.leveled_query_ms = leveled_total / static_cast<double>(cfg.runs_per_size);
    if (baseline_done > 0) {
        row.baseline_query_ms = baseline_total / static_cast<double>(baseline_done);
        const double denom = row.leveled_build_ms + row.leveled_query_ms;
        if (denom > 0.0) row.speedup = compute_speedup(*row.baseline_query_ms, row.leveled_build_ms, row.leveled_query_ms);
    }
    return row;
}

}  // namespace

PropertyGraph generate_graph(std::size_t n, std::size_t m, ValueRange range, std::uint64_t seed) {
    if (n == 0) throw std::invalid_argument("generate_graph: need at least one node");
    if (range.lo > range.hi) throw std::invalid_argument("generate_graph: empty value range");
    if (m > 0 && n < 2) throw std::invalid_argument("generate_graph: edges without self-loops need two nodes");

    PropertyGraph g;
    g.nodes.reserve(n);
    for (std::size_t i = 0; i < n; ++i) g.nodes.push_back(std::to_string(i));

    std::mt19937_64 rng(seed);
    std::uniform_int_distribution<std::size_t> pick_src(0, n - 1);
    std::uniform_int_distribution<std::size_t> pick_tgt(0, n > 1 ? n - 2 : 0);
    std::uniform_int_distribution<std::int64_t> pick_val(range.lo, range.hi);
    g.edges.reserve(m);
    for (std::size_t i = 0; i < m; ++i) {
        const std::size_t s = pick_src(rng);
        std::size_t t = pick_tgt(rng);
        if (t >= s) ++t;
        g.edges.push_back({"e" + std::to_string(i), g.nodes[s], g.nodes[t], "TRANSFER",
                           static_cast<double>(pick_val(rng))});
    }
    return g;
}

double compute_speedup(double baseline_avg_ms, double build_ms, double leveled_avg_ms) {
    const double denom = build_ms + leveled_avg_ms;
    if (!(denom > 0.0)) throw std::invalid_argument("compute_speedup: build + leveled query time must be positive");
    return std::round(baseline_avg_ms / denom * 100.0) / 100.0;
}

std::vector<std::size_t> BenchConfig::default_edge_counts() {
    std::vector<std::size_t> out;
    for (std::size_t e = 20; e <= 300; e += 20) out.push_back(e);
    return out;
}

void BenchConfig::check() const {
    if (edge_counts.empty()) throw std::invalid_argument("bench: edge count list is empty");
    if (timeout.count() <= 0) throw std::invalid_argument("bench: timeout must be positive");
    if (val_range.lo > val_range.hi) throw std::invalid_argument("bench: value range is empty");
    if (runs_per_size == 0) throw std::invalid_argument("bench: runs per size must be positive");
    if (n_nodes < 2) throw std::invalid_argument("bench: need at least two nodes");
}

std::vector<std::size_t> parse_edge_counts(const std::string& spec) {
    auto number = [&](const std::string& s) -> std::size_t {
        std::size_t used = 0;
        unsigned long long v = 0;
        try {
            v = std::stoull(s, &used);
        } catch (const std::exception&) {
            used = 0;
        }
        if (used == 0 || used != s.size() || s.front() == '-') {
            throw std::invalid_argument("bad edge count specification \"" + spec + "\"");
        }
        return static_cast<std::size_t>(v);
    };

    const auto first = spec.find(':');
    if (first == std::string::npos) return {number(spec)};
    const auto second = spec.find(':', first + 1);
    if (second == std::string::npos) throw std::invalid_argument("bad edge count specification \"" + spec + "\"");
    const std::size_t start = number(spec.substr(0, first));
    const std::size_t stop = number(spec.substr(first + 1, second - first - 1));
    const std::size_t step = number(spec.substr(second + 1));
    if (step == 0 || start > stop) throw std::invalid_argument("bad edge count specification \"" + spec + "\"");
    std::vector<std::size_t> out;
    for (std::size_t e = start; e <= stop; e += step) out.push_back(e);
    return out;
}

BenchTable run_benchmark(const BenchConfig& cfg, const std::function<void(const BenchRow&)>& on_row) {
    cfg.check();
    BenchTable table{cfg, {}};
    if (cfg.parallel) {
        std::vector<std::future<BenchRow>> pending;
        for (auto e : cfg.edge_counts) pending.push_back(std::async(std::launch::async, run_size, std::cref(cfg), e));
        for (auto& f : pending) {
            table.rows.push_back(f.get());
            if (on_row) on_row(table.rows.back());
        }
        return table;
    }
    for (auto e : cfg.edge_counts) {
        table.rows.push_back(run_size(cfg, e));
        if (on_row) on_row(table.rows.back());
    }
    return table;
}

}  // namespace levgraph
