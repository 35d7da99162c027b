#include "levgraph/oracle.hpp"

#include <algorithm>
#include <stdexcept>
#include <unordered_map>
#include <vector>

#include "levgraph/error.hpp"

namespace levgraph {

namespace {

// Adjacency in base-edge order, built straight from the edge list.
struct Adjacency {
    std::unordered_map<std::string_view, std::size_t> position;
    std::vector<std::vector<std::size_t>> out;  // node position -> edge indices
    std::vector<std::size_t> tgt;               // edge index -> node position

    explicit Adjacency(const PropertyGraph& g) {
        for (const auto& n : g.nodes) position.emplace(n, position.size());
        out.resize(position.size());
        tgt.reserve(g.edges.size());
        for (std::size_t i = 0; i < g.edges.size(); ++i) {
            const auto& e = g.edges[i];
            auto s = position.find(e.src);
            auto t = position.find(e.tgt);
            if (s == position.end() || t == position.end()) {
                throw InvalidGraphError("edge \"" + e.id + "\" references an undeclared node");
            }
            out[s->second].push_back(i);
            tgt.push_back(t->second);
        }
    }

    std::size_t at(std::string_view id) const {
        auto it = position.find(id);
        if (it == position.end()) throw UnknownNodeError(std::string(id));
        return it->second;
    }
};

struct OracleWalk {
    const PropertyGraph& g;
    const Adjacency& adj;
    std::size_t target;
    OracleResult result;

    void extend(std::size_t node, const double* last, std::size_t depth) {
        for (std::size_t e : adj.out[node]) {
            const double v = g.edges[e].val;
            if (last && !(*last < v)) continue;
            ++result.paths_explored;
            const std::size_t next = adj.tgt[e];
            if (next == target) {
                result.exists = true;
                result.min_witness_len = std::min(result.min_witness_len.value_or(depth + 1), depth + 1);
            }
            extend(next, &v, depth + 1);
        }
    }
};

}  // namespace

OracleResult oracle_exists(const PropertyGraph& g, std::string_view s, std::string_view t) {
    Adjacency adj(g);
    const std::size_t source = adj.at(s);
    OracleWalk walk{g, adj, adj.at(t), {}};
    walk.extend(source, nullptr, 0);
    return walk.result;
}

std::string_view to_string(BaselineOutcome outcome) {
    switch (outcome) {
        case BaselineOutcome::found: return "found";
        case BaselineOutcome::not_found: return "not-found";
        case BaselineOutcome::timeout: return "timeout";
    }
    return "?";
}

BaselineResult baseline_trail_search(const PropertyGraph& g, std::string_view s, std::string_view t,
                                     std::optional<std::chrono::milliseconds> budget, BaselineMode mode) {
    using Clock = std::chrono::steady_clock;
    constexpr std::uint64_t kPollInterval = 1024;

    if (budget && budget->count() <= 0) throw std::invalid_argument("baseline budget must be positive");
    const auto start = Clock::now();
    const auto elapsed_ms = [&] {
        return std::chrono::duration<double, std::milli>(Clock::now() - start).count();
    };

    Adjacency adj(g);
    const std::size_t source = adj.at(s);
    const std::size_t target = adj.at(t);
    const std::optional<Clock::time_point> deadline =
        budget ? std::optional(start + *budget) : std::nullopt;

    struct Frame {
        std::size_t node;
        std::size_t cursor;
    };
    std::vector<Frame> stack{{source, 0}};
    std::vector<std::size_t> trail;  // edge indices
    std::vector<char> used(g.edges.size(), 0);

    BaselineResult result;
    std::uint64_t expansions = 0;
    while (!stack.empty()) {
        auto& top = stack.back();
        const auto& out = adj.out[top.node];
        if (top.cursor == out.size()) {
            stack.pop_back();
            if (!trail.empty()) {
                used[trail.back()] = 0;
                trail.pop_back();
            }
            continue;
        }
        const std::size_t e = out[top.cursor++];
        if (used[e]) continue;
        if (mode == BaselineMode::pruned && !trail.empty() && !(g.edges[trail.back()].val < g.edges[e].val)) continue;

        if (deadline && ++expansions % kPollInterval == 0 && Clock::now() >= *deadline) {
            result.outcome = BaselineOutcome::timeout;
            result.elapsed_ms = elapsed_ms();
            return result;
        }

        used[e] = 1;
        trail.push_back(e);
        ++result.trails_enumerated;
        const std::size_t next = adj.tgt[e];
        if (next == target) {
            bool increasing = true;
            for (std::size_t i = 1; i < trail.size() && increasing; ++i) {
                increasing = g.edges[trail[i - 1]].val < g.edges[trail[i]].val;
            }
            if (increasing) {
                result.outcome = BaselineOutcome::found;
                result.elapsed_ms = elapsed_ms();
                return result;
            }
        }
        stack.push_back({next, 0});
    }
    result.outcome = BaselineOutcome::not_found;
    result.elapsed_ms = elapsed_ms();
    return result;
}

}  // namespace levgraph
