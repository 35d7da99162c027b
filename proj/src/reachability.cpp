#include "levgraph/reachability.hpp"

#include <algorithm>
#include <limits>
#include <unordered_map>

#include "levgraph/error.hpp"

namespace levgraph {

std::vector<NodeId> BasePath::node_sequence() const {
    std::vector<NodeId> out;
    if (steps.empty()) return out;
    out.push_back(steps.front().src);
    for (const auto& s : steps) out.push_back(s.tgt);
    return out;
}

std::vector<double> BasePath::value_sequence() const {
    std::vector<double> out;
    out.reserve(steps.size());
    for (const auto& s : steps) out.push_back(s.val);
    return out;
}

namespace {

constexpr std::size_t kUnvisited = std::numeric_limits<std::size_t>::max();

struct Search {
    std::optional<std::size_t> hit;
    std::vector<std::size_t> parent_edge;  // index into lev.edges(), kUnvisited for the root
};

// Breadth-first from (s, bottom). Targets are (t, level) with level above
// bottom; no edge enters a bottom node, so the root itself never matches.
Search bfs(const LeveledGraph& lev, std::string_view s, std::string_view t, bool record_parents) {
    const std::size_t root = lev.bottom_node(s);
    const auto t_pos = lev.base_position(t);
    if (!t_pos) throw UnknownNodeError(std::string(t));
    const auto [t_first, t_last] = lev.node_range(*t_pos);

    Search out;
    std::vector<char> visited(lev.nodes().size(), 0);
    if (record_parents) out.parent_edge.assign(lev.nodes().size(), kUnvisited);
    std::vector<std::size_t> queue;
    queue.reserve(lev.nodes().size());
    queue.push_back(root);
    visited[root] = 1;

    for (std::size_t head = 0; head < queue.size(); ++head) {
        const std::size_t u = queue[head];
        for (const auto& e : lev.out_edges(u)) {
            if (visited[e.to]) continue;
            visited[e.to] = 1;
            if (record_parents) {
                out.parent_edge[e.to] = static_cast<std::size_t>(&e - lev.edges().data());
            }
            if (e.to > t_first && e.to < t_last) {
                out.hit = e.to;
                return out;
            }
            queue.push_back(e.to);
        }
    }
    return out;
}

}  // namespace

bool increasing_path_exists(const LeveledGraph& lev, std::string_view s, std::string_view t) {
    return bfs(lev, s, t, false).hit.has_value();
}

QueryAnswer increasing_path_witness(const LeveledGraph& lev, std::string_view s, std::string_view t) {
    auto search = bfs(lev, s, t, true);
    QueryAnswer answer;
    if (!search.hit) return answer;

    answer.exists = true;
    BasePath path;
    for (std::size_t node = *search.hit; search.parent_edge[node] != kUnvisited;) {
        const auto& e = lev.edges()[search.parent_edge[node]];
        path.steps.push_back(
            {e.provenance, lev.nodes()[e.from].base, lev.nodes()[e.to].base, lev.nodes()[e.to].level.value()});
        node = e.from;
    }
    std::reverse(path.steps.begin(), path.steps.end());
    answer.witness = std::move(path);
    return answer;
}

bool is_increasing_path(const PropertyGraph& g, const BasePath& path, std::string_view s, std::string_view t) {
    if (path.steps.empty()) return false;
    std::unordered_map<std::string_view, const EdgeRecord*> by_id;
    for (const auto& e : g.edges) by_id.emplace(e.id, &e);

    for (std::size_t i = 0; i < path.steps.size(); ++i) {
        const auto& step = path.steps[i];
        auto it = by_id.find(step.edge);
        if (it == by_id.end()) return false;
        const auto& e = *it->second;
        if (e.src != step.src || e.tgt != step.tgt || e.val != step.val) return false;
        if (i > 0) {
            const auto& prev = path.steps[i - 1];
            if (prev.tgt != step.src || !(prev.val < step.val)) return false;
        }
    }
    return path.steps.front().src == s && path.steps.back().tgt == t;
}

}  // namespace levgraph
