#include "levgraph/levels.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <stdexcept>

#include <json.hpp>

#include "levgraph/error.hpp"

namespace levgraph {

Level Level::of(double value) {
    if (!std::isfinite(value)) throw std::invalid_argument("level value must be finite");
    return Level(value == 0.0 ? 0.0 : value);
}

std::string Level::render() const { return bottom_ ? "BOT" : format_value(value_); }

LevelMap::LevelMap(std::vector<NodeId> nodes, std::vector<std::vector<Level>> levels)
    : nodes_(std::move(nodes)), levels_(std::move(levels)) {
    for (std::size_t i = 0; i < nodes_.size(); ++i) positions_.emplace(nodes_[i], i);
}

std::span<const Level> LevelMap::levels_of(std::string_view node) const {
    auto it = positions_.find(std::string(node));
    if (it == positions_.end()) throw UnknownNodeError(std::string(node));
    return levels_[it->second];
}

std::size_t LevelMap::total() const noexcept {
    std::size_t n = 0;
    for (const auto& l : levels_) n += l.size();
    return n;
}

namespace {

void require_finite(const PropertyGraph& g) {
    for (const auto& e : g.edges) {
        if (!std::isfinite(e.val)) throw InvalidGraphError("edge \"" + e.id + "\" has a non-finite val");
    }
}

std::vector<std::vector<Level>> level_sets(const PropertyGraph& g, const GraphIndex& idx) {
    std::vector<std::vector<Level>> levels(idx.node_count(), std::vector<Level>{Level::bottom()});
    for (std::size_t e = 0; e < g.edges.size(); ++e) levels[idx.tgt(e)].push_back(Level::of(g.edges[e].val));
    for (auto& l : levels) {
        std::sort(l.begin(), l.end());
        l.erase(std::unique(l.begin(), l.end()), l.end());
    }
    return levels;
}

}  // namespace

LevelMap compute_levels(const PropertyGraph& g) {
    require_finite(g);
    GraphIndex idx(g);
    return LevelMap(g.nodes, level_sets(g, idx));
}

LeveledGraph build_leveled(const PropertyGraph& g) {
    require_finite(g);
    GraphIndex idx(g);
    auto levels = level_sets(g, idx);

    LeveledGraph lev;
    lev.base_nodes_ = g.nodes;
    lev.source_edge_count_ = g.edges.size();
    lev.base_positions_.reserve(g.nodes.size());
    lev.node_offsets_.reserve(g.nodes.size() + 1);
    for (std::size_t v = 0; v < g.nodes.size(); ++v) {
        lev.base_positions_.emplace(g.nodes[v], v);
        for (const auto& l : levels[v]) lev.nodes_.push_back({g.nodes[v], l});
        lev.node_offsets_.push_back(lev.nodes_.size());
    }

    // Parallel base edges with equal (src, tgt, val) yield identical leveled
    // edges; keep one group per triple with the smallest edge id.
    std::vector<std::size_t> order(g.edges.size());
    std::iota(order.begin(), order.end(), std::size_t{0});
    auto key = [&](std::size_t e) { return std::tuple(idx.src(e), idx.tgt(e), Level::of(g.edges[e].val)); };
    std::sort(order.begin(), order.end(), [&](std::size_t a, std::size_t b) {
        auto ka = key(a);
        auto kb = key(b);
        if (ka != kb) return ka < kb;
        return g.edges[a].id < g.edges[b].id;
    });

    for (std::size_t i = 0; i < order.size(); ++i) {
        const std::size_t e = order[i];
        if (i > 0 && key(order[i - 1]) == key(e)) continue;
        const std::size_t u = idx.src(e);
        const std::size_t v = idx.tgt(e);
        const Level j = Level::of(g.edges[e].val);

        const auto& from_levels = levels[u];
        const auto below = static_cast<std::size_t>(
            std::lower_bound(from_levels.begin(), from_levels.end(), j) - from_levels.begin());
        const auto& to_levels = levels[v];
        const auto to_slot = static_cast<std::size_t>(
            std::lower_bound(to_levels.begin(), to_levels.end(), j) - to_levels.begin());
        const std::size_t to = lev.node_offsets_[v] + to_slot;
        for (std::size_t k = 0; k < below; ++k) {
            lev.edges_.push_back({lev.node_offsets_[u] + k, to, g.edges[e].id});
        }
    }
    std::sort(lev.edges_.begin(), lev.edges_.end(),
              [](const LeveledEdge& a, const LeveledEdge& b) { return std::tie(a.from, a.to) < std::tie(b.from, b.to); });

    lev.edge_offsets_.assign(lev.nodes_.size() + 1, 0);
    for (const auto& e : lev.edges_) ++lev.edge_offsets_[e.from + 1];
    std::partial_sum(lev.edge_offsets_.begin(), lev.edge_offsets_.end(), lev.edge_offsets_.begin());
    return lev;
}

std::optional<std::size_t> LeveledGraph::base_position(std::string_view base) const {
    auto it = base_positions_.find(std::string(base));
    if (it == base_positions_.end()) return std::nullopt;
    return it->second;
}

std::size_t LeveledGraph::bottom_node(std::string_view base) const {
    auto pos = base_position(base);
    if (!pos) throw UnknownNodeError(std::string(base));
    return node_offsets_[*pos];
}

std::optional<std::size_t> LeveledGraph::find_node(std::string_view base, const Level& level) const {
    auto pos = base_position(base);
    if (!pos) return std::nullopt;
    auto first = nodes_.begin() + static_cast<std::ptrdiff_t>(node_offsets_[*pos]);
    auto last = nodes_.begin() + static_cast<std::ptrdiff_t>(node_offsets_[*pos + 1]);
    auto it = std::lower_bound(first, last, level, [](const LeveledNode& n, const Level& l) { return n.level < l; });
    if (it == last || it->level != level) return std::nullopt;
    return static_cast<std::size_t>(it - nodes_.begin());
}

std::string LeveledGraph::node_label(std::size_t node) const {
    return nodes_[node].base + "@" + nodes_[node].level.render();
}

SizeStats size_report(const LeveledGraph& lev) {
    SizeStats s;
    s.n_prime = lev.nodes().size();
    s.e_prime = lev.edges().size();
    const std::uint64_t n = lev.source_node_count();
    const std::uint64_t m = lev.source_edge_count();
    s.bound_n = n + m;
    s.bound_e = m * m;
    if (s.n_prime > s.bound_n) {
        throw InvariantViolation("leveled node count " + std::to_string(s.n_prime) + " exceeds |N|+|E| = " +
                                 std::to_string(s.bound_n));
    }
    if (s.e_prime > s.bound_e) {
        throw InvariantViolation("leveled edge count " + std::to_string(s.e_prime) + " exceeds |E|^2 = " +
                                 std::to_string(s.bound_e));
    }
    return s;
}

std::string serialize_leveled(const LeveledGraph& lev) {
    nlohmann::ordered_json doc;
    doc["nodes"] = nlohmann::ordered_json::array();
    for (std::size_t i = 0; i < lev.nodes().size(); ++i) doc["nodes"].push_back({{"id", lev.node_label(i)}});
    doc["edges"] = nlohmann::ordered_json::array();
    for (std::size_t i = 0; i < lev.edges().size(); ++i) {
        const auto& e = lev.edges()[i];
        doc["edges"].push_back({{"id", "l" + std::to_string(i)},
                                {"src", lev.node_label(e.from)},
                                {"tgt", lev.node_label(e.to)},
                                {"label", "LSTEP"},
                                {"val", lev.nodes()[e.to].level.value()},
                                {"provenance", e.provenance}});
    }
    return doc.dump(2) + "\n";
}

}  // namespace levgraph
