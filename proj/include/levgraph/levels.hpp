#pragma once

#include <compare>
#include <cstddef>
#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <unordered_map>
#include <vector>

#include "levgraph/graph.hpp"

namespace levgraph {

/// A node level: either bottom or a finite edge value. Bottom sorts below
/// every value; it is a distinct state, not a sentinel number.
class Level {
public:
    static constexpr Level bottom() noexcept { return Level{}; }
    /// Throws std::invalid_argument for NaN or infinities. -0.0 is stored as 0.0.
    static Level of(double value);

    constexpr bool is_bottom() const noexcept { return bottom_; }
    /// Precondition: !is_bottom().
    constexpr double value() const noexcept { return value_; }

    /// "BOT" or the shortest round-trip decimal of the value.
    std::string render() const;

    friend constexpr bool operator==(const Level& a, const Level& b) noexcept {
        return a.bottom_ == b.bottom_ && (a.bottom_ || a.value_ == b.value_);
    }
    friend constexpr std::strong_ordering operator<=>(const Level& a, const Level& b) noexcept {
        if (a.bottom_ || b.bottom_) return b.bottom_ <=> a.bottom_;
        if (a.value_ < b.value_) return std::strong_ordering::less;
        if (b.value_ < a.value_) return std::strong_ordering::greater;
        return std::strong_ordering::equal;
    }

private:
    constexpr Level() noexcept = default;
    constexpr explicit Level(double v) noexcept : bottom_(false), value_(v) {}

    bool bottom_ = true;
    double value_ = 0.0;
};

/// Per-node level sets: bottom plus the values of all incoming edges, sorted ascending.
class LevelMap {
public:
    LevelMap() = default;
    LevelMap(std::vector<NodeId> nodes, std::vector<std::vector<Level>> levels);

    std::size_t size() const noexcept { return nodes_.size(); }
    const std::vector<NodeId>& nodes() const noexcept { return nodes_; }

    /// Throws UnknownNodeError.
    std::span<const Level> levels_of(std::string_view node) const;
    std::span<const Level> levels_at(std::size_t position) const { return levels_[position]; }

    /// Sum of |L(v)| over all nodes.
    std::size_t total() const noexcept;

private:
    std::vector<NodeId> nodes_;
    std::vector<std::vector<Level>> levels_;
    std::unordered_map<std::string, std::size_t> positions_;
};

struct LeveledNode {
    NodeId base;
    Level level;

    friend bool operator==(const LeveledNode&, const LeveledNode&) = default;
};

struct LeveledEdge {
    std::size_t from = 0;  ///< index into LeveledGraph::nodes()
    std::size_t to = 0;
    EdgeId provenance;     ///< smallest id among the base edges producing this edge

    friend bool operator==(const LeveledEdge&, const LeveledEdge&) = default;
};

/// The compiled graph over (node, level) pairs.
///
/// Nodes are ordered by base node position, then by level. Edges are ordered
/// by (from, to) and double as a CSR adjacency index: the out-edges of node i
/// are the contiguous range out_edges(i).
class LeveledGraph {
public:
    const std::vector<LeveledNode>& nodes() const noexcept { return nodes_; }
    const std::vector<LeveledEdge>& edges() const noexcept { return edges_; }

    std::size_t source_node_count() const noexcept { return base_nodes_.size(); }
    std::size_t source_edge_count() const noexcept { return source_edge_count_; }
    const std::vector<NodeId>& base_nodes() const noexcept { return base_nodes_; }

    /// Position of a base node id, or nullopt.
    std::optional<std::size_t> base_position(std::string_view base) const;
    /// Index of the (base, bottom) node. Throws UnknownNodeError.
    std::size_t bottom_node(std::string_view base) const;
    /// Leveled node indices belonging to base node `position`; the first is its bottom node.
    std::pair<std::size_t, std::size_t> node_range(std::size_t position) const {
        return {node_offsets_[position], node_offsets_[position + 1]};
    }
    std::optional<std::size_t> find_node(std::string_view base, const Level& level) const;

    std::span<const LeveledEdge> out_edges(std::size_t node) const {
        return std::span<const LeveledEdge>(edges_).subspan(edge_offsets_[node],
                                                            edge_offsets_[node + 1] - edge_offsets_[node]);
    }

    /// "<base>@BOT" or "<base>@<value>".
    std::string node_label(std::size_t node) const;

private:
    friend LeveledGraph build_leveled(const PropertyGraph& g);

    std::vector<NodeId> base_nodes_;
    std::unordered_map<std::string, std::size_t> base_positions_;
    std::size_t source_edge_count_ = 0;
    std::vector<LeveledNode> nodes_;
    std::vector<std::size_t> node_offsets_{0};
    std::vector<LeveledEdge> edges_;
    std::vector<std::size_t> edge_offsets_;
};

struct SizeStats {
    std::uint64_t n_prime = 0;
    std::uint64_t e_prime = 0;
    std::uint64_t bound_n = 0;  ///< |N| + |E|
    std::uint64_t bound_e = 0;  ///< |E|^2

    friend bool operator==(const SizeStats&, const SizeStats&) = default;
};

/// Level sets of every node. Throws InvalidGraphError for an invalid graph.
LevelMap compute_levels(const PropertyGraph& g);

/// Compiles `g` into its leveled graph, including the adjacency index.
/// Throws InvalidGraphError for an invalid graph.
LeveledGraph build_leveled(const PropertyGraph& g);

/// Throws InvariantViolation if the node or edge count exceeds its bound.
SizeStats size_report(const LeveledGraph& lev);

/// JSON in the graph format, node ids rendered by LeveledGraph::node_label and
/// each edge carrying its "provenance".
std::string serialize_leveled(const LeveledGraph& lev);

}  // namespace levgraph
