#pragma once

#include <cstddef>
#include <optional>
#include <string>
#include <string_view>
#include <unordered_map>
#include <vector>

namespace levgraph {

using NodeId = std::string;
using EdgeId = std::string;

inline constexpr std::string_view kDefaultEdgeLabel = "EDGE";

struct EdgeRecord {
    EdgeId id;
    NodeId src;
    NodeId tgt;
    std::string label{kDefaultEdgeLabel};
    double val = 0.0;

    friend bool operator==(const EdgeRecord&, const EdgeRecord&) = default;
};

/// Directed multigraph with a real `val` on every edge. Node order and edge
/// order are significant: everything downstream iterates in this order.
///
/// The struct is a plain value; it may hold an invalid graph (dangling
/// endpoint, duplicate id). Use validate() before handing a hand-built graph
/// to the compiler or the oracle.
struct PropertyGraph {
    std::vector<NodeId> nodes;
    std::vector<EdgeRecord> edges;

    friend bool operator==(const PropertyGraph&, const PropertyGraph&) = default;
};

enum class Severity { warning, error };

struct Diagnostic {
    Severity severity = Severity::error;
    std::string message;
    std::string offending_id;

    friend bool operator==(const Diagnostic&, const Diagnostic&) = default;
};

using Diagnostics = std::vector<Diagnostic>;

/// Reports every invariant violation in `g`. Empty result means valid.
Diagnostics validate(const PropertyGraph& g);

/// Dense index over a valid graph: node id -> position, edge endpoints as positions.
class GraphIndex {
public:
    /// Throws InvalidGraphError if `g` has a dangling endpoint or duplicate node id.
    explicit GraphIndex(const PropertyGraph& g);

    std::size_t node_count() const noexcept { return node_ids_.size(); }
    std::size_t edge_count() const noexcept { return src_.size(); }

    std::optional<std::size_t> find(std::string_view id) const;
    /// Throws UnknownNodeError.
    std::size_t at(std::string_view id) const;

    std::size_t src(std::size_t edge) const { return src_[edge]; }
    std::size_t tgt(std::size_t edge) const { return tgt_[edge]; }

private:
    struct Hash {
        using is_transparent = void;
        std::size_t operator()(std::string_view s) const noexcept { return std::hash<std::string_view>{}(s); }
    };

    std::vector<std::string_view> node_ids_;
    std::unordered_map<std::string, std::size_t, Hash, std::equal_to<>> positions_;
    std::vector<std::size_t> src_;
    std::vector<std::size_t> tgt_;
};

enum class GraphFormat { json, tsv };

struct ParseOptions {
    /// Add nodes that are referenced only by edges. Unset means the
    /// format's default: on for TSV, off for JSON.
    std::optional<bool> implicit_nodes;
};

/// Parses `text`. Throws ParseError on syntax errors, missing or non-finite
/// `val`, and duplicate node or edge ids. With implicit node creation off,
/// dangling endpoints are kept as-is and reported by validate().
PropertyGraph parse_graph(std::string_view text, GraphFormat format, const ParseOptions& options = {});

/// Inverse of parse_graph. TSV drops isolated nodes and edge ids, both of
/// which TSV cannot express; throws Error if an id or label contains a tab
/// or newline.
std::string serialize_graph(const PropertyGraph& g, GraphFormat format);

/// Shortest decimal text that parses back to exactly `v`.
std::string format_value(double v);

std::optional<GraphFormat> format_from_name(std::string_view name);

}  // namespace levgraph
