#pragma once

#include <optional>
#include <string_view>
#include <vector>

#include "levgraph/graph.hpp"
#include "levgraph/levels.hpp"

namespace levgraph {

struct PathStep {
    EdgeId edge;
    NodeId src;
    NodeId tgt;
    double val = 0.0;

    friend bool operator==(const PathStep&, const PathStep&) = default;
};

/// A non-empty base path with strictly increasing values.
struct BasePath {
    std::vector<PathStep> steps;

    std::vector<NodeId> node_sequence() const;
    std::vector<double> value_sequence() const;
};

struct QueryAnswer {
    bool exists = false;
    std::optional<BasePath> witness;
};

/// True iff a strictly increasing path of at least one edge leads from `s` to `t`.
/// Throws UnknownNodeError.
bool increasing_path_exists(const LeveledGraph& lev, std::string_view s, std::string_view t);

/// Like increasing_path_exists, and also recovers a witness with the fewest
/// edges among all increasing s-t paths.
QueryAnswer increasing_path_witness(const LeveledGraph& lev, std::string_view s, std::string_view t);

/// Checks the BasePath invariants against `g`: every step is an edge of `g`
/// with matching endpoints and value, steps chain, values strictly increase,
/// and the path runs from `s` to `t`.
bool is_increasing_path(const PropertyGraph& g, const BasePath& path, std::string_view s, std::string_view t);

}  // namespace levgraph
