#pragma once

#include <chrono>
#include <cstdint>
#include <optional>
#include <string_view>

#include "levgraph/graph.hpp"

namespace levgraph {

struct OracleResult {
    bool exists = false;
    std::uint64_t paths_explored = 0;  ///< increasing edge sequences enumerated from s
    std::optional<std::size_t> min_witness_len;
};

/// Exhaustive reference answer: enumerates every strictly increasing edge
/// sequence leaving `s`. Shares no code with the leveled construction.
/// Throws UnknownNodeError, or InvalidGraphError for a dangling endpoint.
OracleResult oracle_exists(const PropertyGraph& g, std::string_view s, std::string_view t);

enum class BaselineOutcome { found, not_found, timeout };

std::string_view to_string(BaselineOutcome outcome);

enum class BaselineMode {
    post_filter,  ///< enumerate every trail, test the value order on trails that end at t
    pruned,       ///< only extend a trail with a strictly larger value
};

struct BaselineResult {
    BaselineOutcome outcome = BaselineOutcome::not_found;
    double elapsed_ms = 0.0;
    std::uint64_t trails_enumerated = 0;
};

/// Pattern-then-filter search over trails (edge-distinct walks) from `s`.
/// `budget` of nullopt means no deadline; otherwise it must be positive
/// (std::invalid_argument). The deadline is polled every 1024 expansions.
BaselineResult baseline_trail_search(const PropertyGraph& g, std::string_view s, std::string_view t,
                                     std::optional<std::chrono::milliseconds> budget,
                                     BaselineMode mode = BaselineMode::post_filter);

}  // namespace levgraph
