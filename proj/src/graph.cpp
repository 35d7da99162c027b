#include "levgraph/graph.hpp"

#include <charconv>
#include <cmath>
#include <set>
#include <system_error>

#include "levgraph/error.hpp"

namespace levgraph {

Diagnostics validate(const PropertyGraph& g) {
    Diagnostics out;

    std::set<std::string_view> nodes;
    std::set<std::string_view> reported;
    for (const auto& n : g.nodes) {
        if (!nodes.insert(n).second && reported.insert(n).second) {
            out.push_back({Severity::error, "duplicate node id \"" + n + "\"", n});
        }
    }

    std::set<std::string_view> edge_ids;
    std::set<std::string_view> dup_edges;
    std::set<std::string_view> dangling;
    for (const auto& e : g.edges) {
        if (!edge_ids.insert(e.id).second && dup_edges.insert(e.id).second) {
            out.push_back({Severity::error, "duplicate edge id \"" + e.id + "\"", e.id});
        }
        for (const auto* endpoint : {&e.src, &e.tgt}) {
            if (!nodes.contains(*endpoint) && dangling.insert(*endpoint).second) {
                out.push_back({Severity::error,
                               "edge \"" + e.id + "\" references undeclared node \"" + *endpoint + "\"",
                               *endpoint});
            }
        }
        if (!std::isfinite(e.val)) {
            out.push_back({Severity::error, "edge \"" + e.id + "\" has a non-finite val", e.id});
        }
    }
    return out;
}

GraphIndex::GraphIndex(const PropertyGraph& g) {
    node_ids_.reserve(g.nodes.size());
    positions_.reserve(g.nodes.size());
    for (const auto& n : g.nodes) {
        if (!positions_.emplace(n, node_ids_.size()).second) {
            throw InvalidGraphError("duplicate node id \"" + n + "\"");
        }
        node_ids_.push_back(n);
    }
    src_.reserve(g.edges.size());
    tgt_.reserve(g.edges.size());
    for (const auto& e : g.edges) {
        auto s = find(e.src);
        auto t = find(e.tgt);
        if (!s || !t) {
            throw InvalidGraphError("edge \"" + e.id + "\" references undeclared node \"" + (s ? e.tgt : e.src) +
                                    "\"");
        }
        src_.push_back(*s);
        tgt_.push_back(*t);
    }
}

std::optional<std::size_t> GraphIndex::find(std::string_view id) const {
    auto it = positions_.find(id);
    if (it == positions_.end()) return std::nullopt;
    return it->second;
}

std::size_t GraphIndex::at(std::string_view id) const {
    auto pos = find(id);
    if (!pos) throw UnknownNodeError(std::string(id));
    return *pos;
}

std::string format_value(double v) {
    char buf[64];
    auto [ptr, ec] = std::to_chars(buf, buf + sizeof(buf), v);
    if (ec != std::errc{}) throw InvariantViolation("to_chars failed");
    return {buf, ptr};
}

std::optional<GraphFormat> format_from_name(std::string_view name) {
    if (name == "json") return GraphFormat::json;
    if (name == "tsv") return GraphFormat::tsv;
    return std::nullopt;
}

}  // namespace levgraph
