#include "levgraph/cypher.hpp"

#include <fstream>
#include <initializer_list>
#include <unordered_map>
#include <utility>

#include "cypher_templates.hpp"
#include "levgraph/error.hpp"

namespace levgraph {

namespace {

namespace tpl = cypher_templates;

std::string fill(std::string_view pattern, std::initializer_list<std::pair<std::string_view, std::string>> values) {
    std::string out;
    out.reserve(pattern.size() + 32);
    std::size_t pos = 0;
    while (pos < pattern.size()) {
        const auto open = pattern.find('@', pos);
        if (open == std::string_view::npos) break;
        const auto close = pattern.find('@', open + 1);
        if (close == std::string_view::npos) throw InvariantViolation("unterminated template placeholder");
        out.append(pattern.substr(pos, open - pos));
        const auto name = pattern.substr(open + 1, close - open - 1);
        bool found = false;
        for (const auto& [key, value] : values) {
            if (key == name) {
                out += value;
                found = true;
                break;
            }
        }
        if (!found) throw InvariantViolation("unbound template placeholder @" + std::string(name) + "@");
        pos = close + 1;
    }
    out.append(pattern.substr(pos));
    return out;
}

void check_provenance(const PropertyGraph& g, const LeveledGraph& lev) {
    if (lev.base_nodes() != g.nodes || lev.source_edge_count() != g.edges.size()) {
        throw ProvenanceMismatchError("leveled graph was built from a different node or edge set");
    }
    std::unordered_map<std::string_view, const EdgeRecord*> by_id;
    for (const auto& e : g.edges) by_id.emplace(e.id, &e);
    for (const auto& e : lev.edges()) {
        const auto& from = lev.nodes()[e.from];
        const auto& to = lev.nodes()[e.to];
        auto it = by_id.find(e.provenance);
        if (it == by_id.end()) {
            throw ProvenanceMismatchError("provenance edge \"" + e.provenance + "\" is not in the base graph");
        }
        const auto& base = *it->second;
        if (base.src != from.base || base.tgt != to.base || to.level.is_bottom() || base.val != to.level.value()) {
            throw ProvenanceMismatchError("leveled edge " + lev.node_label(e.from) + " -> " + lev.node_label(e.to) +
                                          " does not match base edge \"" + base.id + "\"");
        }
    }
}

}  // namespace

std::string cypher_string(std::string_view s) {
    std::string out = "\"";
    for (char c : s) {
        switch (c) {
            case '"': out += "\\\""; break;
            case '\\': out += "\\\\"; break;
            case '\n': out += "\\n"; break;
            case '\r': out += "\\r"; break;
            case '\t': out += "\\t"; break;
            default: out += c;
        }
    }
    return out + "\"";
}

CypherBundle export_bundle(const PropertyGraph& g, const LeveledGraph& lev) {
    check_provenance(g, lev);

    CypherBundle b;
    b.base_ddl = fill(tpl::kBaseHeader,
                      {{"nodes", std::to_string(g.nodes.size())}, {"edges", std::to_string(g.edges.size())}});
    for (const auto& n : g.nodes) b.base_ddl += fill(tpl::kBaseNode, {{"id", cypher_string(n)}});
    for (const auto& e : g.edges) {
        b.base_ddl += fill(tpl::kBaseEdge, {{"src", cypher_string(e.src)},
                                            {"tgt", cypher_string(e.tgt)},
                                            {"id", cypher_string(e.id)},
                                            {"amount", format_value(e.val)}});
    }

    b.leveled_ddl = fill(tpl::kLeveledHeader, {{"nodes", std::to_string(lev.nodes().size())},
                                               {"edges", std::to_string(lev.edges().size())}});
    for (const auto& n : lev.nodes()) {
        b.leveled_ddl +=
            fill(tpl::kLeveledNode, {{"base", cypher_string(n.base)}, {"lvl", cypher_string(n.level.render())}});
    }
    for (const auto& e : lev.edges()) {
        const auto& from = lev.nodes()[e.from];
        const auto& to = lev.nodes()[e.to];
        b.leveled_ddl += fill(tpl::kLeveledEdge, {{"src", cypher_string(from.base)},
                                                  {"src_lvl", cypher_string(from.level.render())},
                                                  {"tgt", cypher_string(to.base)},
                                                  {"tgt_lvl", cypher_string(to.level.render())},
                                                  {"provenance", cypher_string(e.provenance)}});
    }

    b.baseline_query = tpl::kBaselineQuery;
    b.leveled_query = tpl::kLeveledQuery;
    return b;
}

void write_bundle(const CypherBundle& bundle, const std::filesystem::path& out_dir) {
    std::filesystem::create_directories(out_dir);
    for (const auto& [name, text] : {std::pair{"base.cypher", &bundle.base_ddl},
                                     std::pair{"leveled.cypher", &bundle.leveled_ddl},
                                     std::pair{"baseline_query.cypher", &bundle.baseline_query},
                                     std::pair{"leveled_query.cypher", &bundle.leveled_query}}) {
        std::ofstream out(out_dir / name, std::ios::binary);
        out << *text;
        if (!out) throw Error("failed to write " + (out_dir / name).string());
    }
}

}  // namespace levgraph
