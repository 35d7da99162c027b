#pragma once

// Cypher templates for the exported bundle. Placeholders are @name@ and are
// substituted with already-quoted literals. Edit here; the golden files under
// tests/golden/ pin the output.

namespace levgraph::cypher_templates {

inline constexpr const char* kBaseHeader = "// base graph: @nodes@ nodes, @edges@ edges\n";
inline constexpr const char* kBaseNode = "CREATE (:Account {id: @id@});\n";
inline constexpr const char* kBaseEdge =
    "MATCH (a:Account {id: @src@}), (b:Account {id: @tgt@}) "
    "CREATE (a)-[:TRANSFER {id: @id@, amount: @amount@}]->(b);\n";

inline constexpr const char* kLeveledHeader = "// leveled graph: @nodes@ nodes, @edges@ edges\n";
inline constexpr const char* kLeveledNode = "CREATE (:LNode {base: @base@, lvl: @lvl@});\n";
inline constexpr const char* kLeveledEdge =
    "MATCH (a:LNode {base: @src@, lvl: @src_lvl@}), (b:LNode {base: @tgt@, lvl: @tgt_lvl@}) "
    "CREATE (a)-[:LSTEP {provenance: @provenance@}]->(b);\n";

inline constexpr const char* kBaselineQuery =
    "MATCH p = (s:Account {id: $src})-[:TRANSFER*1..]->(t:Account {id: $dst})\n"
    "WHERE all(i IN range(1, size(relationships(p)) - 1)\n"
    "          WHERE relationships(p)[i - 1].amount < relationships(p)[i].amount)\n"
    "RETURN true AS found\n"
    "LIMIT 1;\n";

inline constexpr const char* kLeveledQuery =
    "MATCH (s:LNode {base: $src, lvl: \"BOT\"})-[:LSTEP*1..]->(t:LNode {base: $dst})\n"
    "WHERE t.lvl <> \"BOT\"\n"
    "RETURN true AS found\n"
    "LIMIT 1;\n";

}  // namespace levgraph::cypher_templates
