#pragma once

#include <filesystem>
#include <string>
#include <string_view>

#include "levgraph/graph.hpp"
#include "levgraph/levels.hpp"

namespace levgraph {

/// Cypher text for loading both graphs into Neo4j and querying them.
/// Queries take exactly two parameters, $src and $dst.
struct CypherBundle {
    std::string base_ddl;
    std::string leveled_ddl;
    std::string baseline_query;
    std::string leveled_query;
};

/// Throws ProvenanceMismatchError if `lev` was not built from `g`.
CypherBundle export_bundle(const PropertyGraph& g, const LeveledGraph& lev);

/// Writes base.cypher, leveled.cypher, baseline_query.cypher and leveled_query.cypher.
void write_bundle(const CypherBundle& bundle, const std::filesystem::path& out_dir);

/// Double-quoted Cypher string literal.
std::string cypher_string(std::string_view s);

}  // namespace levgraph
