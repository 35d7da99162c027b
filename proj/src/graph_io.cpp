#include <charconv>
#include <cmath>
#include <set>
#include <sstream>
#include <system_error>

#include <json.hpp>

#include "levgraph/error.hpp"
#include "levgraph/graph.hpp"

namespace levgraph {

namespace {

using nlohmann::json;
using nlohmann::ordered_json;

class NodeCollector {
public:
    explicit NodeCollector(PropertyGraph& g) : g_(g) {}

    bool add(const NodeId& id) {
        if (!seen_.insert(id).second) return false;
        g_.nodes.push_back(id);
        return true;
    }

private:
    PropertyGraph& g_;
    std::set<NodeId> seen_;
};

std::pair<std::size_t, std::size_t> line_and_column(std::string_view text, std::size_t byte) {
    std::size_t line = 1;
    std::size_t col = 1;
    for (std::size_t i = 0; i < byte && i < text.size(); ++i) {
        if (text[i] == '\n') {
            ++line;
            col = 1;
        } else {
            ++col;
        }
    }
    return {line, col};
}

double parse_tsv_value(std::string_view field, std::size_t line, std::size_t column) {
    double v = 0.0;
    auto [ptr, ec] = std::from_chars(field.data(), field.data() + field.size(), v);
    if (ec == std::errc::result_out_of_range) {
        throw ParseError("non-finite val \"" + std::string(field) + "\"", line, column);
    }
    if (ec != std::errc{} || ptr != field.data() + field.size()) {
        throw ParseError("invalid val \"" + std::string(field) + "\"", line, column);
    }
    if (!std::isfinite(v)) throw ParseError("non-finite val \"" + std::string(field) + "\"", line, column);
    return v;
}

PropertyGraph parse_tsv(std::string_view text, bool implicit_nodes) {
    PropertyGraph g;
    NodeCollector nodes(g);
    std::size_t line_no = 0;
    std::size_t pos = 0;
    while (pos <= text.size()) {
        auto end = text.find('\n', pos);
        if (end == std::string_view::npos) end = text.size();
        std::string_view line = text.substr(pos, end - pos);
        pos = end + 1;
        ++line_no;
        if (!line.empty() && line.back() == '\r') line.remove_suffix(1);
        if (line.empty() || line.front() == '#') {
            if (end == text.size()) break;
            continue;
        }

        std::vector<std::string_view> fields;
        std::vector<std::size_t> columns;
        std::size_t start = 0;
        while (true) {
            auto tab = line.find('\t', start);
            fields.push_back(line.substr(start, tab == std::string_view::npos ? tab : tab - start));
            columns.push_back(start + 1);
            if (tab == std::string_view::npos) break;
            start = tab + 1;
        }
        if (fields.size() < 3 || fields.size() > 4) {
            throw ParseError("expected src<TAB>tgt<TAB>val[<TAB>label], got " + std::to_string(fields.size()) +
                                 " field(s)",
                             line_no, 1);
        }
        if (fields[0].empty()) throw ParseError("empty src", line_no, columns[0]);
        if (fields[1].empty()) throw ParseError("empty tgt", line_no, columns[1]);
        if (fields[2].empty()) throw ParseError("missing val", line_no, columns[2]);

        EdgeRecord e;
        e.id = "e" + std::to_string(line_no);
        e.src = fields[0];
        e.tgt = fields[1];
        e.val = parse_tsv_value(fields[2], line_no, columns[2]);
        if (fields.size() == 4) e.label = fields[3];
        if (implicit_nodes) {
            nodes.add(e.src);
            nodes.add(e.tgt);
        }
        g.edges.push_back(std::move(e));
        if (end == text.size()) break;
    }
    return g;
}

const json& require(const json& obj, const char* key, const std::string& where) {
    auto it = obj.find(key);
    if (it == obj.end()) throw ParseError(where + ": missing \"" + key + "\"", 0, 0);
    return *it;
}

std::string require_string(const json& obj, const char* key, const std::string& where) {
    const auto& v = require(obj, key, where);
    if (!v.is_string()) throw ParseError(where + ": \"" + key + "\" must be a string", 0, 0);
    return v.get<std::string>();
}

PropertyGraph parse_json(std::string_view text, bool implicit_nodes) {
    json doc;
    try {
        doc = json::parse(text.begin(), text.end());
    } catch (const json::parse_error& e) {
        auto [line, col] = line_and_column(text, e.byte == 0 ? 0 : e.byte - 1);
        throw ParseError("JSON syntax error: " + std::string(e.what()), line, col);
    } catch (const json::exception& e) {
        throw ParseError(std::string("JSON error: ") + e.what(), 0, 0);
    }
    if (!doc.is_object()) throw ParseError("top-level JSON value must be an object", 1, 1);

    const auto& node_list = require(doc, "nodes", "graph");
    const auto& edge_list = require(doc, "edges", "graph");
    if (!node_list.is_array()) throw ParseError("graph: \"nodes\" must be an array", 0, 0);
    if (!edge_list.is_array()) throw ParseError("graph: \"edges\" must be an array", 0, 0);

    PropertyGraph g;
    NodeCollector nodes(g);
    for (std::size_t i = 0; i < node_list.size(); ++i) {
        const auto where = "nodes[" + std::to_string(i) + "]";
        if (!node_list[i].is_object()) throw ParseError(where + ": expected an object", 0, 0);
        auto id = require_string(node_list[i], "id", where);
        if (!nodes.add(id)) throw ParseError("duplicate node id \"" + id + "\"", 0, 0);
    }

    std::set<EdgeId> edge_ids;
    for (std::size_t i = 0; i < edge_list.size(); ++i) {
        const auto where = "edges[" + std::to_string(i) + "]";
        const auto& item = edge_list[i];
        if (!item.is_object()) throw ParseError(where + ": expected an object", 0, 0);

        EdgeRecord e;
        e.id = item.contains("id") ? require_string(item, "id", where) : "e" + std::to_string(i);
        e.src = require_string(item, "src", where);
        e.tgt = require_string(item, "tgt", where);
        if (item.contains("label")) e.label = require_string(item, "label", where);
        const auto& val = require(item, "val", where);
        if (!val.is_number()) throw ParseError(where + ": \"val\" must be a number", 0, 0);
        e.val = val.get<double>();
        if (!std::isfinite(e.val)) throw ParseError(where + ": non-finite val", 0, 0);
        if (!edge_ids.insert(e.id).second) throw ParseError("duplicate edge id \"" + e.id + "\"", 0, 0);
        if (implicit_nodes) {
            nodes.add(e.src);
            nodes.add(e.tgt);
        }
        g.edges.push_back(std::move(e));
    }
    return g;
}

void check_tsv_field(const std::string& s, const char* what) {
    if (s.find_first_of("\t\r\n") != std::string::npos) {
        throw Error(std::string("cannot write ") + what + " \"" + s + "\" as TSV: contains a tab or line break");
    }
}

}  // namespace

PropertyGraph parse_graph(std::string_view text, GraphFormat format, const ParseOptions& options) {
    switch (format) {
        case GraphFormat::tsv:
            return parse_tsv(text, options.implicit_nodes.value_or(true));
        case GraphFormat::json:
            return parse_json(text, options.implicit_nodes.value_or(false));
    }
    throw InvariantViolation("unhandled graph format");
}

std::string serialize_graph(const PropertyGraph& g, GraphFormat format) {
    if (format == GraphFormat::json) {
        ordered_json doc;
        doc["nodes"] = ordered_json::array();
        for (const auto& n : g.nodes) doc["nodes"].push_back({{"id", n}});
        doc["edges"] = ordered_json::array();
        for (const auto& e : g.edges) {
            doc["edges"].push_back({{"id", e.id}, {"src", e.src}, {"tgt", e.tgt}, {"label", e.label}, {"val", e.val}});
        }
        return doc.dump(2) + "\n";
    }

    std::ostringstream out;
    for (const auto& e : g.edges) {
        check_tsv_field(e.src, "node id");
        check_tsv_field(e.tgt, "node id");
        check_tsv_field(e.label, "label");
        if (e.src.empty() || e.tgt.empty() || (!e.src.empty() && e.src.front() == '#')) {
            throw Error("cannot write edge \"" + e.id + "\" as TSV: empty or '#'-prefixed src/tgt");
        }
        out << e.src << '\t' << e.tgt << '\t' << format_value(e.val) << '\t' << e.label << '\n';
    }
    return out.str();
}

}  // namespace levgraph
