#include <gtest/gtest.h>

#include <limits>
#include <map>
#include <random>
#include <set>
#include <tuple>

#include "levgraph/error.hpp"
#include "levgraph/levels.hpp"
#include "test_support.hpp"

namespace levgraph {
namespace {

std::vector<std::string> rendered(std::span<const Level> levels) {
    std::vector<std::string> out;
    for (const auto& l : levels) out.push_back(l.render());
    return out;
}

std::set<std::string> node_labels(const LeveledGraph& lev) {
    std::set<std::string> out;
    for (std::size_t i = 0; i < lev.nodes().size(); ++i) out.insert(lev.node_label(i));
    return out;
}

std::map<std::pair<std::string, std::string>, std::string> edge_map(const LeveledGraph& lev) {
    std::map<std::pair<std::string, std::string>, std::string> out;
    for (const auto& e : lev.edges()) out[{lev.node_label(e.from), lev.node_label(e.to)}] = e.provenance;
    return out;
}

// Direct transcription of the definition, quadratic in everything: level sets
// are recomputed from the edge list, and every candidate (u,l) -> (v,j) pair is
// tested against every base edge.
struct BruteForceLeveled {
    std::set<std::string> nodes;
    std::map<std::pair<std::string, std::string>, std::string> edges;  // -> smallest contributing id
};

BruteForceLeveled brute_force_leveled(const PropertyGraph& g) {
    auto levels_of = [&](const NodeId& v) {
        std::vector<std::optional<double>> out{std::nullopt};
        for (const auto& e : g.edges) {
            if (e.tgt == v && std::find(out.begin(), out.end(), std::optional(e.val)) == out.end()) {
                out.push_back(e.val);
            }
        }
        return out;
    };
    auto name = [](const NodeId& v, const std::optional<double>& l) {
        return v + "@" + (l ? format_value(*l) : std::string("BOT"));
    };

    BruteForceLeveled out;
    for (const auto& v : g.nodes) {
        for (const auto& l : levels_of(v)) out.nodes.insert(name(v, l));
    }
    for (const auto& u : g.nodes) {
        for (const auto& l : levels_of(u)) {
            for (const auto& v : g.nodes) {
                for (const auto& j : levels_of(v)) {
                    if (!j) continue;
                    for (const auto& e : g.edges) {
                        if (e.src != u || e.tgt != v || e.val != *j) continue;
                        if (l && !(*l < *j)) continue;
                        auto key = std::pair(name(u, l), name(v, j));
                        auto it = out.edges.find(key);
                        if (it == out.edges.end() || e.id < it->second) out.edges[key] = e.id;
                    }
                }
            }
        }
    }
    return out;
}

TEST(Level, Ordering) {
    EXPECT_LT(Level::bottom(), Level::of(-1e300));
    EXPECT_LT(Level::of(1), Level::of(2));
    EXPECT_EQ(Level::bottom(), Level::bottom());
    EXPECT_NE(Level::bottom(), Level::of(0));
    EXPECT_EQ(Level::of(-0.0), Level::of(0.0));
    EXPECT_EQ(Level::of(-0.0).render(), "0");
    EXPECT_EQ(Level::bottom().render(), "BOT");
    EXPECT_THROW(Level::of(std::numeric_limits<double>::infinity()), std::invalid_argument);
    EXPECT_THROW(Level::of(std::numeric_limits<double>::quiet_NaN()), std::invalid_argument);
}

TEST(ComputeLevels, Figure1) {
    auto levels = compute_levels(testing::figure1());
    EXPECT_EQ(rendered(levels.levels_of("3")), (std::vector<std::string>{"BOT", "100", "400"}));
    EXPECT_EQ(rendered(levels.levels_of("1")), (std::vector<std::string>{"BOT"}));
    EXPECT_EQ(rendered(levels.levels_of("2")), (std::vector<std::string>{"BOT", "300", "600"}));
    EXPECT_EQ(levels.total(), 7u);
    EXPECT_THROW(levels.levels_of("9"), UnknownNodeError);
}

TEST(ComputeLevels, EdgelessGraphHasOnlyBottom) {
    auto levels = compute_levels(PropertyGraph{{"a", "b"}, {}});
    EXPECT_EQ(rendered(levels.levels_of("a")), (std::vector<std::string>{"BOT"}));
    EXPECT_EQ(rendered(levels.levels_of("b")), (std::vector<std::string>{"BOT"}));
}

TEST(ComputeLevels, DeduplicatesValues) {
    PropertyGraph g{{"a", "b"}, {{"x", "a", "b", "EDGE", 5}, {"y", "b", "b", "EDGE", 5}, {"z", "a", "b", "EDGE", 1}}};
    EXPECT_EQ(rendered(compute_levels(g).levels_of("b")), (std::vector<std::string>{"BOT", "1", "5"}));
}

TEST(BuildLeveled, Figure1) {
    auto lev = build_leveled(testing::figure1());
    EXPECT_EQ(node_labels(lev),
              (std::set<std::string>{"1@BOT", "2@BOT", "2@300", "2@600", "3@BOT", "3@100", "3@400"}));
    const std::map<std::pair<std::string, std::string>, std::string> expected{
        {{"1@BOT", "3@100"}, "e1"}, {{"3@BOT", "2@300"}, "e2"}, {{"3@100", "2@300"}, "e2"},
        {{"1@BOT", "2@600"}, "e3"}, {{"2@BOT", "3@400"}, "e4"}, {{"2@300", "3@400"}, "e4"},
    };
    EXPECT_EQ(edge_map(lev), expected);
    EXPECT_EQ(lev.source_node_count(), 3u);
    EXPECT_EQ(lev.source_edge_count(), 4u);
}

TEST(BuildLeveled, SingleNode) {
    auto lev = build_leveled(PropertyGraph{{"v"}, {}});
    EXPECT_EQ(node_labels(lev), (std::set<std::string>{"v@BOT"}));
    EXPECT_TRUE(lev.edges().empty());
}

TEST(BuildLeveled, SingleEdge) {
    auto lev = build_leveled(PropertyGraph{{"u", "v"}, {{"e", "u", "v", "EDGE", 5}}});
    EXPECT_EQ(node_labels(lev), (std::set<std::string>{"u@BOT", "v@BOT", "v@5"}));
    EXPECT_EQ(edge_map(lev), (std::map<std::pair<std::string, std::string>, std::string>{{{"u@BOT", "v@5"}, "e"}}));
}

TEST(BuildLeveled, EqualValuesDoNotChain) {
    PropertyGraph g{{"u", "v", "w"}, {{"a", "u", "v", "EDGE", 5}, {"b", "v", "w", "EDGE", 5}}};
    auto edges = edge_map(build_leveled(g));
    EXPECT_EQ(edges.size(), 2u);
    EXPECT_TRUE(edges.contains({"v@BOT", "w@5"}));
    EXPECT_FALSE(edges.contains({"v@5", "w@5"}));
}

TEST(BuildLeveled, ParallelEdgesDeduplicateToSmallestId) {
    PropertyGraph g{{"u", "v"},
                    {{"e2", "u", "v", "EDGE", 3}, {"e10", "u", "v", "EDGE", 3}, {"e1", "u", "v", "EDGE", 4}}};
    auto lev = build_leveled(g);
    auto edges = edge_map(lev);
    ASSERT_EQ(lev.edges().size(), 2u);
    EXPECT_EQ(edges.at({"u@BOT", "v@3"}), "e10");  // bytewise: "e10" < "e2"
    EXPECT_EQ(edges.at({"u@BOT", "v@4"}), "e1");
}

TEST(BuildLeveled, SelfLoopsClimbLevels) {
    PropertyGraph g{{"a"}, {{"x", "a", "a", "EDGE", 1}, {"y", "a", "a", "EDGE", 2}}};
    auto edges = edge_map(build_leveled(g));
    // L(a) = {BOT, 1, 2}: x from BOT, y from BOT and 1.
    EXPECT_EQ(edges.size(), 3u);
    EXPECT_TRUE(edges.contains({"a@1", "a@2"}));
}

TEST(BuildLeveled, RejectsInvalidGraph) {
    EXPECT_THROW(build_leveled(PropertyGraph{{"a"}, {{"x", "a", "b", "EDGE", 1}}}), InvalidGraphError);
    EXPECT_THROW(build_leveled(PropertyGraph{{"a"}, {{"x", "a", "a", "EDGE", std::numeric_limits<double>::infinity()}}}),
                 InvalidGraphError);
}

TEST(BuildLeveled, FindNodeAndAdjacency) {
    auto lev = build_leveled(testing::figure1());
    auto from = lev.find_node("3", Level::of(100));
    ASSERT_TRUE(from);
    ASSERT_EQ(lev.out_edges(*from).size(), 1u);
    EXPECT_EQ(lev.node_label(lev.out_edges(*from)[0].to), "2@300");
    EXPECT_FALSE(lev.find_node("3", Level::of(300)));
    EXPECT_FALSE(lev.find_node("9", Level::bottom()));
    EXPECT_EQ(lev.node_label(lev.bottom_node("2")), "2@BOT");
    EXPECT_THROW(lev.bottom_node("9"), UnknownNodeError);
}

TEST(SizeReport, Examples) {
    EXPECT_EQ(size_report(build_leveled(testing::figure1())), (SizeStats{7, 6, 7, 16}));
    EXPECT_EQ(size_report(build_leveled(PropertyGraph{})), (SizeStats{0, 0, 0, 0}));
    EXPECT_EQ(size_report(build_leveled(PropertyGraph{{"u", "v"}, {{"e", "u", "v", "EDGE", 5}}})),
              (SizeStats{3, 1, 3, 1}));
}

TEST(SerializeLeveled, Figure1Format) {
    auto text = serialize_leveled(build_leveled(testing::figure1()));
    auto parsed = parse_graph(text, GraphFormat::json);
    EXPECT_TRUE(validate(parsed).empty());
    EXPECT_EQ(parsed.nodes.size(), 7u);
    EXPECT_EQ(parsed.edges.size(), 6u);
    EXPECT_NE(text.find("\"provenance\": \"e4\""), std::string::npos);
    EXPECT_NE(text.find("\"3@BOT\""), std::string::npos);
}

TEST(LeveledProperties, MatchesDefinitionOnRandomGraphs) {
    std::mt19937_64 rng(2024);
    for (int iter = 0; iter < 400; ++iter) {
        const auto g = testing::random_small_graph(rng, 7, 18, 5);
        const auto lev = build_leveled(g);
        const auto oracle = brute_force_leveled(g);
        ASSERT_EQ(node_labels(lev), oracle.nodes) << serialize_graph(g, GraphFormat::json);
        ASSERT_EQ(edge_map(lev), oracle.edges) << serialize_graph(g, GraphFormat::json);
    }
}

TEST(LeveledProperties, StructuralInvariants) {
    std::mt19937_64 rng(99);
    for (int iter = 0; iter < 500; ++iter) {
        const auto g = testing::random_small_graph(rng, 12, 36, 8);
        const auto lev = build_leveled(g);
        const auto levels = compute_levels(g);

        std::map<std::string, const EdgeRecord*> by_id;
        for (const auto& e : g.edges) by_id[e.id] = &e;

        for (const auto& v : g.nodes) ASSERT_TRUE(lev.find_node(v, Level::bottom()));
        for (std::size_t i = 0; i < lev.edges().size(); ++i) {
            const auto& e = lev.edges()[i];
            const auto& from = lev.nodes()[e.from];
            const auto& to = lev.nodes()[e.to];
            ASSERT_FALSE(to.level.is_bottom());
            ASSERT_LT(from.level, to.level);
            const auto& base = *by_id.at(e.provenance);
            ASSERT_EQ(base.src, from.base);
            ASSERT_EQ(base.tgt, to.base);
            ASSERT_EQ(base.val, to.level.value());
            if (i > 0) {
                const auto& prev = lev.edges()[i - 1];
                ASSERT_LT(std::tie(prev.from, prev.to), std::tie(e.from, e.to));
            }
        }

        std::uint64_t sum_from = 0;
        for (const auto& e : g.edges) sum_from += levels.levels_of(e.src).size();
        const auto stats = size_report(lev);
        ASSERT_EQ(stats.n_prime, levels.total());
        ASSERT_LE(stats.n_prime, g.nodes.size() + g.edges.size());
        ASSERT_LE(stats.e_prime, sum_from);
        ASSERT_LE(stats.e_prime, static_cast<std::uint64_t>(g.edges.size()) * g.edges.size());
    }
}

TEST(LeveledProperties, Deterministic) {
    std::mt19937_64 rng(5);
    for (int iter = 0; iter < 50; ++iter) {
        const auto g = testing::random_small_graph(rng, 10, 30);
        const auto text = serialize_graph(g, GraphFormat::json);
        EXPECT_EQ(serialize_leveled(build_leveled(parse_graph(text, GraphFormat::json))),
                  serialize_leveled(build_leveled(parse_graph(text, GraphFormat::json))));
    }
}

}  // namespace
}  // namespace levgraph
