#include <gtest/gtest.h>

#include <filesystem>
#include <sstream>

#include <json.hpp>

#include "levgraph/cli.hpp"
#include "test_support.hpp"

namespace levgraph {
namespace {

struct Run {
    int code;
    std::string out;
    std::string err;
};

Run run(std::vector<std::string> args) {
    std::ostringstream out, err;
    const int code = cli::dispatch(args, out, err);
    return {code, out.str(), err.str()};
}

const std::string kFig1 = testing::data_path("fig1.json");
const std::string kFig1Tsv = testing::data_path("fig1.tsv");

std::filesystem::path scratch(const std::string& name) {
    auto p = std::filesystem::temp_directory_path() / ("levgraph_cli_test_" + name);
    std::filesystem::remove_all(p);
    return p;
}

TEST(Cli, QueryTrue) {
    auto r = run({"query", "--graph", kFig1, "--source", "1", "--target", "2"});
    EXPECT_EQ(r.code, 0);
    EXPECT_EQ(r.out, "true\n");
}

TEST(Cli, QueryFalseFromTsv) {
    auto r = run({"query", "--graph", kFig1Tsv, "--source", "3", "--target", "1"});
    EXPECT_EQ(r.code, 0);
    EXPECT_EQ(r.out, "false\n");
}

TEST(Cli, QueryUnknownNode) {
    auto r = run({"query", "--graph", kFig1, "--source", "9", "--target", "2"});
    EXPECT_EQ(r.code, 1);
    EXPECT_TRUE(r.out.empty());
    EXPECT_NE(r.err.find("\"9\""), std::string::npos);
    EXPECT_EQ(std::count(r.err.begin(), r.err.end(), '\n'), 1);
}

TEST(Cli, BogusSubcommand) {
    auto r = run({"bogus-subcommand"});
    EXPECT_EQ(r.code, 2);
    EXPECT_NE(r.err.find("Usage"), std::string::npos);
    EXPECT_EQ(run({}).code, 2);
    EXPECT_EQ(run({"query", "--graph", kFig1}).code, 2);
    EXPECT_EQ(run({"baseline", "--graph", kFig1, "--source", "1", "--target", "2", "--timeout-ms", "0"}).code, 2);
    EXPECT_EQ(run({"--format", "xml", "parse", "--graph", kFig1}).code, 2);
}

TEST(Cli, Help) {
    auto r = run({"--help"});
    EXPECT_EQ(r.code, 0);
    EXPECT_NE(r.out.find("export-cypher"), std::string::npos);
}

TEST(Cli, QueryWitnessTsv) {
    auto r = run({"query", "--graph", kFig1, "--source", "1", "--target", "2", "--witness"});
    EXPECT_EQ(r.code, 0);
    EXPECT_EQ(r.out, "true\ne3\t1\t2\t600\n");
}

TEST(Cli, JsonEnvelope) {
    auto r = run({"--json-output", "query", "--graph", kFig1, "--source", "1", "--target", "2", "--witness"});
    ASSERT_EQ(r.code, 0);
    auto j = nlohmann::json::parse(r.out);
    EXPECT_TRUE(j["ok"].get<bool>());
    EXPECT_TRUE(j["result"]["exists"].get<bool>());
    EXPECT_EQ(j["result"]["witness"][0]["id"], "e3");

    // Global flags may also follow the subcommand.
    auto after = run({"oracle", "--graph", kFig1, "--source", "1", "--target", "2", "--json-output"});
    auto k = nlohmann::json::parse(after.out);
    EXPECT_EQ(k["result"]["paths_explored"], 4);
    EXPECT_EQ(k["result"]["min_witness_len"], 1);

    auto bad = run({"--json-output", "query", "--graph", kFig1, "--source", "9", "--target", "2"});
    EXPECT_EQ(bad.code, 1);
    EXPECT_FALSE(nlohmann::json::parse(bad.out)["ok"].get<bool>());
}

TEST(Cli, OracleAndBaseline) {
    EXPECT_EQ(run({"oracle", "--graph", kFig1, "--source", "2", "--target", "2"}).out, "false\n");
    auto b = run({"--quiet", "baseline", "--graph", kFig1, "--source", "1", "--target", "2", "--timeout-ms", "10000"});
    EXPECT_EQ(b.code, 0);
    EXPECT_EQ(b.out, "found\n");
    EXPECT_TRUE(b.err.empty());
    auto p = run({"baseline", "--graph", kFig1, "--source", "3", "--target", "1", "--pruned"});
    EXPECT_EQ(p.out, "not-found\n");
}

TEST(Cli, ParseReportsDiagnostics) {
    const auto dir = scratch("parse");
    std::filesystem::create_directories(dir);
    const auto bad = (dir / "bad.json").string();
    {
        std::ofstream(bad) << R"({"nodes":[{"id":"a"}],"edges":[{"src":"a","tgt":"z","val":1}]})";
    }
    auto r = run({"parse", "--graph", bad});
    EXPECT_EQ(r.code, 1);
    EXPECT_NE(r.err.find("\"z\""), std::string::npos);

    auto ok = run({"parse", "--graph", kFig1Tsv, "--out", (dir / "fig1.json").string()});
    EXPECT_EQ(ok.code, 0);
    EXPECT_EQ(ok.out, "3 nodes, 4 edges, 0 diagnostics\n");
    EXPECT_EQ(run({"query", "--graph", (dir / "fig1.json").string(), "--source", "1", "--target", "2"}).out, "true\n");

    const auto nan = (dir / "nan.tsv").string();
    {
        std::ofstream(nan) << "a\tb\tNaN\n";
    }
    auto n = run({"parse", "--graph", nan});
    EXPECT_EQ(n.code, 1);
    EXPECT_NE(n.err.find("non-finite"), std::string::npos);
    EXPECT_EQ(run({"parse", "--graph", (dir / "missing.json").string()}).code, 1);
    std::filesystem::remove_all(dir);
}

TEST(Cli, CompileWritesLeveledGraph) {
    const auto dir = scratch("compile");
    auto r = run({"compile", "--graph", kFig1, "--out", (dir / "lev.json").string()});
    EXPECT_EQ(r.code, 0);
    EXPECT_EQ(r.out, "n_prime=7 bound_n=7 e_prime=6 bound_e=16\n");
    auto lev = parse_graph(testing::read_text((dir / "lev.json").string()), GraphFormat::json);
    EXPECT_EQ(lev.nodes.size(), 7u);

    auto j = run({"--json-output", "compile", "--graph", kFig1});
    auto doc = nlohmann::json::parse(j.out);
    EXPECT_EQ(doc["result"]["size"]["e_prime"], 6);
    EXPECT_EQ(doc["result"]["leveled"]["edges"].size(), 6u);
    std::filesystem::remove_all(dir);
}

TEST(Cli, GenIsDeterministic) {
    const auto dir = scratch("gen");
    const auto a = (dir / "a.json").string();
    const auto b = (dir / "b.json").string();
    ASSERT_EQ(run({"gen", "--nodes", "10", "--edges", "25", "--seed", "4", "--out", a}).code, 0);
    ASSERT_EQ(run({"gen", "--nodes", "10", "--edges", "25", "--seed", "4", "--out", b}).code, 0);
    EXPECT_EQ(testing::read_text(a), testing::read_text(b));
    auto g = parse_graph(testing::read_text(a), GraphFormat::json);
    EXPECT_EQ(g.edges.size(), 25u);
    const auto tsv = (dir / "c.tsv").string();
    ASSERT_EQ(run({"gen", "--nodes", "10", "--edges", "25", "--seed", "4", "--out", tsv}).code, 0);
    EXPECT_EQ(parse_graph(testing::read_text(tsv), GraphFormat::tsv).edges.size(), 25u);
    EXPECT_EQ(run({"gen", "--nodes", "1", "--edges", "3", "--seed", "4", "--out", tsv}).code, 2);
    std::filesystem::remove_all(dir);
}

TEST(Cli, BenchWritesReport) {
    const auto dir = scratch("bench");
    auto r = run({"--quiet", "bench", "--nodes", "30", "--edges", "10:30:10", "--runs", "2", "--timeout-ms", "2000",
                  "--seed", "5", "--out", dir.string()});
    EXPECT_EQ(r.code, 0) << r.err;
    EXPECT_TRUE(r.err.empty());
    const auto csv = testing::read_text((dir / "bench.csv").string());
    EXPECT_EQ(csv, r.out);
    EXPECT_EQ(std::count(csv.begin(), csv.end(), '\n'), 4);
    EXPECT_TRUE(std::filesystem::exists(dir / "latency.svg"));
    EXPECT_EQ(run({"bench", "--edges", "1:2", "--out", dir.string()}).code, 2);
    EXPECT_EQ(run({"bench", "--source", "1", "--out", dir.string()}).code, 2);
    std::filesystem::remove_all(dir);
}

TEST(Cli, ExportCypher) {
    const auto dir = scratch("cypher");
    ASSERT_EQ(run({"export-cypher", "--graph", kFig1, "--out", dir.string()}).code, 0);
    EXPECT_EQ(testing::read_text((dir / "leveled.cypher").string()),
              testing::read_text(std::string(LEVGRAPH_GOLDEN_DIR) + "/fig1/leveled.cypher"));
    std::filesystem::remove_all(dir);
}

TEST(Cli, IdenticalInvocationsIdenticalOutput) {
    std::vector<std::string> args{"--json-output", "compile", "--graph", kFig1};
    EXPECT_EQ(run(args).out, run(args).out);
}

}  // namespace
}  // namespace levgraph
