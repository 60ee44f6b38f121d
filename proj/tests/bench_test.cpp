// Copyright 2026 The qaoa-sim Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.


#include "qaoa/bench.hpp"

#include <sstream>

#include "gtest/gtest.h"

using namespace qaoa;
using namespace qaoa::bench;

namespace {

RunConfig baseConfig(std::string command) {
    RunConfig cfg;
    cfg.command = std::move(command);
    cfg.generator = "u3r";
    cfg.qubits = {8};
    cfg.levels = {2};
    cfg.warmup = 0;
    return cfg;
}

std::vector<std::string> lines(const std::string &text) {
    std::vector<std::string> out;
    std::istringstream in(text);
    for (std::string line; std::getline(in, line);) {
        out.push_back(line);
    }
    return out;
}

}  // namespace

TEST(GeneratorSpec, parse) {
    const GeneratorSpec s = parseGeneratorSpec("u3r:n=10,seed=3");
    EXPECT_EQ(s.kind, "u3r");
    EXPECT_EQ(s.nodes, 10);
    EXPECT_EQ(s.seed, 3u);
    const GeneratorSpec bare = parseGeneratorSpec("complete");
    EXPECT_FALSE(bare.nodes.has_value());
    EXPECT_FALSE(bare.seed.has_value());
    EXPECT_THROW(parseGeneratorSpec("torus:n=3"), ConfigError);
    EXPECT_THROW(parseGeneratorSpec("u3r:n=ten"), ConfigError);
    EXPECT_THROW(parseGeneratorSpec("u3r:size=4"), ConfigError);
}

TEST(GeneratorSpec, generate) {
    EXPECT_EQ(generateGraph(parseGeneratorSpec("u3r:n=10,seed=3"), 4, 0), randomRegularGraph(10, 3, false, 3));
    EXPECT_EQ(generateGraph(parseGeneratorSpec("w3r"), 8, 5), randomRegularGraph(8, 3, true, 5));
    EXPECT_EQ(generateGraph(parseGeneratorSpec("cycle"), 6, 0), cycleGraph(6));
    EXPECT_EQ(generateGraph(parseGeneratorSpec("complete:n=5"), 9, 0), completeGraph(5));
    EXPECT_THROW(generateGraph(parseGeneratorSpec("u3r:n=7"), 4, 0), ConfigError);
}

TEST(Lists, parse) {
    EXPECT_EQ(parseIntList("7"), (std::vector<int>{7}));
    EXPECT_EQ(parseIntList("3:6"), (std::vector<int>{3, 4, 5, 6}));
    EXPECT_EQ(parseIntList("1,5,10"), (std::vector<int>{1, 5, 10}));
    EXPECT_THROW(parseIntList("6:3"), ConfigError);
    EXPECT_THROW(parseIntList("a"), ConfigError);
    EXPECT_THROW(parseIntList(""), ConfigError);
    EXPECT_EQ(parseDoubleList("0.5,1e-1"), (std::vector<double>{0.5, 0.1}));
    EXPECT_EQ(parseBackendList("baseline,bitwise"),
              (std::vector<BackendKind>{BackendKind::Baseline, BackendKind::Bitwise}));
    EXPECT_THROW(parseBackendList("baseline,gpu"), ConfigError);
}

TEST(Validate, rejections) {
    RunConfig cfg = baseConfig("simulate");
    EXPECT_NO_THROW(validate(cfg));
    auto expectBad = [](RunConfig c) { EXPECT_THROW(validate(c), ConfigError); };
    RunConfig c = cfg;
    c.command = "dance";
    expectBad(c);
    c = cfg;
    c.graphPath = "x.txt";
    expectBad(c);
    c = cfg;
    c.batchWidth = 3;
    expectBad(c);
    c = cfg;
    c.repetitions = 0;
    expectBad(c);
    c = cfg;
    c.budget = 0;
    expectBad(c);
    c = cfg;
    c.levels = {0};
    expectBad(c);
    c = cfg;
    c.gamma = {0.1};
    c.beta = {0.1, 0.2};
    expectBad(c);
    c = cfg;
    c.generator = "w3r";
    c.backends = {BackendKind::Bitwise};
    expectBad(c);
}

TEST(Records, jsonKeyOrderAndIntegerTimes) {
    BenchRecord r;
    r.qubits = 4;
    r.p = 2;
    r.backend = BackendKind::Bitwise;
    r.initTimeNs = 10;
    r.costTimeNs = 20;
    r.mixerTimeNs = 30;
    r.totalTimeNs = 70;
    r.expectation = 1.5;
    const std::string text = toJson(r).dump();
    EXPECT_EQ(text,
              "{\"qubits\":4,\"p\":2,\"backend\":\"bitwise\",\"threads\":1,\"batch_width\":1,"
              "\"init_time_ns\":10,\"cost_time_ns\":20,\"mixer_time_ns\":30,\"total_time_ns\":70,"
              "\"expectation\":1.5,\"approx_ratio\":null,\"seed\":0}");
    EXPECT_EQ(toCsv(r), "4,2,bitwise,1,1,10,20,30,70,1.5,,0");
    EXPECT_EQ(lines(csvHeader()).size(), 1u);
}

TEST(Commands, simulateRepetitions) {
    RunConfig cfg = baseConfig("simulate");
    cfg.repetitions = 3;
    const auto records = cmdSimulate(cfg);
    ASSERT_EQ(records.size(), 3u);
    for (const BenchRecord &r : records) {
        EXPECT_EQ(r.qubits, 8);
        EXPECT_EQ(r.p, 2);
        EXPECT_EQ(r.expectation, records.front().expectation);
        ASSERT_TRUE(r.approxRatio.has_value());
        EXPECT_GT(*r.approxRatio, 0.0);
        EXPECT_LE(*r.approxRatio, 1.0);
        EXPECT_GE(r.totalTimeNs, r.costTimeNs + r.mixerTimeNs);
    }
}

TEST(Commands, simulateExplicitAngles) {
    RunConfig cfg = baseConfig("simulate");
    cfg.levels = {1};
    cfg.gamma = {0.7};
    cfg.beta = {0.2};
    const Graph g = randomRegularGraph(8, 3, false, 0);
    const double expected = expectation(g, simulate(g, QaoaParams{{0.7}, {0.2}}, BackendKind::Baseline));
    EXPECT_NEAR(*cmdSimulate(cfg).front().expectation, expected, 1e-12);
}

TEST(Commands, compareAllBackendsAgree) {
    RunConfig cfg = baseConfig("compare");
    cfg.qubits = {6, 8};
    cfg.backends = {BackendKind::Baseline, BackendKind::Compressed, BackendKind::Bitwise};
    const auto rows = cmdCompare(cfg);
    ASSERT_EQ(rows.size(), 6u);
    for (const CompareRow &row : rows) {
        EXPECT_LE(row.maxAbsDiff, kEquivalenceTolerance);
        EXPECT_GT(row.costSpeedup, 0.0);
    }
    std::ostringstream out;
    writeCompare(out, rows, OutputFormat::Json);
    const auto text = lines(out.str());
    ASSERT_EQ(text.size(), 6u);
    const auto parsed = nlohmann::json::parse(text[2]);
    EXPECT_EQ(parsed["backend"], "bitwise");
    EXPECT_TRUE(parsed.contains("cost_speedup"));
    EXPECT_TRUE(parsed.contains("max_abs_diff"));
}

TEST(Commands, sweepNormalization) {
    RunConfig cfg = baseConfig("sweep-p");
    cfg.levels = {3, 1, 2, 1};
    cfg.backends = {BackendKind::Baseline, BackendKind::Compressed};
    const auto records = cmdSweepP(cfg);
    ASSERT_EQ(records.size(), 6u);
    EXPECT_EQ(records.front().p, 1);
    EXPECT_EQ(records.back().p, 3);
    EXPECT_EQ(records.front().backend, BackendKind::Baseline);
    EXPECT_EQ(records.front().normalizedTime, 1.0);
    for (const BenchRecord &r : records) {
        ASSERT_TRUE(r.normalizedTime.has_value());
        EXPECT_GT(*r.normalizedTime, 0.0);
    }
    std::ostringstream out;
    writeRecords(out, records, OutputFormat::Csv);
    const auto text = lines(out.str());
    ASSERT_EQ(text.size(), 7u);
    EXPECT_NE(text[0].find(",normalized_time"), std::string::npos);
}

TEST(Commands, optimizeReportJson) {
    RunConfig cfg = baseConfig("optimize");
    cfg.levels = {1};
    cfg.budget = 20;
    Graph g;
    const OptimizeReport report = cmdOptimize(cfg, &g);
    EXPECT_EQ(report.evaluations, 20);
    ASSERT_TRUE(report.approxRatio.has_value());
    const auto json = toJson(report, g, cfg);
    EXPECT_EQ(json["evaluations"], 20);
    EXPECT_EQ(json["history"].size(), 20u);
    EXPECT_EQ(json["best_gamma"].size(), 1u);
}

TEST(Commands, optimizeRatioGuard) {
    RunConfig cfg = baseConfig("optimize");
    cfg.generator = "complete:n=30";
    cfg.budget = 1;
    cfg.ratio = RatioMode::On;
    EXPECT_THROW(cmdOptimize(cfg), GuardError);
}

TEST(Commands, genRoundTrips) {
    const std::string text = cmdGen("w3r:n=10,seed=4", 0);
    EXPECT_EQ(parseEdgeList(text), randomRegularGraph(10, 3, true, 4));
    EXPECT_EQ(lines(text).front(), "# nodes 10 edges 15");
    EXPECT_THROW(cmdGen("u3r", 0), ConfigError);
}
