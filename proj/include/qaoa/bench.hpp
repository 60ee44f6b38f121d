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


#pragma once

#include <cstdint>
#include <iosfwd>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "json.hpp"
#include "qaoa/errors.hpp"
#include "qaoa/circuit.hpp"
#include "qaoa/graph.hpp"
#include "qaoa/optimizer.hpp"

namespace qaoa::bench {

enum class OutputFormat { Json, Csv };
enum class RatioMode { Auto, On, Off };

/// "kind:key=value,..." with kind in {u3r, w3r, complete, cycle} and keys n, seed.
struct GeneratorSpec {
    std::string kind;
    std::optional<int> nodes;
    std::optional<std::uint64_t> seed;
};

GeneratorSpec parseGeneratorSpec(std::string_view text);
Graph generateGraph(const GeneratorSpec &spec, int defaultNodes, std::uint64_t defaultSeed);

/// Parses "7", "3:6" (inclusive range) or "1,5,10".
std::vector<int> parseIntList(std::string_view text);
std::vector<double> parseDoubleList(std::string_view text);
std::vector<BackendKind> parseBackendList(std::string_view text);

struct RunConfig {
    std::string command;
    std::optional<std::string> graphPath;
    std::optional<std::string> generator;
    std::vector<int> qubits{10};
    std::vector<int> levels{5};
    std::vector<BackendKind> backends{BackendKind::Compressed};
    /// 0 selects the hardware default.
    int threads = 0;
    int batchWidth = 8;
    PopcountMode popcount = PopcountMode::Native;
    bool launchControl = true;
    int budget = 200;
    std::uint64_t seed = 0;
    OutputFormat format = OutputFormat::Json;
    int repetitions = 1;
    int warmup = 1;
    RatioMode ratio = RatioMode::Auto;
    InitStrategy init = InitStrategy::LinearRamp;
    std::vector<double> gamma;
    std::vector<double> beta;
    std::optional<std::string> out;
};

/// Throws ConfigError describing the first inconsistency found.
void validate(const RunConfig &cfg);

/// One timing/quality row. Times are wall-clock nanoseconds of the measured
/// (post-warm-up) run.
struct BenchRecord {
    int qubits = 0;
    int p = 0;
    BackendKind backend = BackendKind::Baseline;
    int threads = 1;
    int batchWidth = 1;
    std::int64_t initTimeNs = 0;
    std::int64_t costTimeNs = 0;
    std::int64_t mixerTimeNs = 0;
    std::int64_t totalTimeNs = 0;
    std::optional<double> expectation;
    std::optional<double> approxRatio;
    std::uint64_t seed = 0;
    /// Set by sweep-p only.
    std::optional<double> normalizedTime;
};

/// compare output: a record plus speedups over the baseline on the same instance.
struct CompareRow {
    BenchRecord record;
    double costSpeedup = 0.0;
    double totalSpeedup = 0.0;
    double maxAbsDiff = 0.0;
};

/// Raised when backends disagree; compare never reports speedups in that case.
class EquivalenceError : public Error {
  public:
    using Error::Error;
};

inline constexpr double kEquivalenceTolerance = 1e-10;

nlohmann::ordered_json toJson(const BenchRecord &r);
nlohmann::ordered_json toJson(const CompareRow &r);
nlohmann::ordered_json toJson(const OptimizeReport &r, const Graph &g, const RunConfig &cfg);

/// Fixed CSV column order of BenchRecord rows.
std::string csvHeader();
std::string toCsv(const BenchRecord &r);

std::vector<BenchRecord> cmdSimulate(const RunConfig &cfg);
std::vector<CompareRow> cmdCompare(const RunConfig &cfg);
std::vector<BenchRecord> cmdSweepP(const RunConfig &cfg);
OptimizeReport cmdOptimize(const RunConfig &cfg, Graph *graphOut = nullptr);
std::string cmdGen(std::string_view spec, std::uint64_t defaultSeed);

void writeRecords(std::ostream &out, const std::vector<BenchRecord> &records, OutputFormat format);
void writeCompare(std::ostream &out, const std::vector<CompareRow> &rows, OutputFormat format);
void writeOptimize(std::ostream &out, const OptimizeReport &report, const Graph &g, const RunConfig &cfg,
                   OutputFormat format);

}  // namespace qaoa::bench
