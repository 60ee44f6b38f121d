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

#include <algorithm>
#include <charconv>
#include <cmath>
#include <limits>
#include <ostream>
#include <sstream>

#include "qaoa/errors.hpp"
#include "qaoa/parallel.hpp"

namespace qaoa::bench {

namespace {

constexpr std::string_view kCommands[] = {"simulate", "compare", "sweep-p", "optimize", "gen"};

std::vector<std::string_view> split(std::string_view text, char sep) {
    std::vector<std::string_view> parts;
    std::size_t start = 0;
    for (;;) {
        const std::size_t pos = text.find(sep, start);
        parts.push_back(text.substr(start, pos == std::string_view::npos ? std::string_view::npos : pos - start));
        if (pos == std::string_view::npos) {
            return parts;
        }
        start = pos + 1;
    }
}

template <typename T>
T parseNumber(std::string_view token, std::string_view what) {
    T value{};
    const auto [ptr, ec] = std::from_chars(token.data(), token.data() + token.size(), value);
    if (token.empty() || ec != std::errc{} || ptr != token.data() + token.size()) {
        throw ConfigError("invalid " + std::string(what) + " '" + std::string(token) + "'");
    }
    return value;
}

struct TimedRun {
    LayerTimings timings;
    StateVector state;
};

// Warm-up runs are discarded; the fastest measured run (by total time) is kept.
TimedRun timedRun(const Graph &g, const QaoaParams &params, const SimulateOptions &options, int warmup,
                  int repetitions) {
    for (int k = 0; k < warmup; ++k) {
        simulate(g, params, options);
    }
    TimedRun best;
    best.timings.totalNs = std::numeric_limits<std::int64_t>::max();
    for (int k = 0; k < repetitions; ++k) {
        LayerTimings t;
        StateVector s = simulate(g, params, options, &t);
        if (t.totalNs < best.timings.totalNs) {
            best.timings = t;
            best.state = std::move(s);
        }
    }
    return best;
}

SimulateOptions simulateOptions(const RunConfig &cfg, BackendKind backend) {
    SimulateOptions options;
    options.backend = backend;
    options.launchControl = cfg.launchControl;
    options.batchWidth = cfg.batchWidth;
    options.popcount = cfg.popcount;
    return options;
}

Graph resolveGraph(const RunConfig &cfg, int qubits) {
    if (cfg.graphPath) {
        return readEdgeListFile(*cfg.graphPath);
    }
    const GeneratorSpec spec = parseGeneratorSpec(cfg.generator.value_or("u3r"));
    return generateGraph(spec, qubits, cfg.seed);
}

QaoaParams resolveParams(const RunConfig &cfg, int p) {
    if (!cfg.gamma.empty()) {
        if (static_cast<int>(cfg.gamma.size()) != p) {
            throw ConfigError("--gamma has " + std::to_string(cfg.gamma.size()) + " angles but p=" + std::to_string(p));
        }
        QaoaParams params{cfg.gamma, cfg.beta};
        params.validate();
        return params;
    }
    return initialParams(p, cfg.init, cfg.seed);
}

void requireBackendFits(const Graph &g, BackendKind backend) {
    if (backend == BackendKind::Bitwise && !g.isUnweighted()) {
        throw ConfigError("backend 'bitwise' requires an unweighted graph; this graph has non-unit weights");
    }
}

std::optional<double> maybeRatio(const RunConfig &cfg, const Graph &g, double expectationValue) {
    switch (cfg.ratio) {
        case RatioMode::Off:
            return std::nullopt;
        case RatioMode::Auto:
            if (g.numNodes() > kDefaultBruteForceGuard) {
                return std::nullopt;
            }
            return approximationRatio(g, expectationValue);
        case RatioMode::On:
            return approximationRatio(g, expectationValue);
    }
    return std::nullopt;
}

BenchRecord makeRecord(const RunConfig &cfg, const Graph &g, int p, BackendKind backend, const LayerTimings &t) {
    BenchRecord r;
    r.qubits = g.numNodes();
    r.p = p;
    r.backend = backend;
    r.threads = numThreads();
    r.batchWidth = cfg.batchWidth;
    r.initTimeNs = t.initNs;
    r.costTimeNs = t.costNs;
    r.mixerTimeNs = t.mixerNs;
    r.totalTimeNs = t.totalNs;
    r.seed = cfg.seed;
    return r;
}

nlohmann::ordered_json optionalJson(const std::optional<double> &v) {
    return v ? nlohmann::ordered_json(*v) : nlohmann::ordered_json(nullptr);
}

std::string csvNumber(const std::optional<double> &v) {
    if (!v) {
        return "";
    }
    std::ostringstream out;
    out.precision(std::numeric_limits<double>::max_digits10);
    out << *v;
    return out.str();
}

}  // namespace

GeneratorSpec parseGeneratorSpec(std::string_view text) {
    GeneratorSpec spec;
    const std::size_t colon = text.find(':');
    spec.kind = std::string(text.substr(0, colon));
    if (spec.kind != "u3r" && spec.kind != "w3r" && spec.kind != "complete" && spec.kind != "cycle") {
        throw ConfigError("unknown generator '" + spec.kind + "'; expected u3r, w3r, complete or cycle");
    }
    if (colon == std::string_view::npos) {
        return spec;
    }
    for (std::string_view item : split(text.substr(colon + 1), ',')) {
        if (item.empty()) {
            continue;
        }
        const std::size_t eq = item.find('=');
        if (eq == std::string_view::npos) {
            throw ConfigError("generator parameter '" + std::string(item) + "' is not key=value");
        }
        const std::string_view key = item.substr(0, eq);
        const std::string_view value = item.substr(eq + 1);
        if (key == "n") {
            spec.nodes = parseNumber<int>(value, "node count");
        } else if (key == "seed") {
            spec.seed = parseNumber<std::uint64_t>(value, "seed");
        } else {
            throw ConfigError("unknown generator parameter '" + std::string(key) + "'; expected n or seed");
        }
    }
    return spec;
}

Graph generateGraph(const GeneratorSpec &spec, int defaultNodes, std::uint64_t defaultSeed) {
    const int n = spec.nodes.value_or(defaultNodes);
    const std::uint64_t seed = spec.seed.value_or(defaultSeed);
    if (n < 1) {
        throw ConfigError("generator '" + spec.kind + "' needs a node count (n=...)");
    }
    if (spec.kind == "u3r") {
        return randomRegularGraph(n, 3, false, seed);
    }
    if (spec.kind == "w3r") {
        return randomRegularGraph(n, 3, true, seed);
    }
    if (spec.kind == "complete") {
        return completeGraph(n);
    }
    return cycleGraph(n);
}

std::vector<int> parseIntList(std::string_view text) {
    std::vector<int> out;
    if (const std::size_t colon = text.find(':'); colon != std::string_view::npos) {
        const int lo = parseNumber<int>(text.substr(0, colon), "range start");
        const int hi = parseNumber<int>(text.substr(colon + 1), "range end");
        if (hi < lo) {
            throw ConfigError("empty range '" + std::string(text) + "'");
        }
        for (int v = lo; v <= hi; ++v) {
            out.push_back(v);
        }
        return out;
    }
    for (std::string_view item : split(text, ',')) {
        out.push_back(parseNumber<int>(item, "integer"));
    }
    return out;
}

std::vector<double> parseDoubleList(std::string_view text) {
    std::vector<double> out;
    for (std::string_view item : split(text, ',')) {
        out.push_back(parseNumber<double>(item, "angle"));
    }
    return out;
}

std::vector<BackendKind> parseBackendList(std::string_view text) {
    std::vector<BackendKind> out;
    for (std::string_view item : split(text, ',')) {
        out.push_back(parseBackend(item));
    }
    return out;
}

void validate(const RunConfig &cfg) {
    if (std::find(std::begin(kCommands), std::end(kCommands), cfg.command) == std::end(kCommands)) {
        throw ConfigError("unknown command '" + cfg.command + "'");
    }
    if (cfg.graphPath && cfg.generator) {
        throw ConfigError("--graph and --gen are mutually exclusive");
    }
    if (cfg.batchWidth != 1 && cfg.batchWidth != 2 && cfg.batchWidth != 4 && cfg.batchWidth != 8) {
        throw ConfigError("--batch-width must be 1, 2, 4 or 8 (got " + std::to_string(cfg.batchWidth) + ")");
    }
    if (cfg.repetitions < 1) {
        throw ConfigError("--reps must be at least 1");
    }
    if (cfg.warmup < 0) {
        throw ConfigError("--warmup cannot be negative");
    }
    if (cfg.budget < 1) {
        throw ConfigError("--budget must be at least 1");
    }
    if (cfg.threads < 0) {
        throw ConfigError("--threads cannot be negative");
    }
    if (cfg.qubits.empty() || *std::min_element(cfg.qubits.begin(), cfg.qubits.end()) < 1) {
        throw ConfigError("--qubits needs positive values");
    }
    if (cfg.levels.empty() || *std::min_element(cfg.levels.begin(), cfg.levels.end()) < 1) {
        throw ConfigError("--p needs values >= 1");
    }
    if (cfg.backends.empty()) {
        throw ConfigError("--backend needs at least one backend");
    }
    if (cfg.gamma.size() != cfg.beta.size()) {
        throw ConfigError("--gamma and --beta must list the same number of angles");
    }
    if (cfg.generator) {
        const GeneratorSpec spec = parseGeneratorSpec(*cfg.generator);
        const bool wantsBitwise =
            std::find(cfg.backends.begin(), cfg.backends.end(), BackendKind::Bitwise) != cfg.backends.end();
        if (wantsBitwise && spec.kind == "w3r") {
            throw ConfigError("backend 'bitwise' requires an unweighted graph, but generator 'w3r' is weighted");
        }
    }
}

nlohmann::ordered_json toJson(const BenchRecord &r) {
    nlohmann::ordered_json j = {
        {"qubits", r.qubits},
        {"p", r.p},
        {"backend", std::string(toString(r.backend))},
        {"threads", r.threads},
        {"batch_width", r.batchWidth},
        {"init_time_ns", r.initTimeNs},
        {"cost_time_ns", r.costTimeNs},
        {"mixer_time_ns", r.mixerTimeNs},
        {"total_time_ns", r.totalTimeNs},
        {"expectation", optionalJson(r.expectation)},
        {"approx_ratio", optionalJson(r.approxRatio)},
        {"seed", r.seed},
    };
    if (r.normalizedTime) {
        j["normalized_time"] = *r.normalizedTime;
    }
    return j;
}

nlohmann::ordered_json toJson(const CompareRow &r) {
    nlohmann::ordered_json j = toJson(r.record);
    j["cost_speedup"] = r.costSpeedup;
    j["total_speedup"] = r.totalSpeedup;
    j["max_abs_diff"] = r.maxAbsDiff;
    return j;
}

nlohmann::ordered_json toJson(const OptimizeReport &r, const Graph &g, const RunConfig &cfg) {
    nlohmann::ordered_json history = nlohmann::ordered_json::array();
    for (const HistoryEntry &h : r.history) {
        history.push_back({h.evaluation, h.expectation});
    }
    return {
        {"qubits", g.numNodes()},
        {"p", r.bestParams.levels()},
        {"backend", std::string(toString(cfg.backends.front()))},
        {"budget", cfg.budget},
        {"seed", cfg.seed},
        {"best_expectation", r.bestExpectation},
        {"best_gamma", r.bestParams.gamma},
        {"best_beta", r.bestParams.beta},
        {"approx_ratio", optionalJson(r.approxRatio)},
        {"evaluations", r.evaluations},
        {"history", history},
    };
}

std::string csvHeader() {
    return "qubits,p,backend,threads,batch_width,init_time_ns,cost_time_ns,mixer_time_ns,total_time_ns,"
           "expectation,approx_ratio,seed";
}

std::string toCsv(const BenchRecord &r) {
    std::ostringstream out;
    out << r.qubits << ',' << r.p << ',' << toString(r.backend) << ',' << r.threads << ',' << r.batchWidth << ','
        << r.initTimeNs << ',' << r.costTimeNs << ',' << r.mixerTimeNs << ',' << r.totalTimeNs << ','
        << csvNumber(r.expectation) << ',' << csvNumber(r.approxRatio) << ',' << r.seed;
    return out.str();
}

std::vector<BenchRecord> cmdSimulate(const RunConfig &cfg) {
    validate(cfg);
    setNumThreads(cfg.threads);
    const Graph g = resolveGraph(cfg, cfg.qubits.front());
    const BackendKind backend = cfg.backends.front();
    requireBackendFits(g, backend);
    const int p = cfg.levels.front();
    const QaoaParams params = resolveParams(cfg, p);
    const SimulateOptions options = simulateOptions(cfg, backend);

    for (int k = 0; k < cfg.warmup; ++k) {
        simulate(g, params, options);
    }
    std::vector<BenchRecord> records;
    std::optional<double> ratio;
    bool ratioDone = false;
    for (int rep = 0; rep < cfg.repetitions; ++rep) {
        LayerTimings t;
        const StateVector s = simulate(g, params, options, &t);
        BenchRecord r = makeRecord(cfg, g, p, backend, t);
        r.expectation = expectation(g, s);
        if (!ratioDone) {
            ratio = maybeRatio(cfg, g, *r.expectation);
            ratioDone = true;
        }
        r.approxRatio = ratio;
        records.push_back(r);
    }
    return records;
}

std::vector<CompareRow> cmdCompare(const RunConfig &cfg) {
    validate(cfg);
    setNumThreads(cfg.threads);
    const int p = cfg.levels.front();
    const QaoaParams params = resolveParams(cfg, p);
    std::vector<CompareRow> rows;
    for (int n : cfg.qubits) {
        const Graph g = resolveGraph(cfg, n);
        for (BackendKind backend : cfg.backends) {
            requireBackendFits(g, backend);
        }
        const TimedRun reference =
            timedRun(g, params, simulateOptions(cfg, BackendKind::Baseline), cfg.warmup, cfg.repetitions);

        // Every backend must match the reference state before any speedup is reported.
        std::vector<CompareRow> pending;
        for (BackendKind backend : cfg.backends) {
            const TimedRun run = backend == BackendKind::Baseline
                                     ? timedRun(g, params, simulateOptions(cfg, backend), 0, cfg.repetitions)
                                     : timedRun(g, params, simulateOptions(cfg, backend), cfg.warmup,
                                                cfg.repetitions);
            const double diff = maxAbsDiff(reference.state, run.state);
            if (!(diff <= kEquivalenceTolerance)) {
                throw EquivalenceError("backend '" + std::string(toString(backend)) + "' disagrees with baseline at " +
                                       std::to_string(n) + " qubits (max |diff| = " + std::to_string(diff) +
                                       "); refusing to report speedups");
            }
            CompareRow row;
            row.record = makeRecord(cfg, g, p, backend, run.timings);
            row.record.expectation = expectation(g, run.state);
            row.maxAbsDiff = diff;
            row.costSpeedup = static_cast<double>(reference.timings.costNs) /
                              static_cast<double>(std::max<std::int64_t>(run.timings.costNs, 1));
            row.totalSpeedup = static_cast<double>(reference.timings.totalNs) /
                               static_cast<double>(std::max<std::int64_t>(run.timings.totalNs, 1));
            pending.push_back(row);
        }
        rows.insert(rows.end(), pending.begin(), pending.end());
    }
    return rows;
}

std::vector<BenchRecord> cmdSweepP(const RunConfig &cfg) {
    validate(cfg);
    setNumThreads(cfg.threads);
    const Graph g = resolveGraph(cfg, cfg.qubits.front());
    for (BackendKind backend : cfg.backends) {
        requireBackendFits(g, backend);
    }
    std::vector<int> levels = cfg.levels;
    std::sort(levels.begin(), levels.end());
    levels.erase(std::unique(levels.begin(), levels.end()), levels.end());

    std::vector<BenchRecord> records;
    for (int p : levels) {
        RunConfig levelCfg = cfg;
        levelCfg.gamma.clear();
        levelCfg.beta.clear();
        const QaoaParams params = resolveParams(levelCfg, p);
        for (BackendKind backend : cfg.backends) {
            const TimedRun run = timedRun(g, params, simulateOptions(cfg, backend), cfg.warmup, cfg.repetitions);
            records.push_back(makeRecord(cfg, g, p, backend, run.timings));
        }
    }

    // Normalize to the smallest-p baseline run when baseline was swept, else per backend.
    const bool hasBaseline =
        std::find(cfg.backends.begin(), cfg.backends.end(), BackendKind::Baseline) != cfg.backends.end();
    for (BenchRecord &r : records) {
        const BackendKind refBackend = hasBaseline ? BackendKind::Baseline : r.backend;
        const auto ref = std::find_if(records.begin(), records.end(), [&](const BenchRecord &c) {
            return c.backend == refBackend && c.p == levels.front();
        });
        r.normalizedTime = static_cast<double>(r.totalTimeNs) /
                           static_cast<double>(std::max<std::int64_t>(ref->totalTimeNs, 1));
    }
    return records;
}

OptimizeReport cmdOptimize(const RunConfig &cfg, Graph *graphOut) {
    validate(cfg);
    setNumThreads(cfg.threads);
    const Graph g = resolveGraph(cfg, cfg.qubits.front());
    if (cfg.ratio == RatioMode::On && g.numNodes() > kDefaultBruteForceGuard) {
        throw GuardError("approximation ratio requested for " + std::to_string(g.numNodes()) +
                         " nodes, above the brute-force guard of " + std::to_string(kDefaultBruteForceGuard) +
                         "; rerun with --ratio off");
    }
    OptimizeOptions options;
    options.levels = cfg.levels.front();
    options.backend = cfg.backends.front();
    options.budget = cfg.budget;
    options.seed = cfg.seed;
    options.init = cfg.init;
    options.launchControl = cfg.launchControl;
    OptimizeReport report = optimize(g, options);
    report.approxRatio = maybeRatio(cfg, g, report.bestExpectation);
    if (graphOut != nullptr) {
        *graphOut = g;
    }
    return report;
}

std::string cmdGen(std::string_view spec, std::uint64_t defaultSeed) {
    const GeneratorSpec parsed = parseGeneratorSpec(spec);
    if (!parsed.nodes) {
        throw ConfigError("generator spec '" + std::string(spec) + "' needs a node count, e.g. " + parsed.kind +
                          ":n=8");
    }
    return toEdgeList(generateGraph(parsed, *parsed.nodes, defaultSeed));
}

void writeRecords(std::ostream &out, const std::vector<BenchRecord> &records, OutputFormat format) {
    if (format == OutputFormat::Json) {
        for (const BenchRecord &r : records) {
            out << toJson(r).dump() << '\n';
        }
        return;
    }
    const bool normalized = !records.empty() && records.front().normalizedTime.has_value();
    out << csvHeader() << (normalized ? ",normalized_time" : "") << '\n';
    for (const BenchRecord &r : records) {
        out << toCsv(r);
        if (normalized) {
            out << ',' << csvNumber(r.normalizedTime);
        }
        out << '\n';
    }
}

void writeCompare(std::ostream &out, const std::vector<CompareRow> &rows, OutputFormat format) {
    if (format == OutputFormat::Json) {
        for (const CompareRow &r : rows) {
            out << toJson(r).dump() << '\n';
        }
        return;
    }
    out << csvHeader() << ",cost_speedup,total_speedup,max_abs_diff\n";
    for (const CompareRow &r : rows) {
        out << toCsv(r.record) << ',' << csvNumber(r.costSpeedup) << ',' << csvNumber(r.totalSpeedup) << ','
            << csvNumber(r.maxAbsDiff) << '\n';
    }
}

void writeOptimize(std::ostream &out, const OptimizeReport &report, const Graph &g, const RunConfig &cfg,
                   OutputFormat format) {
    if (format == OutputFormat::Json) {
        out << toJson(report, g, cfg).dump() << '\n';
        return;
    }
    out << "evaluation,expectation\n";
    for (const HistoryEntry &h : report.history) {
        out << h.evaluation << ',' << csvNumber(h.expectation) << '\n';
    }
}

}  // namespace qaoa::bench
