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


// qaoa-sim: run, compare, sweep and optimize QAOA max-cut simulations.

#include <fstream>
#include <iostream>
#include <memory>

#include "CLI11.hpp"
#include "qaoa/bench.hpp"
#include "qaoa/errors.hpp"

namespace {

using namespace qaoa;
using namespace qaoa::bench;

struct RawFlags {
    std::string qubits = "10";
    std::string p = "5";
    std::string backend = "compressed";
    std::string launchControl = "on";
    std::string format = "json";
    std::string ratio = "auto";
    std::string init = "ramp";
    std::string popcount = "native";
    std::string gamma;
    std::string beta;
};

void addCommonFlags(CLI::App *cmd, RunConfig &cfg, RawFlags &raw) {
    cmd->add_option("--graph", cfg.graphPath, "edge-list file (\"i j [w]\" per line)");
    cmd->add_option("--gen", cfg.generator, "generator spec, e.g. u3r:n=10,seed=3 (u3r|w3r|complete|cycle)");
    cmd->add_option("--qubits", raw.qubits, "qubit count, range a:b or list a,b,c")->capture_default_str();
    cmd->add_option("--p", raw.p, "QAOA levels: value, range a:b or list")->capture_default_str();
    cmd->add_option("--backend", raw.backend, "baseline, compressed, bitwise (comma list for compare/sweep-p)")
        ->capture_default_str();
    cmd->add_option("--threads", cfg.threads, "worker threads (0 = hardware concurrency)")->capture_default_str();
    cmd->add_option("--batch-width", cfg.batchWidth, "bitwise strip width")
        ->check(CLI::IsMember({1, 2, 4, 8}))
        ->capture_default_str();
    cmd->add_option("--popcount", raw.popcount, "bitwise popcount: native or table")
        ->check(CLI::IsMember({"native", "table"}))
        ->capture_default_str();
    cmd->add_option("--launch-control", raw.launchControl, "write the uniform state directly (on/off)")
        ->check(CLI::IsMember({"on", "off"}))
        ->capture_default_str();
    cmd->add_option("--budget", cfg.budget, "optimizer evaluation budget")->capture_default_str();
    cmd->add_option("--seed", cfg.seed, "seed for generators, initial angles and the optimizer")
        ->capture_default_str();
    cmd->add_option("--format", raw.format, "json or csv")->check(CLI::IsMember({"json", "csv"}))->capture_default_str();
    cmd->add_option("--reps", cfg.repetitions, "measured repetitions")->capture_default_str();
    cmd->add_option("--warmup", cfg.warmup, "untimed warm-up runs")->capture_default_str();
    cmd->add_option("--ratio", raw.ratio, "approximation ratio: auto, on or off")
        ->check(CLI::IsMember({"auto", "on", "off"}))
        ->capture_default_str();
    cmd->add_option("--init", raw.init, "initial angles: ramp or random")
        ->check(CLI::IsMember({"ramp", "random"}))
        ->capture_default_str();
    cmd->add_option("--gamma", raw.gamma, "explicit cost angles, comma separated");
    cmd->add_option("--beta", raw.beta, "explicit mixer angles, comma separated");
    cmd->add_option("--out", cfg.out, "write output to PATH instead of stdout");
}

void finalize(RunConfig &cfg, const RawFlags &raw) {
    cfg.qubits = parseIntList(raw.qubits);
    cfg.levels = parseIntList(raw.p);
    cfg.backends = parseBackendList(raw.backend);
    cfg.launchControl = raw.launchControl == "on";
    cfg.format = raw.format == "csv" ? OutputFormat::Csv : OutputFormat::Json;
    cfg.ratio = raw.ratio == "on" ? RatioMode::On : raw.ratio == "off" ? RatioMode::Off : RatioMode::Auto;
    cfg.init = raw.init == "random" ? InitStrategy::Random : InitStrategy::LinearRamp;
    cfg.popcount = raw.popcount == "table" ? PopcountMode::Table : PopcountMode::Native;
    if (!raw.gamma.empty()) {
        cfg.gamma = parseDoubleList(raw.gamma);
    }
    if (!raw.beta.empty()) {
        cfg.beta = parseDoubleList(raw.beta);
    }
}

}  // namespace

int main(int argc, char **argv) {
    CLI::App app{"QAOA max-cut state-vector simulator"};
    app.require_subcommand(1);

    RunConfig cfg;
    RawFlags raw;
    std::string genSpec;

    auto *simulateCmd = app.add_subcommand("simulate", "run the circuit and report expectation and layer timings");
    auto *compareCmd = app.add_subcommand("compare", "time backends on identical inputs after an equivalence check");
    auto *sweepCmd = app.add_subcommand("sweep-p", "time the circuit across a range of levels");
    auto *optimizeCmd = app.add_subcommand("optimize", "tune (gamma, beta) with a simplex search");
    auto *genCmd = app.add_subcommand("gen", "write a generated graph as an edge list");
    for (auto *cmd : {simulateCmd, compareCmd, sweepCmd, optimizeCmd}) {
        addCommonFlags(cmd, cfg, raw);
    }
    genCmd->add_option("spec", genSpec, "u3r:n=8,seed=1 | w3r:... | complete:n=4 | cycle:n=6")->required();
    genCmd->add_option("--seed", cfg.seed, "seed used when the spec has none");
    genCmd->add_option("--out", cfg.out, "write to PATH instead of stdout");

    CLI11_PARSE(app, argc, argv);

    try {
        cfg.command = app.get_subcommands().front()->get_name();
        std::unique_ptr<std::ofstream> file;
        std::ostream *out = &std::cout;
        if (cfg.out) {
            file = std::make_unique<std::ofstream>(*cfg.out);
            if (!*file) {
                throw Error("cannot open output file '" + *cfg.out + "'");
            }
            out = file.get();
        }
        if (cfg.command == "gen") {
            *out << cmdGen(genSpec, cfg.seed);
            return 0;
        }
        finalize(cfg, raw);
        if (cfg.command == "simulate") {
            writeRecords(*out, cmdSimulate(cfg), cfg.format);
        } else if (cfg.command == "compare") {
            writeCompare(*out, cmdCompare(cfg), cfg.format);
        } else if (cfg.command == "sweep-p") {
            writeRecords(*out, cmdSweepP(cfg), cfg.format);
        } else {
            Graph g;
            const OptimizeReport report = cmdOptimize(cfg, &g);
            writeOptimize(*out, report, g, cfg, cfg.format);
        }
    } catch (const ConfigError &e) {
        std::cerr << "usage error: " << e.what() << '\n';
        return 2;
    } catch (const ParseError &e) {
        std::cerr << "parse error: " << e.what() << '\n';
        return 2;
    } catch (const std::exception &e) {
        std::cerr << "error: " << e.what() << '\n';
        return 1;
    }
    return 0;
}
