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

#include <pybind11/numpy.h>
#include <pybind11/operators.h>
#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include <complex>
#include <sstream>
#include <tuple>

#include "qaoa/bench.hpp"
#include "qaoa/circuit.hpp"
#include "qaoa/graph.hpp"
#include "qaoa/optimizer.hpp"
#include "qaoa/parallel.hpp"

namespace py = pybind11;
using namespace qaoa;

namespace {

using EdgeTuple = std::tuple<int, int, double>;

Graph graphFromTuples(int n, const std::vector<EdgeTuple> &edges) {
    std::vector<Edge> out;
    out.reserve(edges.size());
    for (const auto &[i, j, w] : edges) {
        out.push_back({i, j, w});
    }
    return Graph::fromEdges(n, std::move(out));
}

std::vector<EdgeTuple> edgeTuples(const Graph &g) {
    std::vector<EdgeTuple> out;
    for (const Edge &e : g.edges()) {
        out.emplace_back(e.i, e.j, e.w);
    }
    return out;
}

SimulateOptions makeOptions(BackendKind backend, bool launchControl, int batchWidth, PopcountMode popcount) {
    SimulateOptions options;
    options.backend = backend;
    options.launchControl = launchControl;
    options.batchWidth = batchWidth;
    options.popcount = popcount;
    return options;
}

py::array_t<std::complex<double>> toArray(const StateVector &s) {
    py::array_t<std::complex<double>> out(static_cast<py::ssize_t>(s.size()));
    std::copy(s.amplitudes().begin(), s.amplitudes().end(), out.mutable_data());
    return out;
}

// Runs one bench command and returns what the CLI would print.
std::string runCommand(const bench::RunConfig &cfg) {
    std::ostringstream out;
    if (cfg.command == "simulate") {
        bench::writeRecords(out, bench::cmdSimulate(cfg), cfg.format);
    } else if (cfg.command == "compare") {
        bench::writeCompare(out, bench::cmdCompare(cfg), cfg.format);
    } else if (cfg.command == "sweep-p") {
        bench::writeRecords(out, bench::cmdSweepP(cfg), cfg.format);
    } else if (cfg.command == "optimize") {
        Graph g;
        const OptimizeReport report = bench::cmdOptimize(cfg, &g);
        bench::writeOptimize(out, report, g, cfg, cfg.format);
    } else if (cfg.command == "gen") {
        out << bench::cmdGen(cfg.generator.value_or(""), cfg.seed);
    } else {
        throw ConfigError("unknown command '" + cfg.command + "'");
    }
    return out.str();
}

}  // namespace

PYBIND11_MODULE(_core, m) {
    m.doc() = "State-vector QAOA max-cut simulator.";

    auto error = py::register_exception<Error>(m, "Error", PyExc_RuntimeError);
    py::register_exception<ParseError>(m, "ParseError", error);
    py::register_exception<ConfigError>(m, "ConfigError", error);
    py::register_exception<GuardError>(m, "GuardError", error);
    py::register_exception<bench::EquivalenceError>(m, "EquivalenceError", error);

    py::enum_<BackendKind>(m, "Backend")
        .value("BASELINE", BackendKind::Baseline)
        .value("COMPRESSED", BackendKind::Compressed)
        .value("BITWISE", BackendKind::Bitwise);

    py::enum_<PopcountMode>(m, "Popcount")
        .value("NATIVE", PopcountMode::Native)
        .value("TABLE", PopcountMode::Table);

    py::enum_<InitStrategy>(m, "Init")
        .value("RAMP", InitStrategy::LinearRamp)
        .value("RANDOM", InitStrategy::Random);

    py::enum_<bench::OutputFormat>(m, "Format")
        .value("JSON", bench::OutputFormat::Json)
        .value("CSV", bench::OutputFormat::Csv);

    py::enum_<bench::RatioMode>(m, "Ratio")
        .value("AUTO", bench::RatioMode::Auto)
        .value("ON", bench::RatioMode::On)
        .value("OFF", bench::RatioMode::Off);

    m.def("parse_backend", &parseBackend, py::arg("name"));

    py::class_<Graph>(m, "Graph")
        .def_static("from_edges", &graphFromTuples, "Builds a graph from (i, j, w) triples.", py::arg("n"),
                    py::arg("edges"))
        .def_static("parse", py::overload_cast<std::string_view>(&parseEdgeList),
                    "Parses edge-list text (\"i j [w]\" per line).", py::arg("text"))
        .def_static("read", &readEdgeListFile, py::arg("path"))
        .def_static(
            "generate",
            [](const std::string &spec, int nodes, std::uint64_t seed) {
                return bench::generateGraph(bench::parseGeneratorSpec(spec), nodes, seed);
            },
            "Builds a graph from a generator spec such as \"u3r:n=12,seed=3\".", py::arg("spec"),
            py::arg("nodes") = 10, py::arg("seed") = 0)
        .def_property_readonly("num_nodes", &Graph::numNodes)
        .def_property_readonly("tot_edge", &Graph::totEdge)
        .def_property_readonly("is_unweighted", &Graph::isUnweighted)
        .def_property_readonly("total_weight", &Graph::totalWeight)
        .def_property_readonly("edges", &edgeTuples)
        .def_property_readonly("row_masks",
                               [](const Graph &g) { return std::vector<Mask>(g.rowMasks().begin(), g.rowMasks().end()); })
        .def("cut_value", &cutValue, py::arg("assignment"))
        .def(
            "max_cut",
            [](const Graph &g, int maxNodes) {
                const Cut c = bruteForceMaxCut(g, maxNodes);
                return std::make_tuple(c.assignment, c.value);
            },
            "Exhaustive max cut as (assignment, value).", py::arg("max_nodes") = kDefaultBruteForceGuard)
        .def("to_edge_list", &toEdgeList)
        .def(py::self == py::self)
        .def("__repr__", [](const Graph &g) {
            return "Graph(num_nodes=" + std::to_string(g.numNodes()) + ", tot_edge=" + std::to_string(g.totEdge()) +
                   ")";
        });

    m.def(
        "simulate",
        [](const Graph &g, std::vector<double> gamma, std::vector<double> beta, BackendKind backend,
           bool launchControl, int batchWidth, PopcountMode popcount) {
            const QaoaParams params{std::move(gamma), std::move(beta)};
            const SimulateOptions options = makeOptions(backend, launchControl, batchWidth, popcount);
            StateVector s;
            {
                py::gil_scoped_release release;
                s = simulate(g, params, options);
            }
            return toArray(s);
        },
        "Final amplitudes of the p-level circuit as a complex128 array.", py::arg("graph"), py::arg("gamma"),
        py::arg("beta"), py::arg("backend") = BackendKind::Compressed, py::arg("launch_control") = true,
        py::arg("batch_width") = 8, py::arg("popcount") = PopcountMode::Native);

    m.def(
        "expectation",
        [](const Graph &g, std::vector<double> gamma, std::vector<double> beta, BackendKind backend) {
            const QaoaParams params{std::move(gamma), std::move(beta)};
            py::gil_scoped_release release;
            return expectation(g, simulate(g, params, backend));
        },
        "Expected cut value of the p-level circuit.", py::arg("graph"), py::arg("gamma"), py::arg("beta"),
        py::arg("backend") = BackendKind::Compressed);

    m.def(
        "optimize",
        [](const Graph &g, int p, int budget, std::uint64_t seed, BackendKind backend, InitStrategy init) {
            OptimizeOptions options;
            options.levels = p;
            options.budget = budget;
            options.seed = seed;
            options.backend = backend;
            options.init = init;
            OptimizeReport r;
            {
                py::gil_scoped_release release;
                r = optimize(g, options);
            }
            py::dict out;
            out["best_expectation"] = r.bestExpectation;
            out["best_gamma"] = r.bestParams.gamma;
            out["best_beta"] = r.bestParams.beta;
            out["evaluations"] = r.evaluations;
            py::list history;
            for (const HistoryEntry &h : r.history) {
                history.append(py::make_tuple(h.evaluation, h.expectation));
            }
            out["history"] = history;
            return out;
        },
        "Maximizes the expected cut over (gamma, beta).", py::arg("graph"), py::arg("p") = 1,
        py::arg("budget") = 200, py::arg("seed") = 0, py::arg("backend") = BackendKind::Compressed,
        py::arg("init") = InitStrategy::LinearRamp);

    m.def("approximation_ratio", &approximationRatio, py::arg("graph"), py::arg("expectation"),
          py::arg("max_nodes") = kDefaultBruteForceGuard);

    m.def(
        "gate_counts",
        [](const Graph &g, int p) {
            const GateCounts c = gateCounts(g.numNodes(), g, p);
            py::dict out;
            out["h"] = c.h;
            out["rzz"] = c.rzz;
            out["rx"] = c.rx;
            return out;
        },
        py::arg("graph"), py::arg("p"));

    m.def("set_num_threads", &setNumThreads, "0 restores the hardware default.", py::arg("threads"));
    m.def("num_threads", &numThreads);

    py::class_<bench::RunConfig>(m, "RunConfig")
        .def(py::init<>())
        .def_readwrite("command", &bench::RunConfig::command)
        .def_readwrite("graph", &bench::RunConfig::graphPath)
        .def_readwrite("gen", &bench::RunConfig::generator)
        .def_readwrite("qubits", &bench::RunConfig::qubits)
        .def_readwrite("p", &bench::RunConfig::levels)
        .def_readwrite("backends", &bench::RunConfig::backends)
        .def_readwrite("threads", &bench::RunConfig::threads)
        .def_readwrite("batch_width", &bench::RunConfig::batchWidth)
        .def_readwrite("popcount", &bench::RunConfig::popcount)
        .def_readwrite("launch_control", &bench::RunConfig::launchControl)
        .def_readwrite("budget", &bench::RunConfig::budget)
        .def_readwrite("seed", &bench::RunConfig::seed)
        .def_readwrite("format", &bench::RunConfig::format)
        .def_readwrite("reps", &bench::RunConfig::repetitions)
        .def_readwrite("warmup", &bench::RunConfig::warmup)
        .def_readwrite("ratio", &bench::RunConfig::ratio)
        .def_readwrite("init", &bench::RunConfig::init)
        .def_readwrite("gamma", &bench::RunConfig::gamma)
        .def_readwrite("beta", &bench::RunConfig::beta);

    m.def(
        "run_command",
        [](const bench::RunConfig &cfg) {
            py::gil_scoped_release release;
            return runCommand(cfg);
        },
        "Runs a bench command and returns the text the CLI would print.", py::arg("config"));
}
