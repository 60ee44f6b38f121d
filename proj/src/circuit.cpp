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


#include "qaoa/circuit.hpp"

#include <algorithm>
#include <chrono>
#include <cmath>
#include <numbers>
#include <random>
#include <string>

#include "qaoa/errors.hpp"
#include "qaoa/parallel.hpp"

namespace qaoa {

namespace {

using Clock = std::chrono::steady_clock;

std::int64_t elapsedNs(Clock::time_point since) {
    return std::chrono::duration_cast<std::chrono::nanoseconds>(Clock::now() - since).count();
}

double wrapAngle(double x, double period) {
    double r = std::fmod(x, period);
    if (r < 0.0) {
        r += period;
    }
    // fmod of a tiny negative can round up to exactly `period`
    return r >= period ? 0.0 : r;
}

}  // namespace

void QaoaParams::validate() const {
    if (gamma.empty()) {
        throw ConfigError("QAOA needs at least one level");
    }
    if (gamma.size() != beta.size()) {
        throw ConfigError("gamma has " + std::to_string(gamma.size()) + " entries but beta has " +
                          std::to_string(beta.size()));
    }
}

QaoaParams QaoaParams::wrapped() const {
    QaoaParams out = *this;
    for (double &g : out.gamma) {
        g = wrapAngle(g, 2.0 * std::numbers::pi);
    }
    for (double &b : out.beta) {
        b = wrapAngle(b, std::numbers::pi);
    }
    return out;
}

std::string_view toString(BackendKind kind) noexcept {
    switch (kind) {
        case BackendKind::Baseline:
            return "baseline";
        case BackendKind::Compressed:
            return "compressed";
        case BackendKind::Bitwise:
            return "bitwise";
    }
    return "unknown";
}

BackendKind parseBackend(std::string_view name) {
    if (name == "baseline") {
        return BackendKind::Baseline;
    }
    if (name == "compressed") {
        return BackendKind::Compressed;
    }
    if (name == "bitwise") {
        return BackendKind::Bitwise;
    }
    throw ConfigError("unknown backend '" + std::string(name) + "'; expected baseline, compressed or bitwise");
}

StateVector initUniform(int n, int maxQubits) {
    StateVector s = allocateState(n, maxQubits);
    const Amplitude value{std::pow(1.0 / std::sqrt(2.0), n), 0.0};
    auto amps = s.amplitudes();
    std::fill(amps.begin(), amps.end(), value);
    return s;
}

void applyMixer(StateVector &s, double beta) {
    for (int q = 0; q < s.numQubits(); ++q) {
        applyRX(s, q, 2.0 * beta);
    }
}

void applyCostLayer(StateVector &s, const Graph &g, const CompressedCostPlan *plan, double gamma,
                    const SimulateOptions &options, WriteCounter *counter) {
    switch (options.backend) {
        case BackendKind::Baseline:
            for (const Edge &e : g.edges()) {
                applyRZZ(s, e.i, e.j, e.w * gamma, counter);
            }
            return;
        case BackendKind::Compressed:
            applyCostCompressed(s, *plan, gamma, counter);
            return;
        case BackendKind::Bitwise:
            if (options.batchWidth == 1 && options.popcount == PopcountMode::Native) {
                applyCostBitwise(s, *plan, gamma, counter);
            } else {
                applyCostBatched(s, *plan, gamma, options.batchWidth, options.popcount, counter);
            }
            return;
    }
}

StateVector simulate(const Graph &g, const QaoaParams &params, const SimulateOptions &options, LayerTimings *timings) {
    params.validate();
    if (options.backend == BackendKind::Bitwise && !g.isUnweighted()) {
        throw ConfigError("backend 'bitwise' requires an unweighted graph; use 'compressed' for weighted edges");
    }
    const auto start = Clock::now();

    StateVector s;
    if (options.launchControl) {
        s = initUniform(g.numNodes(), options.maxQubits);
    } else {
        s = initZeroState(g.numNodes(), options.maxQubits);
        for (int q = 0; q < g.numNodes(); ++q) {
            applyH(s, q);
        }
    }
    LayerTimings local;
    local.initNs = elapsedNs(start);

    std::optional<CompressedCostPlan> plan;
    if (options.backend != BackendKind::Baseline) {
        plan.emplace(g);
    }
    for (int level = 0; level < params.levels(); ++level) {
        const auto costStart = Clock::now();
        applyCostLayer(s, g, plan ? &*plan : nullptr, params.gamma[static_cast<std::size_t>(level)], options);
        local.costNs += elapsedNs(costStart);

        const auto mixerStart = Clock::now();
        applyMixer(s, params.beta[static_cast<std::size_t>(level)]);
        local.mixerNs += elapsedNs(mixerStart);
    }
    local.totalNs = elapsedNs(start);
    if (timings != nullptr) {
        *timings = local;
    }
    return s;
}

StateVector simulate(const Graph &g, const QaoaParams &params, BackendKind backend, bool useLaunchControl) {
    SimulateOptions options;
    options.backend = backend;
    options.launchControl = useLaunchControl;
    return simulate(g, params, options);
}

double expectation(const Graph &g, const StateVector &s) {
    if (s.numQubits() != g.numNodes()) {
        throw std::invalid_argument("state has " + std::to_string(s.numQubits()) + " qubits but the graph has " +
                                    std::to_string(g.numNodes()) + " nodes");
    }
    const auto amps = s.amplitudes();
    return deterministicSum(s.size(), [&g, amps](std::uint64_t b) { return std::norm(amps[b]) * cutValue(g, b); });
}

std::vector<Bitstring> sample(const StateVector &s, int shots, std::uint64_t seed) {
    if (shots < 1) {
        throw ConfigError("shots must be at least 1 (got " + std::to_string(shots) + ")");
    }
    const double norm = normSquared(s);
    if (std::abs(norm - 1.0) > 1e-6) {
        throw ConfigError("cannot sample an unnormalized state (norm^2 = " + std::to_string(norm) + ")");
    }
    std::vector<double> cumulative(s.size());
    double running = 0.0;
    for (std::uint64_t b = 0; b < s.size(); ++b) {
        running += std::norm(s[b]);
        cumulative[b] = running;
    }
    std::mt19937_64 rng(seed);
    std::uniform_real_distribution<double> draw(0.0, running);
    std::vector<Bitstring> out;
    out.reserve(static_cast<std::size_t>(shots));
    for (int k = 0; k < shots; ++k) {
        const double u = draw(rng);
        auto it = std::upper_bound(cumulative.begin(), cumulative.end(), u);
        if (it == cumulative.end()) {
            --it;
        }
        out.push_back(static_cast<Bitstring>(it - cumulative.begin()));
    }
    return out;
}

GateCounts gateCounts(int n, const Graph &g, int p) {
    GateCounts c;
    c.h = static_cast<std::uint64_t>(n);
    c.rzz = static_cast<std::uint64_t>(p) * static_cast<std::uint64_t>(g.totEdge());
    c.rx = static_cast<std::uint64_t>(p) * static_cast<std::uint64_t>(n);
    return c;
}

}  // namespace qaoa
