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
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "qaoa/cost_kernels.hpp"
#include "qaoa/graph.hpp"
#include "qaoa/state_vector.hpp"

namespace qaoa {

/// Angles of a p-level circuit. gamma[k] drives the cost layer of level k,
/// beta[k] the mixer of level k.
struct QaoaParams {
    std::vector<double> gamma;
    std::vector<double> beta;

    int levels() const noexcept { return static_cast<int>(gamma.size()); }

    /// Throws ConfigError unless both vectors have the same length >= 1.
    void validate() const;

    /// Copy with gamma wrapped into [0, 2pi) and beta into [0, pi).
    QaoaParams wrapped() const;
};

enum class BackendKind { Baseline, Compressed, Bitwise };

std::string_view toString(BackendKind kind) noexcept;
BackendKind parseBackend(std::string_view name);

struct SimulateOptions {
    BackendKind backend = BackendKind::Compressed;
    bool launchControl = true;
    /// Bitwise backend only: 1 runs the per-amplitude popcount kernel, 2/4/8 the
    /// strip-mined one.
    int batchWidth = 8;
    PopcountMode popcount = PopcountMode::Native;
    int maxQubits = kDefaultMaxQubits;
};

/// Wall time spent in each layer of one simulate() call, in nanoseconds.
struct LayerTimings {
    std::int64_t initNs = 0;
    std::int64_t costNs = 0;
    std::int64_t mixerNs = 0;
    std::int64_t totalNs = 0;
};

/// Uniform superposition written directly: every amplitude is (1/sqrt2)^n.
StateVector initUniform(int n, int maxQubits = kDefaultMaxQubits);

/// Runs the p-level circuit: initial layer, then per level a cost layer with
/// gamma[k] and a mixer layer RX(2 beta[k]) on every qubit.
///
/// The baseline backend applies one RZZ(w * gamma) per edge in row-major
/// upper-triangular order; the compressed and bitwise backends fold the whole
/// cost layer into one sweep. All backends produce the same state including
/// its global phase.
StateVector simulate(const Graph &g, const QaoaParams &params, const SimulateOptions &options,
                     LayerTimings *timings = nullptr);

StateVector simulate(const Graph &g, const QaoaParams &params, BackendKind backend, bool useLaunchControl = true);

/// Applies the mixer layer exp(-i beta X) to every qubit.
void applyMixer(StateVector &s, double beta);

/// Applies one full cost layer with the requested backend.
void applyCostLayer(StateVector &s, const Graph &g, const CompressedCostPlan *plan, double gamma,
                    const SimulateOptions &options, WriteCounter *counter = nullptr);

/// Exact expected cut value sum_b |amp_b|^2 * cutValue(g, b).
double expectation(const Graph &g, const StateVector &s);

/// Draws `shots` basis states with probability |amp_b|^2.
std::vector<Bitstring> sample(const StateVector &s, int shots, std::uint64_t seed);

struct GateCounts {
    std::uint64_t h = 0;
    std::uint64_t rzz = 0;
    std::uint64_t rx = 0;

    std::uint64_t total() const noexcept { return h + rzz + rx; }
    double rzzShare() const noexcept { return total() == 0 ? 0.0 : static_cast<double>(rzz) / total(); }

    friend bool operator==(const GateCounts &, const GateCounts &) = default;
};

/// Gate tally of the baseline circuit: n Hadamards, p * totEdge RZZ, p * n RX.
GateCounts gateCounts(int n, const Graph &g, int p);

}  // namespace qaoa
