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
#include <functional>
#include <optional>
#include <span>
#include <vector>

#include "qaoa/circuit.hpp"
#include "qaoa/graph.hpp"

namespace qaoa {

enum class InitStrategy { LinearRamp, Random };

struct OptimizeOptions {
    int levels = 1;
    BackendKind backend = BackendKind::Compressed;
    /// Maximum number of objective evaluations (simulate + expectation).
    int budget = 200;
    std::uint64_t seed = 0;
    InitStrategy init = InitStrategy::LinearRamp;
    bool launchControl = true;
};

struct HistoryEntry {
    int evaluation = 0;
    double expectation = 0.0;
};

struct OptimizeReport {
    QaoaParams bestParams;
    double bestExpectation = 0.0;
    /// One entry per objective evaluation, in call order.
    std::vector<HistoryEntry> history;
    int evaluations = 0;
    std::optional<double> approxRatio;
};

/// Initial angles for `levels` levels.
///
/// LinearRamp grows the cost angle and shrinks the mixer rotation across
/// levels. Because the cost layer here is exp(-i gamma H_C) with
/// H_C = sum w/2 Z_i Z_j (the negated cut), a mixer rotation of magnitude m
/// in the cut-increasing direction is stored as beta = pi - m; the ramp
/// therefore shrinks m, not the raw beta value.
QaoaParams initialParams(int levels, InitStrategy init, std::uint64_t seed);

struct SimplexResult {
    std::vector<double> best;
    double bestValue = 0.0;
    int evaluations = 0;
};

/// Minimizes `objective` with a Nelder-Mead simplex search (adaptive
/// coefficients), restarting around the incumbent whenever the simplex
/// collapses. Calls the objective exactly `budget` times.
SimplexResult nelderMeadMinimize(const std::function<double(std::span<const double>)> &objective,
                                 std::vector<double> start, std::vector<double> step, int budget,
                                 std::uint64_t seed);

/// Maximizes the expected cut of the p-level circuit over (gamma, beta).
OptimizeReport optimize(const Graph &g, const OptimizeOptions &options);

/// expectation / (exact max cut). Graphs without edges report 1.
double approximationRatio(const Graph &g, double expectation, int maxNodes = kDefaultBruteForceGuard);

}  // namespace qaoa
