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


#include "qaoa/optimizer.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numbers>
#include <numeric>
#include <random>
#include <string>

#include "qaoa/errors.hpp"

namespace qaoa {

namespace {

struct BudgetExhausted {};

// Ramp envelope: cost angle climbs to kGammaSpan, mixer rotation falls from kBetaSpan.
constexpr double kGammaSpan = 0.8;
constexpr double kBetaSpan = 0.7;

constexpr double kCollapseSpread = 1e-12;
constexpr double kCollapseSize = 1e-9;

}  // namespace

QaoaParams initialParams(int levels, InitStrategy init, std::uint64_t seed) {
    if (levels < 1) {
        throw ConfigError("QAOA needs at least one level (got p=" + std::to_string(levels) + ")");
    }
    QaoaParams params;
    params.gamma.resize(static_cast<std::size_t>(levels));
    params.beta.resize(static_cast<std::size_t>(levels));
    if (init == InitStrategy::Random) {
        std::mt19937_64 rng(seed);
        std::uniform_real_distribution<double> gammaDist(0.0, 2.0 * std::numbers::pi);
        std::uniform_real_distribution<double> betaDist(0.0, std::numbers::pi);
        for (int k = 0; k < levels; ++k) {
            params.gamma[static_cast<std::size_t>(k)] = gammaDist(rng);
            params.beta[static_cast<std::size_t>(k)] = betaDist(rng);
        }
        return params;
    }
    for (int k = 0; k < levels; ++k) {
        const double frac = (k + 0.5) / levels;
        params.gamma[static_cast<std::size_t>(k)] = kGammaSpan * frac;
        params.beta[static_cast<std::size_t>(k)] = std::numbers::pi - kBetaSpan * (1.0 - frac);
    }
    return params;
}

SimplexResult nelderMeadMinimize(const std::function<double(std::span<const double>)> &objective,
                                 std::vector<double> start, std::vector<double> step, int budget,
                                 std::uint64_t seed) {
    if (budget < 1) {
        throw ConfigError("optimizer budget must be at least 1");
    }
    if (step.size() != start.size() || start.empty()) {
        throw ConfigError("simplex start and step must have the same non-zero dimension");
    }
    const std::size_t dim = start.size();
    const double d = static_cast<double>(dim);
    const double reflect = 1.0;
    const double expand = 1.0 + 2.0 / d;
    const double contract = 0.75 - 1.0 / (2.0 * d);
    const double shrink = 1.0 - 1.0 / d;

    SimplexResult result;
    result.best = start;
    result.bestValue = std::numeric_limits<double>::infinity();

    auto evaluate = [&](const std::vector<double> &x) {
        if (result.evaluations >= budget) {
            throw BudgetExhausted{};
        }
        ++result.evaluations;
        const double v = objective(x);
        if (v < result.bestValue) {
            result.bestValue = v;
            result.best = x;
        }
        return v;
    };

    std::mt19937_64 rng(seed);
    std::vector<std::vector<double>> vertex(dim + 1, start);
    std::vector<double> value(dim + 1);
    std::vector<std::size_t> order(dim + 1);
    std::vector<double> centroid(dim);

    auto point = [&](const std::vector<double> &from, const std::vector<double> &to, double t) {
        std::vector<double> p(dim);
        for (std::size_t k = 0; k < dim; ++k) {
            p[k] = from[k] + t * (to[k] - from[k]);
        }
        return p;
    };

    try {
        double restartScale = 1.0;
        bool first = true;
        for (;;) {
            // (Re)build the simplex around the incumbent; restarts flip axis signs at random.
            vertex[0] = result.best;
            value[0] = first ? evaluate(vertex[0]) : result.bestValue;
            for (std::size_t k = 0; k < dim; ++k) {
                vertex[k + 1] = vertex[0];
                const double sign = (first || (rng() & 1U) == 0) ? 1.0 : -1.0;
                vertex[k + 1][k] += sign * restartScale * step[k];
                value[k + 1] = evaluate(vertex[k + 1]);
            }
            first = false;

            for (;;) {
                std::iota(order.begin(), order.end(), std::size_t{0});
                std::stable_sort(order.begin(), order.end(),
                                 [&](std::size_t a, std::size_t b) { return value[a] < value[b]; });
                const std::size_t best = order.front();
                const std::size_t worst = order.back();
                const std::size_t second = order[dim - 1];

                double size = 0.0;
                for (std::size_t v = 0; v <= dim; ++v) {
                    for (std::size_t k = 0; k < dim; ++k) {
                        size = std::max(size, std::abs(vertex[v][k] - vertex[best][k]));
                    }
                }
                if (value[worst] - value[best] <= kCollapseSpread && size <= kCollapseSize) {
                    break;
                }

                std::fill(centroid.begin(), centroid.end(), 0.0);
                for (std::size_t v = 0; v <= dim; ++v) {
                    if (v == worst) {
                        continue;
                    }
                    for (std::size_t k = 0; k < dim; ++k) {
                        centroid[k] += vertex[v][k] / d;
                    }
                }

                const auto reflected = point(centroid, vertex[worst], -reflect);
                const double fr = evaluate(reflected);
                if (fr < value[best]) {
                    const auto expanded = point(centroid, vertex[worst], -expand);
                    const double fe = evaluate(expanded);
                    if (fe < fr) {
                        vertex[worst] = expanded;
                        value[worst] = fe;
                    } else {
                        vertex[worst] = reflected;
                        value[worst] = fr;
                    }
                    continue;
                }
                if (fr < value[second]) {
                    vertex[worst] = reflected;
                    value[worst] = fr;
                    continue;
                }
                const bool outside = fr < value[worst];
                const auto contracted = outside ? point(centroid, reflected, contract)
                                                : point(centroid, vertex[worst], contract);
                const double fc = evaluate(contracted);
                if (fc < (outside ? fr : value[worst])) {
                    vertex[worst] = contracted;
                    value[worst] = fc;
                    continue;
                }
                for (std::size_t v = 0; v <= dim; ++v) {
                    if (v == best) {
                        continue;
                    }
                    vertex[v] = point(vertex[best], vertex[v], shrink);
                    value[v] = evaluate(vertex[v]);
                }
            }
            restartScale = restartScale > 0.05 ? restartScale * 0.5 : 1.0;
        }
    } catch (const BudgetExhausted &) {
    }
    return result;
}

OptimizeReport optimize(const Graph &g, const OptimizeOptions &options) {
    if (options.levels < 1) {
        throw ConfigError("QAOA needs at least one level (got p=" + std::to_string(options.levels) + ")");
    }
    if (options.budget < 1) {
        throw ConfigError("optimizer budget must be at least 1 (got " + std::to_string(options.budget) + ")");
    }
    if (options.backend == BackendKind::Bitwise && !g.isUnweighted()) {
        throw ConfigError("backend 'bitwise' requires an unweighted graph; use 'compressed' for weighted edges");
    }
    const std::size_t p = static_cast<std::size_t>(options.levels);
    const QaoaParams init = initialParams(options.levels, options.init, options.seed);

    SimulateOptions sim;
    sim.backend = options.backend;
    sim.launchControl = options.launchControl;

    auto unpack = [p](std::span<const double> x) {
        QaoaParams params;
        params.gamma.assign(x.begin(), x.begin() + static_cast<std::ptrdiff_t>(p));
        params.beta.assign(x.begin() + static_cast<std::ptrdiff_t>(p), x.end());
        return params.wrapped();
    };

    OptimizeReport report;
    report.bestExpectation = -std::numeric_limits<double>::infinity();
    auto objective = [&](std::span<const double> x) {
        const QaoaParams params = unpack(x);
        const double value = expectation(g, simulate(g, params, sim));
        report.history.push_back({static_cast<int>(report.history.size()), value});
        if (value > report.bestExpectation) {
            report.bestExpectation = value;
            report.bestParams = params;
        }
        return -value;
    };

    std::vector<double> start(init.gamma);
    start.insert(start.end(), init.beta.begin(), init.beta.end());
    std::vector<double> step(2 * p, 0.25);
    nelderMeadMinimize(objective, std::move(start), std::move(step), options.budget, options.seed);

    report.evaluations = static_cast<int>(report.history.size());
    return report;
}

double approximationRatio(const Graph &g, double expectation, int maxNodes) {
    if (g.numNodes() > maxNodes) {
        throw GuardError("approximation ratio needs the exact max cut, which is refused for " +
                         std::to_string(g.numNodes()) + " nodes (guard " + std::to_string(maxNodes) +
                         "); skip ratio reporting for this graph");
    }
    if (g.totEdge() == 0) {
        return 1.0;
    }
    const Cut best = bruteForceMaxCut(g, maxNodes);
    return expectation / best.value;
}

}  // namespace qaoa
