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

#include <cmath>
#include <numbers>

#include "gtest/gtest.h"
#include "qaoa/errors.hpp"

using namespace qaoa;

namespace {

double rosenbrock(std::span<const double> x) {
    return 100 * std::pow(x[1] - x[0] * x[0], 2) + std::pow(1 - x[0], 2);
}

}  // namespace

TEST(NelderMead, quadraticMinimum) {
    const auto f = [](std::span<const double> x) {
        return std::pow(x[0] - 1.5, 2) + 3 * std::pow(x[1] + 0.25, 2) + std::pow(x[2], 2);
    };
    const SimplexResult r = nelderMeadMinimize(f, {0, 0, 0}, {0.5, 0.5, 0.5}, 600, 1);
    EXPECT_NEAR(r.best[0], 1.5, 1e-4);
    EXPECT_NEAR(r.best[1], -0.25, 1e-4);
    EXPECT_NEAR(r.best[2], 0.0, 1e-4);
    EXPECT_NEAR(r.bestValue, 0.0, 1e-8);
}

TEST(NelderMead, rosenbrock) {
    const SimplexResult r = nelderMeadMinimize(rosenbrock, {-1.2, 1.0}, {0.5, 0.5}, 2000, 2);
    EXPECT_NEAR(r.best[0], 1.0, 1e-3);
    EXPECT_NEAR(r.best[1], 1.0, 1e-3);
}

TEST(NelderMead, usesExactlyTheBudget) {
    for (int budget : {1, 2, 3, 7, 50, 333}) {
        int calls = 0;
        const auto f = [&](std::span<const double> x) {
            ++calls;
            return x[0] * x[0] + x[1] * x[1];
        };
        const SimplexResult r = nelderMeadMinimize(f, {1, 1}, {0.1, 0.1}, budget, 0);
        EXPECT_EQ(calls, budget);
        EXPECT_EQ(r.evaluations, budget);
    }
}

TEST(NelderMead, bestValueIsMinimumSeen) {
    double seen = std::numeric_limits<double>::infinity();
    const auto f = [&](std::span<const double> x) {
        const double v = std::sin(3 * x[0]) + std::cos(2 * x[1]);
        seen = std::min(seen, v);
        return v;
    };
    const SimplexResult r = nelderMeadMinimize(f, {0.3, 0.2}, {0.4, 0.4}, 200, 5);
    EXPECT_EQ(r.bestValue, seen);
}

TEST(NelderMead, rejections) {
    const auto f = [](std::span<const double>) { return 0.0; };
    EXPECT_THROW(nelderMeadMinimize(f, {0}, {1}, 0, 0), ConfigError);
    EXPECT_THROW(nelderMeadMinimize(f, {}, {}, 10, 0), ConfigError);
    EXPECT_THROW(nelderMeadMinimize(f, {0, 1}, {1}, 10, 0), ConfigError);
}

TEST(InitialParams, rampAndRandom) {
    const QaoaParams ramp = initialParams(4, InitStrategy::LinearRamp, 0);
    ASSERT_EQ(ramp.levels(), 4);
    for (int k = 1; k < 4; ++k) {
        EXPECT_GT(ramp.gamma[static_cast<std::size_t>(k)], ramp.gamma[static_cast<std::size_t>(k - 1)]);
    }
    for (double b : ramp.beta) {
        EXPECT_GT(b, 0.0);
        EXPECT_LT(b, std::numbers::pi);
    }
    const QaoaParams r1 = initialParams(3, InitStrategy::Random, 9);
    const QaoaParams r2 = initialParams(3, InitStrategy::Random, 9);
    EXPECT_EQ(r1.gamma, r2.gamma);
    EXPECT_EQ(r1.beta, r2.beta);
    EXPECT_NE(r1.gamma, initialParams(3, InitStrategy::Random, 10).gamma);
    EXPECT_THROW(initialParams(0, InitStrategy::LinearRamp, 0), ConfigError);
}

TEST(Optimize, singleEdgeReachesOne) {
    const Graph g = Graph::fromEdges(2, {{0, 1, 1.0}});
    OptimizeOptions options;
    options.budget = 300;
    const OptimizeReport r = optimize(g, options);
    EXPECT_NEAR(r.bestExpectation, 1.0, 1e-6);
    EXPECT_EQ(r.evaluations, 300);
    EXPECT_EQ(r.history.size(), 300u);
}

TEST(Optimize, historyAndBestAreConsistent) {
    const Graph g = randomRegularGraph(8, 3, false, 1);
    OptimizeOptions options;
    options.levels = 2;
    options.budget = 80;
    const OptimizeReport r = optimize(g, options);
    double best = -1;
    for (std::size_t k = 0; k < r.history.size(); ++k) {
        EXPECT_EQ(r.history[k].evaluation, static_cast<int>(k));
        best = std::max(best, r.history[k].expectation);
    }
    EXPECT_EQ(r.bestExpectation, best);
    EXPECT_NEAR(expectation(g, simulate(g, r.bestParams, BackendKind::Baseline)), r.bestExpectation, 1e-10);
    for (double x : r.bestParams.gamma) {
        EXPECT_GE(x, 0.0);
        EXPECT_LT(x, 2 * std::numbers::pi);
    }
    for (double x : r.bestParams.beta) {
        EXPECT_GE(x, 0.0);
        EXPECT_LT(x, std::numbers::pi);
    }
}

TEST(Optimize, deterministicForSeed) {
    const Graph g = randomRegularGraph(8, 3, true, 2);
    OptimizeOptions options;
    options.levels = 2;
    options.budget = 60;
    options.seed = 4;
    options.init = InitStrategy::Random;
    const OptimizeReport a = optimize(g, options);
    const OptimizeReport b = optimize(g, options);
    EXPECT_EQ(a.bestExpectation, b.bestExpectation);
    EXPECT_EQ(a.bestParams.gamma, b.bestParams.gamma);
    ASSERT_EQ(a.history.size(), b.history.size());
    for (std::size_t k = 0; k < a.history.size(); ++k) {
        EXPECT_EQ(a.history[k].expectation, b.history[k].expectation);
    }
}

TEST(Optimize, beatsUniformState) {
    const Graph g = randomRegularGraph(10, 3, false, 5);
    OptimizeOptions options;
    options.levels = 2;
    options.budget = 200;
    const OptimizeReport r = optimize(g, options);
    EXPECT_GT(r.bestExpectation, g.totalWeight() / 2);
}

TEST(Optimize, rejections) {
    const Graph weighted = randomRegularGraph(6, 3, true, 1);
    OptimizeOptions options;
    options.backend = BackendKind::Bitwise;
    EXPECT_THROW(optimize(weighted, options), ConfigError);
    options.backend = BackendKind::Compressed;
    options.budget = 0;
    EXPECT_THROW(optimize(weighted, options), ConfigError);
    options.budget = 5;
    options.levels = 0;
    EXPECT_THROW(optimize(weighted, options), ConfigError);
}

TEST(ApproximationRatio, valuesAndGuard) {
    const Graph tri = Graph::fromEdges(3, {{0, 1, 1.0}, {1, 2, 1.0}, {0, 2, 1.0}});
    EXPECT_DOUBLE_EQ(approximationRatio(tri, 1.5), 0.75);
    EXPECT_DOUBLE_EQ(approximationRatio(Graph::fromEdges(3, {}), 0.0), 1.0);
    EXPECT_THROW(approximationRatio(randomRegularGraph(26, 3, false, 1), 10.0), GuardError);
    EXPECT_THROW(approximationRatio(tri, 1.0, 2), GuardError);
}
