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

// Test-only reference implementations. Nothing here calls into the kernels it
// is used to check: cut values come from the S / S-bar partition sum, circuit
// states from explicit dense matrices.

#include <cmath>
#include <complex>
#include <cstdint>
#include <random>
#include <vector>

#include "qaoa/graph.hpp"

namespace qaoa::oracle {

using cd = std::complex<double>;
using Matrix = std::vector<std::vector<cd>>;

/// Weighted adjacency matrix (symmetric, zero diagonal).
inline std::vector<std::vector<double>> adjacency(const Graph &g) {
    const auto n = static_cast<std::size_t>(g.numNodes());
    std::vector<std::vector<double>> w(n, std::vector<double>(n, 0.0));
    for (const Edge &e : g.edges()) {
        w[static_cast<std::size_t>(e.i)][static_cast<std::size_t>(e.j)] = e.w;
        w[static_cast<std::size_t>(e.j)][static_cast<std::size_t>(e.i)] = e.w;
    }
    return w;
}

/// C(S, S-bar) = sum over i in S, j in S-bar of w_ij, with S = nodes whose bit is 0.
inline double partitionCut(const Graph &g, std::uint64_t assignment) {
    const auto w = adjacency(g);
    const int n = g.numNodes();
    double total = 0.0;
    for (int i = 0; i < n; ++i) {
        if ((assignment >> i) & 1U) {
            continue;
        }
        for (int j = 0; j < n; ++j) {
            if ((assignment >> j) & 1U) {
                total += w[static_cast<std::size_t>(i)][static_cast<std::size_t>(j)];
            }
        }
    }
    return total;
}

inline double bruteMaxCut(const Graph &g) {
    double best = 0.0;
    for (std::uint64_t x = 0; x < (std::uint64_t{1} << g.numNodes()); ++x) {
        best = std::max(best, partitionCut(g, x));
    }
    return best;
}

inline Matrix kron(const Matrix &a, const Matrix &b) {
    const std::size_t ra = a.size();
    const std::size_t rb = b.size();
    Matrix out(ra * rb, std::vector<cd>(ra * rb));
    for (std::size_t i = 0; i < ra; ++i) {
        for (std::size_t j = 0; j < ra; ++j) {
            for (std::size_t k = 0; k < rb; ++k) {
                for (std::size_t l = 0; l < rb; ++l) {
                    out[i * rb + k][j * rb + l] = a[i][j] * b[k][l];
                }
            }
        }
    }
    return out;
}

inline std::vector<cd> applyMatrix(const Matrix &m, const std::vector<cd> &v) {
    std::vector<cd> out(v.size());
    for (std::size_t i = 0; i < m.size(); ++i) {
        for (std::size_t j = 0; j < v.size(); ++j) {
            out[i] += m[i][j] * v[j];
        }
    }
    return out;
}

/// exp(-i beta X) on every qubit as one dense matrix. Qubit 0 is the least
/// significant index bit, so it is the rightmost Kronecker factor.
inline Matrix mixerMatrix(int n, double beta) {
    const Matrix single = {{cd(std::cos(beta), 0), cd(0, -std::sin(beta))},
                           {cd(0, -std::sin(beta)), cd(std::cos(beta), 0)}};
    Matrix m = {{cd(1, 0)}};
    for (int q = 0; q < n; ++q) {
        m = kron(single, m);
    }
    return m;
}

/// exp(-i gamma sum_{ij} w/2 z_i z_j) as a product of per-edge diagonal factors.
inline std::vector<cd> costDiagonal(const Graph &g, double gamma) {
    const std::size_t dim = std::size_t{1} << g.numNodes();
    std::vector<cd> diag(dim, cd(1, 0));
    for (std::size_t b = 0; b < dim; ++b) {
        for (const Edge &e : g.edges()) {
            const int zi = ((b >> e.i) & 1U) ? -1 : 1;
            const int zj = ((b >> e.j) & 1U) ? -1 : 1;
            diag[b] *= std::exp(cd(0, -gamma * e.w / 2.0 * zi * zj));
        }
    }
    return diag;
}

/// Dense-matrix QAOA state for small n.
inline std::vector<cd> denseQaoaState(const Graph &g, const std::vector<double> &gamma,
                                      const std::vector<double> &beta) {
    const int n = g.numNodes();
    const std::size_t dim = std::size_t{1} << n;
    std::vector<cd> state(dim, cd(1.0 / std::sqrt(static_cast<double>(dim)), 0));
    for (std::size_t level = 0; level < gamma.size(); ++level) {
        const auto diag = costDiagonal(g, gamma[level]);
        for (std::size_t b = 0; b < dim; ++b) {
            state[b] *= diag[b];
        }
        state = applyMatrix(mixerMatrix(n, beta[level]), state);
    }
    return state;
}

inline double denseExpectation(const Graph &g, const std::vector<cd> &state) {
    double total = 0.0;
    for (std::size_t b = 0; b < state.size(); ++b) {
        total += std::norm(state[b]) * partitionCut(g, b);
    }
    return total;
}

/// Random simple graph on n nodes, each pair present with probability `density`.
inline Graph randomGraph(int n, double density, bool weighted, std::mt19937_64 &rng) {
    std::bernoulli_distribution keep(density);
    std::uniform_real_distribution<double> weight(0.1, 2.0);
    std::vector<Edge> edges;
    for (int i = 0; i < n; ++i) {
        for (int j = i + 1; j < n; ++j) {
            if (keep(rng)) {
                edges.push_back({i, j, weighted ? weight(rng) : 1.0});
            }
        }
    }
    if (edges.empty() && n >= 2) {
        edges.push_back({0, n - 1, weighted ? weight(rng) : 1.0});
    }
    return Graph::fromEdges(n, std::move(edges));
}

}  // namespace qaoa::oracle
