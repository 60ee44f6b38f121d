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


#include "qaoa/graph.hpp"

#include <algorithm>
#include <bit>
#include <charconv>
#include <cmath>
#include <fstream>
#include <limits>
#include <map>
#include <numeric>
#include <random>
#include <sstream>
#include <utility>

#include "qaoa/errors.hpp"

namespace qaoa {

Graph Graph::fromEdges(int n, std::vector<Edge> edges) {
    if (n < 0 || n > kMaskBits) {
        throw ConfigError("node count " + std::to_string(n) + " outside [0, " + std::to_string(kMaskBits) + "]");
    }
    for (Edge &e : edges) {
        if (e.i == e.j) {
            throw ConfigError("self-loop on node " + std::to_string(e.i));
        }
        if (e.i > e.j) {
            std::swap(e.i, e.j);
        }
        if (e.i < 0 || e.j >= n) {
            throw ConfigError("edge (" + std::to_string(e.i) + ", " + std::to_string(e.j) + ") outside node range [0, " +
                              std::to_string(n) + ")");
        }
        if (!std::isfinite(e.w)) {
            throw ConfigError("non-finite edge weight");
        }
    }
    std::sort(edges.begin(), edges.end(), [](const Edge &a, const Edge &b) {
        return a.i != b.i ? a.i < b.i : a.j < b.j;
    });
    for (std::size_t k = 1; k < edges.size(); ++k) {
        if (edges[k - 1].i == edges[k].i && edges[k - 1].j == edges[k].j) {
            throw ConfigError("duplicate edge (" + std::to_string(edges[k].i) + ", " + std::to_string(edges[k].j) + ")");
        }
    }

    Graph g;
    g.n_ = n;
    g.rowMasks_.assign(static_cast<std::size_t>(n), 0);
    for (const Edge &e : edges) {
        g.rowMasks_[static_cast<std::size_t>(e.i)] |= Mask{1} << e.j;
        g.unweighted_ = g.unweighted_ && e.w == 1.0;
        g.totalWeight_ += e.w;
    }
    g.edges_ = std::move(edges);
    return g;
}

Mask rowMaskOf(const Graph &g, int i) {
    if (i < 0 || i >= g.numNodes()) {
        throw std::out_of_range("node index " + std::to_string(i) + " outside [0, " + std::to_string(g.numNodes()) + ")");
    }
    return g.rowMasks()[static_cast<std::size_t>(i)];
}

double cutValue(const Graph &g, Bitstring assignment) {
    double value = 0.0;
    for (const Edge &e : g.edges()) {
        if (((assignment >> e.i) ^ (assignment >> e.j)) & 1U) {
            value += e.w;
        }
    }
    return value;
}

Cut bruteForceMaxCut(const Graph &g, int maxNodes) {
    const int n = g.numNodes();
    if (n > maxNodes) {
        throw GuardError("brute-force max-cut refused for " + std::to_string(n) + " nodes (guard is " +
                         std::to_string(maxNodes) + "); raise the guard explicitly to enumerate 2^" +
                         std::to_string(n) + " assignments");
    }
    if (n >= kMaskBits) {
        throw GuardError("brute-force max-cut cannot enumerate 2^" + std::to_string(n) + " assignments");
    }
    const Bitstring total = Bitstring{1} << n;
    constexpr Bitstring kChunk = Bitstring{1} << 14;
    const Bitstring chunks = (total + kChunk - 1) / kChunk;
    std::vector<Cut> best(static_cast<std::size_t>(chunks));

#pragma omp parallel for schedule(static)
    for (std::int64_t c = 0; c < static_cast<std::int64_t>(chunks); ++c) {
        const Bitstring begin = static_cast<Bitstring>(c) * kChunk;
        const Bitstring end = std::min(begin + kChunk, total);
        Cut local{begin, cutValue(g, begin)};
        for (Bitstring x = begin + 1; x < end; ++x) {
            const double v = cutValue(g, x);
            if (v > local.value) {
                local = {x, v};
            }
        }
        best[static_cast<std::size_t>(c)] = local;
    }

    // Chunks are visited in index order, so a strict comparison keeps the smallest assignment.
    Cut result = best.front();
    for (const Cut &c : best) {
        if (c.value > result.value) {
            result = c;
        }
    }
    return result;
}

namespace {

std::string_view trim(std::string_view s) {
    const auto isSpace = [](char c) { return c == ' ' || c == '\t' || c == '\r' || c == '\n'; };
    while (!s.empty() && isSpace(s.front())) {
        s.remove_prefix(1);
    }
    while (!s.empty() && isSpace(s.back())) {
        s.remove_suffix(1);
    }
    return s;
}

std::vector<std::string_view> splitTokens(std::string_view s) {
    std::vector<std::string_view> out;
    std::size_t k = 0;
    while (k < s.size()) {
        while (k < s.size() && (s[k] == ' ' || s[k] == '\t')) {
            ++k;
        }
        const std::size_t start = k;
        while (k < s.size() && s[k] != ' ' && s[k] != '\t') {
            ++k;
        }
        if (k > start) {
            out.push_back(s.substr(start, k - start));
        }
    }
    return out;
}

int parseNode(std::string_view token, std::size_t line) {
    int value = 0;
    const auto [ptr, ec] = std::from_chars(token.data(), token.data() + token.size(), value);
    if (ec != std::errc{} || ptr != token.data() + token.size()) {
        throw ParseError(line, "node id '" + std::string(token) + "' is not a non-negative integer");
    }
    if (value < 0) {
        throw ParseError(line, "node id " + std::string(token) + " is negative");
    }
    if (value >= kMaskBits) {
        throw ParseError(line, "node id " + std::string(token) + " exceeds the " + std::to_string(kMaskBits) +
                                   "-node limit");
    }
    return value;
}

double parseWeight(std::string_view token, std::size_t line) {
    double value = 0.0;
    const auto [ptr, ec] = std::from_chars(token.data(), token.data() + token.size(), value);
    if (ec != std::errc{} || ptr != token.data() + token.size() || !std::isfinite(value)) {
        throw ParseError(line, "weight '" + std::string(token) + "' is not a finite number");
    }
    return value;
}

}  // namespace

Graph parseEdgeList(std::istream &in) {
    std::vector<Edge> edges;
    std::map<std::pair<int, int>, std::size_t> seen;
    int maxNode = -1;
    std::string raw;
    std::size_t lineNo = 0;
    while (std::getline(in, raw)) {
        ++lineNo;
        const std::string_view line = trim(raw);
        if (line.empty() || line.front() == '#') {
            continue;
        }
        const auto tokens = splitTokens(line);
        if (tokens.size() != 2 && tokens.size() != 3) {
            throw ParseError(lineNo, "expected 'i j' or 'i j w', got " + std::to_string(tokens.size()) + " tokens");
        }
        Edge e{parseNode(tokens[0], lineNo), parseNode(tokens[1], lineNo), 1.0};
        if (tokens.size() == 3) {
            e.w = parseWeight(tokens[2], lineNo);
        }
        if (e.i == e.j) {
            throw ParseError(lineNo, "self-loop on node " + std::to_string(e.i));
        }
        if (e.i > e.j) {
            std::swap(e.i, e.j);
        }
        const auto [it, inserted] = seen.emplace(std::pair{e.i, e.j}, lineNo);
        if (!inserted) {
            throw ParseError(lineNo, "duplicate edge (" + std::to_string(e.i) + ", " + std::to_string(e.j) +
                                         "), first defined on line " + std::to_string(it->second));
        }
        maxNode = std::max(maxNode, e.j);
        edges.push_back(e);
    }
    if (edges.empty()) {
        throw ParseError(0, "edge list contains no edges");
    }
    return Graph::fromEdges(maxNode + 1, std::move(edges));
}

Graph parseEdgeList(std::string_view text) {
    std::istringstream in{std::string(text)};
    return parseEdgeList(in);
}

Graph readEdgeListFile(const std::string &path) {
    std::ifstream in(path);
    if (!in) {
        throw Error("cannot open graph file '" + path + "'");
    }
    return parseEdgeList(in);
}

std::string toEdgeList(const Graph &g) {
    std::ostringstream out;
    out.precision(std::numeric_limits<double>::max_digits10);
    out << "# nodes " << g.numNodes() << " edges " << g.totEdge() << '\n';
    for (const Edge &e : g.edges()) {
        out << e.i << ' ' << e.j;
        if (e.w != 1.0) {
            out << ' ' << e.w;
        }
        out << '\n';
    }
    return out.str();
}

Graph randomRegularGraph(int n, int d, bool weighted, std::uint64_t seed) {
    if (n < 1 || d < 0 || d >= n) {
        throw ConfigError("random regular graph needs 0 <= d < n (got n=" + std::to_string(n) +
                          ", d=" + std::to_string(d) + ")");
    }
    if ((n * d) % 2 != 0) {
        throw ConfigError("no " + std::to_string(d) + "-regular graph on " + std::to_string(n) +
                          " nodes: n*d must be even");
    }
    if (n > kMaskBits) {
        throw ConfigError("node count " + std::to_string(n) + " exceeds " + std::to_string(kMaskBits));
    }

    constexpr int kRetryBudget = 10000;
    std::mt19937_64 rng(seed);
    std::vector<int> points(static_cast<std::size_t>(n * d));
    for (int attempt = 0; attempt < kRetryBudget; ++attempt) {
        for (std::size_t k = 0; k < points.size(); ++k) {
            points[k] = static_cast<int>(k) / d;
        }
        std::shuffle(points.begin(), points.end(), rng);

        std::vector<Mask> adjacency(static_cast<std::size_t>(n), 0);
        std::vector<Edge> edges;
        bool simple = true;
        for (std::size_t k = 0; k + 1 < points.size() && simple; k += 2) {
            int a = points[k];
            int b = points[k + 1];
            if (a > b) {
                std::swap(a, b);
            }
            if (a == b || (adjacency[static_cast<std::size_t>(a)] >> b) & 1U) {
                simple = false;
                break;
            }
            adjacency[static_cast<std::size_t>(a)] |= Mask{1} << b;
            edges.push_back({a, b, 1.0});
        }
        if (!simple) {
            continue;
        }
        if (weighted) {
            std::uniform_real_distribution<double> unit(0.0, 1.0);
            std::sort(edges.begin(), edges.end(), [](const Edge &x, const Edge &y) {
                return x.i != y.i ? x.i < y.i : x.j < y.j;
            });
            for (Edge &e : edges) {
                e.w = 1.0 - unit(rng);  // (0, 1]
            }
        }
        return Graph::fromEdges(n, std::move(edges));
    }
    throw ConfigError("pairing model exhausted " + std::to_string(kRetryBudget) + " retries for n=" +
                      std::to_string(n) + ", d=" + std::to_string(d));
}

Graph completeGraph(int n) {
    std::vector<Edge> edges;
    for (int i = 0; i < n; ++i) {
        for (int j = i + 1; j < n; ++j) {
            edges.push_back({i, j, 1.0});
        }
    }
    return Graph::fromEdges(n, std::move(edges));
}

Graph cycleGraph(int n) {
    if (n < 3) {
        throw ConfigError("cycle graph needs at least 3 nodes");
    }
    std::vector<Edge> edges;
    for (int i = 0; i < n; ++i) {
        edges.push_back({i, (i + 1) % n, 1.0});
    }
    return Graph::fromEdges(n, std::move(edges));
}

}  // namespace qaoa
